#include "qpoints/proj_point.hpp"

#include <sstream>

namespace qpoints {

ProjPoint::ProjPoint(std::vector<Int> coords) : coords_(std::move(coords)) {
    if (coords_.size() < 2)
        throw std::invalid_argument("ProjPoint: need at least two coordinates");
    Int g = vec_gcd(coords_);
    if (g == 0) throw std::invalid_argument("ProjPoint: zero coordinate tuple");
    if (g != 1)
        for (Int& c : coords_) c = divexact(c, g);
    for (const Int& c : coords_) {
        if (c == 0) continue;
        if (c < 0)
            for (Int& x : coords_) x = -x;
        break;
    }
}

Int ProjPoint::height() const {
    Int h = 0;
    for (const Int& c : coords_) {
        Int a = abs(c);
        if (a > h) h = a;
    }
    return h;
}

std::string ProjPoint::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < coords_.size(); ++i)
        os << (i ? ":" : "") << coords_[i].get_str();
    return os.str();
}

ProjPoint ProjPoint::parse(const std::string& s) {
    std::vector<Int> coords;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find(':', pos);
        std::string tok = s.substr(pos, next == std::string::npos ? next : next - pos);
        if (tok.empty())
            throw std::invalid_argument("ProjPoint::parse: empty coordinate in '" + s + "'");
        try {
            coords.emplace_back(tok);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("ProjPoint::parse: bad integer '" + tok + "'");
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (coords.size() < 2)
        throw std::invalid_argument("ProjPoint::parse: need at least two coordinates");
    return ProjPoint(std::move(coords));
}

}  // namespace qpoints
