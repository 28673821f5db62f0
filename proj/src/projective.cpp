#include "qpoints/projective.hpp"

#include <algorithm>

namespace qpoints {

std::vector<ProjPoint> enum_proj_points(std::size_t n, long long B) {
    std::vector<ProjPoint> out;
    for_each_proj_tuple(n, B, [&](const std::vector<long long>& c) {
        std::vector<Int> v(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) v[i] = make_int(c[i]);
        out.emplace_back(std::move(v));
    });
    return out;  // generation order is already lexicographic
}

LinearVariety::LinearVariety(IntegerLattice lat) : lattice_(std::move(lat)) {
    if (lattice_.rank() > lattice_.ambient_dim())
        throw std::invalid_argument("LinearVariety: rank exceeds ambient dimension");
    if (!is_primitive(lattice_))
        throw std::invalid_argument("LinearVariety: lattice is not primitive");
}

LinearVariety plane_from_lattice(const IntegerLattice& l) { return LinearVariety(l); }

IntegerLattice lattice_from_plane(const LinearVariety& p) { return p.lattice(); }

bool plane_contains(const LinearVariety& p, const ProjPoint& x) {
    if (x.dim() != p.ambient_proj_dim())
        throw std::invalid_argument("plane_contains: ambient dimension mismatch");
    // x primitive, lattice primitive: rational-span membership equals
    // lattice membership.
    return p.lattice().contains(x.coords());
}

std::vector<ProjPoint> primitive_points_up_to_sign(const IntegerLattice& l, long long B) {
    std::vector<ProjPoint> out;
    for (const std::vector<Int>& v : points_in_box(l, make_int(B))) {
        if (is_zero_vec(v)) continue;
        if (vec_gcd(v) != 1) continue;
        // Keep one representative per +-v pair: the sign-canonical one is
        // produced twice by the symmetric box enumeration, so keep the tuple
        // whose first nonzero coordinate is positive.
        bool canonical = false;
        for (const Int& c : v) {
            if (c == 0) continue;
            canonical = c > 0;
            break;
        }
        if (canonical) out.emplace_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t count_points_on_plane(const LinearVariety& p, long long B) {
    return primitive_points_up_to_sign(p.lattice(), B).size();
}

}  // namespace qpoints
