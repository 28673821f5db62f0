#pragma once

#include "qpoints/integer.hpp"

#include <string>
#include <vector>

namespace qpoints {

// A rational projective point in canonical integer coordinates: the stored
// tuple is nonzero, has gcd 1, and its first nonzero entry is positive.
// Construction normalizes arbitrary nonzero input to this representative.
class ProjPoint {
public:
    explicit ProjPoint(std::vector<Int> coords);

    // Projective dimension n of the ambient space P^n (tuple length n+1).
    std::size_t dim() const { return coords_.size() - 1; }
    const std::vector<Int>& coords() const { return coords_; }

    // Height: maximum absolute value of the canonical coordinates.
    Int height() const;

    // Colon-separated coordinates, e.g. "1:2:2".
    std::string to_string() const;
    static ProjPoint parse(const std::string& s);

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
        return a.coords_ == b.coords_;
    }
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
    friend bool operator<(const ProjPoint& a, const ProjPoint& b) {
        return lex_cmp(a.coords_, b.coords_) < 0;
    }

private:
    std::vector<Int> coords_;
};

}  // namespace qpoints
