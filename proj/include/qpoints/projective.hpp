#pragma once

#include "qpoints/lattice.hpp"
#include "qpoints/proj_point.hpp"

#include <cstdint>
#include <numeric>
#include <vector>

namespace qpoints {

// Visit the canonical coordinate tuples of all points of P^n(Q) with height
// at most B, in lexicographic order.  fn receives the coordinates as int64;
// heights are desk-scale, all downstream arithmetic is arbitrary-precision.
template <class Fn>
void for_each_proj_tuple(std::size_t n, long long B, Fn&& fn) {
    if (B < 1) throw std::invalid_argument("proj enumeration: height bound must be >= 1");
    if (n < 1) throw std::invalid_argument("proj enumeration: dimension must be >= 1");
    std::vector<long long> c(n + 1, 0);
    auto rec = [&](auto&& self, std::size_t i, bool all_zero, long long g) -> void {
        if (i == n + 1) {
            if (!all_zero && g == 1) fn(static_cast<const std::vector<long long>&>(c));
            return;
        }
        const long long lo = all_zero ? 0 : -B;
        for (long long v = lo; v <= B; ++v) {
            c[i] = v;
            long long g2 = std::gcd(g, v < 0 ? -v : v);
            self(self, i + 1, all_zero && v == 0, g2);
        }
    };
    rec(rec, 0, true, 0);
}

// All points of P^n(Q) with height <= B, lexicographically sorted.
std::vector<ProjPoint> enum_proj_points(std::size_t n, long long B);

// A k-plane in P^n(Q), represented by the primitive rank-(k+1) sublattice of
// Z^(n+1) whose rational span cuts out the plane.  The correspondence
// k-plane <-> primitive sublattice is the content of the representation.
class LinearVariety {
public:
    explicit LinearVariety(IntegerLattice lat);

    std::size_t plane_dim() const { return lattice_.rank() - 1; }          // k
    std::size_t ambient_proj_dim() const { return lattice_.ambient_dim() - 1; }  // n
    const IntegerLattice& lattice() const { return lattice_; }

    friend bool operator==(const LinearVariety& a, const LinearVariety& b) {
        return a.lattice_ == b.lattice_;
    }
    friend bool operator<(const LinearVariety& a, const LinearVariety& b) {
        return a.lattice_ < b.lattice_;
    }

private:
    IntegerLattice lattice_;
};

// The two directions of the bijection.  plane_from_lattice validates that
// the lattice is primitive with 1 <= rank <= ambient; round-tripping either
// way is the identity.
LinearVariety plane_from_lattice(const IntegerLattice& l);
IntegerLattice lattice_from_plane(const LinearVariety& p);

bool plane_contains(const LinearVariety& p, const ProjPoint& x);

// Points of the plane with height <= B: primitive lattice vectors of
// max-norm <= B, one representative per +-v pair, as canonical ProjPoints.
std::vector<ProjPoint> primitive_points_up_to_sign(const IntegerLattice& l, long long B);

std::size_t count_points_on_plane(const LinearVariety& p, long long B);

}  // namespace qpoints
