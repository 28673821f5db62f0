#pragma once

#include "qpoints/projective.hpp"

#include <vector>

namespace qpoints {

// The k-plane attached to a projective point x in P^n(Q): inside the dual
// lattice {y : y . x = 0} (rank n), LLL-reduce, keep the n-k shortest basis
// vectors, saturate their span, and take its orthogonal complement.  The
// result is a primitive rank-(k+1) lattice containing the coordinates of x,
// i.e. a k-plane through x whose determinant is small when x has small
// height.  Requires 1 <= k <= n-1.
LinearVariety cover_plane_for_point(const ProjPoint& x, std::size_t k);

struct PlaneCover {
    std::size_t n = 0;  // ambient projective dimension
    std::size_t k = 0;  // plane dimension
    long long height_bound = 0;
    std::vector<LinearVariety> planes;  // deduplicated, sorted by (det_sq, basis)

    Int max_det_sq() const;
};

// Cover of all points of P^n(Q) with height <= B by the k-planes attached to
// them: every enumerated point lies on at least one returned plane.
PlaneCover cover_planes(std::size_t n, std::size_t k, long long B);

struct LatticeEnumeration {
    std::vector<IntegerLattice> lattices;  // sorted by (det_sq, basis)
    Int search_radius_sq = 0;              // squared norm bound on generators searched
    bool complete = false;                 // provably exhaustive at this radius
};

// All primitive rank-r sublattices of Z^ambient with det_sq <= h_sq.
// Rank 1 is direct enumeration of primitive vectors up to sign; corank 1 goes
// through the determinant-preserving complement bijection; intermediate ranks
// search products of short primitive vectors, which is exhaustive for
// rank <= 4 (a Minkowski-reduced basis attains the successive minima there).
LatticeEnumeration enum_primitive_lattices_ex(std::size_t ambient, std::size_t rank,
                                              const Int& h_sq);
std::vector<IntegerLattice> enum_primitive_lattices(std::size_t ambient, std::size_t rank,
                                                    const Int& h_sq);

struct DensestPlanes {
    std::vector<LinearVariety> planes;  // the d selected planes
    std::size_t point_count = 0;        // points of height <= B on their union
};

struct DensestOptions {
    Int h_sq_cap = Int(1) << 24;  // give up growing the determinant budget here
};

// The d primitive-lattice k-planes in P^n of least determinant (ties broken
// by the canonical basis order) and the number of points of height <= B on
// their union.  Throws when fewer than d planes exist within the cap.
DensestPlanes densest_planes_count(std::size_t n, std::size_t k, std::size_t d,
                                   long long B, const DensestOptions& opts = {});

}  // namespace qpoints
