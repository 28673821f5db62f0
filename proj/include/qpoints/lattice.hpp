#pragma once

#include "qpoints/intmat.hpp"

#include <vector>

namespace qpoints {

// A sublattice of Z^ambient of rank >= 1, held in canonical form: the basis
// is the Hermite normal form of any generating set, so two lattices are equal
// iff their stored bases are equal.  det_sq() caches det(B * B^T), the squared
// covolume inside the real span.
class IntegerLattice {
public:
    static IntegerLattice from_generators(const IntMatrix& gens);

    std::size_t ambient_dim() const { return basis_.cols(); }
    std::size_t rank() const { return basis_.rows(); }
    const IntMatrix& basis() const { return basis_; }
    const Int& det_sq() const { return det_sq_; }

    // Membership of an integer vector in the lattice (exact HNF reduction).
    bool contains(const std::vector<Int>& v) const;

    friend bool operator==(const IntegerLattice& a, const IntegerLattice& b) {
        return a.basis_ == b.basis_;
    }
    friend bool operator!=(const IntegerLattice& a, const IntegerLattice& b) {
        return !(a == b);
    }
    // Total order by (det_sq, basis entries lex); used for canonical listings.
    friend bool operator<(const IntegerLattice& a, const IntegerLattice& b);

private:
    IntegerLattice(IntMatrix basis, Int det_sq)
        : basis_(std::move(basis)), det_sq_(std::move(det_sq)) {}
    IntMatrix basis_;
    Int det_sq_;
};

// Smallest saturated (primitive) sublattice containing L: the intersection
// of L's rational span with Z^ambient.  Computed as the kernel of the kernel.
IntegerLattice saturate(const IntegerLattice& l);

// True iff Z^ambient / L is torsion-free, i.e. saturate(L) == L.
bool is_primitive(const IntegerLattice& l);

// The lattice {y : y . x = 0 for all x in L}, always saturated.  For
// primitive L of rank r < ambient this preserves det_sq and is an involution.
// Throws for full-rank input (the complement would have rank 0).
IntegerLattice orthogonal_complement(const IntegerLattice& l);

// All lattice vectors with max-norm <= box_bound (including 0), sorted
// lexicographically.  Exact Fincke-Pohst enumeration over an LLL-reduced
// basis; no floating point is involved.
std::vector<std::vector<Int>> points_in_box(const IntegerLattice& l, const Int& box_bound);

}  // namespace qpoints
