#pragma once

#include "qpoints/polynomial.hpp"
#include "qpoints/projective.hpp"

#include <vector>

namespace qpoints {

// A variety given by explicit generators, either in affine space A^n
// (polynomials in x0..x{n-1}) or in projective space P^n (homogeneous
// polynomials in x0..xn).  degree() is the Bezout-style bound: the product
// of the generators' total degrees.
class VarietySpec {
public:
    enum class Kind { affine, projective };

    static VarietySpec affine(std::size_t n, std::vector<Poly> gens);
    static VarietySpec projective(std::size_t n, std::vector<Poly> gens);

    Kind kind() const { return kind_; }
    std::size_t n() const { return n_; }  // dimension of the ambient space
    const std::vector<Poly>& generators() const { return gens_; }
    long degree() const;

    bool vanishes_at(const std::vector<Int>& x) const;

private:
    VarietySpec(Kind kind, std::size_t n, std::vector<Poly> gens)
        : kind_(kind), n_(n), gens_(std::move(gens)) {}
    Kind kind_;
    std::size_t n_;
    std::vector<Poly> gens_;
};

// Number of integer points of [-B, B]^n on an affine variety (all integer
// tuples, not just primitive ones).
long long count_affine_points(const VarietySpec& v, long long B);

// Number of points of P^n(Q) of height <= B on a projective variety,
// counted on canonical primitive representatives.
std::size_t count_proj_points(const VarietySpec& v, long long B);

// The hypersurface union of the given hyperplanes of P^n: the single
// generator is the product of their integral normal forms.  All planes must
// share an ambient space, have plane dimension n-1, and be distinct.
VarietySpec union_of_planes_variety(const std::vector<LinearVariety>& planes);

}  // namespace qpoints
