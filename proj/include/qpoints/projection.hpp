#pragma once

#include "qpoints/polynomial.hpp"

#include <cstddef>
#include <vector>

namespace qpoints {

// An affine space curve in A^3: the common zero locus of two polynomials in
// x0, x1, x2, together with the curve's declared degree (the generic-plane
// intersection count, known from the construction of the curve).
struct SpaceCurve {
    Poly p;
    Poly q;
    long declared_degree;

    SpaceCurve(Poly p_, Poly q_, long degree_);
};

// Resultant of p and q with respect to x_var, as the determinant of the
// Sylvester matrix over the remaining variables.  Both inputs must have
// positive degree in the eliminated variable.
Poly sylvester_resultant(const Poly& p, const Poly& q, std::size_t var);

// Degree of the plane curve obtained by forgetting coordinate `drop`:
// eliminate x_drop from the two generators (standard power convention when
// one generator does not involve it), take the squarefree part, and read off
// the total degree.  Throws when the projection collapses: both generators
// independent of x_drop, identically vanishing resultant, or a degree-0
// image.
long projection_degree(const SpaceCurve& c, std::size_t drop);

struct BestProjection {
    std::size_t drop = 0;  // coordinate index to forget
    long degree = 0;       // degree of that projection's image
};

// The coordinate drop maximizing the image degree (smallest index wins
// ties).  Throws when every drop collapses.
BestProjection best_projection(const SpaceCurve& c);

}  // namespace qpoints
