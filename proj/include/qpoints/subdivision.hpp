#pragma once

#include <cstddef>
#include <vector>

namespace qpoints {

// Geometric-flavour subdivision of [2, H]: b_0 = H and
// b_{i+1} = b_i - b_i^((k-1)/k), stopping at the first endpoint below 2.
// Endpoints are published as doubles; they are computed, and all invariant
// checks are re-verified, at 192-bit precision internally.
struct SubdivisionScheme {
    double H = 0;
    unsigned k = 0;
    std::size_t K = 0;              // number of steps; endpoints has K+1 entries
    std::vector<double> endpoints;  // b_0 > b_1 > ... > b_K, b_K < 2 <= b_{K-1}

    // Comparison function f(i) = (1/k^k) * (k * H^(1/k) - i)^k, evaluated in
    // extended precision and rounded to double.
    double f(double i) const;
};

SubdivisionScheme subdivide(double H, unsigned k);

// Interval-arithmetic verification of the scheme's contract, run on the
// published double endpoints.  Non-strict inequalities are certified with an
// outward tolerance of 1e-25 (relative), far below double precision but far
// above the 192-bit interval width, so exact-equality edge cases pass while
// any double-scale violation is caught.
struct SubdivisionCheck {
    bool shape_ok = false;       // monotone endpoints, b_K < 2 <= b_{K-1}, b_0 = H
    bool recurrence_ok = false;  // each step matches the recurrence to ~1e-12 rel.
    bool count_bound_ok = false; // K <= k * H^(1/k)
    bool ratio_ok = false;       // b_i / b_{i+1} <= 1 / (1 - 2^(-1/k)) for i < K
    bool f_property_ok = false;  // f(i) - f(i+1) <= f(i)^((k-1)/k) on the valid range
    bool all() const {
        return shape_ok && recurrence_ok && count_bound_ok && ratio_ok && f_property_ok;
    }
};

SubdivisionCheck verify_subdivision(const SubdivisionScheme& s);

}  // namespace qpoints
