#pragma once

#include <utility>
#include <vector>

namespace qpoints {

struct FitResult {
    double slope = 0;         // exponent in y ~ C * x^slope
    double intercept = 0;     // log C
    double max_residual = 0;  // max |log y - (slope * log x + intercept)|
};

// Least-squares fit of log y against log x.  Requires at least two samples,
// strictly positive coordinates, and at least two distinct x values.
FitResult fit_exponent(const std::vector<std::pair<double, double>>& samples);

}  // namespace qpoints
