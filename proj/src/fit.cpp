#include "qpoints/fit.hpp"

#include <cmath>
#include <stdexcept>

namespace qpoints {

FitResult fit_exponent(const std::vector<std::pair<double, double>>& samples) {
    if (samples.size() < 2)
        throw std::invalid_argument("fit_exponent: need at least two samples");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(samples.size());
    std::vector<std::pair<double, double>> logs;
    logs.reserve(samples.size());
    for (const auto& [x, y] : samples) {
        if (!(x > 0) || !(y > 0))
            throw std::invalid_argument("fit_exponent: samples must be strictly positive");
        double lx = std::log(x), ly = std::log(y);
        logs.emplace_back(lx, ly);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double denom = n * sxx - sx * sx;
    if (!(std::abs(denom) > 1e-12))
        throw std::invalid_argument("fit_exponent: need at least two distinct x values");
    FitResult r;
    r.slope = (n * sxy - sx * sy) / denom;
    r.intercept = (sy - r.slope * sx) / n;
    for (const auto& [lx, ly] : logs) {
        double res = std::abs(ly - (r.slope * lx + r.intercept));
        if (res > r.max_residual) r.max_residual = res;
    }
    return r;
}

}  // namespace qpoints
