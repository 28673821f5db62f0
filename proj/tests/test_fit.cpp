#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qpoints/fit.hpp"

#include <cmath>

using namespace qpoints;

TEST_CASE("recovers exact power laws") {
    SUBCASE("cubic") {
        std::vector<std::pair<double, double>> pts;
        for (double x : {1.0, 2.0, 4.0, 8.0, 16.0}) pts.emplace_back(x, 2.0 * x * x * x);
        FitResult f = fit_exponent(pts);
        CHECK(f.slope == doctest::Approx(3.0).epsilon(1e-9));
        CHECK(f.intercept == doctest::Approx(std::log(2.0)).epsilon(1e-9));
        CHECK(f.max_residual < 1e-9);
    }
    SUBCASE("constant") {
        std::vector<std::pair<double, double>> pts = {{1, 5}, {10, 5}, {100, 5}};
        FitResult f = fit_exponent(pts);
        CHECK(f.slope == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(f.intercept == doctest::Approx(std::log(5.0)).epsilon(1e-9));
    }
    SUBCASE("inverse square root") {
        std::vector<std::pair<double, double>> pts;
        for (double x : {1.0, 4.0, 9.0, 16.0}) pts.emplace_back(x, 3.0 / std::sqrt(x));
        FitResult f = fit_exponent(pts);
        CHECK(f.slope == doctest::Approx(-0.5).epsilon(1e-9));
    }
    SUBCASE("two points suffice") {
        FitResult f = fit_exponent({{2, 4}, {4, 16}});
        CHECK(f.slope == doctest::Approx(2.0).epsilon(1e-9));
    }
}

TEST_CASE("residual reflects lack of fit") {
    // y = x^2 + noise at one point
    std::vector<std::pair<double, double>> pts = {{1, 1}, {2, 4}, {4, 16}, {8, 128}};
    FitResult f = fit_exponent(pts);
    CHECK(f.max_residual > 0.1);
}

TEST_CASE("degenerate inputs are rejected") {
    CHECK_THROWS_AS(fit_exponent({}), std::invalid_argument);
    CHECK_THROWS_AS(fit_exponent({{2, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(fit_exponent({{2, 4}, {2, 8}}), std::invalid_argument);   // same x
    CHECK_THROWS_AS(fit_exponent({{0, 4}, {2, 8}}), std::invalid_argument);   // x <= 0
    CHECK_THROWS_AS(fit_exponent({{1, 0}, {2, 8}}), std::invalid_argument);   // y <= 0
    CHECK_THROWS_AS(fit_exponent({{1, -3}, {2, 8}}), std::invalid_argument);
}
