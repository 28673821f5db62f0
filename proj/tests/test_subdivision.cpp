#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qpoints/subdivision.hpp"

#include <cmath>

using namespace qpoints;

TEST_CASE("pinned scheme H=16 k=2") {
    SubdivisionScheme s = subdivide(16, 2);
    CHECK(s.K == 5);
    REQUIRE(s.endpoints.size() == 6);
    CHECK(s.endpoints[0] == 16.0);
    CHECK(s.endpoints[1] == 12.0);  // 16 - sqrt(16)
    CHECK(s.endpoints.back() < 2.0);
    CHECK(s.endpoints[4] >= 2.0);
    for (std::size_t i = 0; i + 1 < s.endpoints.size(); ++i) {
        double want = s.endpoints[i] - std::sqrt(s.endpoints[i]);
        CHECK(s.endpoints[i + 1] == doctest::Approx(want).epsilon(1e-12));
    }
    CHECK(s.K <= 2.0 * std::sqrt(16.0));
    CHECK(verify_subdivision(s).all());
}

TEST_CASE("unit exponent walks down by one") {
    SubdivisionScheme s = subdivide(7, 1);
    // b_{i+1} = b_i - b_i^0 = b_i - 1
    CHECK(s.K == 6);
    REQUIRE(s.endpoints.size() == 7);
    for (std::size_t i = 0; i < 7; ++i)
        CHECK(s.endpoints[i] == doctest::Approx(7.0 - static_cast<double>(i)));
    // f(i) = 7 - i makes the f-property an exact equality; the verifier's
    // outward tolerance must accept it
    SubdivisionCheck c = verify_subdivision(s);
    CHECK(c.all());
}

TEST_CASE("smallest admissible H") {
    SubdivisionScheme s = subdivide(2, 3);
    CHECK(s.K == 1);
    REQUIRE(s.endpoints.size() == 2);
    CHECK(s.endpoints[0] == 2.0);
    CHECK(s.endpoints[1] < 2.0);
    CHECK(verify_subdivision(s).all());
}

TEST_CASE("invariants over a parameter grid") {
    for (unsigned k = 1; k <= 4; ++k) {
        for (double H : {2.0, 5.0, 10.0, 100.0, 1000.0, 10000.0}) {
            CAPTURE(k);
            CAPTURE(H);
            SubdivisionScheme s = subdivide(H, k);
            SubdivisionCheck c = verify_subdivision(s);
            CHECK(c.shape_ok);
            CHECK(c.recurrence_ok);
            CHECK(c.count_bound_ok);
            CHECK(c.ratio_ok);
            CHECK(c.f_property_ok);
            CHECK(s.K + 1 == s.endpoints.size());
            CHECK(static_cast<double>(s.K) <=
                  static_cast<double>(k) * std::pow(H, 1.0 / k) + 1e-9);
            // comparison function brackets the range
            CHECK(s.f(0) == doctest::Approx(H).epsilon(1e-12));
        }
    }
}

TEST_CASE("verification catches corrupted schemes") {
    SubdivisionScheme s = subdivide(100, 2);
    REQUIRE(s.endpoints.size() >= 3);

    SUBCASE("scaled endpoint breaks the recurrence") {
        s.endpoints[1] *= 1.5;
        CHECK_FALSE(verify_subdivision(s).all());
    }
    SUBCASE("truncated tail breaks the shape") {
        s.endpoints.pop_back();
        s.K -= 1;
        CHECK_FALSE(verify_subdivision(s).shape_ok);
    }
    SUBCASE("mismatched count breaks the shape") {
        s.K += 1;
        CHECK_FALSE(verify_subdivision(s).shape_ok);
    }
    SUBCASE("non-monotone endpoints break the shape") {
        s.endpoints[2] = s.endpoints[1] + 1;
        CHECK_FALSE(verify_subdivision(s).all());
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(subdivide(1.5, 2), std::invalid_argument);
    CHECK_THROWS_AS(subdivide(-3, 2), std::invalid_argument);
    CHECK_THROWS_AS(subdivide(16, 0), std::invalid_argument);
}
