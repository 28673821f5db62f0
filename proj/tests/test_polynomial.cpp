#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qpoints/experiment.hpp"
#include "qpoints/polynomial.hpp"

using namespace qpoints;

namespace {

Poly random_poly(Rng& rng, std::size_t n_vars, unsigned max_deg, int terms) {
    Poly p(n_vars);
    for (int t = 0; t < terms; ++t) {
        Poly::Exponents e(n_vars, 0);
        for (std::size_t v = 0; v < n_vars; ++v)
            e[v] = static_cast<unsigned>(rng.uniform(0, max_deg));
        p.add_term(e, make_int(rng.uniform(-9, 9)));
    }
    return p;
}

}  // namespace

TEST_CASE("construction and queries") {
    Poly zero(2);
    CHECK(zero.is_zero());
    CHECK(zero.total_degree() == -1);
    CHECK(zero.degree_in(0) == -1);
    CHECK(zero.is_homogeneous());  // vacuously
    CHECK(zero.to_string() == "0");

    Poly c = Poly::constant(2, Int(-7));
    CHECK(c.is_constant());
    CHECK(c.total_degree() == 0);

    Poly x = Poly::variable(3, 0);
    CHECK(x.total_degree() == 1);
    CHECK(x.degree_in(0) == 1);
    CHECK(x.degree_in(1) == 0);

    CHECK_THROWS_AS(Poly(0), std::invalid_argument);
    CHECK_THROWS_AS(Poly::variable(2, 2), std::invalid_argument);
}

TEST_CASE("arithmetic") {
    Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    Poly p = (x + y) * (x - y);
    CHECK(p == x * x - y * y);
    CHECK(p.total_degree() == 2);
    CHECK(p.is_homogeneous());
    CHECK_FALSE((p + Poly::constant(2, 1)).is_homogeneous());

    Poly q = Int(3) * x * x * y;
    CHECK(q.to_string() == "3*x0^2*x1");
    CHECK(q.derivative(0).to_string() == "6*x0*x1");
    CHECK(q.evaluate({Int(2), Int(5)}) == 60);
    CHECK(q.content() == 3);
    CHECK((q - q).is_zero());
}

TEST_CASE("printer canonical form") {
    // terms print leading-first: exponent vectors in descending lex order
    CHECK(Poly::parse("x1 + x0", 2).to_string() == "x0 + x1");
    CHECK(Poly::parse("2*x0 - 3", 2).to_string() == "2*x0 - 3");
    CHECK(Poly::parse("x0^2 - 1", 1).to_string() == "x0^2 - 1");
    CHECK(Poly::parse("1x0", 1).to_string() == "x0");  // unit coefficient omitted
    CHECK(Poly::parse("x0*x0", 1).to_string() == "x0^2");
    CHECK(Poly::parse("0", 3).to_string() == "0");
    CHECK(Poly::parse("5 - 5", 1).to_string() == "0");
}

TEST_CASE("parse round trip is bit exact") {
    for (const char* s : {"0", "1", "-1", "x0", "x0^2 - 1", "3*x0^2*x1 - x2 + 7",
                          "x1^3 - x0^5 + 2*x0*x1*x2", "x2^2 - x1^3"}) {
        Poly p = Poly::parse(s, 3);
        CHECK(Poly::parse(p.to_string(), 3) == p);
    }
    Rng rng(808);
    for (int iter = 0; iter < 200; ++iter) {
        Poly p = random_poly(rng, 1 + static_cast<std::size_t>(rng.uniform(0, 3)), 6, 5);
        std::string s = p.to_string();
        CHECK(Poly::parse(s, p.n_vars()) == p);
        CHECK(Poly::parse(s, p.n_vars()).to_string() == s);
    }
}

TEST_CASE("parse accepts the documented grammar") {
    CHECK(Poly::parse("-x0 + 4", 1) == Poly::constant(1, 4) - Poly::variable(1, 0));
    CHECK(Poly::parse("2x0^3", 1) == Int(2) * Poly::monomial(1, {3}, 1));
    CHECK(Poly::parse(" + x0", 1) == Poly::variable(1, 0));
    CHECK(Poly::parse("x0 + x0", 1) == Int(2) * Poly::variable(1, 0));
    // inferred arity: highest index seen
    CHECK(Poly::parse("x2 - x0").n_vars() == 3);
    CHECK(Poly::parse("7").n_vars() == 1);
}

TEST_CASE("parse errors carry 1-based positions") {
    auto message = [](const char* s) {
        try {
            Poly::parse(s, 3);
        } catch (const std::invalid_argument& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message("") == "polynomial parse error at position 1: empty polynomial");
    CHECK(message("x0 + + x1") ==
          "polynomial parse error at position 6: expected a term");
    CHECK(message("3*") ==
          "polynomial parse error at position 3: expected variable after '*'");
    CHECK(message("x") ==
          "polynomial parse error at position 2: expected variable index after 'x'");
    CHECK(message("x0^") ==
          "polynomial parse error at position 4: expected exponent after '^'");
    CHECK(message("x0 & x1") ==
          "polynomial parse error at position 4: expected '+' or '-', found '&'");
    CHECK(message("x0 x1") ==
          "polynomial parse error at position 4: expected '+' or '-', found 'x'");
    // arity violations are reported as parse failures too
    CHECK_THROWS_AS(Poly::parse("x5", 3), std::invalid_argument);
    CHECK_THROWS_AS(Poly::parse("*x0", 2), std::invalid_argument);
}

TEST_CASE("exact division") {
    Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    CHECK(poly_divexact(x * x - y * y, x - y) == x + y);
    CHECK(poly_divexact(x * x - y * y, x + y) == x - y);
    CHECK(poly_divexact(Poly(2), x + y).is_zero());
    CHECK_THROWS_AS(poly_divexact(x * x - y * y + Poly::constant(2, 1), x - y),
                    std::invalid_argument);
    CHECK_THROWS_AS(poly_divexact(x, Poly(2)), std::invalid_argument);
}

TEST_CASE("greatest common divisor") {
    Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    SUBCASE("shared factor") {
        Poly g = poly_gcd((x + y) * (x - y), (x + y) * (x + y));
        CHECK(g == x + y);
    }
    SUBCASE("content participates") {
        Poly g = poly_gcd(Int(2) * x + Poly::constant(2, 2), Int(4) * x + Poly::constant(2, 4));
        CHECK(g == Int(2) * (x + Poly::constant(2, 1)));
    }
    SUBCASE("coprime inputs") {
        Poly g = poly_gcd(x + Poly::constant(2, 1), y);
        CHECK(g == Poly::constant(2, 1));
    }
    SUBCASE("zero operands") {
        CHECK(poly_gcd(Poly(2), x + y) == x + y);
        CHECK(poly_gcd(x + y, Poly(2)) == x + y);
        CHECK(poly_gcd(Poly(2), Poly(2)).is_zero());
    }
    SUBCASE("seeded: divides both, bidirectional") {
        Rng rng(909);
        for (int iter = 0; iter < 40; ++iter) {
            Poly a = random_poly(rng, 2, 3, 3);
            Poly b = random_poly(rng, 2, 3, 3);
            Poly m = random_poly(rng, 2, 2, 2);
            if (a.is_zero() || b.is_zero() || m.is_zero()) continue;
            Poly g = poly_gcd(a * m, b * m);
            // m divides the gcd, and the gcd divides both products
            CHECK_NOTHROW(poly_divexact(g, poly_gcd(g, m)));
            CHECK_NOTHROW(poly_divexact(a * m, g));
            CHECK_NOTHROW(poly_divexact(b * m, g));
            CHECK(poly_gcd(g, m) == poly_gcd(m, g));
        }
    }
}

TEST_CASE("squarefree part") {
    Poly x = Poly::variable(3, 0), y = Poly::variable(3, 1), z = Poly::variable(3, 2);
    Poly p = (z - y * y) * (z - y * y);
    Poly sf = squarefree_part(p);
    // sign-normalized: the leading coefficient is positive
    CHECK(sf == y * y - z);
    CHECK(squarefree_part(y * y - z) == y * y - z);

    Poly cube = (x + y) * (x + y) * (x + y) * (x - y);
    Poly sfc = squarefree_part(cube);
    CHECK(sfc == (x + y) * (x - y));

    // constants and content are stripped
    CHECK(squarefree_part(Poly::constant(3, 12)) == Poly::constant(3, 1));
    CHECK(squarefree_part(Int(4) * (x + z) * (x + z)) == x + z);
    CHECK_THROWS_AS(squarefree_part(Poly(3)), std::invalid_argument);
}
