#pragma once

#include "qpoints/integer.hpp"

#include <map>
#include <string>
#include <vector>

namespace qpoints {

// Sparse multivariate polynomial over Z in variables x0..x{n-1}.
// Terms are kept in a map from exponent vector to nonzero coefficient;
// the map's lexicographic key order doubles as the monomial order (the
// last entry is the leading term).
class Poly {
public:
    using Exponents = std::vector<unsigned>;
    using TermMap = std::map<Exponents, Int>;

    explicit Poly(std::size_t n_vars) : n_(n_vars) {
        if (n_vars == 0) throw std::invalid_argument("Poly: need at least one variable");
    }
    static Poly constant(std::size_t n_vars, const Int& c);
    static Poly variable(std::size_t n_vars, std::size_t idx);
    static Poly monomial(std::size_t n_vars, const Exponents& e, const Int& c);

    std::size_t n_vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Accumulate c * x^e into the polynomial, dropping cancelled terms.
    void add_term(const Exponents& e, const Int& c);

    long total_degree() const;  // -1 for the zero polynomial
    long degree_in(std::size_t v) const;
    bool is_homogeneous() const;  // the zero polynomial counts as homogeneous
    bool is_constant() const { return total_degree() <= 0; }

    Poly derivative(std::size_t v) const;
    Int content() const;  // gcd of coefficients; 0 for the zero polynomial

    Int evaluate(const std::vector<Int>& x) const;
    // Evaluation with precomputed power tables: pows[v][e] must equal x_v^e
    // for all exponents e occurring in the polynomial.
    Int evaluate_with_tables(const std::vector<std::vector<Int>>& pows) const;

    // Canonical text form, e.g. "x0^2 + x1^2 - x2^2" or "3*x0*x1 - 2";
    // parse(to_string(), n_vars()) round-trips bit-exactly.
    std::string to_string() const;
    // Parser for the same grammar: terms are [coeff][*]var^exp[*var^exp...]
    // joined by '+'/'-'; errors carry a 1-based character position.
    static Poly parse(const std::string& s, std::size_t n_vars);
    static Poly parse(const std::string& s);  // n_vars inferred from the input

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Int& c, Poly p);
    friend bool operator==(const Poly& a, const Poly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    std::size_t n_;
    TermMap terms_;
};

// Exact division: the q with a == b * q; throws when b is zero or does not
// divide a.
Poly poly_divexact(const Poly& a, const Poly& b);

// Gcd over Z[x0..x{n-1}] by primitive pseudo-remainder sequences, recursing
// through contents.  The result's leading coefficient is positive.
Poly poly_gcd(const Poly& a, const Poly& b);

// p divided by gcd(p, dp/dx0, ..., dp/dx{n-1}): same irreducible factors,
// each with multiplicity one.  Content-free, positive leading coefficient.
// Throws for the zero polynomial.
Poly squarefree_part(const Poly& p);

}  // namespace qpoints
