#include "qpoints/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qpoints {

Poly Poly::constant(std::size_t n_vars, const Int& c) {
    Poly p(n_vars);
    p.add_term(Exponents(n_vars, 0), c);
    return p;
}

Poly Poly::variable(std::size_t n_vars, std::size_t idx) {
    if (idx >= n_vars) throw std::invalid_argument("Poly::variable: index out of range");
    Poly p(n_vars);
    Exponents e(n_vars, 0);
    e[idx] = 1;
    p.add_term(e, 1);
    return p;
}

Poly Poly::monomial(std::size_t n_vars, const Exponents& e, const Int& c) {
    Poly p(n_vars);
    p.add_term(e, c);
    return p;
}

void Poly::add_term(const Exponents& e, const Int& c) {
    if (e.size() != n_) throw std::invalid_argument("add_term: exponent arity mismatch");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

long Poly::total_degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) {
        long t = 0;
        for (unsigned x : e) t += x;
        if (t > d) d = t;
    }
    return d;
}

long Poly::degree_in(std::size_t v) const {
    if (v >= n_) throw std::invalid_argument("degree_in: variable out of range");
    long d = is_zero() ? -1 : 0;
    for (const auto& [e, c] : terms_)
        if (static_cast<long>(e[v]) > d) d = e[v];
    return d;
}

bool Poly::is_homogeneous() const {
    long d = -1;
    for (const auto& [e, c] : terms_) {
        long t = 0;
        for (unsigned x : e) t += x;
        if (d == -1) d = t;
        else if (t != d) return false;
    }
    return true;
}

Poly Poly::derivative(std::size_t v) const {
    if (v >= n_) throw std::invalid_argument("derivative: variable out of range");
    Poly r(n_);
    for (const auto& [e, c] : terms_) {
        if (e[v] == 0) continue;
        Exponents e2 = e;
        e2[v] -= 1;
        r.add_term(e2, c * Int(e[v]));
    }
    return r;
}

Int Poly::content() const {
    Int g = 0;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Int Poly::evaluate(const std::vector<Int>& x) const {
    if (x.size() != n_) throw std::invalid_argument("evaluate: arity mismatch");
    std::vector<std::vector<Int>> pows(n_);
    for (std::size_t v = 0; v < n_; ++v) {
        long d = degree_in(v);
        pows[v].assign(static_cast<std::size_t>(d < 0 ? 0 : d) + 1, Int(1));
        for (long e = 1; e <= d; ++e) pows[v][e] = pows[v][e - 1] * x[v];
    }
    return evaluate_with_tables(pows);
}

Int Poly::evaluate_with_tables(const std::vector<std::vector<Int>>& pows) const {
    if (pows.size() != n_) throw std::invalid_argument("evaluate_with_tables: arity mismatch");
    Int acc = 0, t;
    for (const auto& [e, c] : terms_) {
        t = c;
        for (std::size_t v = 0; v < n_; ++v) {
            if (e[v] == 0) continue;
            if (e[v] >= pows[v].size())
                throw std::invalid_argument("evaluate_with_tables: power table too short");
            t *= pows[v][e[v]];
        }
        acc += t;
    }
    return acc;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool neg = c < 0;
        Int mag = neg ? Int(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        bool any_var = false;
        for (unsigned x : e) any_var = any_var || x > 0;
        std::ostringstream mono;
        bool started = false;
        for (std::size_t v = 0; v < n_; ++v) {
            if (e[v] == 0) continue;
            if (started) mono << "*";
            mono << "x" << v;
            if (e[v] > 1) mono << "^" << e[v];
            started = true;
        }
        if (!any_var) {
            os << mag.get_str();
        } else if (mag == 1) {
            os << mono.str();
        } else {
            os << mag.get_str() << "*" << mono.str();
        }
    }
    return os.str();
}

namespace {

struct ParsedTerm {
    Int coeff;
    std::map<std::size_t, unsigned> exps;
};

[[noreturn]] void parse_fail(std::size_t pos, const std::string& msg) {
    std::ostringstream os;
    os << "polynomial parse error at position " << (pos + 1) << ": " << msg;
    throw std::invalid_argument(os.str());
}

class TermScanner {
public:
    explicit TermScanner(const std::string& s) : s_(s) {}

    std::vector<ParsedTerm> scan() {
        std::vector<ParsedTerm> terms;
        skip_ws();
        if (at_end()) parse_fail(pos_, "empty polynomial");
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
            skip_ws();
        }
        for (;;) {
            terms.push_back(term(sign));
            skip_ws();
            if (at_end()) break;
            char c = peek();
            if (c != '+' && c != '-')
                parse_fail(pos_, std::string("expected '+' or '-', found '") + c + "'");
            sign = c == '-' ? -1 : 1;
            ++pos_;
            skip_ws();
        }
        return terms;
    }

private:
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    Int digits(const char* what) {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
            parse_fail(pos_, std::string("expected ") + what);
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return Int(s_.substr(start, pos_ - start));
    }

    void varpow(ParsedTerm& t) {
        ++pos_;  // consume 'x'
        Int idx = digits("variable index after 'x'");
        unsigned exp = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            Int e = digits("exponent after '^'");
            if (e > 1000000) parse_fail(pos_, "exponent too large");
            exp = static_cast<unsigned>(e.get_ui());
        }
        if (idx > 1000000) parse_fail(pos_, "variable index too large");
        t.exps[static_cast<std::size_t>(idx.get_ui())] += exp;
    }

    ParsedTerm term(int sign) {
        ParsedTerm t;
        t.coeff = 1;
        bool have_coeff = false, have_var = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            t.coeff = digits("coefficient");
            have_coeff = true;
            skip_ws();
        }
        if (!at_end() && (peek() == 'x' || (have_coeff && peek() == '*'))) {
            bool expect_star = false;  // coeff followed directly by 'x' is fine
            for (;;) {
                if (!at_end() && peek() == '*') {
                    ++pos_;
                    skip_ws();
                    if (at_end() || peek() != 'x') parse_fail(pos_, "expected variable after '*'");
                } else if (expect_star) {
                    break;  // next factor must be '*'-joined
                }
                if (at_end() || peek() != 'x') {
                    if (!have_var) parse_fail(pos_, "expected variable");
                    break;
                }
                varpow(t);
                have_var = true;
                expect_star = true;
                skip_ws();
                if (at_end() || peek() != '*') break;
            }
        }
        if (!have_coeff && !have_var) parse_fail(pos_, "expected a term");
        if (sign < 0) t.coeff = -t.coeff;
        return t;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

Poly materialize(const std::vector<ParsedTerm>& terms, std::size_t n_vars) {
    Poly p(n_vars);
    for (const ParsedTerm& t : terms) {
        Poly::Exponents e(n_vars, 0);
        for (const auto& [idx, exp] : t.exps) {
            if (idx >= n_vars)
                throw std::invalid_argument("polynomial parse error: variable x" +
                                            std::to_string(idx) + " out of range");
            e[idx] += exp;
        }
        p.add_term(e, t.coeff);
    }
    return p;
}

}  // namespace

Poly Poly::parse(const std::string& s, std::size_t n_vars) {
    TermScanner scanner(s);
    return materialize(scanner.scan(), n_vars);
}

Poly Poly::parse(const std::string& s) {
    TermScanner scanner(s);
    std::vector<ParsedTerm> terms = scanner.scan();
    std::size_t n_vars = 1;
    for (const ParsedTerm& t : terms)
        for (const auto& [idx, exp] : t.exps) n_vars = std::max(n_vars, idx + 1);
    return materialize(terms, n_vars);
}

Poly Poly::operator-() const {
    Poly r(n_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, Int(-c));
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (n_ != o.n_) throw std::invalid_argument("poly arithmetic: arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (n_ != o.n_) throw std::invalid_argument("poly arithmetic: arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, Int(-c));
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("poly arithmetic: arity mismatch");
    Poly r(a.n_);
    Poly::Exponents e(a.n_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t v = 0; v < a.n_; ++v) e[v] = ea[v] + eb[v];
            r.add_term(e, ca * cb);
        }
    return r;
}

Poly operator*(const Int& c, Poly p) {
    if (c == 0) return Poly(p.n_);
    for (auto& [e, coef] : p.terms_) coef *= c;
    return p;
}

namespace {

// Leading term in the map's lexicographic order.
const std::pair<const Poly::Exponents, Int>& leading(const Poly& p) {
    return *p.terms().rbegin();
}

bool exp_divides(const Poly::Exponents& a, const Poly::Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// Highest variable index with positive degree in either polynomial, or
// n_vars if both are constant.
std::size_t main_variable(const Poly& a, const Poly& b) {
    std::size_t n = a.n_vars();
    for (std::size_t v = n; v-- > 0;)
        if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
    return n;
}

// Coefficient of v^e, a polynomial in the remaining variables (same arity).
Poly coeff_of(const Poly& p, std::size_t v, unsigned e) {
    Poly r(p.n_vars());
    for (const auto& [exp, c] : p.terms()) {
        if (exp[v] != e) continue;
        Poly::Exponents e2 = exp;
        e2[v] = 0;
        r.add_term(e2, c);
    }
    return r;
}

Poly shift_in(const Poly& p, std::size_t v, unsigned e) {
    Poly r(p.n_vars());
    for (const auto& [exp, c] : p.terms()) {
        Poly::Exponents e2 = exp;
        e2[v] += e;
        r.add_term(e2, c);
    }
    return r;
}

Poly content_in(const Poly& p, std::size_t v);
Poly primitive_part_in(const Poly& p, std::size_t v);

// Pseudo-remainder of a by b in variable v (up to leading-coefficient
// factors, which the primitive PRS strips anyway).
Poly prem(Poly a, const Poly& b, std::size_t v) {
    const long db = b.degree_in(v);
    const Poly lcb = coeff_of(b, v, static_cast<unsigned>(db));
    while (!a.is_zero()) {
        const long da = a.degree_in(v);
        if (da < db) break;
        const Poly lca = coeff_of(a, v, static_cast<unsigned>(da));
        a = lcb * a - shift_in(lca, v, static_cast<unsigned>(da - db)) * b;
    }
    return a;
}

Poly normalize_sign(Poly p) {
    if (!p.is_zero() && leading(p).second < 0) return -p;
    return p;
}

Poly gcd_impl(const Poly& a, const Poly& b) {
    if (a.is_zero()) return normalize_sign(b);
    if (b.is_zero()) return normalize_sign(a);
    const std::size_t n = a.n_vars();
    const std::size_t v = main_variable(a, b);
    if (v == n) {  // both constants
        Int g;
        mpz_gcd(g.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
        return Poly::constant(n, g);
    }
    const Poly ca = content_in(a, v), cb = content_in(b, v);
    Poly pa = poly_divexact(a, ca), pb = poly_divexact(b, cb);
    const Poly cg = gcd_impl(ca, cb);
    if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        Poly r = prem(pa, pb, v);
        pa = std::move(pb);
        pb = primitive_part_in(r, v);
        if (pa.degree_in(v) == 0) break;  // gcd has no v left
    }
    if (!pb.is_zero()) {
        // Loop exited with a nonzero remainder of v-degree 0: the primitive
        // parts are coprime in v.
        return normalize_sign(cg);
    }
    return normalize_sign(cg * pa);
}

Poly content_in(const Poly& p, std::size_t v) {
    Poly g(p.n_vars());
    long d = p.degree_in(v);
    for (long e = 0; e <= d; ++e) {
        Poly c = coeff_of(p, v, static_cast<unsigned>(e));
        if (c.is_zero()) continue;
        g = gcd_impl(g, c);
        if (!g.is_zero() && g.is_constant() && leading(g).second == 1) break;
    }
    return g;
}

Poly primitive_part_in(const Poly& p, std::size_t v) {
    if (p.is_zero()) return p;
    return poly_divexact(p, content_in(p, v));
}

}  // namespace

Poly poly_divexact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("poly_divexact: division by zero");
    if (a.n_vars() != b.n_vars())
        throw std::invalid_argument("poly_divexact: arity mismatch");
    Poly q(a.n_vars()), r = a;
    const auto& [eb, cb] = leading(b);
    while (!r.is_zero()) {
        const auto& [er, cr] = leading(r);
        if (!exp_divides(eb, er))
            throw std::invalid_argument("poly_divexact: not divisible");
        Poly::Exponents eq(er.size());
        for (std::size_t i = 0; i < er.size(); ++i) eq[i] = er[i] - eb[i];
        Int cq, rem;
        mpz_tdiv_qr(cq.get_mpz_t(), rem.get_mpz_t(), cr.get_mpz_t(), cb.get_mpz_t());
        if (rem != 0) throw std::invalid_argument("poly_divexact: not divisible");
        Poly t = Poly::monomial(a.n_vars(), eq, cq);
        q += t;
        r -= t * b;
    }
    return q;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.n_vars() != b.n_vars()) throw std::invalid_argument("poly_gcd: arity mismatch");
    return gcd_impl(a, b);
}

Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
    Poly g = p;
    for (std::size_t v = 0; v < p.n_vars(); ++v) {
        if (p.degree_in(v) < 1) continue;
        g = poly_gcd(g, p.derivative(v));
    }
    Poly sf = poly_divexact(p, g);
    Int c = sf.content();
    if (c > 1) sf = poly_divexact(sf, Poly::constant(sf.n_vars(), c));
    return normalize_sign(std::move(sf));
}

}  // namespace qpoints
