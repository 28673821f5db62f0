#include "qpoints/projection.hpp"

#include <vector>

namespace qpoints {

SpaceCurve::SpaceCurve(Poly p_, Poly q_, long degree_)
    : p(std::move(p_)), q(std::move(q_)), declared_degree(degree_) {
    if (p.n_vars() != 3 || q.n_vars() != 3)
        throw std::invalid_argument("SpaceCurve: generators must use variables x0, x1, x2");
    if (p.is_zero() || q.is_zero())
        throw std::invalid_argument("SpaceCurve: zero generator");
    if (p.is_constant() || q.is_constant())
        throw std::invalid_argument("SpaceCurve: constant generator");
    if (declared_degree < 1)
        throw std::invalid_argument("SpaceCurve: declared degree must be >= 1");
}

namespace {

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

// Fraction-free Bareiss determinant over the polynomial ring; every division
// is exact by construction.
Poly poly_det(std::vector<std::vector<Poly>> m, std::size_t n, std::size_t n_vars) {
    if (n == 0) return Poly::constant(n_vars, 1);
    int sign = 1;
    Poly prev = Poly::constant(n_vars, 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t piv = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) {
                    piv = i;
                    break;
                }
            if (piv == n) return Poly(n_vars);  // zero column: determinant 0
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = poly_divexact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            m[i][k] = Poly(n_vars);
        }
        prev = m[k][k];
    }
    return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

Poly pow_poly(const Poly& base, long e) {
    Poly r = Poly::constant(base.n_vars(), 1);
    for (long i = 0; i < e; ++i) r = r * base;
    return r;
}

}  // namespace

Poly sylvester_resultant(const Poly& p, const Poly& q, std::size_t var) {
    if (p.n_vars() != q.n_vars())
        throw std::invalid_argument("sylvester_resultant: arity mismatch");
    if (var >= p.n_vars())
        throw std::invalid_argument("sylvester_resultant: variable out of range");
    const long dp = p.degree_in(var), dq = q.degree_in(var);
    if (dp < 1 || dq < 1)
        throw std::invalid_argument(
            "sylvester_resultant: both inputs need positive degree in the variable");
    const std::size_t n = static_cast<std::size_t>(dp + dq);
    const std::size_t nv = p.n_vars();
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n, Poly(nv)));
    for (long i = 0; i < dq; ++i)
        for (long j = 0; j <= dp; ++j)
            m[i][i + j] = coeff_of(p, var, static_cast<unsigned>(dp - j));
    for (long i = 0; i < dp; ++i)
        for (long j = 0; j <= dq; ++j)
            m[dq + i][i + j] = coeff_of(q, var, static_cast<unsigned>(dq - j));
    Poly res = poly_det(std::move(m), n, nv);
    if (res.degree_in(var) > 0)
        throw std::logic_error("sylvester_resultant: result still involves the variable");
    return res;
}

long projection_degree(const SpaceCurve& c, std::size_t drop) {
    if (drop > 2) throw std::invalid_argument("projection_degree: drop index out of range");
    const long dp = c.p.degree_in(drop), dq = c.q.degree_in(drop);
    Poly res(3);
    if (dp == 0 && dq == 0) {
        throw std::invalid_argument(
            "projection_degree: neither generator involves the dropped coordinate");
    } else if (dp == 0) {
        res = pow_poly(c.p, dq);  // Res(p, q) = p^{deg q} when deg_v p = 0
    } else if (dq == 0) {
        res = pow_poly(c.q, dp);
    } else {
        res = sylvester_resultant(c.p, c.q, drop);
    }
    if (res.is_zero())
        throw std::invalid_argument(
            "projection_degree: resultant vanishes identically (common component)");
    Poly sf = squarefree_part(res);
    long d = sf.total_degree();
    if (d < 1)
        throw std::invalid_argument("projection_degree: projection collapses to dimension 0");
    return d;
}

BestProjection best_projection(const SpaceCurve& c) {
    BestProjection best;
    bool found = false;
    for (std::size_t drop = 0; drop < 3; ++drop) {
        long d;
        try {
            d = projection_degree(c, drop);
        } catch (const std::invalid_argument&) {
            continue;
        }
        if (!found || d > best.degree) {
            best.drop = drop;
            best.degree = d;
            found = true;
        }
    }
    if (!found)
        throw std::invalid_argument("best_projection: every coordinate drop collapses");
    return best;
}

}  // namespace qpoints
