#include "qpoints/subdivision.hpp"

#include <mpfr.h>

#include <cmath>
#include <stdexcept>

namespace qpoints {

namespace {

constexpr mpfr_prec_t kBits = 192;

struct Big {
    mpfr_t v;
    Big() { mpfr_init2(v, kBits); mpfr_set_zero(v, 1); }
    explicit Big(double d) { mpfr_init2(v, kBits); mpfr_set_d(v, d, MPFR_RNDN); }
    Big(const Big& o) { mpfr_init2(v, kBits); mpfr_set(v, o.v, MPFR_RNDN); }
    Big& operator=(const Big& o) {
        if (this != &o) mpfr_set(v, o.v, MPFR_RNDN);
        return *this;
    }
    ~Big() { mpfr_clear(v); }
    double to_double() const { return mpfr_get_d(v, MPFR_RNDN); }
};

// x^((k-1)/k) for x >= 0, via rootn(x^(k-1), k); monotone, so directed
// rounding of each step gives a directed bound on the result.
void pow_frac(Big& out, const Big& x, unsigned k, mpfr_rnd_t rnd) {
    Big t;
    mpfr_pow_ui(t.v, x.v, k - 1, rnd);
    mpfr_rootn_ui(out.v, t.v, k, rnd);
}

struct Iv {
    Big lo, hi;
    static Iv point(double d) {
        Iv r;
        mpfr_set_d(r.lo.v, d, MPFR_RNDD);
        mpfr_set_d(r.hi.v, d, MPFR_RNDU);
        return r;
    }
};

Iv iv_sub(const Iv& a, const Iv& b) {
    Iv r;
    mpfr_sub(r.lo.v, a.lo.v, b.hi.v, MPFR_RNDD);
    mpfr_sub(r.hi.v, a.hi.v, b.lo.v, MPFR_RNDU);
    return r;
}

// Product of nonnegative intervals.
Iv iv_mul_pos(const Iv& a, const Iv& b) {
    Iv r;
    mpfr_mul(r.lo.v, a.lo.v, b.lo.v, MPFR_RNDD);
    mpfr_mul(r.hi.v, a.hi.v, b.hi.v, MPFR_RNDU);
    return r;
}

// Reciprocal of a positive interval.
Iv iv_recip_pos(const Iv& a) {
    Iv r;
    mpfr_ui_div(r.lo.v, 1, a.hi.v, MPFR_RNDD);
    mpfr_ui_div(r.hi.v, 1, a.lo.v, MPFR_RNDU);
    return r;
}

// x^((k-1)/k) of a nonnegative interval.
Iv iv_pow_frac(const Iv& a, unsigned k) {
    Iv r;
    pow_frac(r.lo, a.lo, k, MPFR_RNDD);
    pow_frac(r.hi, a.hi, k, MPFR_RNDU);
    return r;
}

// x^k of a nonnegative interval.
Iv iv_pow_ui(const Iv& a, unsigned k) {
    Iv r;
    mpfr_pow_ui(r.lo.v, a.lo.v, k, MPFR_RNDD);
    mpfr_pow_ui(r.hi.v, a.hi.v, k, MPFR_RNDU);
    return r;
}

// H^(1/k) of a nonnegative interval.
Iv iv_rootn(const Iv& a, unsigned k) {
    Iv r;
    mpfr_rootn_ui(r.lo.v, a.lo.v, k, MPFR_RNDD);
    mpfr_rootn_ui(r.hi.v, a.hi.v, k, MPFR_RNDU);
    return r;
}

Iv iv_mul_ui(const Iv& a, unsigned long m) {
    Iv r;
    mpfr_mul_ui(r.lo.v, a.lo.v, m, MPFR_RNDD);
    mpfr_mul_ui(r.hi.v, a.hi.v, m, MPFR_RNDU);
    return r;
}

// Certified a <= b with relative outward tolerance 1e-25: passes exact
// equalities despite rounding, catches any double-scale violation.
bool verified_leq(const Iv& a, const Iv& b) {
    Big diff;
    mpfr_sub(diff.v, a.hi.v, b.lo.v, MPFR_RNDU);
    Big scale;
    mpfr_abs(scale.v, b.hi.v, MPFR_RNDU);
    if (mpfr_cmp_ui(scale.v, 1) < 0) mpfr_set_ui(scale.v, 1, MPFR_RNDN);
    Big eps;
    mpfr_mul_d(eps.v, scale.v, 1e-25, MPFR_RNDU);
    return mpfr_cmp(diff.v, eps.v) <= 0;
}

// One recurrence step at full precision, round-to-nearest: b - b^((k-1)/k).
Big step_nearest(const Big& b, unsigned k) {
    Big dec, out;
    pow_frac(dec, b, k, MPFR_RNDN);
    mpfr_sub(out.v, b.v, dec.v, MPFR_RNDN);
    return out;
}

}  // namespace

SubdivisionScheme subdivide(double H, unsigned k) {
    if (!(H >= 2) || !std::isfinite(H))
        throw std::invalid_argument("subdivide: H must be a finite real >= 2");
    if (k < 1) throw std::invalid_argument("subdivide: k must be >= 1");

    SubdivisionScheme s;
    s.H = H;
    s.k = k;
    Big b(H);
    s.endpoints.push_back(b.to_double());
    while (mpfr_cmp_ui(b.v, 2) >= 0) {
        b = step_nearest(b, k);
        s.endpoints.push_back(b.to_double());
    }
    s.K = s.endpoints.size() - 1;
    return s;
}

double SubdivisionScheme::f(double i) const {
    Big h(H), root, base, ii(i), powed;
    mpfr_rootn_ui(root.v, h.v, k, MPFR_RNDN);
    mpfr_mul_ui(root.v, root.v, k, MPFR_RNDN);
    mpfr_sub(base.v, root.v, ii.v, MPFR_RNDN);
    mpfr_pow_ui(powed.v, base.v, k, MPFR_RNDN);
    Big kk;
    mpfr_set_ui(kk.v, k, MPFR_RNDN);
    mpfr_pow_ui(kk.v, kk.v, k, MPFR_RNDN);
    mpfr_div(powed.v, powed.v, kk.v, MPFR_RNDN);
    return powed.to_double();
}

SubdivisionCheck verify_subdivision(const SubdivisionScheme& s) {
    SubdivisionCheck c;
    const std::size_t m = s.endpoints.size();
    if (m < 2 || s.K != m - 1 || s.k < 1 || !(s.H >= 2)) return c;

    // Shape: b_0 = H, strictly decreasing, crosses 2 exactly at the end.
    c.shape_ok = s.endpoints[0] == s.H;
    for (std::size_t i = 0; i + 1 < m; ++i)
        if (!(s.endpoints[i] > s.endpoints[i + 1])) c.shape_ok = false;
    if (!(s.endpoints[m - 1] < 2) || !(s.endpoints[m - 2] >= 2)) c.shape_ok = false;

    // Recurrence on the published doubles: one extended-precision step from
    // b_i must land within double-rounding distance of b_{i+1}.
    c.recurrence_ok = true;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        Iv bi = Iv::point(s.endpoints[i]);
        Iv next = iv_sub(bi, iv_pow_frac(bi, s.k));
        double tol = 1e-12 * std::max(1.0, std::abs(s.endpoints[i + 1]));
        Big lo, hi;
        mpfr_sub_d(lo.v, next.lo.v, tol, MPFR_RNDD);
        mpfr_add_d(hi.v, next.hi.v, tol, MPFR_RNDU);
        if (mpfr_cmp_d(lo.v, s.endpoints[i + 1]) > 0 ||
            mpfr_cmp_d(hi.v, s.endpoints[i + 1]) < 0)
            c.recurrence_ok = false;
    }

    // K <= k * H^(1/k).
    Iv kh = iv_mul_ui(iv_rootn(Iv::point(s.H), s.k), s.k);
    c.count_bound_ok = verified_leq(Iv::point(static_cast<double>(s.K)), kh);

    // Consecutive-endpoint ratio never exceeds 1 / (1 - 2^(-1/k)); equality
    // occurs exactly at an endpoint equal to 2, which the tolerance admits.
    Iv ratio_bound =
        iv_recip_pos(iv_sub(Iv::point(1.0), iv_recip_pos(iv_rootn(Iv::point(2.0), s.k))));
    c.ratio_ok = true;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        Iv lhs = Iv::point(s.endpoints[i]);
        Iv rhs = iv_mul_pos(ratio_bound, Iv::point(s.endpoints[i + 1]));
        if (!verified_leq(lhs, rhs)) c.ratio_ok = false;
    }

    // f decrements by at most f^((k-1)/k) while the argument stays in range.
    // i runs while i+1 <= k * H^(1/k), so both base intervals are >= 0.
    c.f_property_ok = true;
    {
        Big bound_lo;
        mpfr_set(bound_lo.v, kh.lo.v, MPFR_RNDD);
        long imax = mpfr_get_si(bound_lo.v, MPFR_RNDD) - 1;
        Iv kk;
        mpfr_ui_pow_ui(kk.lo.v, s.k, s.k, MPFR_RNDD);
        mpfr_ui_pow_ui(kk.hi.v, s.k, s.k, MPFR_RNDU);
        auto f_iv = [&](long i) {
            Iv base = iv_sub(kh, Iv::point(static_cast<double>(i)));
            Iv powed = iv_pow_ui(base, s.k);
            return iv_mul_pos(powed, iv_recip_pos(kk));
        };
        for (long i = 0; i <= imax; ++i) {
            Iv fi = f_iv(i), fi1 = f_iv(i + 1);
            if (!verified_leq(iv_sub(fi, fi1), iv_pow_frac(fi, s.k)))
                c.f_property_ok = false;
        }
    }
    return c;
}

}  // namespace qpoints
