#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qpoints {

using Int = mpz_class;
using Rat = mpq_class;

// gmpxx provides no long long constructor; both 64-bit widths coincide here.
inline Int make_int(long long v) {
    static_assert(sizeof(long) == sizeof(long long), "needs 64-bit long");
    return Int(static_cast<long>(v));
}

// Floor division: largest q with q*b <= a.  b must be nonzero.
inline Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Ceiling division: smallest q with q*b >= a.  b must be nonzero.
inline Int cdiv(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Exact division; throws if b does not divide a.
inline Int divexact(const Int& a, const Int& b) {
    if (b == 0) throw std::invalid_argument("divexact: division by zero");
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::invalid_argument("divexact: inexact division");
    return q;
}

// Nearest integer to a rational, halves rounded up (floor(q + 1/2)).
inline Int nearest_int(const Rat& q) {
    Int num = q.get_num(), den = q.get_den();  // den > 0 canonical
    return fdiv(2 * num + den, 2 * den);
}

inline Int vec_gcd(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

inline Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Int norm_sq(const std::vector<Int>& a) { return dot(a, a); }

inline bool is_zero_vec(const std::vector<Int>& a) {
    for (const Int& x : a)
        if (x != 0) return false;
    return true;
}

// Lexicographic comparison of integer vectors (equal lengths assumed).
inline int lex_cmp(const std::vector<Int>& a, const std::vector<Int>& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] < b[i]) return -1;
        if (a[i] > b[i]) return 1;
    }
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

}  // namespace qpoints
