#include "qpoints/intmat.hpp"

#include <algorithm>
#include <sstream>

namespace qpoints {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    if (rows_ == 0) throw std::invalid_argument("IntMatrix: empty initializer");
    cols_ = rows.begin()->size();
    if (cols_ == 0) throw std::invalid_argument("IntMatrix: zero columns");
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged rows");
        for (long x : r) e_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::vector<std::vector<Int>> rows) {
    if (rows.empty()) throw std::invalid_argument("from_rows: no rows");
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw std::invalid_argument("from_rows: ragged rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = std::move(rows[i][j]);
    }
    return m;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
    return std::vector<Int>(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
}

void IntMatrix::set_row(std::size_t i, const std::vector<Int>& v) {
    if (v.size() != cols_) throw std::invalid_argument("set_row: length mismatch");
    std::copy(v.begin(), v.end(), e_.begin() + i * cols_);
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::submul_row(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) -= q * at(j, c);
}

void IntMatrix::append_row(const std::vector<Int>& v) {
    if (cols_ == 0) cols_ = v.size();
    if (v.size() != cols_) throw std::invalid_argument("append_row: length mismatch");
    e_.insert(e_.end(), v.begin(), v.end());
    ++rows_;
}

IntMatrix IntMatrix::transpose() const {
    if (rows_ == 0) throw std::invalid_argument("transpose: empty matrix");
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool IntMatrix::is_zero_row(std::size_t i) const {
    for (std::size_t c = 0; c < cols_; ++c)
        if (at(i, c) != 0) return false;
    return true;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j).get_str();
    }
    os << "]";
    return os.str();
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mul: shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

HnfResult hnf(const IntMatrix& m) {
    IntMatrix a = m;
    const std::size_t nr = a.rows(), nc = a.cols();
    std::size_t r = 0;  // next pivot row
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        // Gcd elimination in column c among rows r..nr-1: repeatedly pull the
        // smallest nonzero entry up to row r and reduce the others by it.
        for (;;) {
            std::size_t piv = nr;
            for (std::size_t i = r; i < nr; ++i) {
                if (a.at(i, c) == 0) continue;
                if (piv == nr ||
                    mpz_cmpabs(a.at(i, c).get_mpz_t(), a.at(piv, c).get_mpz_t()) < 0)
                    piv = i;
            }
            if (piv == nr) break;  // column is zero below r
            a.swap_rows(r, piv);
            bool cleared = true;
            for (std::size_t i = r + 1; i < nr; ++i) {
                if (a.at(i, c) == 0) continue;
                Int q = nearest_int(Rat(a.at(i, c)) / Rat(a.at(r, c)));
                a.submul_row(i, r, q);
                if (a.at(i, c) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (a.at(r, c) != 0) {
            if (a.at(r, c) < 0) a.negate_row(r);
            for (std::size_t i = 0; i < r; ++i) {
                Int q = fdiv(a.at(i, c), a.at(r, c));
                a.submul_row(i, r, q);
            }
            ++r;
        }
    }
    return HnfResult{std::move(a), r};
}

IntMatrix hnf_rows(const IntMatrix& m) {
    HnfResult h = hnf(m);
    if (h.rank == h.h.rows()) return h.h;
    IntMatrix out(h.rank, m.cols());
    for (std::size_t i = 0; i < h.rank; ++i) out.set_row(i, h.h.row(i));
    return out;
}

IntMatrix kernel_basis(const IntMatrix& m) {
    const std::size_t nv = m.cols();          // kernel lives in Z^nv
    const std::size_t na = m.rows();          // width of the A-block
    IntMatrix aug(nv, na + nv);
    for (std::size_t i = 0; i < nv; ++i) {
        for (std::size_t j = 0; j < na; ++j) aug.at(i, j) = m.at(j, i);  // transpose block
        aug.at(i, na + i) = 1;
    }
    HnfResult h = hnf(aug);
    // Rows whose A-block vanished record integer relations among the columns
    // of the A-block, i.e. kernel vectors of m.
    std::vector<std::vector<Int>> ker;
    for (std::size_t i = 0; i < nv; ++i) {
        bool zero_a = true;
        for (std::size_t j = 0; j < na && zero_a; ++j)
            if (h.h.at(i, j) != 0) zero_a = false;
        if (!zero_a) continue;
        std::vector<Int> u(nv);
        for (std::size_t j = 0; j < nv; ++j) u[j] = h.h.at(i, na + j);
        if (!is_zero_vec(u)) ker.push_back(std::move(u));
    }
    IntMatrix out(ker.size(), nv);
    for (std::size_t i = 0; i < ker.size(); ++i) out.set_row(i, ker[i]);
    return ker.empty() ? out : hnf_rows(out);
}

// Fraction-free Bareiss determinant of a square matrix.
static Int bareiss_det(IntMatrix m) {
    const std::size_t n = m.rows();
    if (n == 0) return Int(1);
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t p = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { p = i; break; }
            if (p == n) return Int(0);
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = divexact(m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), prev);
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    Int d = m.at(n - 1, n - 1);
    return sign < 0 ? Int(-d) : d;
}

Int gram_det_sq(const IntMatrix& b) {
    const std::size_t r = b.rows();
    if (r == 0) return Int(1);
    IntMatrix g(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j) {
            Int s = 0;
            for (std::size_t c = 0; c < b.cols(); ++c) s += b.at(i, c) * b.at(j, c);
            g.at(i, j) = s;
            if (i != j) g.at(j, i) = g.at(i, j);
        }
    Int d = bareiss_det(std::move(g));
    if (d < 0) throw std::logic_error("gram_det_sq: negative Gram determinant");
    return d;
}

namespace {

struct GsData {
    std::vector<std::vector<Rat>> mu;     // mu[i][j], j < i
    std::vector<Rat> bnorm;               // |b*_i|^2
    std::vector<std::vector<Rat>> bstar;  // Gram-Schmidt vectors
};

GsData gram_schmidt(const IntMatrix& b) {
    const std::size_t r = b.rows(), n = b.cols();
    GsData g;
    g.mu.assign(r, std::vector<Rat>(r, Rat(0)));
    g.bnorm.assign(r, Rat(0));
    g.bstar.assign(r, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t c = 0; c < n; ++c) g.bstar[i][c] = Rat(b.at(i, c));
        for (std::size_t j = 0; j < i; ++j) {
            Rat proj(0);
            for (std::size_t c = 0; c < n; ++c) proj += Rat(b.at(i, c)) * g.bstar[j][c];
            g.mu[i][j] = proj / g.bnorm[j];
            for (std::size_t c = 0; c < n; ++c) g.bstar[i][c] -= g.mu[i][j] * g.bstar[j][c];
        }
        for (std::size_t c = 0; c < n; ++c) g.bnorm[i] += g.bstar[i][c] * g.bstar[i][c];
        if (g.bnorm[i] == 0) throw std::invalid_argument("lll_reduce: rows are linearly dependent");
    }
    return g;
}

void lll_core(IntMatrix& b, const Rat& delta) {
    const std::size_t r = b.rows();
    if (r < 2) {
        if (r == 1 && b.is_zero_row(0))
            throw std::invalid_argument("lll_reduce: rows are linearly dependent");
        return;
    }
    GsData g = gram_schmidt(b);
    std::size_t k = 1;
    while (k < r) {
        for (std::size_t jj = k; jj-- > 0;) {
            Rat m = g.mu[k][jj] < 0 ? Rat(-g.mu[k][jj]) : g.mu[k][jj];
            if (m <= Rat(1, 2)) continue;
            Int q = nearest_int(g.mu[k][jj]);
            b.submul_row(k, jj, q);
            for (std::size_t j2 = 0; j2 < jj; ++j2) g.mu[k][j2] -= Rat(q) * g.mu[jj][j2];
            g.mu[k][jj] -= Rat(q);
        }
        Rat lhs = g.bnorm[k];
        Rat rhs = (delta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.bnorm[k - 1];
        if (lhs >= rhs) {
            ++k;
        } else {
            b.swap_rows(k, k - 1);
            g = gram_schmidt(b);  // desk-scale ranks: full recompute is cheap
            k = k > 1 ? k - 1 : 1;
        }
    }
}

void sort_rows_by_norm(IntMatrix& b) {
    std::vector<std::vector<Int>> rows;
    rows.reserve(b.rows());
    for (std::size_t i = 0; i < b.rows(); ++i) rows.push_back(b.row(i));
    std::stable_sort(rows.begin(), rows.end(),
                     [](const std::vector<Int>& x, const std::vector<Int>& y) {
                         Int nx = norm_sq(x), ny = norm_sq(y);
                         if (nx != ny) return nx < ny;
                         return lex_cmp(x, y) < 0;
                     });
    for (std::size_t i = 0; i < rows.size(); ++i) b.set_row(i, rows[i]);
}

}  // namespace

bool is_lll_reduced(const IntMatrix& b, const Rat& delta) {
    if (b.rows() < 2) return true;
    GsData g = gram_schmidt(b);
    for (std::size_t k = 1; k < b.rows(); ++k) {
        for (std::size_t j = 0; j < k; ++j) {
            Rat m = g.mu[k][j];
            if (m < 0) m = -m;
            if (m > Rat(1, 2)) return false;
        }
        if (g.bnorm[k] < (delta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.bnorm[k - 1]) return false;
    }
    return true;
}

IntMatrix lll_reduce(IntMatrix b, const Rat& delta) {
    if (delta <= Rat(1, 4) || delta > 1)
        throw std::invalid_argument("lll_reduce: delta must lie in (1/4, 1]");
    if (b.rows() == 0) return b;
    // Alternate the reduction core with norm-sorting until the sorted basis
    // is itself reduced; in practice this converges immediately.
    for (int round = 0; round < 64; ++round) {
        lll_core(b, delta);
        sort_rows_by_norm(b);
        if (is_lll_reduced(b, delta)) return b;
    }
    return b;
}

}  // namespace qpoints
