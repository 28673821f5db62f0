#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qpoints/experiment.hpp"
#include "qpoints/intmat.hpp"

using namespace qpoints;

namespace {

// ---- oracles (independent reference implementations) -----------------------

// Cofactor-expansion determinant; exponential, for small matrices only.
Int naive_det(const std::vector<std::vector<Int>>& m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Int acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<Int>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Int> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[i][c]);
            minor.push_back(std::move(row));
        }
        Int term = m[0][j] * naive_det(minor);
        if (j % 2) acc -= term;
        else acc += term;
    }
    return acc;
}

std::vector<std::vector<Int>> gram_of(const IntMatrix& b) {
    std::vector<std::vector<Int>> g(b.rows(), std::vector<Int>(b.rows(), Int(0)));
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.rows(); ++j)
            for (std::size_t c = 0; c < b.cols(); ++c)
                g[i][j] += b.at(i, c) * b.at(j, c);
    return g;
}

// Solve x * H = v over Z using only the echelon shape of H (positive pivots
// in strictly increasing columns).  Independent of the library's membership
// code path.
bool echelon_reachable(const IntMatrix& h, std::vector<Int> v) {
    for (std::size_t i = 0; i < h.rows(); ++i) {
        if (h.is_zero_row(i)) break;
        std::size_t p = 0;
        while (p < h.cols() && h.at(i, p) == 0) ++p;
        REQUIRE(p < h.cols());
        if (v[p] % h.at(i, p) != 0) return false;
        Int q = v[p] / h.at(i, p);
        for (std::size_t c = 0; c < h.cols(); ++c) v[c] -= q * h.at(i, c);
    }
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

// Brute-force membership in the row lattice: integer combinations with all
// coefficients in [-bound, bound].  Exponential; tiny instances only.
bool combo_reachable(const IntMatrix& m, const std::vector<Int>& v, long bound) {
    std::vector<long> c(m.rows(), -bound);
    for (;;) {
        std::vector<Int> acc(m.cols(), Int(0));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                acc[j] += make_int(c[i]) * m.at(i, j);
        if (acc == v) return true;
        std::size_t i = 0;
        while (i < c.size() && c[i] == bound) c[i++] = -bound;
        if (i == c.size()) return false;
        ++c[i];
    }
}

void check_hnf_shape(const IntMatrix& h, std::size_t rank) {
    std::size_t last_pivot_col = 0;
    bool seen_zero = false;
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        if (h.is_zero_row(i)) {
            seen_zero = true;
            continue;
        }
        CHECK_FALSE(seen_zero);  // zero rows collected at the bottom
        ++nonzero;
        std::size_t p = 0;
        while (p < h.cols() && h.at(i, p) == 0) ++p;
        REQUIRE(p < h.cols());
        CHECK(h.at(i, p) > 0);
        if (i > 0 && nonzero > 1) {
            CHECK(p > last_pivot_col);
        }
        for (std::size_t r = 0; r < i; ++r) {
            if (h.is_zero_row(r)) continue;
            CHECK(h.at(r, p) >= 0);
            CHECK(h.at(r, p) < h.at(i, p));
        }
        last_pivot_col = p;
    }
    CHECK(nonzero == rank);
}

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long long bound) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = make_int(rng.uniform(-bound, bound));
    return m;
}

}  // namespace

TEST_CASE("matrix basics") {
    IntMatrix m{{1, 2}, {3, 4}};
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 2);
    CHECK(m.at(1, 0) == 3);
    CHECK_THROWS_AS(IntMatrix(2, 0), std::invalid_argument);

    IntMatrix t = m.transpose();
    CHECK(t.at(0, 1) == 3);

    IntMatrix p = mul(m, IntMatrix::identity(2));
    CHECK(p == m);
    IntMatrix q = mul(m, m);
    CHECK(q == IntMatrix{{7, 10}, {15, 22}});

    IntMatrix z(0, 3);
    CHECK(z.rows() == 0);
    z.append_row({Int(1), Int(0), Int(2)});
    CHECK(z.rows() == 1);
    CHECK_FALSE(z.is_zero_row(0));
}

TEST_CASE("hermite form of pinned examples") {
    SUBCASE("identity is fixed") {
        HnfResult r = hnf(IntMatrix::identity(3));
        CHECK(r.rank == 3);
        CHECK(r.h == IntMatrix::identity(3));
    }
    SUBCASE("dependent rows collapse") {
        IntMatrix m{{2, 4}, {1, 2}};
        HnfResult r = hnf(m);
        CHECK(r.rank == 1);
        CHECK(r.h == IntMatrix{{1, 2}, {0, 0}});
        // the canonical generator is reachable from the original rows
        CHECK(combo_reachable(m, {Int(1), Int(2)}, 3));
    }
    SUBCASE("row order does not matter") {
        HnfResult r = hnf(IntMatrix{{0, 3}, {2, 0}});
        CHECK(r.rank == 2);
        CHECK(r.h == IntMatrix{{2, 0}, {0, 3}});
    }
    SUBCASE("single wide row") {
        HnfResult r = hnf(IntMatrix{{1, 2, 2}});
        CHECK(r.rank == 1);
        CHECK(r.h == IntMatrix{{1, 2, 2}});
        CHECK(hnf_rows(IntMatrix{{1, 2, 2}}).rows() == 1);
    }
}

TEST_CASE("hermite form properties on seeded matrices") {
    Rng rng(101);
    for (int iter = 0; iter < 150; ++iter) {
        std::size_t rows = 1 + static_cast<std::size_t>(rng.uniform(0, 2));
        std::size_t cols = 1 + static_cast<std::size_t>(rng.uniform(0, 3));
        IntMatrix m = random_matrix(rng, rows, cols, 9);
        HnfResult r = hnf(m);
        check_hnf_shape(r.h, r.rank);
        CHECK(r.h.rows() == m.rows());
        CHECK(r.h.cols() == m.cols());
        // idempotence: the form is canonical
        CHECK(hnf(r.h).h == r.h);
        // every original row lies in the row lattice of the form
        for (std::size_t i = 0; i < rows; ++i)
            CHECK(echelon_reachable(r.h, m.row(i)));
        // equal covolume forces equality of the (full-rank) lattices,
        // so containment plus the determinant check pins the row lattice
        if (r.rank == rows) {
            Int dm = naive_det(gram_of(m));
            Int dh = naive_det(gram_of(hnf_rows(m)));
            CHECK(dm == dh);
            CHECK(dm > 0);
        }
    }
}

TEST_CASE("kernel basis") {
    SUBCASE("pinned plane normal") {
        IntMatrix k = kernel_basis(IntMatrix{{1, 2, 2}});
        REQUIRE(k.rows() == 2);
        CHECK(k == IntMatrix{{2, 0, -1}, {0, 1, -1}});
        CHECK(gram_det_sq(k) == 9);
    }
    SUBCASE("full rank has trivial kernel") {
        CHECK(kernel_basis(IntMatrix::identity(3)).rows() == 0);
    }
    SUBCASE("kernel of the zero row is everything") {
        IntMatrix k = kernel_basis(IntMatrix{{0, 0}});
        CHECK(k == IntMatrix::identity(2));
    }
    SUBCASE("seeded: annihilation, rank, and saturation") {
        Rng rng(202);
        for (int iter = 0; iter < 100; ++iter) {
            std::size_t rows = 1 + static_cast<std::size_t>(rng.uniform(0, 1));
            std::size_t cols = 2 + static_cast<std::size_t>(rng.uniform(0, 2));
            IntMatrix m = random_matrix(rng, rows, cols, 3);
            IntMatrix k = kernel_basis(m);
            CHECK(k.rows() == cols - hnf(m).rank);
            for (std::size_t i = 0; i < k.rows(); ++i) {
                Int acc;
                for (std::size_t r = 0; r < rows; ++r) {
                    acc = 0;
                    for (std::size_t c = 0; c < cols; ++c) acc += m.at(r, c) * k.at(i, c);
                    CHECK(acc == 0);
                }
            }
            // exhaustive small-box saturation check: every integer solution
            // in [-3,3]^cols must already be an integer combination
            std::vector<long> v(cols, -3);
            for (;;) {
                bool solves = true;
                for (std::size_t r = 0; r < rows && solves; ++r) {
                    Int acc = 0;
                    for (std::size_t c = 0; c < cols; ++c) acc += m.at(r, c) * make_int(v[c]);
                    solves = acc == 0;
                }
                if (solves) {
                    std::vector<Int> vi(cols);
                    for (std::size_t c = 0; c < cols; ++c) vi[c] = make_int(v[c]);
                    CHECK(echelon_reachable(k, vi));
                }
                std::size_t i = 0;
                while (i < cols && v[i] == 3) v[i++] = -3;
                if (i == cols) break;
                ++v[i];
            }
        }
    }
}

TEST_CASE("gram determinant") {
    CHECK(gram_det_sq(IntMatrix::identity(4)) == 1);
    CHECK(gram_det_sq(IntMatrix{{2, 0}, {0, 3}}) == 36);
    CHECK(gram_det_sq(IntMatrix{{1, 2, 2}}) == 9);
    CHECK(gram_det_sq(IntMatrix{{1, 2}, {2, 4}}) == 0);
    CHECK(gram_det_sq(IntMatrix(0, 5)) == 1);

    Rng rng(303);
    for (int iter = 0; iter < 120; ++iter) {
        std::size_t rows = 1 + static_cast<std::size_t>(rng.uniform(0, 2));
        std::size_t cols = rows + static_cast<std::size_t>(rng.uniform(0, 2));
        IntMatrix m = random_matrix(rng, rows, cols, 7);
        CHECK(gram_det_sq(m) == naive_det(gram_of(m)));
    }
}

TEST_CASE("lll reduction") {
    SUBCASE("pinned skew basis") {
        IntMatrix r = lll_reduce(IntMatrix{{1, 0}, {10, 1}});
        CHECK(hnf(r).h == IntMatrix::identity(2));
        CHECK(dot(r.row(0), r.row(0)) == 1);
        CHECK(dot(r.row(1), r.row(1)) == 1);
        CHECK(is_lll_reduced(r));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(lll_reduce(IntMatrix{{1, 2}, {2, 4}}), std::invalid_argument);
        CHECK_THROWS_AS(lll_reduce(IntMatrix::identity(2), Rat(1, 4)),
                        std::invalid_argument);
        CHECK_THROWS_AS(lll_reduce(IntMatrix::identity(2), Rat(5, 4)),
                        std::invalid_argument);
        CHECK_NOTHROW(lll_reduce(IntMatrix{{3, 1}, {1, 2}}, Rat(1)));
    }
    SUBCASE("seeded: lattice preserved, norms bounded, order canonical") {
        Rng rng(404);
        int done = 0;
        while (done < 80) {
            std::size_t rows = 2 + static_cast<std::size_t>(rng.uniform(0, 1));
            std::size_t cols = rows + static_cast<std::size_t>(rng.uniform(0, 1));
            IntMatrix m = random_matrix(rng, rows, cols, 12);
            Int det = naive_det(gram_of(m));
            if (det == 0) continue;
            ++done;
            IntMatrix r = lll_reduce(m);
            CHECK(is_lll_reduced(r));
            CHECK(hnf(r).h == hnf(m).h);  // same row lattice
            // product of squared norms within the reduction guarantee
            Int prod = 1, bound = det;
            for (std::size_t i = 0; i < rows; ++i) prod *= dot(r.row(i), r.row(i));
            for (std::size_t e = 0; e < rows * (rows - 1) / 2; ++e) bound *= 2;
            CHECK(prod <= bound);
            for (std::size_t i = 0; i + 1 < rows; ++i) {
                Int a = dot(r.row(i), r.row(i));
                Int b = dot(r.row(i + 1), r.row(i + 1));
                CHECK(a <= b);  // sorted by squared norm
            }
        }
    }
}
