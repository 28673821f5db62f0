#include "qpoints/lattice.hpp"

#include <algorithm>
#include <functional>

namespace qpoints {

IntegerLattice IntegerLattice::from_generators(const IntMatrix& gens) {
    if (gens.rows() == 0) throw std::invalid_argument("from_generators: no generators");
    IntMatrix basis = hnf_rows(gens);
    if (basis.rows() == 0)
        throw std::invalid_argument("from_generators: all generators are zero");
    Int det_sq = gram_det_sq(basis);
    return IntegerLattice(std::move(basis), std::move(det_sq));
}

bool IntegerLattice::contains(const std::vector<Int>& v) const {
    if (v.size() != ambient_dim())
        throw std::invalid_argument("contains: dimension mismatch");
    std::vector<Int> w = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        // Pivot column of HNF row i: first nonzero entry.
        std::size_t p = 0;
        while (basis_.at(i, p) == 0) ++p;
        if (w[p] == 0) continue;
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), w[p].get_mpz_t(),
                    basis_.at(i, p).get_mpz_t());
        if (r != 0) return false;
        for (std::size_t c = p; c < w.size(); ++c) w[c] -= q * basis_.at(i, c);
    }
    return is_zero_vec(w);
}

bool operator<(const IntegerLattice& a, const IntegerLattice& b) {
    if (a.det_sq_ != b.det_sq_) return a.det_sq_ < b.det_sq_;
    if (a.basis_.rows() != b.basis_.rows()) return a.basis_.rows() < b.basis_.rows();
    for (std::size_t i = 0; i < a.basis_.rows(); ++i) {
        int c = lex_cmp(a.basis_.row(i), b.basis_.row(i));
        if (c != 0) return c < 0;
    }
    return false;
}

IntegerLattice saturate(const IntegerLattice& l) {
    IntMatrix sat = kernel_basis(kernel_basis(l.basis()));
    return IntegerLattice::from_generators(sat);
}

bool is_primitive(const IntegerLattice& l) { return saturate(l) == l; }

IntegerLattice orthogonal_complement(const IntegerLattice& l) {
    if (l.rank() == l.ambient_dim())
        throw std::invalid_argument(
            "orthogonal_complement: full-rank lattice has trivial complement");
    return IntegerLattice::from_generators(kernel_basis(l.basis()));
}

std::vector<std::vector<Int>> points_in_box(const IntegerLattice& l, const Int& box_bound) {
    if (box_bound < 1) throw std::invalid_argument("points_in_box: bound must be positive");
    const IntMatrix red = lll_reduce(l.basis());
    const std::size_t r = red.rows(), n = red.cols();

    // Exact rational Gram-Schmidt data of the reduced basis.
    std::vector<std::vector<Rat>> mu(r, std::vector<Rat>(r, Rat(0)));
    std::vector<Rat> bnorm(r, Rat(0));
    {
        std::vector<std::vector<Rat>> bstar(r, std::vector<Rat>(n, Rat(0)));
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t c = 0; c < n; ++c) bstar[i][c] = Rat(red.at(i, c));
            for (std::size_t j = 0; j < i; ++j) {
                Rat proj(0);
                for (std::size_t c = 0; c < n; ++c) proj += Rat(red.at(i, c)) * bstar[j][c];
                mu[i][j] = proj / bnorm[j];
                for (std::size_t c = 0; c < n; ++c) bstar[i][c] -= mu[i][j] * bstar[j][c];
            }
            for (std::size_t c = 0; c < n; ++c) bnorm[i] += bstar[i][c] * bstar[i][c];
        }
    }

    // Every point of the box lies in the Euclidean ball of squared radius
    // n * box_bound^2; enumerate that ball exactly, then filter by max-norm.
    const Rat ball(Int(n) * box_bound * box_bound);

    std::vector<std::vector<Int>> out;
    std::vector<Int> u(r, Int(0));       // coefficient vector, filled from level r-1 down
    std::vector<Rat> center(r, Rat(0));  // c_i = sum_{j>i} u_j mu[j][i]
    std::vector<Rat> used(r + 1, Rat(0));// used[i] = sum_{l>=i} bnorm_l (u_l + c_l)^2

    // Recursive descent over levels; at level i the admissible u_i form a
    // contiguous interval, scanned outward from the rounded center.
    auto emit = [&]() {
        std::vector<Int> x(n, Int(0));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t c = 0; c < n; ++c) x[c] += u[i] * red.at(i, c);
        for (const Int& xc : x)
            if (xc > box_bound || xc < -box_bound) return;
        out.push_back(std::move(x));
    };

    std::function<void(std::size_t)> descend = [&](std::size_t lvl) {
        const std::size_t i = lvl - 1;
        Rat rem = ball - used[lvl];
        if (rem < 0) return;
        center[i] = Rat(0);
        for (std::size_t j = lvl; j < r; ++j) center[i] += Rat(u[j]) * mu[j][i];
        // Admissible u_i satisfy bnorm_i * (u_i + c_i)^2 <= rem.
        auto fits = [&](const Int& z) {
            Rat t = Rat(z) + center[i];
            return bnorm[i] * t * t <= rem;
        };
        auto step = [&](const Int& z) {
            u[i] = z;
            Rat t = Rat(z) + center[i];
            used[i] = used[lvl] + bnorm[i] * t * t;
            if (i == 0) emit();
            else descend(i);
        };
        // ceil(-c_i): smallest integer >= -c_i.
        Rat negc = -center[i];
        Int zup = cdiv(negc.get_num(), negc.get_den());
        for (Int z = zup; fits(z); ++z) step(z);
        for (Int z = zup - 1; fits(z); --z) step(z);
    };

    if (r > 0) descend(r);
    std::sort(out.begin(), out.end(),
              [](const std::vector<Int>& a, const std::vector<Int>& b) {
                  return lex_cmp(a, b) < 0;
              });
    return out;
}

}  // namespace qpoints
