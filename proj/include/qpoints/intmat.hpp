#pragma once

#include "qpoints/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace qpoints {

// Dense matrix over Z with arbitrary-precision entries, row-major storage.
// A 0 x n matrix is permitted and stands for the empty generating set
// (its row lattice is {0}, its kernel is all of Z^n).
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, Int(0)) {
        if (cols == 0) throw std::invalid_argument("IntMatrix: zero columns");
    }
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::vector<std::vector<Int>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    std::vector<Int> row(std::size_t i) const;
    void set_row(std::size_t i, const std::vector<Int>& v);
    void swap_rows(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    // row i -= q * row j
    void submul_row(std::size_t i, std::size_t j, const Int& q);
    void append_row(const std::vector<Int>& v);

    IntMatrix transpose() const;
    bool is_zero_row(std::size_t i) const;

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    std::string to_string() const;  // human-readable, for diagnostics

private:
    std::size_t rows_, cols_;
    std::vector<Int> e_;
};

IntMatrix mul(const IntMatrix& a, const IntMatrix& b);

struct HnfResult {
    IntMatrix h;       // same shape as the input; zero rows at the bottom
    std::size_t rank;  // number of nonzero rows of h
};

// Row-style Hermite normal form: unique canonical basis of the row lattice.
// Pivots are positive, entries above each pivot reduced into [0, pivot),
// pivot columns strictly increase, zero rows are collected at the bottom.
HnfResult hnf(const IntMatrix& m);

// The nonzero rows of hnf(m).h, i.e. a canonical rank x cols basis matrix.
IntMatrix hnf_rows(const IntMatrix& m);

// Basis of the integer kernel {y in Z^cols : m * y^T = 0}, returned as a
// (cols - rank) x cols matrix in Hermite normal form.  The kernel of an
// integer matrix is automatically saturated.  May have zero rows.
IntMatrix kernel_basis(const IntMatrix& m);

// det(B * B^T) for a basis matrix B with linearly independent rows; this is
// the squared covolume of the row lattice.  Returns 0 when the rows are
// dependent and 1 for the empty matrix.
Int gram_det_sq(const IntMatrix& b);

// Exact-arithmetic LLL reduction (rational Gram-Schmidt, no floating point).
// Requires linearly independent rows; delta in (1/4, 1].  The result spans
// the same row lattice, satisfies the size-reduction and Lovasz conditions,
// and its rows are sorted by nondecreasing squared norm (ties broken
// lexicographically).
IntMatrix lll_reduce(IntMatrix b, const Rat& delta = Rat(3, 4));

bool is_lll_reduced(const IntMatrix& b, const Rat& delta = Rat(3, 4));

}  // namespace qpoints
