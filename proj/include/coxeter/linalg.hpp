// Fraction-free linear algebra over Z[tau].
//
// Independence over R of Z[tau]-vectors is decided over Q(tau), which is
// equivalent since every entry lies in Q(tau).  Bareiss elimination keeps
// all intermediate entries in Z[tau] (they are minors of the input).

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "coxeter/golden.hpp"
#include "coxeter/vec.hpp"

namespace coxeter {

class GoldenMatrix {
public:
    GoldenMatrix() = default;
    GoldenMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    /// Rows are the first `width` lanes of each vector.
    static GoldenMatrix from_rows(std::span<const Vec> rows, std::size_t width);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GoldenInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const GoldenInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const GoldenMatrix&, const GoldenMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GoldenInt> data_;
};

std::size_t rank(GoldenMatrix m);
GoldenInt determinant(GoldenMatrix m);

/// Determinants of the k x k leading principal submatrices, k = 1..n.
std::vector<GoldenInt> leading_minors(const GoldenMatrix& m);

/// Positive definite iff every leading principal minor is positive.
bool is_positive_definite(const GoldenMatrix& m);

/// Classical adjugate, so m * adjugate(m) = det(m) * I.
GoldenMatrix adjugate(const GoldenMatrix& m);

/// True if the vectors (first `width` lanes) are linearly independent.
bool linearly_independent(std::span<const Vec> vectors, std::size_t width);

/// True if `v` lies in the span of `basis`, decided by an exact rank test.
bool in_span(std::span<const Vec> basis, const Vec& v, std::size_t width);

} // namespace coxeter
