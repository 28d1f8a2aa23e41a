#pragma once

#include "wspark/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace wspark {

struct DenseVector {
    std::vector<Rational> entries;

    DenseVector() = default;
    explicit DenseVector(std::size_t dim) : entries(dim) {}
    explicit DenseVector(std::vector<Rational> e) : entries(std::move(e)) {}

    std::size_t dim() const { return entries.size(); }
    const Rational& operator[](std::size_t i) const { return entries[i]; }
    Rational& operator[](std::size_t i) { return entries[i]; }

    bool is_zero() const;
    bool operator==(const DenseVector&) const = default;
};

// Row-major dense matrix over the rationals.
struct DenseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rational> entries;  // length rows*cols

    DenseMatrix() = default;
    DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

    const Rational& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
    Rational& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }

    DenseVector column(std::size_t j) const;
    bool operator==(const DenseMatrix&) const = default;
};

DenseVector multiply(const DenseMatrix& m, const DenseVector& v);

// Submatrix keeping the listed columns, in the given order.
DenseMatrix select_columns(const DenseMatrix& m, const std::vector<std::size_t>& cols);

// Exact column-space dimension via fraction-free (Bareiss) elimination on
// the denominator-cleared integer matrix. No tolerances anywhere.
std::size_t rank(const DenseMatrix& m);

// Basis of the exact null space (length = cols - rank). Computed by
// rational reduced row echelon form, one basis vector per free column,
// free variable pinned to 1.
std::vector<DenseVector> kernel_basis(const DenseMatrix& m);

// Solves m*x = v with x zero outside `support`. Returns nullopt when the
// restricted system is inconsistent. Underdetermined restricted systems
// get their free variables pinned to zero, so the result is deterministic.
std::optional<DenseVector> solve_on_support(const DenseMatrix& m, const DenseVector& v,
                                            const std::vector<std::size_t>& support);

Rational dot(const DenseVector& a, const DenseVector& b);

}  // namespace wspark
