#include "wspark/linalg.hpp"

#include <algorithm>

namespace wspark {

bool DenseVector::is_zero() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const Rational& q) { return q == 0; });
}

DenseVector DenseMatrix::column(std::size_t j) const {
    DenseVector v(rows);
    for (std::size_t i = 0; i < rows; ++i) v[i] = at(i, j);
    return v;
}

DenseVector multiply(const DenseMatrix& m, const DenseVector& v) {
    if (v.dim() != m.cols) throw ContractViolation("multiply: dimension mismatch");
    DenseVector out(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < m.cols; ++j) s += m.at(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

DenseMatrix select_columns(const DenseMatrix& m, const std::vector<std::size_t>& cols) {
    DenseMatrix out(m.rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j] >= m.cols) throw ContractViolation("select_columns: index out of range");
        for (std::size_t i = 0; i < m.rows; ++i) out.at(i, j) = m.at(i, cols[j]);
    }
    return out;
}

Rational dot(const DenseVector& a, const DenseVector& b) {
    if (a.dim() != b.dim()) throw ContractViolation("dot: dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

std::size_t rank(const DenseMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    // Clear denominators row by row; row scaling does not change rank.
    std::vector<std::vector<Integer>> a(m.rows, std::vector<Integer>(m.cols));
    for (std::size_t i = 0; i < m.rows; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols; ++j) l = lcm(l, denominator(m.at(i, j)));
        for (std::size_t j = 0; j < m.cols; ++j) {
            const Rational& q = m.at(i, j);
            a[i][j] = numerator(q) * (l / denominator(q));
        }
    }

    // Bareiss fraction-free elimination: every division below is exact.
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows && a[pivot][c] == 0) ++pivot;
        if (pivot == m.rows) continue;
        std::swap(a[r], a[pivot]);
        for (std::size_t i = r + 1; i < m.rows; ++i) {
            for (std::size_t j = c + 1; j < m.cols; ++j) {
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

namespace {

struct Rref {
    DenseMatrix mat;
    std::vector<std::size_t> pivot_cols;
};

Rref rref(DenseMatrix a) {
    Rref out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols && r < a.rows; ++c) {
        std::size_t pivot = r;
        while (pivot < a.rows && a.at(pivot, c) == 0) ++pivot;
        if (pivot == a.rows) continue;
        if (pivot != r) {
            for (std::size_t j = 0; j < a.cols; ++j) std::swap(a.at(r, j), a.at(pivot, j));
        }
        Rational inv = a.at(r, c);
        for (std::size_t j = c; j < a.cols; ++j) a.at(r, j) /= inv;
        for (std::size_t i = 0; i < a.rows; ++i) {
            if (i == r || a.at(i, c) == 0) continue;
            Rational f = a.at(i, c);
            for (std::size_t j = c; j < a.cols; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.mat = std::move(a);
    return out;
}

}  // namespace

std::vector<DenseVector> kernel_basis(const DenseMatrix& m) {
    Rref red = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t c : red.pivot_cols) is_pivot[c] = true;

    std::vector<DenseVector> basis;
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        DenseVector v(m.cols);
        v[free] = 1;
        for (std::size_t k = 0; k < red.pivot_cols.size(); ++k) {
            v[red.pivot_cols[k]] = -red.mat.at(k, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<DenseVector> solve_on_support(const DenseMatrix& m, const DenseVector& v,
                                            const std::vector<std::size_t>& support) {
    if (v.dim() != m.rows) throw ContractViolation("solve_on_support: dimension mismatch");
    for (std::size_t j : support) {
        if (j >= m.cols) throw ContractViolation("solve_on_support: index out of range");
    }

    // Augmented [m_S | v], reduced together.
    DenseMatrix aug(m.rows, support.size() + 1);
    for (std::size_t j = 0; j < support.size(); ++j) {
        for (std::size_t i = 0; i < m.rows; ++i) aug.at(i, j) = m.at(i, support[j]);
    }
    for (std::size_t i = 0; i < m.rows; ++i) aug.at(i, support.size()) = v[i];

    Rref red = rref(aug);
    // Inconsistent iff the last column is a pivot.
    if (!red.pivot_cols.empty() && red.pivot_cols.back() == support.size()) return std::nullopt;

    // Free variables stay zero; pivot variables read off the last column.
    DenseVector x(m.cols);
    for (std::size_t k = 0; k < red.pivot_cols.size(); ++k) {
        x[support[red.pivot_cols[k]]] = red.mat.at(k, support.size());
    }
    return x;
}

}  // namespace wspark
