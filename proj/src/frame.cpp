#include "wspark/frame.hpp"

#include <cmath>

namespace wspark {

Frame make_frame(std::size_t dim, const std::vector<DenseVector>& columns) {
    if (dim == 0 || columns.empty()) throw ContractViolation("make_frame: empty frame");
    for (const DenseVector& c : columns) {
        if (c.dim() != dim) throw ContractViolation("make_frame: column dimension mismatch");
        if (c.is_zero()) throw FrameError("zero frame vector");
    }
    Frame fr;
    fr.dim = dim;
    fr.count = columns.size();
    fr.synthesis = DenseMatrix(dim, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        for (std::size_t i = 0; i < dim; ++i) fr.synthesis.at(i, j) = columns[j][i];
    }
    if (rank(fr.synthesis) != dim) throw FrameError("does not span");
    return fr;
}

DenseVector analysis(const Frame& fr, const DenseVector& h) {
    if (h.dim() != fr.dim) throw ContractViolation("analysis: dimension mismatch");
    DenseVector out(fr.count);
    for (std::size_t j = 0; j < fr.count; ++j) out[j] = dot(h, fr.synthesis.column(j));
    return out;
}

DenseVector synthesize(const Frame& fr, const DenseVector& d) {
    if (d.dim() != fr.count) throw ContractViolation("synthesize: dimension mismatch");
    return multiply(fr.synthesis, d);
}

std::vector<std::vector<double>> normalize(const Frame& fr) {
    std::vector<std::vector<double>> cols(fr.count, std::vector<double>(fr.dim));
    for (std::size_t j = 0; j < fr.count; ++j) {
        double norm2 = 0.0;
        for (std::size_t i = 0; i < fr.dim; ++i) {
            cols[j][i] = to_double(fr.synthesis.at(i, j));
            norm2 += cols[j][i] * cols[j][i];
        }
        double norm = std::sqrt(norm2);
        for (std::size_t i = 0; i < fr.dim; ++i) cols[j][i] /= norm;
    }
    return cols;
}

FrameBounds frame_bounds(const Frame& fr) {
    const std::size_t n = fr.dim;
    // Frame operator sum tau_j tau_j^T, exact then converted once.
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            Rational s = 0;
            for (std::size_t j = 0; j < fr.count; ++j) {
                s += fr.synthesis.at(i, j) * fr.synthesis.at(k, j);
            }
            a[i][k] = to_double(s);
        }
    }

    auto off_mass = [&] {
        double m = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                if (i != k) m += a[i][k] * a[i][k];
        return m;
    };

    // Cyclic Jacobi sweeps.
    for (int sweep = 0; sweep < 100 && off_mass() >= 1e-12; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (std::size_t i = 0; i < n; ++i) {
                    double aip = a[i][p], aiq = a[i][q];
                    a[i][p] = c * aip - s * aiq;
                    a[i][q] = s * aip + c * aiq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    double api = a[p][i], aqi = a[q][i];
                    a[p][i] = c * api - s * aqi;
                    a[q][i] = s * api + c * aqi;
                }
            }
        }
    }

    FrameBounds b;
    b.lower = a[0][0];
    b.upper = a[0][0];
    for (std::size_t i = 1; i < n; ++i) {
        b.lower = std::min(b.lower, a[i][i]);
        b.upper = std::max(b.upper, a[i][i]);
    }
    return b;
}

}  // namespace wspark
