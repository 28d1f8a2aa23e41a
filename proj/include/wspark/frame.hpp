#pragma once

#include "wspark/linalg.hpp"

#include <string>
#include <vector>

namespace wspark {

struct FrameError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A spanning collection of nonzero vectors, stored as the synthesis matrix
// whose j-th column is the j-th frame vector. Construction validates both
// invariants exactly.
struct Frame {
    std::size_t dim = 0;
    std::size_t count = 0;
    DenseMatrix synthesis;  // dim x count
};

// Smallest/largest eigenvalue of the frame operator (float diagnostics,
// never consulted by any exact decision).
struct FrameBounds {
    double lower = 0.0;
    double upper = 0.0;
};

// Throws FrameError("zero frame vector") or FrameError("does not span").
Frame make_frame(std::size_t dim, const std::vector<DenseVector>& columns);

// h -> (<h, tau_j>)_j, exact.
DenseVector analysis(const Frame& fr, const DenseVector& h);

// d -> sum_j d_j tau_j, exact.
DenseVector synthesize(const Frame& fr, const DenseVector& d);

// Columns scaled to unit Euclidean norm, in floating point. Reporting and
// coherence pruning only.
std::vector<std::vector<double>> normalize(const Frame& fr);

// Cyclic Jacobi on the dim x dim frame operator; converges when the
// off-diagonal Frobenius mass drops below 1e-12.
FrameBounds frame_bounds(const Frame& fr);

}  // namespace wspark
