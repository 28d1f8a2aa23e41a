#pragma once

#include "wspark/frame.hpp"
#include "wspark/measure.hpp"

#include <optional>

namespace wspark {

// A linear map together with a measure structure on its domain atoms.
// Unlike a Frame, the columns need not span and may be zero.
struct LinearMapOnMeasureSpace {
    DenseMatrix matrix;        // rows = codomain dim, cols = number of atoms
    FiniteMeasureSpace domain; // one weight per column

    LinearMapOnMeasureSpace() = default;
    LinearMapOnMeasureSpace(DenseMatrix m, FiniteMeasureSpace d);
};

struct SparkWitness {
    DenseVector vector;  // nonzero, exactly in the kernel
    SupportSet support;  // = support(vector)
};

// Finite value with witness, or Infinite (trivial kernel, no witness).
struct SparkResult {
    std::optional<Rational> value;  // nullopt means Infinite
    std::optional<SparkWitness> witness;

    bool is_infinite() const { return !value.has_value(); }
};

// Subset search refuses instances with more columns than this unless the
// caller opts in; 2^24 supports is the practical ceiling on a desk machine.
inline constexpr std::size_t kMaxSearchColumns = 24;

struct SearchOptions {
    bool allow_large = false;     // lift the kMaxSearchColumns guard
    bool prune_coherence = false; // counting-measure engines only
};

// Subset engine: smallest cardinality of a linearly dependent set of
// columns, found by enumerating subsets in increasing cardinality.
SparkResult spark_combinatorial(const Frame& fr, const SearchOptions& opts = {});

// Kernel engine: minimal support size of a nonzero kernel vector, found by
// testing which supports can confine a nontrivial combination of kernel
// basis vectors. Independent route from the subset engine; the two must
// agree on every frame.
SparkResult spark_kernel(const Frame& fr, const SearchOptions& opts = {});

// Measure-weighted spark: best-first search over supports ordered by
// (total weight, then lexicographic index sequence). Correct with
// zero-weight atoms, which may yield value 0 with a nonzero witness.
SparkResult weighted_spark(const LinearMapOnMeasureSpace& m, const SearchOptions& opts = {});

// All inclusion-minimal dependent column sets with measure at most
// max_weight (nullopt = no bound), ordered by cardinality then
// lexicographically. Minimality is checked by removing each element.
std::vector<SupportSet> enumerate_circuits(const LinearMapOnMeasureSpace& m,
                                           const std::optional<Rational>& max_weight,
                                           const SearchOptions& opts = {});

// Classical coherence bound 1 + 1/mu on the counting-measure spark,
// computed in floats. Returns +infinity when the columns are orthogonal.
// Only ever used to skip early cardinalities, never to decide an answer.
double coherence_floor(const Frame& fr);

// Nonzero kernel vector of the column submatrix on `circuit`, embedded in
// the full coordinate space. Requires the set to actually be dependent.
DenseVector circuit_kernel_vector(const DenseMatrix& m, const SupportSet& circuit);

}  // namespace wspark
