#pragma once

#include "wspark/spark.hpp"

#include <cstdint>
#include <string>
#include <utility>

namespace wspark {

struct SparseSolution {
    DenseVector coefficients;
    SupportSet support;     // = support(coefficients)
    Rational objective;     // measure of the support
    bool unique_support;    // no other support of equal weight admits a solution
    bool injective_on_support;  // columns on the support are independent, so the
                                // coefficients themselves are pinned down
};

enum class CertificateKind {
    HalfSpark,        // strict half-spark sufficient condition
    LevelUniqueness,  // uniqueness threshold report
    Uncertainty,      // support-measure uncertainty inequality
    ConverseProbe,    // finite-instance converse decision
};

// Machine-checkable record: the verdict is recomputable from spark_value
// and quantities by the stated inequality alone.
struct Certificate {
    CertificateKind kind;
    std::optional<Rational> spark_value;  // nullopt = Infinite
    std::vector<std::pair<std::string, Rational>> quantities;
    bool verdict = false;
    std::string narrative;
    // Converse probe only: two distinct vectors with equal image, both
    // within the probed level, when uniqueness fails.
    std::optional<std::pair<DenseVector, DenseVector>> witness_pair;
};

// Exhaustive weighted l0 minimization: best-first over supports by
// (weight, lex), a support counting only when the solved coefficients are
// nonzero on exactly that support. Returns nullopt when the target is
// outside the column span.
std::optional<SparseSolution> l0_solve(const LinearMapOnMeasureSpace& m, const DenseVector& v,
                                       const SearchOptions& opts = {});

// verdict true proves `candidate` is the unique sparsest preimage of its
// own image: its support measure is strictly below half the spark.
Certificate certify_half_spark(const LinearMapOnMeasureSpace& m, const DenseVector& candidate,
                               const SearchOptions& opts = {});

// Reports the uniqueness threshold spark/2 (every level strictly below it
// is certified), and on counting measure the largest integer level.
Certificate uniqueness_level(const LinearMapOnMeasureSpace& m, const SearchOptions& opts = {});

// Checks mu(supp f) + mu(supp g) >= spark for distinct f, g with equal
// image. A false verdict is impossible and raises InternalInconsistency.
Certificate check_uncertainty(const LinearMapOnMeasureSpace& m, const DenseVector& f,
                              const DenseVector& g, const SearchOptions& opts = {});

// Decides whether uniqueness at level r fails on this instance, via
// circuit splitting: it fails iff some circuit partitions into two parts
// of measure <= r each. verdict true flags a CONVERSE VIOLATION: the
// spark bound is slack (spark <= 2r) yet uniqueness still holds.
Certificate probe_converse(const LinearMapOnMeasureSpace& m, const Rational& level_r,
                           const SearchOptions& opts = {});

enum class WeightProfile {
    Counting,        // all weights 1; probed at integer levels
    RandomPositive,  // random positive rational weights; probed at spark/2
    PlantedMix,      // random positive weights plus the known violating family
};

struct GeneratorSpec {
    std::uint64_t seed = 0;
    std::size_t trials = 1;
    WeightProfile profile = WeightProfile::Counting;
    std::size_t max_dim = 4;
    std::size_t max_cols = 8;
};

struct ProbeRecord {
    std::size_t trial;
    std::size_t dim;
    std::size_t cols;
    std::optional<Rational> spark_value;
    Rational level;
    bool vacuous;    // spark infinite, nothing to probe
    bool violation;
};

struct ConverseSearchReport {
    GeneratorSpec spec;
    std::vector<ProbeRecord> records;
    std::size_t violations = 0;
    std::size_t vacuous = 0;
};

// Samples seeded random instances, probes each at its natural boundary
// level, and tabulates converse violations. Deterministic under a fixed
// seed.
ConverseSearchReport search_converse_violations(const GeneratorSpec& spec);

std::string kind_name(CertificateKind k);

}  // namespace wspark
