#include "wspark/sparsity.hpp"

#include <algorithm>
#include <queue>
#include <random>

namespace wspark {

namespace {

void check_guard(std::size_t n, const SearchOptions& opts) {
    if (n > kMaxSearchColumns && !opts.allow_large) {
        throw GuardExceeded("instance has " + std::to_string(n) + " columns; subset search guard is " +
                            std::to_string(kMaxSearchColumns) + " (pass the override to proceed)");
    }
}

struct Node {
    Rational weight;
    std::vector<std::size_t> idx;
};

struct NodeLater {
    bool operator()(const Node& a, const Node& b) const {
        if (a.weight != b.weight) return a.weight > b.weight;
        return std::lexicographical_compare(b.idx.begin(), b.idx.end(), a.idx.begin(),
                                            a.idx.end());
    }
};

}  // namespace

std::string kind_name(CertificateKind k) {
    switch (k) {
        case CertificateKind::HalfSpark: return "half-spark";
        case CertificateKind::LevelUniqueness: return "level-uniqueness";
        case CertificateKind::Uncertainty: return "uncertainty";
        case CertificateKind::ConverseProbe: return "converse-probe";
    }
    return "?";
}

std::optional<SparseSolution> l0_solve(const LinearMapOnMeasureSpace& m, const DenseVector& v,
                                       const SearchOptions& opts) {
    const std::size_t n = m.matrix.cols;
    if (v.dim() != m.matrix.rows) throw ContractViolation("l0_solve: target dimension mismatch");
    check_guard(n, opts);

    // Feasibility: v must lie in the column span.
    DenseMatrix aug(m.matrix.rows, n + 1);
    for (std::size_t i = 0; i < m.matrix.rows; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.matrix.at(i, j);
        aug.at(i, n) = v[i];
    }
    if (rank(aug) > rank(m.matrix)) return std::nullopt;

    std::priority_queue<Node, std::vector<Node>, NodeLater> frontier;
    frontier.push(Node{Rational(0), {}});

    std::optional<SparseSolution> best;
    while (!frontier.empty()) {
        Node cur = frontier.top();
        frontier.pop();
        // Once a solution is found, only equal-weight supports can affect
        // the uniqueness flag.
        if (best && cur.weight > best->objective) break;

        std::optional<DenseVector> x = solve_on_support(m.matrix, v, cur.idx);
        if (x && support(*x).indices == cur.idx) {
            if (!best) {
                SparseSolution sol;
                sol.coefficients = *x;
                sol.support = SupportSet{cur.idx};
                sol.objective = cur.weight;
                sol.unique_support = true;
                sol.injective_on_support =
                    rank(select_columns(m.matrix, cur.idx)) == cur.idx.size();
                best = std::move(sol);
            } else {
                best->unique_support = false;
                break;
            }
        }

        std::size_t next = cur.idx.empty() ? 0 : cur.idx.back() + 1;
        for (std::size_t j = next; j < n; ++j) {
            Node child{cur.weight + m.domain.weights[j], cur.idx};
            child.idx.push_back(j);
            frontier.push(std::move(child));
        }
    }
    return best;
}

Certificate certify_half_spark(const LinearMapOnMeasureSpace& m, const DenseVector& candidate,
                               const SearchOptions& opts) {
    if (candidate.dim() != m.matrix.cols) {
        throw ContractViolation("certify_half_spark: candidate dimension mismatch");
    }
    SparkResult s = weighted_spark(m, opts);
    Rational supp_measure = measure_of(m.domain, support(candidate));

    Certificate cert;
    cert.kind = CertificateKind::HalfSpark;
    cert.spark_value = s.value;
    cert.quantities.emplace_back("support_measure", supp_measure);
    if (s.is_infinite()) {
        cert.verdict = true;
        cert.narrative = "kernel is trivial (spark infinite); every preimage is unique";
    } else {
        cert.quantities.emplace_back("half_spark", *s.value / 2);
        cert.verdict = 2 * supp_measure < *s.value;
        cert.narrative = cert.verdict
            ? "support measure " + to_string(supp_measure) + " < half spark " +
                  to_string(*s.value / 2) + "; candidate is the unique sparsest preimage"
            : "support measure " + to_string(supp_measure) + " >= half spark " +
                  to_string(*s.value / 2) + "; the sufficient condition is silent";
    }
    return cert;
}

Certificate uniqueness_level(const LinearMapOnMeasureSpace& m, const SearchOptions& opts) {
    SparkResult s = weighted_spark(m, opts);

    Certificate cert;
    cert.kind = CertificateKind::LevelUniqueness;
    cert.spark_value = s.value;
    cert.verdict = true;
    if (s.is_infinite()) {
        cert.narrative = "spark infinite: uniqueness certified at every level";
        return cert;
    }
    Rational threshold = *s.value / 2;
    cert.quantities.emplace_back("threshold", threshold);
    cert.narrative = "uniqueness guaranteed at every level strictly below " + to_string(threshold);
    if (m.domain.is_counting()) {
        // Largest integer k with spark > 2k.
        Integer k = denominator(threshold) == 1 ? numerator(threshold) - 1
                                                : floor_rational(threshold);
        cert.quantities.emplace_back("k_max", Rational(k));
        cert.narrative += "; counting measure: largest certified integer level k = " + k.str();
    }
    return cert;
}

Certificate check_uncertainty(const LinearMapOnMeasureSpace& m, const DenseVector& f,
                              const DenseVector& g, const SearchOptions& opts) {
    if (f.dim() != m.matrix.cols || g.dim() != m.matrix.cols) {
        throw ContractViolation("check_uncertainty: vector dimension mismatch");
    }
    if (f == g) throw PreconditionFailed("not distinct");
    if (multiply(m.matrix, f) != multiply(m.matrix, g)) throw PreconditionFailed("images differ");

    SparkResult s = weighted_spark(m, opts);
    if (s.is_infinite()) {
        // f - g is a nonzero kernel vector, so the kernel cannot be trivial.
        throw InternalInconsistency("check_uncertainty: distinct preimages but trivial kernel");
    }
    Rational mf = measure_of(m.domain, support(f));
    Rational mg = measure_of(m.domain, support(g));

    Certificate cert;
    cert.kind = CertificateKind::Uncertainty;
    cert.spark_value = s.value;
    cert.quantities.emplace_back("support_measure_f", mf);
    cert.quantities.emplace_back("support_measure_g", mg);
    cert.quantities.emplace_back("sum", mf + mg);
    cert.verdict = mf + mg >= *s.value;
    if (!cert.verdict) {
        throw InternalInconsistency("uncertainty inequality failed: " + to_string(mf + mg) +
                                    " < spark " + to_string(*s.value));
    }
    cert.narrative = to_string(mf) + " + " + to_string(mg) + " >= spark " + to_string(*s.value) +
                     (mf + mg == *s.value ? " (tight)" : "");
    return cert;
}

Certificate probe_converse(const LinearMapOnMeasureSpace& m, const Rational& level_r,
                           const SearchOptions& opts) {
    if (level_r < 0) throw ContractViolation("probe_converse: level must be nonnegative");
    SparkResult s = weighted_spark(m, opts);

    // Uniqueness at level r fails iff some circuit C splits as C1 u C2 with
    // both parts of measure <= r: a kernel witness on C then yields two
    // distinct preimages of the same target, each within the level.
    bool uniqueness_fails = false;
    std::optional<std::pair<DenseVector, DenseVector>> pair;
    std::vector<SupportSet> circuits = enumerate_circuits(m, 2 * level_r, opts);
    for (const SupportSet& c : circuits) {
        const std::size_t csize = c.cardinality();
        DenseVector h = circuit_kernel_vector(m.matrix, c);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << csize); ++mask) {
            SupportSet c1, c2;
            for (std::size_t i = 0; i < csize; ++i) {
                ((mask >> i) & 1 ? c1 : c2).indices.push_back(c.indices[i]);
            }
            if (measure_of(m.domain, c1) > level_r || measure_of(m.domain, c2) > level_r) continue;
            DenseVector f(m.matrix.cols), g(m.matrix.cols);
            for (std::size_t i : c1.indices) f[i] = h[i];
            for (std::size_t i : c2.indices) g[i] = -h[i];
            uniqueness_fails = true;
            pair = std::make_pair(std::move(f), std::move(g));
            break;
        }
        if (uniqueness_fails) break;
    }

    bool spark_le_2r = !s.is_infinite() && *s.value <= 2 * level_r;

    Certificate cert;
    cert.kind = CertificateKind::ConverseProbe;
    cert.spark_value = s.value;
    cert.quantities.emplace_back("level_r", level_r);
    cert.quantities.emplace_back("two_r", 2 * level_r);
    cert.quantities.emplace_back("uniqueness_fails", Rational(uniqueness_fails ? 1 : 0));
    cert.witness_pair = std::move(pair);
    cert.verdict = spark_le_2r && !uniqueness_fails;
    if (s.is_infinite()) {
        cert.narrative = "spark infinite: converse vacuous, uniqueness holds at every level";
    } else if (cert.verdict) {
        cert.narrative = "CONVERSE VIOLATION: spark " + to_string(*s.value) + " <= 2r = " +
                         to_string(2 * level_r) + " yet uniqueness holds at level " +
                         to_string(level_r);
    } else if (uniqueness_fails) {
        cert.narrative = "uniqueness fails at level " + to_string(level_r) +
                         "; consistent with the converse";
    } else {
        cert.narrative = "spark " + to_string(*s.value) + " > 2r = " + to_string(2 * level_r) +
                         ": uniqueness holds, as the direct theorem guarantees";
    }
    return cert;
}

namespace {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
    return lo + rng() % (hi - lo + 1);
}

Rational draw_entry(std::mt19937_64& rng) {
    // Small signed integers, zero included.
    return Rational(static_cast<std::int64_t>(draw(rng, 0, 6)) - 3);
}

}  // namespace

ConverseSearchReport search_converse_violations(const GeneratorSpec& spec) {
    if (spec.trials == 0) throw ContractViolation("search_converse_violations: trials must be >= 1");
    std::mt19937_64 rng(spec.seed);

    ConverseSearchReport report;
    report.spec = spec;
    for (std::size_t t = 0; t < spec.trials; ++t) {
        LinearMapOnMeasureSpace instance;
        bool planted = spec.profile == WeightProfile::PlantedMix && t % 5 == 0;
        if (planted) {
            // Known violating family: proportional columns, lopsided weights.
            DenseMatrix mat(1, 2);
            mat.at(0, 0) = 1;
            mat.at(0, 1) = 2;
            instance = LinearMapOnMeasureSpace(mat, FiniteMeasureSpace({Rational(3), Rational(1)}));
        } else {
            std::size_t dim = draw(rng, 1, spec.max_dim);
            std::size_t cols = draw(rng, 2, std::max<std::size_t>(2, spec.max_cols));
            DenseMatrix mat(dim, cols);
            for (Rational& e : mat.entries) e = draw_entry(rng);
            std::vector<Rational> w(cols, Rational(1));
            if (spec.profile != WeightProfile::Counting) {
                for (Rational& q : w) q = Rational(draw(rng, 1, 6), draw(rng, 1, 3));
            }
            instance = LinearMapOnMeasureSpace(std::move(mat), FiniteMeasureSpace(std::move(w)));
        }

        SparkResult s = weighted_spark(instance);
        ProbeRecord rec;
        rec.trial = t;
        rec.dim = instance.matrix.rows;
        rec.cols = instance.matrix.cols;
        rec.spark_value = s.value;
        rec.level = 0;
        rec.vacuous = s.is_infinite();
        rec.violation = false;
        if (!s.is_infinite()) {
            // Counting measure: achievable levels are integers, so probe the
            // smallest integer level at which the spark bound is active. On
            // genuinely weighted spaces the boundary level spark/2 itself is
            // the interesting probe.
            if (instance.domain.is_counting()) {
                Integer num = numerator(*s.value);
                rec.level = Rational((num + 1) / 2);
            } else {
                rec.level = *s.value / 2;
            }
            Certificate cert = probe_converse(instance, rec.level);
            rec.violation = cert.verdict;
        }
        if (rec.violation) ++report.violations;
        if (rec.vacuous) ++report.vacuous;
        report.records.push_back(std::move(rec));
    }
    return report;
}

}  // namespace wspark
