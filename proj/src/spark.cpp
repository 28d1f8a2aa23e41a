#include "wspark/spark.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace wspark {

LinearMapOnMeasureSpace::LinearMapOnMeasureSpace(DenseMatrix m, FiniteMeasureSpace d)
    : matrix(std::move(m)), domain(std::move(d)) {
    if (matrix.cols != domain.size()) {
        throw ContractViolation("linear map: column count must match atom count");
    }
}

namespace {

void check_guard(std::size_t n, const SearchOptions& opts) {
    if (n > kMaxSearchColumns && !opts.allow_large) {
        throw GuardExceeded("instance has " + std::to_string(n) + " columns; subset search guard is " +
                            std::to_string(kMaxSearchColumns) + " (pass the override to proceed)");
    }
}

// First k-combination of {0..n-1} in lexicographic order.
std::vector<std::size_t> first_combination(std::size_t k) {
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    return c;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Starting cardinality for the counting-measure engines: the coherence
// bound says no dependent set is smaller than 1 + 1/mu, and we back off
// one extra level before trusting the float computation.
std::size_t prune_start(const Frame& fr) {
    double floor_val = coherence_floor(fr);
    if (!std::isfinite(floor_val)) return 1;  // engines still verify independence
    double start = std::floor(floor_val) - 1.0;
    if (start < 1.0) return 1;
    return static_cast<std::size_t>(start);
}

}  // namespace

DenseVector circuit_kernel_vector(const DenseMatrix& m, const SupportSet& circuit) {
    DenseMatrix sub = select_columns(m, circuit.indices);
    std::vector<DenseVector> basis = kernel_basis(sub);
    if (basis.empty()) throw InternalInconsistency("circuit_kernel_vector: set is independent");
    DenseVector out(m.cols);
    for (std::size_t j = 0; j < circuit.indices.size(); ++j) out[circuit.indices[j]] = basis[0][j];
    return out;
}

SparkResult spark_combinatorial(const Frame& fr, const SearchOptions& opts) {
    const std::size_t n = fr.count;
    check_guard(n, opts);
    std::size_t start = opts.prune_coherence ? prune_start(fr) : 1;
    for (std::size_t card = start; card <= n; ++card) {
        std::vector<std::size_t> combo = first_combination(card);
        do {
            if (rank(select_columns(fr.synthesis, combo)) < card) {
                SupportSet s{combo};
                SparkWitness w;
                w.vector = circuit_kernel_vector(fr.synthesis, s);
                w.support = support(w.vector);
                return SparkResult{Rational(w.support.cardinality()), std::move(w)};
            }
        } while (next_combination(combo, n));
    }
    return SparkResult{};
}

SparkResult spark_kernel(const Frame& fr, const SearchOptions& opts) {
    const std::size_t n = fr.count;
    check_guard(n, opts);
    std::vector<DenseVector> basis = kernel_basis(fr.synthesis);
    if (basis.empty()) return SparkResult{};
    const std::size_t k = basis.size();

    // Rows of K are indexed by atoms; a nonzero kernel vector confined to a
    // support S exists iff the rows of K outside S fail to pin down c.
    DenseMatrix K(n, k);
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < n; ++i) K.at(i, j) = basis[j][i];
    }

    std::size_t start = opts.prune_coherence ? prune_start(fr) : 1;
    for (std::size_t card = start; card <= n; ++card) {
        std::vector<std::size_t> combo = first_combination(card);
        do {
            std::vector<bool> in(n, false);
            for (std::size_t i : combo) in[i] = true;
            DenseMatrix comp(n - card, k);
            std::size_t r = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (in[i]) continue;
                for (std::size_t j = 0; j < k; ++j) comp.at(r, j) = K.at(i, j);
                ++r;
            }
            std::vector<DenseVector> free = kernel_basis(comp);
            if (!free.empty()) {
                DenseVector d(n);
                for (std::size_t i = 0; i < n; ++i) {
                    Rational s = 0;
                    for (std::size_t j = 0; j < k; ++j) s += K.at(i, j) * free[0][j];
                    d[i] = s;
                }
                SparkWitness w{d, support(d)};
                return SparkResult{Rational(w.support.cardinality()), std::move(w)};
            }
        } while (next_combination(combo, n));
    }
    return SparkResult{};
}

SparkResult weighted_spark(const LinearMapOnMeasureSpace& m, const SearchOptions& opts) {
    const std::size_t n = m.matrix.cols;
    check_guard(n, opts);
    const std::size_t full_rank = rank(m.matrix);
    if (full_rank == n) return SparkResult{};

    struct Node {
        Rational weight;
        std::vector<std::size_t> idx;
    };
    auto later = [](const Node& a, const Node& b) {
        if (a.weight != b.weight) return a.weight > b.weight;
        return std::lexicographical_compare(b.idx.begin(), b.idx.end(), a.idx.begin(), a.idx.end());
    };
    std::priority_queue<Node, std::vector<Node>, decltype(later)> frontier(later);
    for (std::size_t j = 0; j < n; ++j) {
        frontier.push(Node{m.domain.weights[j], {j}});
    }

    while (!frontier.empty()) {
        Node cur = frontier.top();
        frontier.pop();
        bool dependent = cur.idx.size() > full_rank ||
                         rank(select_columns(m.matrix, cur.idx)) < cur.idx.size();
        if (dependent) {
            SupportSet s{cur.idx};
            SparkWitness w;
            w.vector = circuit_kernel_vector(m.matrix, s);
            w.support = support(w.vector);
            return SparkResult{measure_of(m.domain, w.support), std::move(w)};
        }
        for (std::size_t j = cur.idx.back() + 1; j < n; ++j) {
            Node child{cur.weight + m.domain.weights[j], cur.idx};
            child.idx.push_back(j);
            frontier.push(std::move(child));
        }
    }
    throw InternalInconsistency("weighted_spark: rank-deficient map with no dependent support");
}

std::vector<SupportSet> enumerate_circuits(const LinearMapOnMeasureSpace& m,
                                           const std::optional<Rational>& max_weight,
                                           const SearchOptions& opts) {
    const std::size_t n = m.matrix.cols;
    check_guard(n, opts);
    const std::size_t full_rank = rank(m.matrix);

    std::vector<SupportSet> circuits;
    // A circuit has at most rank+1 elements.
    const std::size_t max_card = std::min(n, full_rank + 1);
    for (std::size_t card = 1; card <= max_card; ++card) {
        std::vector<std::size_t> combo = first_combination(card);
        do {
            SupportSet s{combo};
            if (max_weight && measure_of(m.domain, s) > *max_weight) continue;
            if (rank(select_columns(m.matrix, combo)) >= card) continue;
            // Minimal iff every one-element-removed subset is independent.
            bool minimal = true;
            for (std::size_t drop = 0; drop < card && minimal; ++drop) {
                std::vector<std::size_t> sub;
                sub.reserve(card - 1);
                for (std::size_t i = 0; i < card; ++i) {
                    if (i != drop) sub.push_back(combo[i]);
                }
                if (rank(select_columns(m.matrix, sub)) < sub.size()) minimal = false;
            }
            if (minimal) circuits.push_back(std::move(s));
        } while (next_combination(combo, n));
    }
    return circuits;
}

double coherence_floor(const Frame& fr) {
    std::vector<std::vector<double>> cols = normalize(fr);
    double mu = 0.0;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        for (std::size_t k = j + 1; k < cols.size(); ++k) {
            double d = 0.0;
            for (std::size_t i = 0; i < fr.dim; ++i) d += cols[j][i] * cols[k][i];
            mu = std::max(mu, std::abs(d));
        }
    }
    if (mu < 1e-12) return std::numeric_limits<double>::infinity();
    return 1.0 + 1.0 / mu;
}

}  // namespace wspark
