#pragma once

#include "wspark/linalg.hpp"
#include "wspark/rational.hpp"

#include <cstddef>
#include <vector>

namespace wspark {

// Finitely many atoms, each with a nonnegative rational weight. Zero-weight
// atoms are allowed (null sets); infinite weights are not representable.
struct FiniteMeasureSpace {
    std::vector<Rational> weights;

    FiniteMeasureSpace() = default;
    explicit FiniteMeasureSpace(std::vector<Rational> w);

    std::size_t size() const { return weights.size(); }
    bool is_counting() const;
    bool operator==(const FiniteMeasureSpace&) const = default;
};

// Strictly increasing atom indices.
struct SupportSet {
    std::vector<std::size_t> indices;

    std::size_t cardinality() const { return indices.size(); }
    bool operator==(const SupportSet&) const = default;
};

FiniteMeasureSpace counting_measure(std::size_t n);

// Indices of the exactly-nonzero entries.
SupportSet support(const DenseVector& f);

// Sum of weights over the set; zero for the empty set.
Rational measure_of(const FiniteMeasureSpace& sp, const SupportSet& s);

}  // namespace wspark
