#include "wspark/measure.hpp"

#include <algorithm>

namespace wspark {

FiniteMeasureSpace::FiniteMeasureSpace(std::vector<Rational> w) : weights(std::move(w)) {
    if (weights.empty()) throw ContractViolation("measure space needs at least one atom");
    for (const Rational& q : weights) {
        if (q < 0) throw ContractViolation("negative atom weight");
    }
}

bool FiniteMeasureSpace::is_counting() const {
    return std::all_of(weights.begin(), weights.end(),
                       [](const Rational& q) { return q == 1; });
}

FiniteMeasureSpace counting_measure(std::size_t n) {
    if (n == 0) throw ContractViolation("counting_measure: n must be positive");
    return FiniteMeasureSpace(std::vector<Rational>(n, Rational(1)));
}

SupportSet support(const DenseVector& f) {
    SupportSet s;
    for (std::size_t i = 0; i < f.dim(); ++i) {
        if (f[i] != 0) s.indices.push_back(i);
    }
    return s;
}

Rational measure_of(const FiniteMeasureSpace& sp, const SupportSet& s) {
    Rational total = 0;
    for (std::size_t i : s.indices) {
        if (i >= sp.size()) throw ContractViolation("measure_of: atom index out of range");
        total += sp.weights[i];
    }
    return total;
}

}  // namespace wspark
