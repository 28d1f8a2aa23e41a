#pragma once

#include "wspark/sparsity.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>

namespace wspark {

// Malformed instance files and vectors: the CLI maps this to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Polynomial density on a rational interval, discretized into equal
// subintervals with exact antiderivative weights.
struct DensitySpec {
    Rational a;
    Rational b;
    std::size_t atoms = 0;
    std::vector<Rational> coeffs;  // density c0 + c1 x + c2 x^2 + ...
};

FiniteMeasureSpace discretize_density(const DensitySpec& spec);

// Reads a JSON instance file: fields "rows", "cols", "entries" (row-major
// rational strings), "measure" ("counting" | list of rational strings |
// {"a","b","atoms","coeffs"} density object).
LinearMapOnMeasureSpace parse_instance(const std::string& json_text);
LinearMapOnMeasureSpace load_instance(const std::string& path);

// Canonical serialization (also the digest preimage); round-trips through
// parse_instance to an identical map and measure.
std::string serialize_instance(const LinearMapOnMeasureSpace& m);

// "1,0,-3/2" -> DenseVector. Whitespace around commas tolerated.
DenseVector parse_vector(const std::string& text);

// FNV-1a 64 over the canonical serialization.
std::uint64_t instance_digest(const LinearMapOnMeasureSpace& m);

// Deterministic key-value report document.
class ReportWriter {
public:
    explicit ReportWriter(std::string command);

    void field(const std::string& key, const std::string& value);
    void field(const std::string& key, const Rational& value);
    void field_spark(const std::string& key, const std::optional<Rational>& value);
    void vector_field(const std::string& key, const DenseVector& v);
    void support_field(const std::string& key, const SupportSet& s);
    void certificate(const Certificate& cert);

    std::string str() const;

private:
    std::string body_;
};

}  // namespace wspark
