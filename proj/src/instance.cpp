#include "wspark/instance.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace wspark {

namespace {

Rational require_rational(const std::string& text, const std::string& what) {
    std::optional<Rational> q = parse_rational(text);
    if (!q) throw InputError("malformed rational '" + text + "' in " + what);
    return *q;
}

Rational eval_poly(const std::vector<Rational>& coeffs, const Rational& x) {
    Rational v = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) v = v * x + coeffs[k];
    return v;
}

// Antiderivative with zero constant term: sum_k c_k x^(k+1) / (k+1).
Rational eval_antiderivative(const std::vector<Rational>& coeffs, const Rational& x) {
    Rational v = 0;
    Rational xpow = x;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        v += coeffs[k] * xpow / Rational(k + 1);
        xpow *= x;
    }
    return v;
}

}  // namespace

FiniteMeasureSpace discretize_density(const DensitySpec& spec) {
    if (spec.atoms == 0) throw InputError("density: atoms must be >= 1");
    if (!(spec.a < spec.b)) throw InputError("density: interval must satisfy a < b");
    if (spec.coeffs.empty()) throw InputError("density: empty coefficient list");

    Rational width = (spec.b - spec.a) / Rational(spec.atoms);
    std::vector<Rational> weights;
    weights.reserve(spec.atoms);
    for (std::size_t i = 0; i < spec.atoms; ++i) {
        Rational left = spec.a + Rational(i) * width;
        Rational right = left + width;
        Rational mid = (left + right) / 2;
        if (eval_poly(spec.coeffs, left) < 0 || eval_poly(spec.coeffs, mid) < 0 ||
            eval_poly(spec.coeffs, right) < 0) {
            throw InputError("density: negative value sampled on subinterval " + std::to_string(i));
        }
        weights.push_back(eval_antiderivative(spec.coeffs, right) -
                          eval_antiderivative(spec.coeffs, left));
    }
    return FiniteMeasureSpace(std::move(weights));
}

LinearMapOnMeasureSpace parse_instance(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        // Byte offset -> line/column for the error message.
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < json_text.size(); ++i) {
            if (json_text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw InputError("instance parse error at line " + std::to_string(line) + ", column " +
                         std::to_string(col) + ": " + e.what());
    }

    try {
        std::size_t rows = j.at("rows").get<std::size_t>();
        std::size_t cols = j.at("cols").get<std::size_t>();
        if (rows == 0 || cols == 0) throw InputError("instance: rows and cols must be positive");
        const auto& entries = j.at("entries");
        if (!entries.is_array() || entries.size() != rows * cols) {
            throw InputError("instance: entries must be an array of length rows*cols");
        }
        DenseMatrix mat(rows, cols);
        for (std::size_t i = 0; i < entries.size(); ++i) {
            mat.entries[i] = require_rational(entries[i].get<std::string>(), "entries");
        }

        const auto& measure = j.at("measure");
        FiniteMeasureSpace space;
        if (measure.is_string() && measure.get<std::string>() == "counting") {
            space = counting_measure(cols);
        } else if (measure.is_array()) {
            std::vector<Rational> w;
            for (const auto& item : measure) {
                w.push_back(require_rational(item.get<std::string>(), "measure"));
            }
            space = FiniteMeasureSpace(std::move(w));
        } else if (measure.is_object()) {
            DensitySpec spec;
            spec.a = require_rational(measure.at("a").get<std::string>(), "density a");
            spec.b = require_rational(measure.at("b").get<std::string>(), "density b");
            spec.atoms = measure.at("atoms").get<std::size_t>();
            for (const auto& item : measure.at("coeffs")) {
                spec.coeffs.push_back(require_rational(item.get<std::string>(), "density coeffs"));
            }
            space = discretize_density(spec);
        } else {
            throw InputError("instance: measure must be \"counting\", a list, or a density object");
        }
        if (space.size() != cols) {
            throw InputError("instance: measure has " + std::to_string(space.size()) +
                             " atoms but the matrix has " + std::to_string(cols) + " columns");
        }
        return LinearMapOnMeasureSpace(std::move(mat), std::move(space));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("instance: ") + e.what());
    } catch (const ContractViolation& e) {
        throw InputError(std::string("instance: ") + e.what());
    }
}

LinearMapOnMeasureSpace load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open instance file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

std::string serialize_instance(const LinearMapOnMeasureSpace& m) {
    std::ostringstream out;
    out << "rows " << m.matrix.rows << "\ncols " << m.matrix.cols << "\nentries";
    for (const Rational& e : m.matrix.entries) out << ' ' << to_string(e);
    out << "\nmeasure";
    for (const Rational& w : m.domain.weights) out << ' ' << to_string(w);
    out << '\n';
    return out.str();
}

DenseVector parse_vector(const std::string& text) {
    std::vector<Rational> entries;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        std::size_t b = token.find_first_not_of(" \t");
        std::size_t e = token.find_last_not_of(" \t");
        if (b == std::string::npos) throw InputError("vector: empty component");
        entries.push_back(require_rational(token.substr(b, e - b + 1), "vector"));
    }
    if (entries.empty()) throw InputError("vector: no components");
    return DenseVector(std::move(entries));
}

std::uint64_t instance_digest(const LinearMapOnMeasureSpace& m) {
    std::string bytes = serialize_instance(m);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

ReportWriter::ReportWriter(std::string command) {
    body_ = "schema wspark-report/1\ncommand " + std::move(command) + "\n";
}

void ReportWriter::field(const std::string& key, const std::string& value) {
    body_ += key + " " + value + "\n";
}

void ReportWriter::field(const std::string& key, const Rational& value) {
    field(key, to_string(value));
}

void ReportWriter::field_spark(const std::string& key, const std::optional<Rational>& value) {
    field(key, value ? to_string(*value) : std::string("Infinite"));
}

void ReportWriter::vector_field(const std::string& key, const DenseVector& v) {
    std::string line;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i) line += ' ';
        line += to_string(v[i]);
    }
    field(key, line);
}

void ReportWriter::support_field(const std::string& key, const SupportSet& s) {
    std::string line;
    for (std::size_t i = 0; i < s.indices.size(); ++i) {
        if (i) line += ' ';
        line += std::to_string(s.indices[i]);
    }
    field(key, s.indices.empty() ? "(empty)" : line);
}

void ReportWriter::certificate(const Certificate& cert) {
    field("certificate", kind_name(cert.kind));
    field_spark("certificate.spark", cert.spark_value);
    for (const auto& [name, value] : cert.quantities) field("certificate." + name, value);
    field("certificate.verdict", cert.verdict ? "true" : "false");
    field("certificate.narrative", cert.narrative);
    if (cert.witness_pair) {
        vector_field("certificate.witness_f", cert.witness_pair->first);
        vector_field("certificate.witness_g", cert.witness_pair->second);
    }
}

std::string ReportWriter::str() const { return body_; }

}  // namespace wspark
