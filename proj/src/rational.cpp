#include "wspark/rational.hpp"

#include <cctype>

namespace wspark {

std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::size_t i = 0;
    if (text[i] == '-') ++i;
    std::size_t num_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_begin) return std::nullopt;
    Integer num(text.substr(0, i));
    if (i == text.size()) return Rational(num);
    if (text[i] != '/') return std::nullopt;
    ++i;
    std::size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin || i != text.size()) return std::nullopt;
    Integer den(text.substr(den_begin));
    if (den == 0) return std::nullopt;
    return Rational(num, den);
}

std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Integer floor_rational(const Rational& q) {
    Integer n = numerator(q), d = denominator(q);
    Integer quot = n / d;
    if (n % d != 0 && n < 0) --quot;
    return quot;
}

}  // namespace wspark
