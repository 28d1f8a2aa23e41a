#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wspark/instance.hpp"

#include "test_util.hpp"

using namespace wspark;
using namespace wspark::testing;

namespace {

const char* kRunningExample = R"({
  "rows": 2,
  "cols": 3,
  "entries": ["1", "0", "1", "0", "1", "1"],
  "measure": "counting"
})";

}  // namespace

TEST_CASE("parse a counting-measure instance") {
    LinearMapOnMeasureSpace m = parse_instance(kRunningExample);
    CHECK(m.matrix == imat(2, 3, {1, 0, 1, 0, 1, 1}));
    CHECK(m.domain.is_counting());
}

TEST_CASE("parse a weight-list instance") {
    LinearMapOnMeasureSpace m = parse_instance(R"({
      "rows": 1, "cols": 2,
      "entries": ["1", "2"],
      "measure": ["3", "1"]
    })");
    CHECK(m.domain.weights == std::vector<Rational>{3, 1});
}

TEST_CASE("parse errors carry line and column") {
    try {
        parse_instance("{\n  \"rows\": 2,\n  oops\n}");
        FAIL("expected InputError");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_instance(R"({"rows": 2, "cols": 2, "entries": ["1","0","0"], "measure": "counting"})"),
                    InputError);
    CHECK_THROWS_AS(parse_instance(R"({"rows": 1, "cols": 1, "entries": ["0.5"], "measure": "counting"})"),
                    InputError);
    CHECK_THROWS_AS(parse_instance(R"({"rows": 1, "cols": 1, "entries": ["1"], "measure": ["-1"]})"),
                    InputError);
}

TEST_CASE("density discretization") {
    FiniteMeasureSpace uniform = discretize_density({R("0"), R("1"), 4, {R("1")}});
    CHECK(uniform.weights == std::vector<Rational>(4, R("1/4")));

    FiniteMeasureSpace linear = discretize_density({R("0"), R("1"), 2, {R("0"), R("2")}});
    CHECK(linear.weights == std::vector<Rational>{R("1/4"), R("3/4")});

    FiniteMeasureSpace single = discretize_density({R("0"), R("1"), 1, {R("1")}});
    CHECK(single.weights == std::vector<Rational>{R("1")});

    CHECK_THROWS_AS(discretize_density({R("0"), R("1"), 2, {R("-1")}}), InputError);
    CHECK_THROWS_AS(discretize_density({R("1"), R("0"), 2, {R("1")}}), InputError);
}

TEST_CASE("density weights sum to the exact integral") {
    Rng rng(61);
    for (int t = 0; t < 50; ++t) {
        DensitySpec spec;
        spec.a = Rational(static_cast<long>(rng.next(0, 3)));
        spec.b = spec.a + Rational(static_cast<long>(rng.next(1, 3)));
        spec.atoms = rng.next(1, 6);
        // Nonnegative coefficients keep the density nonnegative on [a, b].
        std::size_t deg = rng.next(0, 3);
        for (std::size_t k = 0; k <= deg; ++k) {
            spec.coeffs.push_back(Rational(static_cast<long>(rng.next(0, 4)), 2));
        }
        FiniteMeasureSpace sp = discretize_density(spec);

        Rational total = 0;
        for (const Rational& w : sp.weights) total += w;
        // Exact integral: sum_k c_k (b^(k+1) - a^(k+1)) / (k+1).
        Rational integral = 0;
        Rational pa = spec.a, pb = spec.b;
        for (std::size_t k = 0; k < spec.coeffs.size(); ++k) {
            integral += spec.coeffs[k] * (pb - pa) / Rational(k + 1);
            pa *= spec.a;
            pb *= spec.b;
        }
        CHECK(total == integral);
    }
}

TEST_CASE("instances round-trip through the canonical serialization") {
    LinearMapOnMeasureSpace m = parse_instance(R"({
      "rows": 2, "cols": 3,
      "entries": ["1/3", "-2", "0", "7", "1/9", "-5/4"],
      "measure": ["1/10", "0", "3"]
    })");
    std::string canon = serialize_instance(m);

    // Rebuild a JSON instance from the canonical form and re-parse.
    std::string json = R"({"rows": 2, "cols": 3, "entries": [)";
    for (std::size_t i = 0; i < m.matrix.entries.size(); ++i) {
        if (i) json += ",";
        json += "\"" + to_string(m.matrix.entries[i]) + "\"";
    }
    json += R"(], "measure": [)";
    for (std::size_t i = 0; i < m.domain.weights.size(); ++i) {
        if (i) json += ",";
        json += "\"" + to_string(m.domain.weights[i]) + "\"";
    }
    json += "]}";
    LinearMapOnMeasureSpace again = parse_instance(json);
    CHECK(again.matrix == m.matrix);
    CHECK(again.domain == m.domain);
    CHECK(serialize_instance(again) == canon);
    CHECK(instance_digest(again) == instance_digest(m));
}

TEST_CASE("vector parsing") {
    CHECK(parse_vector("1, 0, -3/2") == vec({"1", "0", "-3/2"}));
    CHECK(parse_vector("5") == ivec({5}));
    CHECK_THROWS_AS(parse_vector(""), InputError);
    CHECK_THROWS_AS(parse_vector("1, x"), InputError);
}

TEST_CASE("report writer output shape") {
    ReportWriter w("spark");
    w.field("spark", Rational(3));
    w.field_spark("other", std::nullopt);
    w.support_field("sup", SupportSet{{0, 2}});
    CHECK(w.str() == "schema wspark-report/1\ncommand spark\nspark 3\nother Infinite\nsup 0 2\n");
}
