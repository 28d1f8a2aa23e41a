#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

#include <cmath>
#include <limits>

using namespace wspark;
using namespace wspark::testing;

namespace {

Frame running_example() {
    return make_frame(2, {ivec({1, 0}), ivec({0, 1}), ivec({1, 1})});
}

LinearMapOnMeasureSpace with_counting(const DenseMatrix& m) {
    return {m, counting_measure(m.cols)};
}

}  // namespace

TEST_CASE("combinatorial spark on the running example") {
    SparkResult r = spark_combinatorial(running_example());
    REQUIRE(r.value);
    CHECK(*r.value == 3);
    REQUIRE(r.witness);
    CHECK(r.witness->support == SupportSet{{0, 1, 2}});
    // Witness proportional to (1, 1, -1).
    CHECK(r.witness->vector[0] == r.witness->vector[1]);
    CHECK(r.witness->vector[2] == -r.witness->vector[0]);
    CHECK(synthesize(running_example(), r.witness->vector).is_zero());
}

TEST_CASE("combinatorial spark: duplicate column and identity") {
    Frame dup = make_frame(2, {ivec({1, 0}), ivec({1, 0}), ivec({0, 1})});
    SparkResult r = spark_combinatorial(dup);
    REQUIRE(r.value);
    CHECK(*r.value == 2);

    CHECK(spark_combinatorial(make_frame(2, {ivec({1, 0}), ivec({0, 1})})).is_infinite());
}

TEST_CASE("kernel-engine spark matches on the examples") {
    SparkResult r = spark_kernel(running_example());
    REQUIRE(r.value);
    CHECK(*r.value == 3);
    REQUIRE(r.witness);
    CHECK(multiply(running_example().synthesis, r.witness->vector).is_zero());

    CHECK(spark_kernel(make_frame(2, {ivec({1, 0}), ivec({0, 1})})).is_infinite());
}

TEST_CASE("weighted spark of a non-spanning map with proportional columns") {
    // {e1, 2 e1} is not a frame, but the map-level engine accepts it.
    LinearMapOnMeasureSpace m(imat(1, 2, {1, 2}), FiniteMeasureSpace({R("3"), R("1")}));
    SparkResult r = weighted_spark(m);
    REQUIRE(r.value);
    CHECK(*r.value == 4);
    REQUIRE(r.witness);
    CHECK(r.witness->support == SupportSet{{0, 1}});
    // Witness proportional to (2, -1).
    CHECK(r.witness->vector[0] == -2 * r.witness->vector[1]);
}

TEST_CASE("weighted spark of the weighted running example") {
    LinearMapOnMeasureSpace m(imat(2, 3, {1, 0, 1, 0, 1, 1}),
                              FiniteMeasureSpace({R("1/10"), R("1/5"), R("3/10")}));
    SparkResult r = weighted_spark(m);
    REQUIRE(r.value);
    CHECK(*r.value == R("3/5"));
    CHECK(r.witness->support == SupportSet{{0, 1, 2}});
}

TEST_CASE("weighted spark with trivial kernel is infinite") {
    LinearMapOnMeasureSpace m(imat(2, 2, {1, 0, 0, 1}),
                              FiniteMeasureSpace({R("7"), R("1/9")}));
    CHECK(weighted_spark(m).is_infinite());
}

TEST_CASE("zero-weight atoms can give spark 0 with a nonzero witness") {
    DenseMatrix mat = imat(2, 3, {1, 1, 0, 0, 0, 1});
    LinearMapOnMeasureSpace m(mat, FiniteMeasureSpace({R("0"), R("0"), R("5")}));
    SparkResult r = weighted_spark(m);
    REQUIRE(r.value);
    CHECK(*r.value == 0);
    REQUIRE(r.witness);
    CHECK_FALSE(r.witness->vector.is_zero());
    CHECK(multiply(mat, r.witness->vector).is_zero());
}

TEST_CASE("circuit enumeration") {
    CHECK(enumerate_circuits(with_counting(imat(2, 3, {1, 0, 1, 0, 1, 1})), std::nullopt) ==
          std::vector<SupportSet>{SupportSet{{0, 1, 2}}});

    CHECK(enumerate_circuits(with_counting(imat(2, 4, {1, 1, 0, 0, 0, 0, 1, 1})), std::nullopt) ==
          std::vector<SupportSet>{SupportSet{{0, 1}}, SupportSet{{2, 3}}});

    CHECK(enumerate_circuits(with_counting(imat(2, 2, {1, 0, 0, 1})), std::nullopt).empty());
}

TEST_CASE("circuit enumeration respects the weight bound") {
    LinearMapOnMeasureSpace m(imat(2, 4, {1, 1, 0, 0, 0, 0, 1, 1}),
                              FiniteMeasureSpace({R("1"), R("1"), R("5"), R("5")}));
    CHECK(enumerate_circuits(m, Rational(3)) == std::vector<SupportSet>{SupportSet{{0, 1}}});
}

TEST_CASE("coherence floor") {
    double f = coherence_floor(running_example());
    CHECK(f == doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-9));

    CHECK(std::isinf(coherence_floor(make_frame(2, {ivec({1, 0}), ivec({0, 1})}))));

    Frame dup = make_frame(2, {ivec({1, 0}), ivec({1, 0}), ivec({0, 1})});
    CHECK(coherence_floor(dup) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("coherence pruning never changes the answer") {
    Rng rng(41);
    for (int t = 0; t < 50; ++t) {
        Frame fr = random_frame(rng, 3, 7);
        SparkResult plain = spark_combinatorial(fr);
        SparkResult pruned = spark_combinatorial(fr, SearchOptions{false, true});
        CHECK(plain.value == pruned.value);
    }
}

TEST_CASE("engine agreement and brute-force oracle on random frames") {
    Rng rng(42);
    for (int t = 0; t < 100; ++t) {
        Frame fr = random_frame(rng, 4, 8);
        SparkResult comb = spark_combinatorial(fr);
        SparkResult kern = spark_kernel(fr);
        CHECK(comb.value == kern.value);

        auto brute = brute_force_counting_spark(fr.synthesis);
        if (brute) {
            REQUIRE(comb.value);
            CHECK(*comb.value == *brute);
        } else {
            CHECK(comb.is_infinite());
        }

        // Counting-measure reduction of the weighted engine.
        SparkResult w = weighted_spark(with_counting(fr.synthesis));
        CHECK(w.value == comb.value);

        // Range: finite spark in {1..n}, infinite iff n == dim.
        if (comb.value) {
            CHECK(*comb.value >= 1);
            CHECK(*comb.value <= fr.count);
            CHECK(fr.count > fr.dim);
        } else {
            CHECK(fr.count == fr.dim);
        }
    }
}

TEST_CASE("witness validity on random weighted instances") {
    Rng rng(43);
    for (int t = 0; t < 100; ++t) {
        std::size_t rows = rng.next(1, 4), cols = rng.next(2, 7);
        DenseMatrix mat = random_matrix(rng, rows, cols);
        std::vector<Rational> w(cols);
        for (Rational& q : w) q = Rational(static_cast<long>(rng.next(0, 6)), 2);
        LinearMapOnMeasureSpace m(mat, FiniteMeasureSpace(w));

        SparkResult r = weighted_spark(m);
        if (r.is_infinite()) {
            CHECK_FALSE(r.witness);
            CHECK(kernel_basis(mat).empty());
            continue;
        }
        REQUIRE(r.witness);
        CHECK_FALSE(r.witness->vector.is_zero());
        CHECK(multiply(mat, r.witness->vector).is_zero());
        CHECK(r.witness->support == support(r.witness->vector));
        CHECK(measure_of(m.domain, r.witness->support) == *r.value);

        // Circuit consistency: the value is the lightest circuit.
        auto circuits = enumerate_circuits(m, std::nullopt);
        REQUIRE_FALSE(circuits.empty());
        Rational best = measure_of(m.domain, circuits[0]);
        for (const auto& c : circuits) best = std::min(best, measure_of(m.domain, c));
        CHECK(best == *r.value);
    }
}

TEST_CASE("column scaling leaves the spark unchanged") {
    Rng rng(44);
    for (int t = 0; t < 50; ++t) {
        Frame fr = random_frame(rng, 3, 6);
        DenseMatrix scaled = fr.synthesis;
        std::size_t j = rng.next(0, fr.count - 1);
        Rational c = Rational(static_cast<long>(rng.next(1, 5)), static_cast<long>(rng.next(1, 3)));
        if (rng.next(0, 1)) c = -c;
        for (std::size_t i = 0; i < fr.dim; ++i) scaled.at(i, j) *= c;

        std::vector<DenseVector> cols;
        for (std::size_t k = 0; k < fr.count; ++k) cols.push_back(scaled.column(k));
        Frame fr2 = make_frame(fr.dim, cols);
        CHECK(spark_combinatorial(fr).value == spark_combinatorial(fr2).value);
    }
}

TEST_CASE("search guard refuses oversized instances without the override") {
    DenseMatrix big(1, kMaxSearchColumns + 1);
    for (Rational& e : big.entries) e = 1;
    LinearMapOnMeasureSpace m(big, counting_measure(kMaxSearchColumns + 1));
    CHECK_THROWS_AS(weighted_spark(m), GuardExceeded);
    SparkResult r = weighted_spark(m, SearchOptions{true, false});
    REQUIRE(r.value);
    CHECK(*r.value == 2);
}
