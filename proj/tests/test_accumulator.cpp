#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ratiolab/accumulator.hpp"
#include "ratiolab/factor_sieve.hpp"
#include "ratiolab/oracle.hpp"
#include "ratiolab/sum_table.hpp"
#include "ratiolab/weights.hpp"

using namespace ratiolab;
using doctest::Approx;

TEST_CASE("parse_weight_spec inline syntax") {
    const WeightSpec constant = parse_weight_spec("1");
    CHECK(constant.head == std::vector<double>{1.0});
    CHECK(constant.tail == 1.0);
    CHECK(constant.value(1) == 1.0);
    CHECK(constant.value(40) == 1.0);

    const WeightSpec ramp = parse_weight_spec("1,2,3");
    CHECK(ramp.head == std::vector<double>{1.0, 2.0, 3.0});
    CHECK(ramp.tail == 3.0);  // tail defaults to the last head value
    CHECK(ramp.value(2) == 2.0);
    CHECK(ramp.value(9) == 3.0);

    const WeightSpec cut = parse_weight_spec("1;tail=0");
    CHECK(cut.value(1) == 1.0);
    CHECK(cut.value(2) == 0.0);

    const WeightSpec ind2 = parse_weight_spec("0,1;tail=0");
    CHECK(ind2.value(1) == 0.0);
    CHECK(ind2.value(2) == 1.0);
    CHECK(ind2.value(3) == 0.0);

    CHECK_THROWS_AS(parse_weight_spec(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_weight_spec("1,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_weight_spec("1;foo=2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_weight_spec(";tail=1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_weight_spec("1;tail="), std::invalid_argument);
}

TEST_CASE("RatioExponent validates alpha") {
    CHECK(RatioExponent(1.0).theorem_range);
    CHECK(RatioExponent(0.9).theorem_range);
    CHECK(!RatioExponent(0.8).theorem_range);  // strict: alpha > 4/5
    CHECK(!RatioExponent(0.5).theorem_range);
    CHECK_THROWS_AS(RatioExponent(0.0), std::domain_error);
    CHECK_THROWS_AS(RatioExponent(-1.0), std::domain_error);
    CHECK_THROWS_AS(RatioExponent(std::nan("")), std::domain_error);
    CHECK_THROWS_AS(WeightSpec::indicator(0), std::invalid_argument);
}

TEST_CASE("ratio_term is exactly 1 on prime powers") {
    CHECK(ratio_term(FactorSignature{7, 7, 1, false}, RatioExponent(0.37)) == 1.0);
    CHECK(ratio_term(FactorSignature{2, 3, 2, true}, RatioExponent(1.0)) ==
          Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(ratio_term(FactorSignature{2, 5, 2, true}, RatioExponent(2.0)) ==
          Approx(0.16).epsilon(1e-15));
    CHECK(ratio_term(FactorSignature{2, 5, 2, true}, RatioExponent(0.5)) ==
          Approx(std::sqrt(0.4)).epsilon(1e-15));
}

TEST_CASE("accumulate matches the trial-division oracle on a small grid") {
    const std::vector<double> alphas = {0.9, 1.0, 2.0};
    const std::vector<WeightSpec> weights = {WeightSpec::constant(1.0),
                                             WeightSpec::indicator(1),
                                             parse_weight_spec("1,2,3")};
    for (std::uint64_t x : {std::uint64_t{1000}, std::uint64_t{3000}}) {
        for (double a : alphas) {
            for (const WeightSpec& w : weights) {
                const double exact = brute_sum(x, w, a);
                const SumTable t = accumulate(x, {x}, w, RatioExponent(a));
                REQUIRE(t.rows.size() == 1);
                CHECK(t.rows[0].total == Approx(exact).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("ten-point sum is exactly 121/15") {
    const SumTable t = accumulate(10, {10}, WeightSpec::constant(1.0), RatioExponent(1.0));
    CHECK(t.rows[0].total == Approx(121.0 / 15.0).epsilon(1e-14));
}

TEST_CASE("frozen reference values at one million") {
    // Cross-language references: exact-summation trial-division run, frozen.
    const SumTable t =
        accumulate(1000000, {1000000}, WeightSpec::constant(1.0), RatioExponent(1.0));
    const SumRow& r = t.rows[0];
    CHECK(r.total == Approx(101827.92335848376).epsilon(1e-10));
    CHECK(r.prime_count == 78498);
    CHECK(r.sigma(1) == 78498.0);  // weight-free omega=1 class is exactly pi(x)
    CHECK(r.sigma(2) == Approx(11805.768872956738).epsilon(1e-10));
    CHECK(r.sigma(3) == Approx(3383.055767924883).epsilon(1e-10));
    CHECK(r.sigma(4) == Approx(1241.9688344868387).epsilon(1e-10));
    CHECK(r.sigma(5) == Approx(367.69937946568393).epsilon(1e-10));
    double ge6 = r.class_tail;
    for (int i = 6; i <= kClassCount; ++i) ge6 += r.sigma(i);
    CHECK(ge6 == Approx(47.62221442963722).epsilon(1e-10));
    CHECK(r.nonsquarefree == Approx(6483.8082892199955).epsilon(1e-10));

    const SumTable t2 =
        accumulate(1000000, {1000000}, WeightSpec::constant(1.0), RatioExponent(2.0));
    CHECK(t2.rows[0].total == Approx(86435.97478842006).epsilon(1e-10));
}

TEST_CASE("decomposition recombines to the weighted total") {
    const WeightSpec w = parse_weight_spec("1,2,3");
    const SumTable t = accumulate(100000, {100000}, w, RatioExponent(0.9));
    const SumRow& r = t.rows[0];
    CHECK(weighted_decomposition_total(r, w) == Approx(r.total).epsilon(1e-12));
}

TEST_CASE("checkpoint rows equal standalone runs bit for bit") {
    const WeightSpec w = WeightSpec::constant(1.0);
    const RatioExponent a(1.0);
    const SumTable all = accumulate(100000, {1000, 10000, 100000}, w, a);
    REQUIRE(all.rows.size() == 3);
    const std::uint64_t xs[] = {1000, 10000, 100000};
    for (int i = 0; i < 3; ++i) {
        const SumTable one = accumulate(xs[i], {xs[i]}, w, a);
        CHECK(all.rows[i].x == xs[i]);
        CHECK(all.rows[i].total == one.rows[0].total);  // identical op order
        CHECK(all.rows[i].prime_count == one.rows[0].prime_count);
        CHECK(all.rows[i].nonsquarefree == one.rows[0].nonsquarefree);
    }
}

TEST_CASE("segment size does not move the totals") {
    const WeightSpec w = WeightSpec::constant(1.0);
    const RatioExponent a(1.0);
    const double base = accumulate(10000, {10000}, w, a).rows[0].total;
    for (std::uint64_t seg : {std::uint64_t{10}, std::uint64_t{97}, std::uint64_t{4096}}) {
        const double got = accumulate(10000, {10000}, w, a, seg).rows[0].total;
        CHECK(got == Approx(base).epsilon(1e-13));
    }
}

TEST_CASE("thread count leaves every field bit-identical") {
    const WeightSpec w = parse_weight_spec("1,0.5,2");
    const RatioExponent a(0.9);
    const std::uint64_t seg = 1 << 16;
    const SumTable t1 = accumulate(1000000, {500000, 1000000}, w, a, seg, 1);
    const SumTable t4 = accumulate(1000000, {500000, 1000000}, w, a, seg, 4);
    REQUIRE(t1.rows.size() == t4.rows.size());
    for (std::size_t i = 0; i < t1.rows.size(); ++i) {
        CHECK(t1.rows[i].total == t4.rows[i].total);
        CHECK(t1.rows[i].nonsquarefree == t4.rows[i].nonsquarefree);
        CHECK(t1.rows[i].class_tail == t4.rows[i].class_tail);
        CHECK(t1.rows[i].prime_count == t4.rows[i].prime_count);
        for (int j = 1; j <= kClassCount; ++j)
            CHECK(t1.rows[i].sigma(j) == t4.rows[i].sigma(j));
    }
}

TEST_CASE("classic_s is the unit-weight alpha-1 sum") {
    const SumTable a = classic_s(10000, {10000});
    const SumTable b =
        accumulate(10000, {10000}, WeightSpec::constant(1.0), RatioExponent(1.0));
    CHECK(a.rows[0].total == b.rows[0].total);
}

TEST_CASE("accumulate validates its inputs") {
    const WeightSpec w = WeightSpec::constant(1.0);
    const RatioExponent a(1.0);
    CHECK_THROWS_AS(accumulate(1, {1}, w, a), std::invalid_argument);
    CHECK_THROWS_AS(accumulate(100, {1, 50}, w, a), std::invalid_argument);
    CHECK_THROWS_AS(accumulate(100, {50, 200}, w, a), std::invalid_argument);
    CHECK_THROWS_AS(accumulate(100, {50, 50}, w, a), std::invalid_argument);
    CHECK_THROWS_AS(accumulate(100, {60, 50}, w, a), std::invalid_argument);
    CHECK_THROWS_AS(accumulate(100, {100}, w, a, 0), std::invalid_argument);
    CHECK_THROWS_AS(accumulate(100, {100}, w, a, 4096, 0), std::invalid_argument);
    WeightSpec bad = WeightSpec::constant(1.0);
    bad.tail = std::nan("");
    CHECK_THROWS_AS(accumulate(100, {100}, bad, a), std::invalid_argument);
}
