#include <doctest.h>

#include <stdexcept>

#include "ratiolab/oracle.hpp"
#include "ratiolab/weights.hpp"

using namespace ratiolab;
using doctest::Approx;

TEST_CASE("factor_signature_naive on hand-factored integers") {
    CHECK(factor_signature_naive(2) == FactorSignature{2, 2, 1, true});
    CHECK(factor_signature_naive(4) == FactorSignature{2, 2, 1, false});
    CHECK(factor_signature_naive(6) == FactorSignature{2, 3, 2, true});
    CHECK(factor_signature_naive(12) == FactorSignature{2, 3, 2, false});
    CHECK(factor_signature_naive(30) == FactorSignature{2, 5, 3, true});
    CHECK(factor_signature_naive(49) == FactorSignature{7, 7, 1, false});
    CHECK(factor_signature_naive(97) == FactorSignature{97, 97, 1, true});
    CHECK(factor_signature_naive(210) == FactorSignature{2, 7, 4, true});
    CHECK(factor_signature_naive(1024) == FactorSignature{2, 2, 1, false});
    // 8-prime primorial 2*3*5*7*11*13*17*19
    CHECK(factor_signature_naive(9699690) == FactorSignature{2, 19, 8, true});
}

TEST_CASE("factor_signature_naive rejects n < 2") {
    CHECK_THROWS_AS(factor_signature_naive(0), std::domain_error);
    CHECK_THROWS_AS(factor_signature_naive(1), std::domain_error);
}

TEST_CASE("brute_sum reproduces ten-point hand enumeration") {
    // n = 2..10: seven prime powers at ratio 1, plus 6 -> 2/3 and 10 -> 2/5,
    // so S(10) = 7 + 16/15 = 121/15.
    CHECK(brute_sum(10, WeightSpec::constant(1.0), 1.0) == Approx(121.0 / 15.0).epsilon(1e-14));
    // alpha = 2 squares the two proper ratios: 7 + 4/9 + 4/25 = 1711/225
    CHECK(brute_sum(10, WeightSpec::constant(1.0), 2.0) ==
          Approx(1711.0 / 225.0).epsilon(1e-14));
    // omega == 2 indicator keeps only 6 and 10
    CHECK(brute_sum(10, WeightSpec::indicator(2), 1.0) == Approx(16.0 / 15.0).epsilon(1e-14));
    // omega == 1 keeps the prime powers 2,3,4,5,7,8,9
    CHECK(brute_sum(10, WeightSpec::indicator(1), 1.0) == Approx(7.0).epsilon(1e-14));
    // the only omega == 3 integer up to 30 is 30 itself: (2/5)^1
    CHECK(brute_sum(30, WeightSpec::indicator(3), 1.0) == Approx(0.4).epsilon(1e-14));
}

TEST_CASE("brute_sum rejects bad domains") {
    CHECK_THROWS_AS(brute_sum(1, WeightSpec::constant(1.0), 1.0), std::domain_error);
    CHECK_THROWS_AS(brute_sum(10, WeightSpec::constant(1.0), 0.0), std::domain_error);
    CHECK_THROWS_AS(brute_sum(10, WeightSpec::constant(1.0), -1.0), std::domain_error);
}
