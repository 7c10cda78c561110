#include <doctest.h>

#include <cstdint>
#include <vector>

#include "ratiolab/factor_sieve.hpp"
#include "ratiolab/oracle.hpp"

using namespace ratiolab;

TEST_CASE("isqrt is exact at and around perfect squares") {
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(1) == 1);
    CHECK(isqrt(3) == 1);
    CHECK(isqrt(4) == 2);
    CHECK(isqrt(8) == 2);
    CHECK(isqrt(9) == 3);
    for (std::uint64_t k : {10ULL, 999ULL, 65536ULL, 4294967295ULL}) {
        CHECK(isqrt(k * k) == k);
        CHECK(isqrt(k * k - 1) == k - 1);
        if (k < 4294967295ULL) CHECK(isqrt(k * k + 1) == k);
    }
    CHECK(isqrt(~std::uint64_t{0}) == 4294967295ULL);
}

TEST_CASE("base_primes lists primes ascending") {
    const std::vector<std::uint64_t> expected = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                                 29, 31, 37, 41, 43, 47, 53, 59, 61,
                                                 67, 71, 73, 79, 83, 89, 97};
    CHECK(base_primes(100) == expected);
    CHECK(base_primes(2) == std::vector<std::uint64_t>{2});
    CHECK_THROWS_AS(base_primes(1), std::invalid_argument);
}

TEST_CASE("count_primes matches known pi values") {
    CHECK(count_primes(1) == 0);
    CHECK(count_primes(2) == 1);
    CHECK(count_primes(10) == 4);
    CHECK(count_primes(100) == 25);
    CHECK(count_primes(1000) == 168);
    CHECK(count_primes(1000000) == 78498);
}

TEST_CASE("sieve_segment agrees with trial division on [2, 2e5)") {
    const std::uint64_t hi = 200000;
    const auto primes = base_primes(isqrt(hi - 1));
    // deliberately awkward segment length to exercise boundaries
    const std::uint64_t step = 9973;
    for (std::uint64_t lo = 2; lo < hi; lo += step) {
        const std::uint64_t end = std::min(hi, lo + step);
        const Segment seg = sieve_segment(lo, end, primes);
        REQUIRE(seg.signatures.size() == end - lo);
        for (std::uint64_t n = lo; n < end; ++n) {
            const FactorSignature got = seg.at(n);
            const FactorSignature want = factor_signature_naive(n);
            if (!(got == want)) {
                CAPTURE(n);
                REQUIRE(got == want);
            }
        }
    }
}

TEST_CASE("sieve_segment handles a high window far above the base primes") {
    const std::uint64_t lo = 1000000000000ULL;  // 10^12
    const std::uint64_t hi = lo + 64;
    const auto primes = base_primes(isqrt(hi - 1));
    const Segment seg = sieve_segment(lo, hi, primes);
    for (std::uint64_t n = lo; n < hi; ++n) CHECK(seg.at(n) == factor_signature_naive(n));
}

TEST_CASE("sieve_segment spot signatures") {
    const auto primes = base_primes(1000);
    const Segment seg = sieve_segment(2, 1000000, primes);
    CHECK(seg.at(2) == FactorSignature{2, 2, 1, true});
    CHECK(seg.at(4) == FactorSignature{2, 2, 1, false});
    CHECK(seg.at(360) == FactorSignature{2, 5, 3, false});
    CHECK(seg.at(510510) == FactorSignature{2, 17, 7, true});  // 7-prime primorial
    CHECK(seg.at(524288) == FactorSignature{2, 2, 1, false});  // 2^19
    CHECK(seg.at(999983) == FactorSignature{999983, 999983, 1, true});
    CHECK(seg.at(2).is_prime());
    CHECK(!seg.at(4).is_prime());
}

TEST_CASE("sieve_segment rejects an insufficient or gapped prime list") {
    CHECK_THROWS_AS(sieve_segment(2, 1000000, base_primes(10)), std::invalid_argument);
    const std::vector<std::uint64_t> gapped = {2, 3, 7, 11};  // 5 missing
    CHECK_THROWS_AS(sieve_segment(2, 100, gapped), std::invalid_argument);
    const std::vector<std::uint64_t> unsorted = {3, 2, 5, 7};
    CHECK_THROWS_AS(sieve_segment(2, 40, unsorted), std::invalid_argument);
}

TEST_CASE("sieve_segment rejects bad windows") {
    const auto primes = base_primes(100);
    CHECK_THROWS_AS(sieve_segment(1, 50, primes), std::invalid_argument);
    CHECK_THROWS_AS(sieve_segment(50, 50, primes), std::invalid_argument);
    CHECK_THROWS_AS(sieve_segment(50, 20, primes), std::invalid_argument);
}
