#pragma once

#include <cstdint>
#include <vector>

namespace ratiolab {

// Factorization summary of one integer n >= 2:
//   spf, lpf    smallest / largest prime factor
//   omega       number of distinct prime factors
//   squarefree  true iff no p^2 divides n
// spf == lpf exactly when n is a prime power.
struct FactorSignature {
    std::uint64_t spf = 0;
    std::uint64_t lpf = 0;
    std::uint32_t omega = 0;
    bool squarefree = true;

    bool is_prime() const { return omega == 1 && squarefree; }
    friend bool operator==(const FactorSignature&, const FactorSignature&) = default;
};

// Signatures for every n in [lo, hi), dense, indexed by n - lo.
struct Segment {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    std::vector<FactorSignature> signatures;

    const FactorSignature& at(std::uint64_t n) const { return signatures[n - lo]; }
};

inline constexpr std::uint64_t kDefaultSegmentSize = std::uint64_t{1} << 22;

// floor(sqrt(n)), exact for all uint64 n.
std::uint64_t isqrt(std::uint64_t n);

// Primes in [2, limit], ascending. limit >= 2.
std::vector<std::uint64_t> base_primes(std::uint64_t limit);

// Factors every n in [lo, hi) against the supplied base primes, which must
// cover all primes <= sqrt(hi - 1); a list with a gap is rejected. Each base
// prime is divided out of its multiples (full multiplicity via the p^2 grid);
// a cofactor that survives all base primes exceeds sqrt(hi - 1), is therefore
// prime, and becomes the lpf. An n touched by no base prime is itself prime.
Segment sieve_segment(std::uint64_t lo, std::uint64_t hi,
                      const std::vector<std::uint64_t>& primes);

// pi(x) by a plain boolean segmented sieve. Shares no state with
// sieve_segment so the two can cross-check each other.
std::uint64_t count_primes(std::uint64_t x);

}  // namespace ratiolab
