#pragma once

#include <cstdint>

#include "ratiolab/factor_sieve.hpp"
#include "ratiolab/weights.hpp"

namespace ratiolab {

// Trial-division reference implementations, deliberately simple and slow.
// Every fast path in the sieve and accumulator is tested against these.

// Exact signature of n >= 2 by trial division up to sqrt(n).
FactorSignature factor_signature_naive(std::uint64_t n);

// Direct evaluation of sum_{2<=n<=x} lambda(omega(n)) * (spf(n)/lpf(n))^alpha
// from naive signatures. alpha > 0, x >= 2. Practical up to x ~ 1e7.
double brute_sum(std::uint64_t x, const WeightSpec& lambda, double alpha);

}  // namespace ratiolab
