#pragma once

#include <cstdint>

#include "ratiolab/factor_sieve.hpp"
#include "ratiolab/sum_table.hpp"
#include "ratiolab/weights.hpp"

namespace ratiolab {

// Psi(x, y): how many n in [1, x] have every prime factor <= y. n = 1 is
// smooth by convention (it has no prime factor at all), even though the
// ratio sums exclude it; the two conventions are independent.
// x >= 1, y >= 2. Counted from the same lpf sieve as the accumulator.
std::uint64_t psi_count(std::uint64_t x, double y,
                        std::uint64_t segment_size = kDefaultSegmentSize,
                        int threads = 1);

// The smoothness cutoff y = exp(log x / log log x) used by the tail bound.
// x >= 16 so that log log x is safely positive.
double lemma3_threshold(double x);

// Squarefree class sums at x for omega = 4, omega = 5 and omega >= 6
// (weight-free, like SumRow::classes).
struct TailClassSums {
    double sigma4 = 0.0;
    double sigma5 = 0.0;
    double sigma_ge6 = 0.0;
};
TailClassSums tail_class_sums(std::uint64_t x, const RatioExponent& alpha,
                              std::uint64_t segment_size = kDefaultSegmentSize,
                              int threads = 1);

}  // namespace ratiolab
