#pragma once

#include <cstdint>
#include <vector>

#include "ratiolab/factor_sieve.hpp"
#include "ratiolab/sum_table.hpp"
#include "ratiolab/weights.hpp"

namespace ratiolab {

// (spf/lpf)^alpha for one signature; exactly 1 on prime powers.
double ratio_term(const FactorSignature& sig, const RatioExponent& alpha);

// Sums lambda(omega(n)) * (spf(n)/lpf(n))^alpha over 2 <= n <= x_max, with a
// row snapshot at every checkpoint (ascending, within [2, x_max]). Segments
// are sieved by up to `threads` workers; partial sums are merged in segment
// order on the calling thread, so results are bit-identical across thread
// counts and agree across segment sizes to compensation noise (~1e-16
// relative, far inside the 1e-12 contract).
SumTable accumulate(std::uint64_t x_max, const std::vector<std::uint64_t>& checkpoints,
                    const WeightSpec& lambda, const RatioExponent& alpha,
                    std::uint64_t segment_size = kDefaultSegmentSize, int threads = 1);

// accumulate with lambda == 1 and alpha == 1.
SumTable classic_s(std::uint64_t x_max, const std::vector<std::uint64_t>& checkpoints,
                   std::uint64_t segment_size = kDefaultSegmentSize, int threads = 1);

}  // namespace ratiolab
