#include "ratiolab/smoothness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ratiolab/accumulator.hpp"
#include "ratiolab/segment_pipeline.hpp"
#include "ratiolab/stable_sum.hpp"

namespace ratiolab {

std::uint64_t psi_count(std::uint64_t x, double y, std::uint64_t segment_size,
                        int threads) {
    if (x < 1) throw std::domain_error("psi_count: x must be >= 1");
    if (!(y >= 2.0)) throw std::domain_error("psi_count: y must be >= 2");
    if (segment_size < 1)
        throw std::invalid_argument("psi_count: segment_size must be >= 1");

    std::uint64_t count = 1;  // n = 1
    if (x < 2) return count;

    const auto primes = base_primes(std::max<std::uint64_t>(isqrt(x), 2));
    const std::uint64_t span = x - 1;  // n in [2, x]
    const std::uint64_t num_segments = (span + segment_size - 1) / segment_size;

    auto work = [&](std::uint64_t k) -> std::uint64_t {
        const std::uint64_t lo = 2 + k * segment_size;
        const std::uint64_t hi = std::min(x + 1, lo + segment_size);
        const Segment seg = sieve_segment(lo, hi, primes);
        std::uint64_t smooth = 0;
        for (const FactorSignature& sig : seg.signatures)
            smooth += (static_cast<double>(sig.lpf) <= y);
        return smooth;
    };
    auto merge = [&](std::uint64_t, std::uint64_t&& smooth) { count += smooth; };
    run_ordered<std::uint64_t>(num_segments, threads, work, merge);
    return count;
}

double lemma3_threshold(double x) {
    if (!(x >= 16.0)) throw std::domain_error("lemma3_threshold: x must be >= 16");
    return std::exp(std::log(x) / std::log(std::log(x)));
}

TailClassSums tail_class_sums(std::uint64_t x, const RatioExponent& alpha,
                              std::uint64_t segment_size, int threads) {
    if (x < 2) throw std::invalid_argument("tail_class_sums: x must be >= 2");
    const SumTable table = accumulate(x, {x}, WeightSpec::constant(1.0), alpha,
                                      segment_size, threads);
    const SumRow& row = table.rows.front();
    TailClassSums out;
    out.sigma4 = row.sigma(4);
    out.sigma5 = row.sigma(5);
    StableSum ge6;
    for (int i = 6; i <= kClassCount; ++i) ge6.add(row.sigma(i));
    ge6.add(row.class_tail);
    out.sigma_ge6 = ge6.value();
    return out;
}

}  // namespace ratiolab
