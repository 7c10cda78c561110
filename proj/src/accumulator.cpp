#include "ratiolab/accumulator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "ratiolab/segment_pipeline.hpp"
#include "ratiolab/stable_sum.hpp"

namespace ratiolab {

double ratio_term(const FactorSignature& sig, const RatioExponent& alpha) {
    if (sig.spf == sig.lpf) return 1.0;
    const double r = static_cast<double>(sig.spf) / static_cast<double>(sig.lpf);
    const double a = alpha.alpha;
    if (a == 1.0) return r;
    if (a == 2.0) return r * r;
    if (a == 3.0) return r * r * r;
    return std::pow(r, a);
}

namespace {

// Partial sums over one chunk of consecutive n, split by omega class so
// checkpoints can report the decomposition.
struct Partial {
    std::array<StableSum, kClassCount> classes;
    StableSum class_tail;
    StableSum nonsquarefree;
    StableSum total;
    std::uint64_t prime_count = 0;

    void merge(const Partial& o) {
        for (std::size_t i = 0; i < classes.size(); ++i) classes[i].merge(o.classes[i]);
        class_tail.merge(o.class_tail);
        nonsquarefree.merge(o.nonsquarefree);
        total.merge(o.total);
        prime_count += o.prime_count;
    }
};

// Worker output: the segment's sums, split further wherever a checkpoint
// falls inside the segment, so the merger can snapshot rows mid-segment.
// The chunk grid (segments cut at checkpoints) does not depend on the
// thread count, which keeps the merged totals bit-identical.
struct ChunkSums {
    Partial sums;
    std::uint64_t last_n = 0;
    bool at_checkpoint = false;
};

}  // namespace

SumTable accumulate(std::uint64_t x_max, const std::vector<std::uint64_t>& checkpoints,
                    const WeightSpec& lambda, const RatioExponent& alpha,
                    std::uint64_t segment_size, int threads) {
    if (x_max < 2) throw std::invalid_argument("accumulate: x_max must be >= 2");
    if (segment_size < 1) throw std::invalid_argument("accumulate: segment_size must be >= 1");
    if (threads < 1) throw std::invalid_argument("accumulate: threads must be >= 1");
    lambda.validate();
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        if (checkpoints[i] < 2 || checkpoints[i] > x_max)
            throw std::invalid_argument("accumulate: checkpoints must lie in [2, x_max]");
        if (i > 0 && checkpoints[i] <= checkpoints[i - 1])
            throw std::invalid_argument("accumulate: checkpoints must be strictly ascending");
    }

    const auto primes = base_primes(std::max<std::uint64_t>(isqrt(x_max), 2));

    // omega(n) < 64 for any uint64 n, so a flat lookup covers every class.
    std::array<double, 64> weight{};
    for (std::uint32_t i = 1; i < weight.size(); ++i) weight[i] = lambda.value(i);

    constexpr std::uint64_t kFirst = 2;  // n = 1 has no prime factor and is excluded
    const std::uint64_t span = x_max - kFirst + 1;
    const std::uint64_t num_segments = (span + segment_size - 1) / segment_size;

    const double a = alpha.alpha;

    auto work = [&](std::uint64_t k) {
        const std::uint64_t lo = kFirst + k * segment_size;
        const std::uint64_t hi = std::min(x_max + 1, lo + segment_size);
        const Segment seg = sieve_segment(lo, hi, primes);

        std::vector<ChunkSums> chunks;
        auto cp = std::lower_bound(checkpoints.begin(), checkpoints.end(), lo);
        std::uint64_t n = lo;
        while (n < hi) {
            std::uint64_t stop = hi;
            bool at_cp = false;
            if (cp != checkpoints.end() && *cp < hi) {
                stop = *cp + 1;
                at_cp = true;
                ++cp;
            }
            ChunkSums chunk;
            Partial& acc = chunk.sums;
            for (; n < stop; ++n) {
                const FactorSignature& sig = seg.signatures[static_cast<std::size_t>(n - lo)];
                double term;
                if (sig.spf == sig.lpf) {
                    term = 1.0;
                } else {
                    const double r =
                        static_cast<double>(sig.spf) / static_cast<double>(sig.lpf);
                    term = (a == 1.0) ? r : (a == 2.0) ? r * r : std::pow(r, a);
                }
                if (sig.squarefree) {
                    if (sig.omega <= static_cast<std::uint32_t>(kClassCount))
                        acc.classes[sig.omega - 1].add(term);
                    else
                        acc.class_tail.add(term);
                    if (sig.omega == 1) ++acc.prime_count;
                } else {
                    acc.nonsquarefree.add(weight[sig.omega] * term);
                }
                acc.total.add(weight[sig.omega] * term);
            }
            chunk.last_n = n - 1;
            chunk.at_checkpoint = at_cp;
            chunks.push_back(std::move(chunk));
        }
        return chunks;
    };

    SumTable table;
    table.rows.reserve(checkpoints.size());
    Partial global;

    auto merge = [&](std::uint64_t, std::vector<ChunkSums>&& chunks) {
        for (ChunkSums& c : chunks) {
            global.merge(c.sums);
            if (c.at_checkpoint) {
                SumRow row;
                row.x = c.last_n;
                row.total = global.total.value();
                for (std::size_t i = 0; i < row.classes.size(); ++i)
                    row.classes[i] = global.classes[i].value();
                row.class_tail = global.class_tail.value();
                row.nonsquarefree = global.nonsquarefree.value();
                row.prime_count = global.prime_count;
                table.rows.push_back(row);
            }
        }
    };

    run_ordered<std::vector<ChunkSums>>(num_segments, threads, work, merge);
    return table;
}

SumTable classic_s(std::uint64_t x_max, const std::vector<std::uint64_t>& checkpoints,
                   std::uint64_t segment_size, int threads) {
    return accumulate(x_max, checkpoints, WeightSpec::constant(1.0), RatioExponent(1.0),
                      segment_size, threads);
}

}  // namespace ratiolab
