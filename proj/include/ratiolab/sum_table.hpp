#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ratiolab/stable_sum.hpp"
#include "ratiolab/weights.hpp"

namespace ratiolab {

// Number of explicitly tracked omega classes. omega(n) <= 11 for every
// n < 10^12 (the 12-prime primorial is larger), so the tail bucket stays
// empty at any reachable scale; 16 leaves headroom.
inline constexpr int kClassCount = 16;

// Snapshot of the running sums at one checkpoint x.
//
// total is the weighted sum over all 2 <= n <= x. The decomposition fields
// store the squarefree omega classes with the weight stripped (so classes[0]
// equals pi(x) for every alpha), while nonsquarefree keeps its weight; see
// weighted_decomposition_total for how they recombine.
struct SumRow {
    std::uint64_t x = 0;
    double total = 0.0;
    std::array<double, kClassCount> classes{};  // classes[i-1]: squarefree, omega == i
    double class_tail = 0.0;                    // squarefree, omega > kClassCount
    double nonsquarefree = 0.0;                 // mu(n) == 0 terms, weighted
    std::uint64_t prime_count = 0;              // exact pi(x)

    double sigma(int i) const { return classes.at(static_cast<std::size_t>(i) - 1); }
};

struct SumTable {
    std::vector<SumRow> rows;
};

// Recombines a row's decomposition under lambda; equals row.total up to
// compensation noise. The tail bucket is weighted at lambda(kClassCount + 1),
// immaterial while the bucket is empty (every x below ~6e17).
inline double weighted_decomposition_total(const SumRow& row, const WeightSpec& lambda) {
    StableSum s;
    for (int i = 1; i <= kClassCount; ++i)
        s.add(lambda.value(static_cast<std::uint32_t>(i)) * row.classes[i - 1]);
    s.add(lambda.value(kClassCount + 1) * row.class_tail);
    s.add(row.nonsquarefree);
    return s.value();
}

}  // namespace ratiolab
