#pragma once

#include <cmath>

namespace ratiolab {

// Compensated accumulator, Neumaier variant: the carry absorbs the rounding
// error of every add no matter which operand is larger in magnitude.
// Suitable for summing ~1e10 terms of mixed size without losing the tail.
class StableSum {
public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            carry_ += (sum_ - t) + v;
        else
            carry_ += (v - t) + sum_;
        sum_ = t;
    }

    // Folds another partial sum in; both its main sum and carry are kept.
    void merge(const StableSum& other) {
        add(other.sum_);
        add(other.carry_);
    }

    double value() const { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

}  // namespace ratiolab
