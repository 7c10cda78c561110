#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ratiolab {

// Bounded weight lambda(i) on the number of distinct prime factors:
// explicit values for i = 1..head.size(), a constant tail for larger i.
struct WeightSpec {
    std::vector<double> head;
    double tail = 0.0;

    static WeightSpec constant(double v) { return WeightSpec{{v}, v}; }

    // 1 at omega == i, 0 everywhere else.
    static WeightSpec indicator(std::uint32_t i) {
        if (i < 1) throw std::invalid_argument("WeightSpec::indicator: i must be >= 1");
        WeightSpec w;
        w.head.assign(i, 0.0);
        w.head[i - 1] = 1.0;
        return w;
    }

    double value(std::uint32_t i) const {
        return (i >= 1 && i <= head.size()) ? head[i - 1] : tail;
    }

    void validate() const {
        for (double v : head)
            if (!std::isfinite(v))
                throw std::invalid_argument("weight: head values must be finite");
        if (!std::isfinite(tail))
            throw std::invalid_argument("weight: tail must be finite");
    }
};

// Parses the inline syntax "v1,v2,...[;tail=v]". The tail defaults to the
// last head value, so "1" is the constant weight 1.
WeightSpec parse_weight_spec(const std::string& text);

// Exponent applied to spf/lpf. The three-term expansion is proved for
// alpha > 4/5; theorem_range records whether alpha is inside that region
// (callers that predict from the expansion should warn when it is not).
struct RatioExponent {
    double alpha = 1.0;
    bool theorem_range = true;

    explicit RatioExponent(double a) : alpha(a), theorem_range(a > 0.8) {
        if (!std::isfinite(a) || a <= 0.0)
            throw std::domain_error("ratio exponent: alpha must be finite and > 0");
    }
};

}  // namespace ratiolab
