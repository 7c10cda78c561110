#include "ratiolab/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "ratiolab/stable_sum.hpp"

namespace ratiolab {

FactorSignature factor_signature_naive(std::uint64_t n) {
    if (n < 2) throw std::domain_error("factor_signature_naive: n must be >= 2");
    FactorSignature sig;
    std::uint64_t m = n;
    for (std::uint64_t d = 2; d <= m / d; d = (d == 2) ? 3 : d + 2) {
        if (m % d != 0) continue;
        std::uint64_t e = 0;
        while (m % d == 0) {
            m /= d;
            ++e;
        }
        if (sig.omega == 0) sig.spf = d;
        sig.lpf = d;
        ++sig.omega;
        if (e > 1) sig.squarefree = false;
    }
    if (m > 1) {
        // leftover cofactor is prime
        if (sig.omega == 0) sig.spf = m;
        sig.lpf = m;
        ++sig.omega;
    }
    return sig;
}

double brute_sum(std::uint64_t x, const WeightSpec& lambda, double alpha) {
    if (x < 2) throw std::domain_error("brute_sum: x must be >= 2");
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw std::domain_error("brute_sum: alpha must be finite and > 0");
    lambda.validate();

    StableSum sum;
    for (std::uint64_t n = 2; n <= x; ++n) {
        const FactorSignature sig = factor_signature_naive(n);
        const double ratio =
            static_cast<double>(sig.spf) / static_cast<double>(sig.lpf);
        sum.add(lambda.value(sig.omega) * std::pow(ratio, alpha));
    }
    return sum.value();
}

}  // namespace ratiolab
