#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ratiolab/sum_table.hpp"
#include "ratiolab/weights.hpp"

namespace ratiolab {

// Coefficients of the three-term expansion
//   S(x) = c1*x/log x + c2*x/log^2 x + c3*x/log^3 x + O(x/log^4 x).
struct AsymptoticCoeffs {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
};

// Polynomial f(t) = sum_{i>=1} a_i t^i with no constant term (f(0) = 0),
// coeffs[j] = a_{j+1}.
struct PowerSeries {
    std::vector<double> coeffs;

    double operator()(double t) const;  // Horner
    double over_t(double t) const;      // f(t)/t, finite at t = 0
};

// c1 = lambda(1); c2 = (2/a)lambda(2) + lambda(1);
// c3 = (9/a^2)lambda(3) + (4/a)lambda(2) + 2*lambda(1).
// Proved for alpha > 4/5; check alpha.theorem_range before trusting smaller.
AsymptoticCoeffs theorem1_coeffs(const WeightSpec& lambda, const RatioExponent& alpha);

// The expansion evaluated at finite x >= 3.
double theorem1_predict(double x, const WeightSpec& lambda, const RatioExponent& alpha);

// Coefficients for the generalized weight f(spf/lpf) in place of the power:
//   c1 = f(1), c2 = 2A + f(1), c3 = 9B + 4A + 2f(1)
// with A = int_0^1 f(t)/t dt and B = int_0^1 int_0^s f(t)/(st) dt ds, both by
// adaptive quadrature (f(t)/t must stay bounded near 0, e.g. f(0) = 0 with a
// finite derivative).
AsymptoticCoeffs theorem2_coeffs_quadrature(const std::function<double(double)>& f);
AsymptoticCoeffs theorem2_coeffs_quadrature(const PowerSeries& f);

// Same coefficients through the exact per-monomial identity: a_i t^i alone
// contributes (1, 2/i + 1, 9/i^2 + 4/i + 2) scaled by a_i. Independent of the
// quadrature path; the two agreeing is the consistency statement between the
// integral and power forms.
AsymptoticCoeffs theorem2_coeffs_series(const PowerSeries& f);

// Logarithmic integral int_2^x dt/log t, x >= 2.
double li(double x);

// Exact sum of p^exponent over primes p in (y, x]. `primes` must contain
// every prime <= x, ascending. Requires 3/2 < y <= x.
double prime_power_sum(double y, double x, double exponent,
                       const std::vector<std::uint64_t>& primes);

// The error-term regime of the prime-sum approximation depends on the sign
// of exponent + 1: above it scales like x^(c+1)/log^A x, below like
// y^(c+1)/log^A y.
enum class ErrorBranch { above_minus_one, at_minus_one, below_minus_one };
const char* branch_name(ErrorBranch b);  // "c>-1", "c=-1", "c<-1"

struct PrimePowerIntegral {
    double value = 0.0;
    ErrorBranch branch = ErrorBranch::above_minus_one;
};

// int_y^x t^exponent / log t dt by adaptive quadrature, plus the branch tag.
PrimePowerIntegral prime_power_integral(double y, double x, double exponent);

// The two-prime class split at sqrt(x) and sqrt(x)*log^{4/alpha}x:
//   I1 = sum_{p2 <= sqrt(x)} p2^-a sum_{p1 < p2} p1^a
//   I2 = sum_{sqrt(x) < p2 <= split_upper} p2^-a sum_{p1 <= x/p2} p1^a
// Leading coefficients (on x/log^2 x): 2/(a+1) and 2/(a(a+1)).
struct Sigma2Subsums {
    double i1 = 0.0, i2 = 0.0;
    double split_lower = 0.0, split_upper = 0.0;
    double lead_i1 = 0.0, lead_i2 = 0.0;
};
Sigma2Subsums sigma2_subsums(std::uint64_t x, const RatioExponent& alpha);

// The three-prime class split at x^(1/3) and x^(1/3)*log^{4/alpha}x, with
// p1 < p2 < p3 and p1*p2*p3 <= x throughout:
//   I3: p3 <= x^(1/3)               (product bound automatic)
//   I4: p3 in upper range, p2 <= sqrt(x/p3)
//   I5: p3 in upper range, sqrt(x/p3) < p2 < p3, p1 <= x/(p2 p3)
// Leading coefficients (on x/log^3 x): 9/((a+1)(a+2)), 18/(a(a+1)(a+2)),
// 9/(a^2(a+1)).
struct Sigma3Subsums {
    double i3 = 0.0, i4 = 0.0, i5 = 0.0;
    double split_lower = 0.0, split_upper = 0.0;
    double lead_i3 = 0.0, lead_i4 = 0.0, lead_i5 = 0.0;
};
Sigma3Subsums sigma3_subsums(std::uint64_t x, const RatioExponent& alpha);

// Least-squares fit of the table's totals in the basis {x/log^j x},
// j = 1..k, over checkpoints with x >= 10^3. Solved in scaled form
// (y = S log x / x against powers of 1/log x) so the design matrix stays
// conditioned; residuals are reported in those scaled units.
struct FitResult {
    std::vector<double> coefficients;
    double residual_norm = 0.0;
    std::vector<double> scaled_residuals;
};
FitResult fit_coefficients(const SumTable& table, int k);

// Peel-off estimators per checkpoint (x >= 10^3), L = log x:
//   c1_hat = S L / x
//   c2_hat = (S - c1 x/L) L^2 / x
//   c3_hat = (S - c1 x/L - c2 x/L^2) L^3 / x
// with exact c1, c2 from theorem1_coeffs. Each converges to its coefficient
// like 1/L, so at desk scale the sequences are trends, not limits.
struct EstimatorRow {
    std::uint64_t x = 0;
    double c1_hat = 0.0, c2_hat = 0.0, c3_hat = 0.0;
};
std::vector<EstimatorRow> estimator_sequence(const SumTable& table,
                                             const WeightSpec& lambda,
                                             const RatioExponent& alpha);

}  // namespace ratiolab
