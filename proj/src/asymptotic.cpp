#include "ratiolab/asymptotic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ratiolab/errors.hpp"
#include "ratiolab/factor_sieve.hpp"
#include "ratiolab/quadrature.hpp"
#include "ratiolab/stable_sum.hpp"

namespace ratiolab {

double PowerSeries::operator()(double t) const {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    return acc * t;
}

double PowerSeries::over_t(double t) const {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
}

AsymptoticCoeffs theorem1_coeffs(const WeightSpec& lambda, const RatioExponent& alpha) {
    lambda.validate();
    const double a = alpha.alpha;
    const double l1 = lambda.value(1);
    const double l2 = lambda.value(2);
    const double l3 = lambda.value(3);
    AsymptoticCoeffs c;
    c.c1 = l1;
    c.c2 = (2.0 / a) * l2 + l1;
    c.c3 = (9.0 / (a * a)) * l3 + (4.0 / a) * l2 + 2.0 * l1;
    return c;
}

double theorem1_predict(double x, const WeightSpec& lambda, const RatioExponent& alpha) {
    if (!(x >= 3.0))
        throw std::domain_error("theorem1_predict: x must be >= 3");
    const AsymptoticCoeffs c = theorem1_coeffs(lambda, alpha);
    const double lx = std::log(x);
    return c.c1 * x / lx + c.c2 * x / (lx * lx) + c.c3 * x / (lx * lx * lx);
}

namespace {

AsymptoticCoeffs coeffs_from_ratio_integrand(const std::function<double(double)>& g,
                                             double f_at_1) {
    // A = int_0^1 g, B = int_0^1 (1/s) int_0^s g ds. The Kronrod nodes are
    // interior, so neither integrand is ever evaluated at 0.
    const double A = integrate(g, 0.0, 1.0, 1e-12, 1e-12).value;
    auto inner_mean = [&g](double s) {
        return integrate(g, 0.0, s, 1e-13, 1e-13).value / s;
    };
    const double B = integrate(inner_mean, 0.0, 1.0, 1e-11, 1e-11).value;
    AsymptoticCoeffs c;
    c.c1 = f_at_1;
    c.c2 = 2.0 * A + f_at_1;
    c.c3 = 9.0 * B + 4.0 * A + 2.0 * f_at_1;
    return c;
}

}  // namespace

AsymptoticCoeffs theorem2_coeffs_quadrature(const std::function<double(double)>& f) {
    auto g = [&f](double t) { return f(t) / t; };
    return coeffs_from_ratio_integrand(g, f(1.0));
}

AsymptoticCoeffs theorem2_coeffs_quadrature(const PowerSeries& f) {
    auto g = [&f](double t) { return f.over_t(t); };
    return coeffs_from_ratio_integrand(g, f(1.0));
}

AsymptoticCoeffs theorem2_coeffs_series(const PowerSeries& f) {
    AsymptoticCoeffs c;
    for (std::size_t j = 0; j < f.coeffs.size(); ++j) {
        const double a = f.coeffs[j];
        const double i = static_cast<double>(j + 1);
        c.c1 += a;
        c.c2 += a * (2.0 / i + 1.0);
        c.c3 += a * (9.0 / (i * i) + 4.0 / i + 2.0);
    }
    return c;
}

double li(double x) {
    if (!(x >= 2.0)) throw std::domain_error("li: x must be >= 2");
    if (x == 2.0) return 0.0;
    auto integrand = [](double t) { return 1.0 / std::log(t); };
    return integrate(integrand, 2.0, x, 1e-12, 1e-11).value;
}

double prime_power_sum(double y, double x, double exponent,
                       const std::vector<std::uint64_t>& primes) {
    if (!(y > 1.5) || !(y <= x))
        throw std::domain_error("prime_power_sum: need 3/2 < y <= x");
    StableSum sum;
    for (std::uint64_t p : primes) {
        const auto pd = static_cast<double>(p);
        if (pd <= y) continue;
        if (pd > x) break;
        sum.add(exponent == 1.0 ? pd : std::pow(pd, exponent));
    }
    return sum.value();
}

const char* branch_name(ErrorBranch b) {
    switch (b) {
        case ErrorBranch::above_minus_one: return "c>-1";
        case ErrorBranch::at_minus_one: return "c=-1";
        case ErrorBranch::below_minus_one: return "c<-1";
    }
    return "?";
}

PrimePowerIntegral prime_power_integral(double y, double x, double exponent) {
    if (!(y > 1.5) || !(y <= x))
        throw std::domain_error("prime_power_integral: need 3/2 < y <= x");
    auto integrand = [exponent](double t) { return std::pow(t, exponent) / std::log(t); };
    PrimePowerIntegral out;
    out.value = (y == x) ? 0.0 : integrate(integrand, y, x, 1e-12, 1e-11).value;
    out.branch = exponent > -1.0   ? ErrorBranch::above_minus_one
                 : exponent < -1.0 ? ErrorBranch::below_minus_one
                                   : ErrorBranch::at_minus_one;
    return out;
}

namespace {

double power_of(double base, double e) {
    if (e == 1.0) return base;
    if (e == -1.0) return 1.0 / base;
    return std::pow(base, e);
}

}  // namespace

Sigma2Subsums sigma2_subsums(std::uint64_t x, const RatioExponent& alpha) {
    if (x < 100) throw std::domain_error("sigma2_subsums: x must be >= 100");
    const double a = alpha.alpha;
    const double xd = static_cast<double>(x);
    const double lx = std::log(xd);

    Sigma2Subsums out;
    out.split_lower = std::sqrt(xd);
    out.split_upper = out.split_lower * std::pow(lx, 4.0 / a);
    out.lead_i1 = 2.0 / (a + 1.0);
    out.lead_i2 = 2.0 / (a * (a + 1.0));

    // p2 beyond x/2 contributes nothing (x/p2 < 2 admits no p1), so the
    // prime list never needs to pass min(split_upper, x/2).
    const std::uint64_t r = isqrt(x);
    std::uint64_t p2_cap = x / 2;
    if (out.split_upper < static_cast<double>(p2_cap))
        p2_cap = static_cast<std::uint64_t>(out.split_upper);
    const auto primes = base_primes(std::max<std::uint64_t>({p2_cap, r, 2}));

    // prefix[j] = sum of p^a over the first j primes
    std::vector<double> prefix(primes.size() + 1);
    StableSum run;
    for (std::size_t j = 0; j < primes.size(); ++j) {
        prefix[j] = run.value();
        run.add(power_of(static_cast<double>(primes[j]), a));
    }
    prefix[primes.size()] = run.value();

    auto sum_up_to = [&](std::uint64_t limit) {
        const auto it = std::upper_bound(primes.begin(), primes.end(), limit);
        return prefix[static_cast<std::size_t>(it - primes.begin())];
    };

    StableSum i1, i2;
    for (std::size_t j = 0; j < primes.size(); ++j) {
        const std::uint64_t p = primes[j];
        if (p <= r) {
            // p1 < p2 <= sqrt(x) already forces p1*p2 <= x
            i1.add(power_of(static_cast<double>(p), -a) * prefix[j]);
        } else {
            if (static_cast<double>(p) > out.split_upper) break;
            // here x/p < sqrt(x) < p, so the floor bound enforces both
            // p1 <= x/p2 and p1 < p2
            i2.add(power_of(static_cast<double>(p), -a) * sum_up_to(x / p));
        }
    }
    out.i1 = i1.value();
    out.i2 = i2.value();
    return out;
}

namespace {

std::uint64_t icbrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::cbrt(static_cast<double>(n)));
    r = std::min<std::uint64_t>(r, 2642245);  // floor(cbrt(2^64 - 1))
    while (r > 0 && r > n / (r * r)) --r;                  // r^3 > n, overflow-free
    while (r + 1 <= 2642245 && r + 1 <= n / ((r + 1) * (r + 1))) ++r;
    return r;
}

}  // namespace

Sigma3Subsums sigma3_subsums(std::uint64_t x, const RatioExponent& alpha) {
    if (x < 10000) throw std::domain_error("sigma3_subsums: x must be >= 10^4");
    const double a = alpha.alpha;
    const double xd = static_cast<double>(x);
    const double lx = std::log(xd);

    Sigma3Subsums out;
    out.split_lower = std::cbrt(xd);
    out.split_upper = out.split_lower * std::pow(lx, 4.0 / a);
    out.lead_i3 = 9.0 / ((a + 1.0) * (a + 2.0));
    out.lead_i4 = 18.0 / (a * (a + 1.0) * (a + 2.0));
    out.lead_i5 = 9.0 / (a * a * (a + 1.0));

    const std::uint64_t c = icbrt(x);
    // p3 > x/4 contributes nothing: p2 >= 2 leaves x/(p2 p3) < 2 for p1.
    std::uint64_t p3_cap = x / 4;
    if (out.split_upper < static_cast<double>(p3_cap))
        p3_cap = static_cast<std::uint64_t>(out.split_upper);
    const auto primes = base_primes(std::max<std::uint64_t>({p3_cap, c, 2}));

    // Over primes q_0 < q_1 < ... <= c (everything p1 or p2 can be):
    //   wpre[j] = sum_{k<j} q_k^a            = W(q_j - 1)
    //   tpre[j] = sum_{k<j} wpre[k]          = T(q_j - 1)
    // where W(z) sums p^a over p <= z and T(z) sums W(q-1) over primes q <= z.
    const auto nc = static_cast<std::size_t>(
        std::upper_bound(primes.begin(), primes.end(), c) - primes.begin());
    std::vector<double> wpre(nc + 1), tpre(nc + 1);
    {
        StableSum ws, ts;
        for (std::size_t j = 0; j < nc; ++j) {
            wpre[j] = ws.value();
            tpre[j] = ts.value();
            ws.add(power_of(static_cast<double>(primes[j]), a));
            ts.add(wpre[j]);
        }
        wpre[nc] = ws.value();
        tpre[nc] = ts.value();
    }
    auto index_of = [&](std::uint64_t z) {
        const auto limit = std::min<std::uint64_t>(z, c);
        return static_cast<std::size_t>(
            std::upper_bound(primes.begin(), primes.begin() + static_cast<std::ptrdiff_t>(nc),
                             limit) -
            primes.begin());
    };
    auto w_of = [&](std::uint64_t z) { return wpre[index_of(z)]; };
    auto t_of = [&](std::uint64_t z) { return tpre[index_of(z)]; };

    StableSum i3, i4, i5;
    for (std::size_t j = 0; j < primes.size(); ++j) {
        const std::uint64_t p3 = primes[j];
        if (p3 <= c) {
            // p1 < p2 < p3 <= x^(1/3) makes the product bound automatic
            i3.add(power_of(static_cast<double>(p3), -a) * tpre[j]);
            continue;
        }
        if (static_cast<double>(p3) > out.split_upper) break;
        const std::uint64_t xdiv = x / p3;
        const std::uint64_t m = isqrt(xdiv);  // p2 <= m  <=>  p2^2 * p3 <= x
        const double p3w = power_of(static_cast<double>(p3), -a);
        i4.add(p3w * t_of(m));
        // I5 region: m < p2 < p3; the p2 weight cancels (only p1 and p3
        // enter the ratio), p1 runs to x/(p2 p3) which sits below p2 here.
        StableSum inner;
        for (std::size_t t = index_of(m); t < primes.size(); ++t) {
            const std::uint64_t p2 = primes[t];
            if (p2 >= p3) break;
            const std::uint64_t q = xdiv / p2;  // floor(x/(p2*p3))
            if (q < 2) break;
            inner.add(w_of(q));
        }
        i5.add(p3w * inner.value());
    }
    out.i3 = i3.value();
    out.i4 = i4.value();
    out.i5 = i5.value();
    return out;
}

FitResult fit_coefficients(const SumTable& table, int k) {
    // the power buffer below holds 16 entries, and the normal equations turn
    // useless well before that anyway
    if (k < 1 || k > 12)
        throw std::invalid_argument("fit_coefficients: k must be in [1, 12]");

    std::vector<double> u, y;
    for (const SumRow& row : table.rows) {
        if (row.x < 1000) continue;
        const double xd = static_cast<double>(row.x);
        const double lx = std::log(xd);
        u.push_back(1.0 / lx);
        y.push_back(row.total * lx / xd);
    }
    const auto m = u.size();
    if (m < static_cast<std::size_t>(k))
        throw std::invalid_argument(
            "fit_coefficients: need at least k checkpoints with x >= 10^3");

    // Normal equations for y ~ sum_j c_j u^(j-1) in long double; k stays
    // small (<= ~6), where this is comfortably conditioned.
    const auto n = static_cast<std::size_t>(k);
    std::vector<long double> A(n * n, 0.0L), b(n, 0.0L);
    for (std::size_t r = 0; r < m; ++r) {
        long double pw[16];
        long double acc = 1.0L;
        for (std::size_t j = 0; j < n; ++j) {
            pw[j] = acc;
            acc *= u[r];
        }
        for (std::size_t i = 0; i < n; ++i) {
            b[i] += pw[i] * static_cast<long double>(y[r]);
            for (std::size_t j = 0; j < n; ++j) A[i * n + j] += pw[i] * pw[j];
        }
    }

    // Gaussian elimination with partial pivoting.
    std::vector<std::size_t> piv(n);
    for (std::size_t i = 0; i < n; ++i) piv[i] = i;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t best = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(A[r * n + col]) > std::abs(A[best * n + col])) best = r;
        if (std::abs(A[best * n + col]) < 1e-30L)
            throw numerical_error("fit_coefficients: singular normal equations");
        if (best != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(A[col * n + j], A[best * n + j]);
            std::swap(b[col], b[best]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const long double f = A[r * n + col] / A[col * n + col];
            for (std::size_t j = col; j < n; ++j) A[r * n + j] -= f * A[col * n + j];
            b[r] -= f * b[col];
        }
    }
    std::vector<long double> c(n, 0.0L);
    for (std::size_t i = n; i-- > 0;) {
        long double acc = b[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= A[i * n + j] * c[j];
        c[i] = acc / A[i * n + i];
    }

    FitResult out;
    out.coefficients.reserve(n);
    for (std::size_t j = 0; j < n; ++j)
        out.coefficients.push_back(static_cast<double>(c[j]));
    long double rss = 0.0L;
    for (std::size_t r = 0; r < m; ++r) {
        long double model = 0.0L, pw = 1.0L;
        for (std::size_t j = 0; j < n; ++j) {
            model += c[j] * pw;
            pw *= u[r];
        }
        const double res = y[r] - static_cast<double>(model);
        out.scaled_residuals.push_back(res);
        rss += static_cast<long double>(res) * res;
    }
    out.residual_norm = static_cast<double>(std::sqrt(static_cast<double>(rss)));
    return out;
}

std::vector<EstimatorRow> estimator_sequence(const SumTable& table,
                                             const WeightSpec& lambda,
                                             const RatioExponent& alpha) {
    const AsymptoticCoeffs c = theorem1_coeffs(lambda, alpha);
    std::vector<EstimatorRow> out;
    out.reserve(table.rows.size());
    for (const SumRow& row : table.rows) {
        if (row.x < 1000) continue;
        const double xd = static_cast<double>(row.x);
        const double L = std::log(xd);
        EstimatorRow e;
        e.x = row.x;
        e.c1_hat = row.total * L / xd;
        e.c2_hat = (row.total - c.c1 * xd / L) * L * L / xd;
        e.c3_hat = (row.total - c.c1 * xd / L - c.c2 * xd / (L * L)) * L * L * L / xd;
        out.push_back(e);
    }
    return out;
}

}  // namespace ratiolab
