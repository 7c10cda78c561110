#include "ratiolab/quadrature.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "ratiolab/errors.hpp"

namespace ratiolab {

namespace {

// 15-point Kronrod abscissae/weights on [-1,1] and the embedded 7-point
// Gauss weights (odd-indexed abscissae plus the center form the G7 rule).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Panel {
    double a, b;
    double value;
    double error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double kron = kWgk[7] * fc;
    double gauss = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const double fsum = f(c - dx) + f(c + dx);
        kron += kWgk[j] * fsum;
        if (j % 2 == 1) gauss += kWg[(j - 1) / 2] * fsum;
    }
    return Panel{a, b, kron * h, std::abs(kron - gauss) * std::abs(h)};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol, double rel_tol, int max_intervals) {
    if (!(std::isfinite(a) && std::isfinite(b)))
        throw std::invalid_argument("integrate: bounds must be finite");
    if (a == b) return {0.0, 0.0, 0};

    std::priority_queue<Panel> panels;
    Panel first = evaluate_panel(f, a, b);
    double total = first.value;
    double err = first.error;
    panels.push(first);
    int count = 1;

    while (err > std::max(abs_tol, rel_tol * std::abs(total))) {
        if (count >= max_intervals)
            throw numerical_error("integrate: did not converge, error estimate " +
                                  std::to_string(err) + " after " +
                                  std::to_string(count) + " intervals");
        const Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b)
            throw numerical_error("integrate: interval collapsed before reaching tolerance");
        const Panel left = evaluate_panel(f, worst.a, mid);
        const Panel right = evaluate_panel(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
        ++count;
    }
    return {total, err, count};
}

}  // namespace ratiolab
