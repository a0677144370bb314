#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace fencekit {

// Romberg integration on [a, b]; the integrand must be finite everywhere in
// the closed interval (removable singularities handled by the caller's
// series branch).
template <class F>
double romberg(F&& f, double a, double b, double tol = 1e-12, int max_level = 22) {
    std::vector<double> prev, cur;
    double h = b - a;
    prev.push_back(0.5 * h * (f(a) + f(b)));
    for (int k = 1; k <= max_level; ++k) {
        h *= 0.5;
        // trapezoid refinement
        double sum = 0.0;
        std::size_t steps = std::size_t{1} << (k - 1);
        for (std::size_t i = 0; i < steps; ++i) sum += f(a + (2.0 * i + 1.0) * h);
        cur.assign(k + 1, 0.0);
        cur[0] = 0.5 * prev[0] + h * sum;
        double p4 = 4.0;
        for (int j = 1; j <= k; ++j) {
            cur[j] = (p4 * cur[j - 1] - prev[j - 1]) / (p4 - 1.0);
            p4 *= 4.0;
        }
        if (k >= 4 && std::abs(cur[k] - prev[k - 1]) <= tol * (1.0 + std::abs(cur[k])))
            return cur[k];
        prev = cur;
    }
    return prev.back();
}

// Cumulative integral of a sampled-profile integrand over a uniform grid,
// Simpson per cell with a midpoint supplied by the caller (values are
// evaluated on the piecewise-linear model of the samples, so cells never
// straddle a kink).  eval(s, t) takes the abscissa and the linearly
// interpolated profile value.
class CellSimpson {
public:
    // returns per-node prefix integrals I[k] = int_{x0}^{x0 + k h} of
    // eval(s, theta_lin(s)) ds, k = 0..n
    template <class Eval>
    static std::vector<double> prefix(const std::vector<double>& theta, double x0, double h,
                                      bool wrap_last, Eval&& eval) {
        std::size_t n = theta.size();
        std::size_t cells = wrap_last ? n : n - 1;
        std::vector<double> out(cells + 1, 0.0);
        for (std::size_t k = 0; k < cells; ++k) {
            double t0 = theta[k], t1 = theta[(k + 1) % n];
            double s0 = x0 + k * h;
            double tm = 0.5 * (t0 + t1), sm = s0 + 0.5 * h;
            out[k + 1] = out[k] + (eval(s0, t0) + 4.0 * eval(sm, tm) + eval(s0 + h, t1)) * h / 6.0;
        }
        return out;
    }
};

}  // namespace fencekit
