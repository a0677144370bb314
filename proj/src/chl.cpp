#include "fencekit/chl.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fencekit/quadrature.hpp"

namespace fencekit {

namespace {
constexpr double kSeriesCut = 1e-4;
}

double g_of(double tau, double L) {
    if (std::abs(tau) >= M_PI) throw std::invalid_argument("g_of: |tau| must be < pi");
    if (std::abs(tau) < kSeriesCut) {
        double t2 = tau * tau;
        return (L / 2.0) * (1.0 + t2 / 12.0 + t2 * t2 / 120.0);
    }
    return (L / tau) * std::tan(tau / 2.0);
}

double f_prime(double tau, double L) {
    if (std::abs(tau) < kSeriesCut) {
        double t2 = tau * tau;
        return (L / 6.0) * (1.0 + 29.0 * t2 / 120.0 + 1609.0 * t2 * t2 / 40320.0);
    }
    double tn = std::tan(tau / 2.0);
    return (L / 2.0) * (1.0 - (2.0 / tau) * tn + tn * tn) / (tau * std::sin(tau / 2.0));
}

double f_of(double tau, double L) {
    if (std::abs(tau) > std::sqrt(3.0) + 1e-12)
        throw std::invalid_argument("f_of: |tau| must be <= sqrt(3)");
    if (tau == 0.0) return 0.0;
    double t = std::abs(tau);
    double val = romberg([L](double x) { return f_prime(x, L); }, 0.0, t, 1e-13);
    return tau > 0 ? val : -val;
}

double ThetaProfile::theta(double sigma) const {
    std::size_t n = samples.size();
    double h = 2.0 * M_PI / static_cast<double>(n);
    double u = wrap(sigma + M_PI, 2.0 * M_PI) / h;
    std::size_t k = static_cast<std::size_t>(u) % n;
    double f = u - std::floor(u);
    return samples[k] * (1.0 - f) + samples[(k + 1) % n] * f;
}

void ThetaProfile::validate() const {
    std::size_t n = samples.size();
    if (n < 8 || n % 2 != 0)
        throw std::invalid_argument("ThetaProfile: need an even grid of at least 8 samples");
    if (L <= 0) throw std::invalid_argument("ThetaProfile: L must be positive");
    double sq3 = std::sqrt(3.0);
    double h = 2.0 * M_PI / static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (std::abs(samples[k]) > sq3 + 1e-12)
            throw std::invalid_argument("ThetaProfile: |theta| exceeds sqrt(3) at index " +
                                        std::to_string(k));
        if (std::abs(samples[(k + n / 2) % n] + samples[k]) > 1e-12)
            throw std::invalid_argument("ThetaProfile: antisymmetry violated at index " +
                                        std::to_string(k));
        double slope = std::abs(samples[(k + 1) % n] - samples[k]) / h;
        if (slope > lipschitz_bound + 1e-9)
            throw std::invalid_argument("ThetaProfile: slope exceeds the Lipschitz bound at index " +
                                        std::to_string(k));
    }
}

double M_of(const ThetaProfile& profile, double sigma) {
    std::size_t n = profile.grid();
    double h = 2.0 * M_PI / static_cast<double>(n);
    double u = wrap(sigma + M_PI, 2.0 * M_PI) / h;
    std::size_t k = static_cast<std::size_t>(std::lround(u)) % n;
    double left = (profile.samples[k] - profile.samples[(k + n - 1) % n]) / h;
    double right = (profile.samples[(k + 1) % n] - profile.samples[k]) / h;
    // central difference; at a kink of the sampled profile the one-sided
    // slope of the steeper matching cell (the a.e. value suffices)
    double slope = 0.5 * (left + right);
    if (std::abs(left - right) > 1e-6 * std::max(1.0, profile.lipschitz_bound))
        slope = (std::abs(left) > std::abs(right)) ? left : right;
    return f_prime(profile.theta_at(k), profile.L) * slope;
}

namespace {

// prefix integrals over the grid of M(s) cos s and M(s) sin s, per-cell
// Simpson on the piecewise-linear profile (cells never straddle a sample
// kink, so each cell integrand is smooth)
struct Prefixes {
    std::vector<double> C, S;  // size n+1, from sigma = -pi
    double h;
};

Prefixes m_prefixes(const ThetaProfile& p) {
    std::size_t n = p.grid();
    Prefixes out;
    out.h = 2.0 * M_PI / static_cast<double>(n);
    double L = p.L;
    out.C.assign(n + 1, 0.0);
    out.S.assign(n + 1, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        double t0 = p.samples[k], t1 = p.samples[(k + 1) % n];
        double slope = (t1 - t0) / out.h;
        double s0 = -M_PI + k * out.h;
        double sm = s0 + 0.5 * out.h, s1 = s0 + out.h;
        double tm = 0.5 * (t0 + t1);
        double M0 = f_prime(t0, L) * slope;
        double Mm = f_prime(tm, L) * slope;
        double M1 = f_prime(t1, L) * slope;
        out.C[k + 1] = out.C[k] + (M0 * std::cos(s0) + 4 * Mm * std::cos(sm) + M1 * std::cos(s1)) * out.h / 6.0;
        out.S[k + 1] = out.S[k] + (M0 * std::sin(s0) + 4 * Mm * std::sin(sm) + M1 * std::sin(s1)) * out.h / 6.0;
    }
    return out;
}

}  // namespace

CHLBody build_chl(const ThetaProfile& profile) {
    profile.validate();
    std::size_t n = profile.grid();
    Prefixes pre = m_prefixes(profile);

    double closure = std::hypot(pre.C[n] - pre.C[0], pre.S[n] - pre.S[0]);
    if (closure > 1e-6 * profile.L)
        throw std::invalid_argument(
            "build_chl: profile does not close up (harmonic-1 content of f(theta)); defect = " +
            std::to_string(closure));

    std::size_t i0 = n / 2;  // sigma = 0
    std::vector<Point2> pts(n);
    for (std::size_t k = 0; k < n; ++k) {
        double sig = profile.sigma_at(k);
        double th = profile.samples[k];
        double mx = pre.C[k] - pre.C[i0];
        double my = pre.S[k] - pre.S[i0];
        double gg = g_of(th, profile.L);
        double a = sig - th / 2.0;
        pts[k] = Point2{mx + gg * std::sin(a), my - gg * std::cos(a)};
    }

    // convexity scan first, to name the offending sigma on failure
    double perim = polygon_perimeter(pts);
    double eps_c = 1e-12 * perim * perim;
    for (std::size_t k = 0; k < n; ++k) {
        Vec2 e1 = pts[(k + 1) % n] - pts[k];
        Vec2 e2 = pts[(k + 2) % n] - pts[(k + 1) % n];
        if (e1.cross(e2) < -eps_c)
            throw std::invalid_argument("build_chl: profile infeasible, convexity fails at sigma = " +
                                        std::to_string(profile.sigma_at((k + 1) % n)));
    }

    CHLBody out{ConvexBody(std::move(pts)), profile, Point2{0.0, 0.0}, 0.0, 0.0};
    out.area_gauss = chl_area_gauss(profile);
    out.area_fourier = chl_area_fourier(profile);
    return out;
}

CircularArc CHLBody::family_arc(std::size_t k) const {
    std::size_t n = profile.grid();
    const auto& v = body.vertices();
    return CircularArc{v[k % n], v[(k + n / 2) % n], profile.theta_at(k)};
}

double chl_area_gauss(const ThetaProfile& p) {
    std::size_t n = p.grid();
    double h = 2.0 * M_PI / static_cast<double>(n);
    double L = p.L;
    std::size_t i0 = n / 2;

    // int_0^pi int_0^t M(t) M(s) sin(t-s) ds dt
    //   = int_0^pi M(t) [ sin(t) C(t) - cos(t) S(t) ] dt,
    // with C, S the prefix integrals of M cos and M sin from 0
    double dbl = 0.0, C = 0.0, S = 0.0;
    for (std::size_t k = i0; k < n; ++k) {
        double t0 = p.samples[k], t1 = p.samples[(k + 1) % n];
        double slope = (t1 - t0) / h;
        double s0 = -M_PI + k * h, sm = s0 + h / 2, s1 = s0 + h;
        double tm = 0.5 * (t0 + t1);
        double M0 = f_prime(t0, L) * slope;
        double Mm = f_prime(tm, L) * slope;
        double M1 = f_prime(t1, L) * slope;
        // half-cell prefix values for the Simpson midpoint
        double tq = 0.5 * (t0 + tm), sq = s0 + h / 4;
        double Mq = f_prime(tq, L) * slope;
        double Cm = C + (M0 * std::cos(s0) + 4 * Mq * std::cos(sq) + Mm * std::cos(sm)) * h / 12.0;
        double Sm = S + (M0 * std::sin(s0) + 4 * Mq * std::sin(sq) + Mm * std::sin(sm)) * h / 12.0;
        double C1 = C + (M0 * std::cos(s0) + 4 * Mm * std::cos(sm) + M1 * std::cos(s1)) * h / 6.0;
        double S1 = S + (M0 * std::sin(s0) + 4 * Mm * std::sin(sm) + M1 * std::sin(s1)) * h / 6.0;
        double F0 = M0 * (std::sin(s0) * C - std::cos(s0) * S);
        double Fm = Mm * (std::sin(sm) * Cm - std::cos(sm) * Sm);
        double F1 = M1 * (std::sin(s1) * C1 - std::cos(s1) * S1);
        dbl += (F0 + 4 * Fm + F1) * h / 6.0;
        C = C1;
        S = S1;
    }

    double g2 = 0.0;
    for (std::size_t k = i0; k < n; ++k) {
        double t0 = p.samples[k], t1 = p.samples[(k + 1) % n];
        double tm = 0.5 * (t0 + t1);
        double a0 = g_of(t0, L), am = g_of(tm, L), a1 = g_of(t1, L);
        g2 += (a0 * a0 + 4 * am * am + a1 * a1) * h / 6.0;
    }
    return dbl + g2;
}

std::vector<double> chl_f_samples(const ThetaProfile& p) {
    std::vector<double> fv(p.grid());
    for (std::size_t k = 0; k < fv.size(); ++k) fv[k] = f_of(p.samples[k], p.L);
    return fv;
}

std::vector<std::pair<double, double>> chl_fourier_coefficients(const ThetaProfile& p,
                                                                int max_harmonic) {
    std::size_t n = p.grid();
    double h = 2.0 * M_PI / static_cast<double>(n);
    std::vector<double> fv = chl_f_samples(p);
    std::vector<std::pair<double, double>> out(max_harmonic + 1);
    for (int m = 0; m <= max_harmonic; ++m) {
        double a = 0.0, b = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            double sig = -M_PI + k * h;
            a += fv[k] * std::cos(m * sig);
            b += fv[k] * std::sin(m * sig);
        }
        out[m] = {a * h / M_PI, b * h / M_PI};
    }
    return out;
}

double chl_area_fourier(const ThetaProfile& p, int harmonics) {
    std::size_t n = p.grid();
    double h = 2.0 * M_PI / static_cast<double>(n);
    double L = p.L;
    std::size_t i0 = n / 2;

    // cache f on the samples (the DFT reuses them per harmonic)
    std::vector<double> fv(n);
    for (std::size_t k = 0; k < n; ++k) fv[k] = f_of(p.samples[k], L);

    double series = 0.0;
    for (int m = 1; m <= harmonics; ++m) {
        int kk = 2 * m + 1;
        double a = 0.0, b = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            double sig = -M_PI + k * h;
            a += fv[k] * std::cos(kk * sig);
            b += fv[k] * std::sin(kk * sig);
        }
        a *= h / M_PI;
        b *= h / M_PI;
        series += (a * a + b * b) / (kk * kk - 1.0);
    }

    double f2 = 0.0, g2 = 0.0;
    for (std::size_t k = i0; k < n; ++k) {
        double t0 = p.samples[k], t1 = p.samples[(k + 1) % n];
        double tm = 0.5 * (t0 + t1);
        double fm = f_of(tm, L);
        f2 += (fv[k] * fv[k] + 4 * fm * fm + fv[(k + 1) % n] * fv[(k + 1) % n]) * h / 6.0;
        double a0 = g_of(t0, L), am = g_of(tm, L), a1 = g_of(t1, L);
        g2 += (a0 * a0 + 4 * am * am + a1 * a1) * h / 6.0;
    }
    return -(M_PI / 2.0) * series - f2 + g2;
}

ThetaProfile rounded_triangle_profile(double L, std::size_t grid) {
    if (L <= 0) throw std::invalid_argument("rounded_triangle_profile: L must be positive");
    if (grid % 12 != 0) grid += 12 - grid % 12;  // kink-aligned sampling
    ThetaProfile p;
    p.L = L;
    p.lipschitz_bound = 2.0;
    p.samples.resize(grid);
    auto base = [](double s) {  // on [0, pi)
        return (M_PI - std::abs(2.0 * M_PI - std::abs(6.0 * s - 3.0 * M_PI))) / 3.0;
    };
    for (std::size_t k = 0; k < grid; ++k) {
        double sig = -M_PI + 2.0 * M_PI * k / grid;
        p.samples[k] = sig >= 0 ? base(sig) : -base(sig + M_PI);
    }
    return p;
}

ThetaProfile disc_profile(double L, std::size_t grid) {
    if (L <= 0) throw std::invalid_argument("disc_profile: L must be positive");
    ThetaProfile p;
    p.L = L;
    p.lipschitz_bound = 1e-9;
    p.samples.assign(grid, 0.0);
    return p;
}

std::pair<double, double> verify_halving(const CHLBody& chl, double sigma) {
    if (sigma < -M_PI || sigma >= 0.0)
        throw std::invalid_argument("verify_halving: sigma must be in [-pi, 0)");
    std::size_t n = chl.profile.grid();
    double h = 2.0 * M_PI / static_cast<double>(n);
    std::size_t k = static_cast<std::size_t>(std::lround((sigma + M_PI) / h)) % (n / 2);
    SplitResult r = chl.body.split_by_arc(chl.family_arc(k));
    return {r.area_left, r.area_right};
}

std::pair<double, double> check_fg_inequality(double L, const std::vector<double>& taus) {
    double min_margin = std::numeric_limits<double>::max();
    double arg = 0.0;
    for (double t : taus) {
        double gg = g_of(t, L);
        double ff = f_of(t, L);
        double margin = gg * gg - 9.0 / 8.0 * ff * ff - L * L / 4.0;
        if (margin < min_margin) {
            min_margin = margin;
            arg = t;
        }
    }
    // supporting inequality on (0, pi/2)
    for (int i = 1; i < 2000; ++i) {
        double t = M_PI / 2.0 * i / 2000.0;
        double s = std::sin(t / 2.0), c = std::cos(t / 2.0);
        double lhs = s * s + (1.0 / 9.0) * s * s * s * s / (c * c);
        if (lhs > (t / 2.0) * (t / 2.0) + 1e-14)
            throw std::runtime_error("check_fg_inequality: supporting inequality failed");
    }
    return {min_margin, arg};
}

double remark_I_constant() {
    auto integrand = [](double t) {
        if (std::abs(t) < kSeriesCut) {
            double t2 = t * t;
            return std::cos(t) * (1.0 / 3.0 + t2 / 45.0 + 2.0 * t2 * t2 / 945.0);
        }
        return (std::cos(t) / t) * (1.0 / t - 1.0 / std::tan(t));
    };
    return romberg(integrand, 0.0, M_PI / 3.0, 1e-13);
}

double rounded_triangle_area_constant() {
    double I = remark_I_constant();
    double s = 3.0 / (2.0 * M_PI) + I;
    return 9.0 / M_PI - 2.0 * std::sqrt(3.0) * s * s;
}

}  // namespace fencekit
