#pragma once

#include <utility>
#include <vector>

#include "fencekit/geometry.hpp"

namespace fencekit {

/// Sampled Lipschitz antisymmetric opening-angle profile theta(sigma) on a
/// uniform grid over [-pi, pi), driving the constant-halving-length
/// construction. Antisymmetry: theta(sigma - pi) = -theta(sigma).
struct ThetaProfile {
    std::vector<double> samples;  // theta at sigma_k = -pi + 2 pi k / N, N even
    double L = 1.0;               // halving length
    double lipschitz_bound = 0.0;

    std::size_t grid() const { return samples.size(); }
    double sigma_at(std::size_t k) const {
        return -M_PI + 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(samples.size());
    }
    double theta_at(std::size_t k) const { return samples[k % samples.size()]; }
    // linear interpolation on the periodic grid
    double theta(double sigma) const;

    // throws on antisymmetry violation, |theta| > sqrt(3), or slope above
    // the declared Lipschitz bound
    void validate() const;
};

/// Body with constant halving length: every boundary point is a terminal of
/// an optimal halving arc of length L.
struct CHLBody {
    ConvexBody body;
    ThetaProfile profile;
    Point2 m0{0.0, 0.0};  // integration constant m(0)
    double area_gauss = 0.0;
    double area_fourier = 0.0;

    // Arc of the halving family at grid index k (sigma in [-pi, 0) half):
    // terminals x(sigma), y(sigma) = x(sigma + pi), opening theta(sigma).
    CircularArc family_arc(std::size_t k) const;
};

// g(tau) = (L/tau) tan(tau/2); g(0) = L/2. Even, smooth on (-pi, pi); the
// removable singularity switches to the series
// (L/2)(1 + tau^2/12 + tau^4/120) below |tau| = 1e-4.
double g_of(double tau, double L);

// f(tau) = (L/2) int_0^tau (1 - (2/t) tan(t/2) + tan^2(t/2)) / (t sin(t/2)) dt.
// Odd; f'(tau) = g'(tau)/sin(tau/2). The integrand tends to 1/3 at 0
// (series (1/3)(1 + 29 t^2/120 + 1609 t^4/40320)), which matches the a.e.
// identity M = L theta'/6 at theta = 0. Domain |tau| <= sqrt(3).
double f_of(double tau, double L);

// f'(tau) with the same series branch; exposed for the solvers and tests.
double f_prime(double tau, double L);

// M(sigma) = (d/dsigma g(theta(sigma))) / sin(theta/2), computed from the
// sampled profile with central differences (the a.e. value; grid kinks get
// the one-sided cell slopes inside the integrators).
double M_of(const ThetaProfile& profile, double sigma);

// Build the CHL body: m(sigma) = m(0) + int_0^sigma M(s)(cos s, sin s) ds by
// composite per-cell Simpson, boundary sampled as x(sigma) over [-pi, pi).
// Throws when the profile does not close up or the boundary is not convex,
// naming the offending sigma.
CHLBody build_chl(const ThetaProfile& profile);

// |K| = int_0^pi int_0^t M(t) M(s) sin(t-s) ds dt + int_0^pi g^2(theta) ds
double chl_area_gauss(const ThetaProfile& profile);

// |K| = -(pi/2) sum (a_n^2+b_n^2)/((2n+1)^2-1) - int_0^pi f^2 + int_0^pi g^2
// with a_n, b_n the Fourier coefficients of f(theta(sigma)) at harmonic 2n+1
double chl_area_fourier(const ThetaProfile& profile, int harmonics = 64);

// f(theta) on the profile grid (shared by the Fourier route and the tests).
std::vector<double> chl_f_samples(const ThetaProfile& profile);

// Fourier coefficient pairs (a_k, b_k) of f(theta(sigma)) for harmonics
// k = 0 .. max_harmonic inclusive.
std::vector<std::pair<double, double>> chl_fourier_coefficients(const ThetaProfile& profile,
                                                                int max_harmonic);

// theta(sigma) = (pi - |2 pi - |6 sigma - 3 pi||)/3 on [0, pi), extended by
// antisymmetry. Sampled on a kink-aligned grid (multiple of 12) so that the
// piecewise-linear samples represent the profile exactly.
ThetaProfile rounded_triangle_profile(double L, std::size_t grid = 4092);

ThetaProfile disc_profile(double L, std::size_t grid = 4096);

// The two part areas produced by the family arc at sigma in [-pi, 0),
// measured by direct polygon splitting.
std::pair<double, double> verify_halving(const CHLBody& chl, double sigma);

// Pointwise margins of g^2 - (9/8) f^2 >= L^2/4 on a grid of [-sqrt3, sqrt3];
// returns (min margin, argmin tau). Also checks the supporting inequality
// sin^2(t/2) + (1/9) sin^4(t/2)/cos^2(t/2) <= (t/2)^2 on (0, pi/2) and
// throws if it ever fails.
std::pair<double, double> check_fg_inequality(double L, const std::vector<double>& taus);

// I = int_0^{pi/3} (cos t / t)(1/t - 1/tan t) dt; the integrand tends to 1/3
// (series cos t (1/3 + t^2/45 + 2 t^4/945)).
double remark_I_constant();

// Closed-form area of the rounded-triangle CHL body via the I constant:
// L^2 (9/pi - 2 sqrt3 (3/(2 pi) + I)^2).
double rounded_triangle_area_constant();

}  // namespace fencekit
