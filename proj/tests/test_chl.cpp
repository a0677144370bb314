#include <doctest.h>

#include <cmath>

#include "fencekit/arc_solver.hpp"
#include "fencekit/chl.hpp"

using namespace fencekit;

namespace {

// test-local quadrature oracle: plain composite Simpson with a million
// panels, no shared code with the library integrators
double simpson_oracle(double (*fn)(double), double a, double b, int panels = 1000000) {
    double h = (b - a) / panels;
    double s = fn(a) + fn(b);
    for (int i = 1; i < panels; ++i) s += (i % 2 ? 4.0 : 2.0) * fn(a + i * h);
    return s * h / 3.0;
}

double f_integrand_raw(double t) {
    if (t < 1e-6) return 1.0 / 3.0;  // limit value, derived independently below
    double tn = std::tan(t / 2.0);
    return (1.0 - (2.0 / t) * tn + tn * tn) / (t * std::sin(t / 2.0));
}

double I_integrand_raw(double t) {
    if (t < 1e-6) return 1.0 / 3.0;
    return (std::cos(t) / t) * (1.0 / t - 1.0 / std::tan(t));
}

}  // namespace

TEST_CASE("g: value at 0, direct substitution, even symmetry") {
    CHECK(g_of(0.0, 2.0) == doctest::Approx(1.0));
    CHECK(g_of(M_PI / 2, 1.0) == doctest::Approx(2.0 / M_PI));  // (2L/pi) tan(pi/4)
    for (double t : {0.3, 1.0, 1.6}) CHECK(g_of(-t, 1.0) == doctest::Approx(g_of(t, 1.0)));
    CHECK_THROWS(g_of(M_PI, 1.0));
    // series branch continuity at the cut
    CHECK(g_of(0.99e-4, 1.0) == doctest::Approx(g_of(1.01e-4, 1.0)).epsilon(1e-14));
}

TEST_CASE("f: zero at zero, odd symmetry, frozen regression value") {
    CHECK(f_of(0.0, 1.0) == 0.0);
    for (double t : {0.4, 1.0, 1.7}) CHECK(f_of(-t, 1.0) == doctest::Approx(-f_of(t, 1.0)));
    // independent oracle (10^6-panel Simpson) and its frozen value
    double oracle = 0.5 * simpson_oracle(f_integrand_raw, 0.0, 1.0);
    CHECK(oracle == doctest::Approx(0.18157221320482270).epsilon(1e-10));
    CHECK(f_of(1.0, 1.0) == doctest::Approx(0.18157221320482270).epsilon(1e-10));
    CHECK(f_of(1.0, 2.5) == doctest::Approx(2.5 * 0.18157221320482270).epsilon(1e-10));
    CHECK_THROWS(f_of(1.8, 1.0));
}

TEST_CASE("f integrand limit matches M = L theta'/6 at theta = 0") {
    // derivative branch: f'(0) must equal L/6
    CHECK(f_prime(0.0, 1.0) == doctest::Approx(1.0 / 6.0));
    CHECK(f_prime(1e-9, 3.0) == doctest::Approx(0.5));
    // series branch agrees with the raw formula just above the cut
    CHECK(f_prime(2e-4, 1.0) == doctest::Approx(0.5 * f_integrand_raw(2e-4)).epsilon(1e-12));
}

TEST_CASE("M: disc profile vanishes; zero crossings use the L theta'/6 branch") {
    ThetaProfile disc = disc_profile(1.0);
    for (double s : {-2.0, 0.0, 1.5}) CHECK(M_of(disc, s) == 0.0);

    ThetaProfile rt = rounded_triangle_profile(1.0);
    // theta crosses zero at sigma = pi/3 with slope -2: M = L (-2)/6
    CHECK(M_of(rt, M_PI / 3) == doctest::Approx(-1.0 / 3.0).epsilon(1e-6));
    CHECK(M_of(rt, 2 * M_PI / 3) == doctest::Approx(2.0 / 6.0).epsilon(1e-6));

    // finite-difference oracle away from kinks and zeros
    double h = 1e-6;
    double sig = 0.41;
    double oracle = (f_of(rt.theta(sig + h), 1.0) - f_of(rt.theta(sig - h), 1.0)) / (2 * h);
    CHECK(M_of(rt, sig) == doctest::Approx(oracle).epsilon(1e-4));

    // negated profile flips the sign pattern (g is even)
    ThetaProfile neg = rt;
    for (double& v : neg.samples) v = -v;
    for (double s : {0.2, 1.1, 2.0})
        CHECK(M_of(neg, s) == doctest::Approx(-M_of(rt, s)).epsilon(1e-9));
}

TEST_CASE("rounded triangle profile: formula values and antisymmetry") {
    ThetaProfile p = rounded_triangle_profile(1.0);
    CHECK(p.lipschitz_bound == 2.0);
    CHECK(p.theta(0.0) == doctest::Approx(0.0));
    CHECK(p.theta(M_PI / 6) == doctest::Approx(M_PI / 3));
    // plugging sigma = pi/2 into the formula gives -pi/3
    CHECK(p.theta(M_PI / 2) == doctest::Approx(-M_PI / 3));
    CHECK(p.theta(5 * M_PI / 6) == doctest::Approx(M_PI / 3));
    std::size_t n = p.grid();
    for (std::size_t k = 0; k < n; ++k)
        CHECK(p.samples[(k + n / 2) % n] == doctest::Approx(-p.samples[k]).epsilon(1e-14));
    CHECK_NOTHROW(p.validate());
}

TEST_CASE("profile validation rejects bad input") {
    ThetaProfile p = rounded_triangle_profile(1.0);
    p.samples[7] += 0.1;  // breaks antisymmetry
    CHECK_THROWS(p.validate());

    ThetaProfile q = rounded_triangle_profile(1.0);
    q.samples[q.grid() / 2] = 1.9;  // exceeds sqrt(3), also breaks slope
    CHECK_THROWS(q.validate());
}

TEST_CASE("build: disc profile gives the circle of diameter L") {
    CHLBody chl = build_chl(disc_profile(1.0));
    CHECK(chl.body.area() == doctest::Approx(M_PI / 4).epsilon(1e-6));
    CHECK(chl.area_gauss == doctest::Approx(M_PI / 4).epsilon(1e-12));
    CHECK(chl.area_fourier == doctest::Approx(M_PI / 4).epsilon(1e-12));
    // boundary is a circle of radius 1/2 around m(0) = origin
    for (std::size_t k = 0; k < chl.body.size(); k += 97)
        CHECK(chl.body.vertices()[k].norm() == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("build: rounded triangle matches the closed-form area three ways") {
    CHLBody chl = build_chl(rounded_triangle_profile(1.0));
    double ref = rounded_triangle_area_constant();
    CHECK(ref == doctest::Approx(0.79814400051997).epsilon(1e-10));
    CHECK(std::abs(chl.body.area() - 0.7981) < 1e-3);
    CHECK(std::abs(chl.area_gauss - ref) < 1e-4);
    CHECK(std::abs(chl.area_fourier - ref) < 1e-4);
    // pairwise agreement: the two quadrature routes tightly, shoelace at the
    // polygonization level
    CHECK(std::abs(chl.area_gauss - chl.area_fourier) / ref < 1e-6);
    CHECK(std::abs(chl.area_gauss - chl.body.area()) / ref < 1e-5);
}

TEST_CASE("build rejects profiles that do not close up") {
    // theta = 0.3 cos(sigma) is antisymmetric but its f-image has harmonic-1
    // content, so the tangent-intersection curve cannot be periodic
    ThetaProfile p;
    p.L = 1.0;
    p.lipschitz_bound = 0.5;
    std::size_t n = 512;
    p.samples.resize(n);
    for (std::size_t k = 0; k < n; ++k) p.samples[k] = 0.3 * std::cos(-M_PI + 2.0 * M_PI * k / n);
    CHECK_NOTHROW(p.validate());
    CHECK_THROWS(build_chl(p));
}

TEST_CASE("orthogonality closure of the tangent-intersection curve") {
    for (const ThetaProfile& p : {disc_profile(1.0), rounded_triangle_profile(1.0)}) {
        // int_0^pi M cos and M sin vanish: closure of m over a half period
        std::size_t n = p.grid();
        double h = 2 * M_PI / n;
        double cx = 0, sx = 0;
        for (std::size_t k = n / 2; k < n; ++k) {
            double t0 = p.samples[k], t1 = p.samples[(k + 1) % n];
            double slope = (t1 - t0) / h;
            double s0 = -M_PI + k * h, sm = s0 + h / 2, s1 = s0 + h;
            double tm = 0.5 * (t0 + t1);
            cx += (f_prime(t0, p.L) * slope * std::cos(s0) +
                   4 * f_prime(tm, p.L) * slope * std::cos(sm) +
                   f_prime(t1, p.L) * slope * std::cos(s1)) * h / 6;
            sx += (f_prime(t0, p.L) * slope * std::sin(s0) +
                   4 * f_prime(tm, p.L) * slope * std::sin(sm) +
                   f_prime(t1, p.L) * slope * std::sin(s1)) * h / 6;
        }
        CHECK(std::abs(cx) < 1e-8);
        CHECK(std::abs(sx) < 1e-8);
    }
}

TEST_CASE("verify_halving splits every family arc in half") {
    CHLBody disc = build_chl(disc_profile(1.0, 1024));
    auto [a1, a2] = verify_halving(disc, -M_PI / 2);
    CHECK(a1 == doctest::Approx(disc.body.area() / 2).epsilon(1e-6));
    CHECK(a2 == doctest::Approx(disc.body.area() / 2).epsilon(1e-6));

    CHLBody rt = build_chl(rounded_triangle_profile(1.0));
    for (double sig = -M_PI; sig < 0; sig += M_PI / 37) {
        auto [b1, b2] = verify_halving(rt, sig);
        CHECK(std::abs(b1 - b2) / rt.body.area() < 1e-4);
    }
    CHECK_THROWS(verify_halving(rt, 0.5));
}

TEST_CASE("halving arcs measured by the arc solver have length L") {
    CHLBody rt = build_chl(rounded_triangle_profile(1.0, 2040));
    std::size_t n = rt.profile.grid();
    for (std::size_t k = 0; k < n / 2; k += n / 16) {
        CircularArc fam = rt.family_arc(k);
        double s1 = rt.body.locate_boundary_param(fam.a);
        double s2 = rt.body.locate_boundary_param(fam.b);
        auto solved = bisecting_arc_between(rt.body, s1, s2);
        REQUIRE(solved.has_value());
        CHECK(std::abs(solved->length() - 1.0) < 1e-3);
    }
}

TEST_CASE("boundary tangent is orthogonal to the arc direction e_-") {
    CHLBody rt = build_chl(rounded_triangle_profile(1.0));
    std::size_t n = rt.profile.grid();
    const auto& v = rt.body.vertices();
    for (std::size_t k = 5; k < n; k += n / 23) {
        double sig = rt.profile.sigma_at(k);
        double th = rt.profile.samples[k];
        Vec2 em{std::cos(sig - th / 2), std::sin(sig - th / 2)};
        Vec2 tangent = (v[(k + 1) % n] - v[(k + n - 1) % n]).normalized();
        CHECK(std::abs(tangent.cross(em)) < 1e-3);  // tangent parallel to e_-
    }
}

TEST_CASE("built bodies satisfy the uniform internal disc radius") {
    CHLBody rt = build_chl(rounded_triangle_profile(1.0));
    double R = 1.0 / (8.0 * (M_PI * std::sqrt(3.0) / 12.0 + 1.0));
    for (double s = 0.05; s < 1.0; s += 0.13)
        CHECK(rt.body.internal_disc_check(rt.body.point_at(s), R));
}

TEST_CASE("Fourier spectrum: harmonics 0, 1 and even all vanish") {
    ThetaProfile p = rounded_triangle_profile(1.0);
    auto coeffs = chl_fourier_coefficients(p, 16);
    auto mag = [&](int k) { return std::hypot(coeffs[k].first, coeffs[k].second); };
    CHECK(mag(0) < 1e-6);
    CHECK(mag(1) < 1e-6);
    for (int k = 2; k <= 16; k += 2) CHECK(mag(k) < 1e-6);
    CHECK(mag(3) > 0.1);  // the profile is genuinely three-fold
}

TEST_CASE("area_fourier truncation error decreases with the harmonic count") {
    ThetaProfile p = rounded_triangle_profile(1.0, 1020);
    double ref = chl_area_fourier(p, 512);
    double prev_err = std::numeric_limits<double>::max();
    for (int nh : {2, 8, 32, 128}) {
        double err = std::abs(chl_area_fourier(p, nh) - ref);
        CHECK(err <= prev_err + 1e-15);
        prev_err = err;
    }
}

TEST_CASE("fg inequality margins") {
    std::vector<double> taus;
    for (int i = -500; i <= 500; ++i) taus.push_back(std::sqrt(3.0) * i / 500.0);
    auto [min_margin, argmin] = check_fg_inequality(1.0, taus);
    CHECK(min_margin >= -1e-12);
    CHECK(std::abs(argmin) < 1e-9);  // equality only at tau = 0
    // away from zero the margin is strictly positive
    auto [m1, a1] = check_fg_inequality(1.0, {1.0});
    CHECK(m1 > 1e-3);
    auto [m0, a0] = check_fg_inequality(1.0, {0.0});
    CHECK(std::abs(m0) < 1e-15);
}

TEST_CASE("I constant and the closed-form rounded-triangle area") {
    double I = remark_I_constant();
    CHECK(std::abs(I - 0.2949) < 1e-4);
    // independent oracle and frozen high-precision value
    double oracle = simpson_oracle(I_integrand_raw, 0.0, M_PI / 3);
    CHECK(oracle == doctest::Approx(0.29492692129946242).epsilon(1e-10));
    CHECK(I == doctest::Approx(0.29492692129946242).epsilon(1e-10));
    CHECK(std::abs(rounded_triangle_area_constant() - 0.7981) < 1e-4);
    // the integrand limit branch is finite near zero
    CHECK(std::isfinite(I_integrand_raw(1e-8)));
}
