#pragma once

#include "fencekit/arc_solver.hpp"
#include "fencekit/geometry.hpp"

namespace fencekit {

/// Relative isoperimetric quantities of a convex body next to their values
/// for the disc of equal area.
struct IsoperimetricReport {
    double gamma_half = 0.0;   // sqrt of the relaxed quotient C(K)
    double mu1 = 0.0;          // gamma_1
    double I_upper = 0.0;      // sqrt(2) gamma_half, upper bound on I(K)
    double disc_gamma_half = 0.0;
    double disc_mu1 = 0.0;
    double disc_I = 0.0;       // exact for the disc: sqrt(2) gamma_half(disc)
};

// gamma_alpha(K) = gamma_{1/2}(K) (2/|K|)^(alpha - 1/2) for alpha >= 1/2,
// with gamma_{1/2} = sqrt(C(K)). Throws for alpha < 1/2.
double gamma_alpha(const ConvexBody& body, double alpha, ArcSearchOptions opts = {});

// rescaling of a known gamma_{1/2} value (avoids re-solving)
double gamma_alpha_from_half(double gamma_half, double area, double alpha);

// disc of the same area: gamma_{1/2} = sqrt(8/pi), scaled the same way
double disc_gamma_alpha(double area, double alpha);

struct DiscComparison {
    double value = 0.0;       // gamma_alpha(K)
    double disc_value = 0.0;  // gamma_alpha(K-sharp)
    double margin = 0.0;      // disc_value - value, >= -tol by the sharp bound
};

DiscComparison compare_with_disc(const ConvexBody& body, double alpha, ArcSearchOptions opts = {});

// Upper bound sqrt(2) gamma_{1/2}(K) on the Poincare constant I(K) plus the
// exact disc reference.
IsoperimetricReport poincare_upper(const ConvexBody& body, ArcSearchOptions opts = {});

IsoperimetricReport report_from_gamma_half(double gamma_half, double area);

}  // namespace fencekit
