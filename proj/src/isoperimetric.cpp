#include "fencekit/isoperimetric.hpp"

#include <cmath>
#include <stdexcept>

namespace fencekit {

double gamma_alpha_from_half(double gamma_half, double area, double alpha) {
    if (alpha < 0.5) throw std::invalid_argument("gamma_alpha: alpha must be >= 1/2");
    return gamma_half * std::pow(2.0 / area, alpha - 0.5);
}

double gamma_alpha(const ConvexBody& body, double alpha, ArcSearchOptions opts) {
    double gh = std::sqrt(relaxed_C(body, opts).value);
    return gamma_alpha_from_half(gh, body.area(), alpha);
}

double disc_gamma_alpha(double area, double alpha) {
    return gamma_alpha_from_half(std::sqrt(8.0 / M_PI), area, alpha);
}

DiscComparison compare_with_disc(const ConvexBody& body, double alpha, ArcSearchOptions opts) {
    DiscComparison out;
    out.value = gamma_alpha(body, alpha, opts);
    out.disc_value = disc_gamma_alpha(body.area(), alpha);
    out.margin = out.disc_value - out.value;
    return out;
}

IsoperimetricReport report_from_gamma_half(double gamma_half, double area) {
    IsoperimetricReport rep;
    rep.gamma_half = gamma_half;
    rep.mu1 = gamma_alpha_from_half(gamma_half, area, 1.0);
    rep.I_upper = std::sqrt(2.0) * gamma_half;
    rep.disc_gamma_half = std::sqrt(8.0 / M_PI);
    rep.disc_mu1 = disc_gamma_alpha(area, 1.0);
    rep.disc_I = std::sqrt(2.0) * rep.disc_gamma_half;
    return rep;
}

IsoperimetricReport poincare_upper(const ConvexBody& body, ArcSearchOptions opts) {
    return report_from_gamma_half(std::sqrt(relaxed_C(body, opts).value), body.area());
}

}  // namespace fencekit
