#include "fencekit/centrosym.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fencekit {

CentroSymBody::CentroSymBody(std::vector<Point2> vertices, Point2 center)
    : verts_(std::move(vertices)), center_(center) {
    if (verts_.size() < 4) throw std::invalid_argument("CentroSymBody: need at least 4 vertices");
    area_ = polygon_area(verts_);
    if (area_ <= 0) throw std::invalid_argument("CentroSymBody: vertices must be counterclockwise");
    double perim = polygon_perimeter(verts_);
    double tol = 1e-9 * perim;
    // symmetry: the reflection of every vertex must land on the boundary
    for (const Point2& v : verts_) {
        Vec2 r = v - center_;
        double d = r.norm();
        if (d < tol) continue;
        double opposite = ray_distance(std::atan2(-r.y, -r.x));
        if (std::abs(opposite - d) > 64.0 * tol)
            throw std::invalid_argument("CentroSymBody: input is not centrosymmetric");
    }
}

CentroSymBody::CentroSymBody(const ConvexBody& body)
    : CentroSymBody(body.vertices(), centroid(body)) {}

double CentroSymBody::ray_distance(double phi) const {
    Vec2 d{std::cos(phi), std::sin(phi)};
    std::size_t n = verts_.size();
    double best = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 a = verts_[i] - center_;
        Vec2 e = verts_[(i + 1) % n] - center_ - a;
        double den = d.cross(e);
        if (std::abs(den) < 1e-300) continue;
        // solve t d = a + u e
        double t = a.cross(e) / den;
        double u = a.cross(d) / den;
        if (t > 0 && u >= -1e-12 && u <= 1.0 + 1e-12) best = std::max(best, t);
    }
    if (best < 0) throw std::runtime_error("CentroSymBody: center ray misses the boundary");
    return best;
}

double CentroSymBody::center_chord_length(double phi) const {
    return ray_distance(phi) + ray_distance(phi + M_PI);
}

CenterChord shortest_center_chord(const CentroSymBody& body, int grid) {
    double best = std::numeric_limits<double>::max();
    int best_k = 0;
    for (int k = 0; k < grid; ++k) {
        double len = body.center_chord_length(M_PI * k / grid);
        if (len < best) {
            best = len;
            best_k = k;
        }
    }
    double h = M_PI / grid;
    double a = best_k * h - h, b = best_k * h + h;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = body.center_chord_length(c), fd = body.center_chord_length(d);
    while (b - a > 1e-10) {
        if (fc < fd) {
            b = d; d = c; fd = fc;
            c = b - gr * (b - a);
            fc = body.center_chord_length(c);
        } else {
            a = c; c = d; fc = fd;
            d = a + gr * (b - a);
            fd = body.center_chord_length(d);
        }
    }
    CenterChord out;
    out.phi = wrap(0.5 * (a + b), M_PI);
    out.length = body.center_chord_length(out.phi);
    if (best < out.length) {  // guard against a non-unimodal refinement bracket
        out.phi = wrap(best_k * h, M_PI);
        out.length = best;
    }
    Vec2 dir{std::cos(out.phi), std::sin(out.phi)};
    out.chord = Chord{body.center() + dir * body.ray_distance(out.phi),
                      body.center() - dir * body.ray_distance(out.phi + M_PI)};
    return out;
}

double centrosym_bound_margin(const CentroSymBody& body) {
    double bound = 2.0 * std::sqrt(body.area() / M_PI);
    return bound - shortest_center_chord(body).length;
}

bool verify_centrosym_bound(const CentroSymBody& body, double tol) {
    return centrosym_bound_margin(body) >= -tol;
}

CentroSymBody random_centrosym(int n_vertices, Rng& rng) {
    if (n_vertices < 8) n_vertices = 8;
    if (n_vertices % 2 != 0) ++n_vertices;
    int half = n_vertices / 2;
    // radial profile with even harmonics only, clamped away from zero
    std::array<double, 4> ac{}, bc{};
    for (int k = 0; k < 4; ++k) {
        ac[k] = rng.uniform(-0.25, 0.25) / (k + 1);
        bc[k] = rng.uniform(-0.25, 0.25) / (k + 1);
    }
    auto radius = [&](double phi) {
        double r = 1.0;
        for (int k = 0; k < 4; ++k)
            r += ac[k] * std::cos(2.0 * (k + 1) * phi) + bc[k] * std::sin(2.0 * (k + 1) * phi);
        return std::max(r, 0.15);
    };
    std::vector<Point2> v(n_vertices);
    for (int i = 0; i < half; ++i) {
        double phi = M_PI * i / half;
        double r = radius(phi);
        v[i] = {r * std::cos(phi), r * std::sin(phi)};
        v[i + half] = {-v[i].x, -v[i].y};  // exact point symmetry
    }
    return CentroSymBody(std::move(v), Point2{0.0, 0.0});
}

}  // namespace fencekit
