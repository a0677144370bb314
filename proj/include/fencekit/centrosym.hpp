#pragma once

#include <cstdint>
#include <vector>

#include "fencekit/bodies.hpp"
#include "fencekit/geometry.hpp"

namespace fencekit {

/// Centrosymmetric planar set, represented as a simple polygon star-shaped
/// about its center (convex polygons are the common special case). Every
/// chord through the center bisects the area.
class CentroSymBody {
public:
    CentroSymBody(std::vector<Point2> vertices, Point2 center);
    explicit CentroSymBody(const ConvexBody& body);

    const std::vector<Point2>& vertices() const { return verts_; }
    Point2 center() const { return center_; }
    double area() const { return area_; }

    // distance from the center to the boundary along direction angle phi
    double ray_distance(double phi) const;
    // chord through the center at direction phi (by symmetry its two rays
    // are equal; computed from both for robustness)
    double center_chord_length(double phi) const;

private:
    std::vector<Point2> verts_;
    Point2 center_;
    double area_ = 0.0;
};

struct CenterChord {
    Chord chord;
    double phi = 0.0;
    double length = 0.0;
};

// Minimum over a direction grid (default 2048 over [0, pi)) of the chord
// through the center, with golden-section local refinement.
CenterChord shortest_center_chord(const CentroSymBody& body, int grid = 2048);

// Bound 2 sqrt(|K|/pi) on the shortest center chord.
bool verify_centrosym_bound(const CentroSymBody& body, double tol = 1e-6);
double centrosym_bound_margin(const CentroSymBody& body);  // bound - shortest

// Random star-shaped centrosymmetric polygon from a symmetrized radial
// trigonometric profile (even harmonics only). Exact point symmetry by
// construction: v_{i+n/2} = -v_i.
CentroSymBody random_centrosym(int n_vertices, Rng& rng);

}  // namespace fencekit
