#pragma once

#include <optional>

#include "fencekit/chord_solver.hpp"
#include "fencekit/geometry.hpp"

namespace fencekit {

/// A solved point of the halving-arc family over boundary endpoint pairs.
struct ArcFamilyPoint {
    double s1 = 0.0;
    double s2 = 0.0;
    CircularArc arc;
    double length = 0.0;
};

struct ArcSearchOptions {
    int grid_s1 = 256;
    int grid_s2 = 128;           // over the offset half (0, 1/2]
    double min_separation = 1e-3;  // of the boundary length
    double inside_tol_rel = 1e-6;  // of the boundary length
    int refine_seeds = 6;
    int refine_iters = 300;
};

// The unique opening angle in (-pi, pi) for which the arc between the two
// boundary points halves the area (the bisected-area difference is strictly
// monotone in the opening). Returns nullopt when no such opening exists in
// the bracket or the solved arc leaves the body.
std::optional<CircularArc> bisecting_arc_between(const ConvexBody& body, double s1, double s2,
                                                 double inside_tol_rel = 1e-6);

ArcFamilyPoint shortest_halving_arc(const ConvexBody& body, ArcSearchOptions opts = {});

// Relaxed quotient: minimum of Per^2/|G| over area-halving arcs and over
// circular sectors with vertex at a body corner and both sides on the
// boundary. A corner sector's quotient equals twice the interior angle
// regardless of its radius, so the sector family infimum per corner is exact.
QuotientReport relaxed_C(const ConvexBody& body, ArcSearchOptions opts = {});

// Orthogonality defect at each terminal plus the excess of |opening| over
// sqrt(3).
std::vector<std::pair<std::string, double>> arc_optimality_residuals(const ConvexBody& body,
                                                                     const CircularArc& arc);

bool verify_arc_bound(const ConvexBody& body, double tol = 5e-3);

struct CrossingResult {
    int count = 0;
    bool coincide = false;
};

// Number of transversal interior intersection points of two arcs, computed
// from the supporting circles/lines. Identical overlapping arcs are reported
// as coinciding.
CrossingResult crossing_count(const CircularArc& a, const CircularArc& b);

}  // namespace fencekit
