#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fencekit/geometry.hpp"

namespace fencekit {

/// Value of a fencing quotient together with the witness cut and the
/// optimality-condition residuals of the respective structure theorem.
struct QuotientReport {
    double value = 0.0;
    std::variant<Chord, CircularArc> witness;
    double witness_area_fraction = 0.5;  // in (0, 1/2]
    std::vector<std::pair<std::string, double>> residuals;
    // set when the two candidate families agree within 1e-6 (a tie the
    // structure theorems allow; both route values are in residuals)
    bool family_tie_warning = false;
};

struct HalvingChord {
    Chord chord;
    double s_a = 0.0;   // boundary parameter of chord.a
    double s_b = 0.0;   // boundary parameter of chord.b
    double sigma = 0.0; // direction angle: chord direction is (-sin s, cos s)
    double length() const { return chord.length(); }
};

// The unique area-halving chord with direction (-sin sigma, cos sigma),
// found by monotone bisection on the line offset. The part left of a->b
// equals the part with <x, n> <= c, n = (cos sigma, sin sigma).
HalvingChord halving_chord_in_direction(const ConvexBody& body, double sigma);

// Global minimizer of halving-chord length over sigma in [0, pi):
// 720-sample grid, golden-section refinement, ties to the smallest sigma.
HalvingChord shortest_halving_chord(const ConvexBody& body, int grid = 720);

// Residuals of the optimal-chord conditions: r1 = isosceles defect
// (difference of the line angles the chord makes with the boundary tangents
// at its terminals), r2 = worst deviation of a terminal from orthogonality.
std::vector<std::pair<std::string, double>> chord_optimality_residuals(const ConvexBody& body,
                                                                       const Chord& chord);

// Relaxed half-plane quotient: minimum of Per(F cap K; K)^2 / |F cap K|
// over halving chords and over isosceles corner caps with both sides on the
// boundary (the only minimizing families).
QuotientReport relaxed_G(const ConvexBody& body, int grid = 720);

// sharp bound 16/(sqrt3 (8 ln3 - ln^2 3 - 4)), attained by the Auerbach triangle
double auerbach_G_constant();

bool verify_chord_bound(const ConvexBody& body, double tol = 5e-3);

}  // namespace fencekit
