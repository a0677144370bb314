#pragma once

#include <array>

#include "fencekit/arc_solver.hpp"
#include "fencekit/chord_solver.hpp"
#include "fencekit/geometry.hpp"

namespace fencekit {

/// The Auerbach triangle in canonical pose: halving chords of length 1,
/// boundary = three congruent curved arcs alternating with three straight
/// segments shared with the circumscribed equilateral triangle.
struct AuerbachTriangle {
    ConvexBody body;
    double halving_length = 1.0;
    double area_analytic = 0.0;

    // parameter intervals [lo, hi) of the three flat boundary pieces
    std::array<std::pair<double, double>, 3> flat_ranges;

    bool on_flat_part(double s, double slack = 0.0) const;
};

// closed form (sqrt3/8)(8 ln 3 - ln^2 3 - 4)
double auerbach_area_analytic();

// Canonical curved piece: x(t) = tanh(2t) - t, y(t) = sech(2t) for
// t in [-(ln 3)/4, (ln 3)/4], plus its two rotations by 2 pi/3 about the
// barycenter of the equilateral triangle T bounded by the terminal tangents
// and the x-axis; the flat parts are sampled at the same linear density.
AuerbachTriangle build_auerbach(int samples_per_arc = 4096);

struct ZindlerDeviation {
    double max_length_dev = 0.0;   // of halving chords from halving_length
    double max_perimeter_dev = 0.0;  // of the boundary split from 1/2
};

// Sweep over n_chords halving directions.
ZindlerDeviation verify_zindler(const AuerbachTriangle& tri, int n_chords);
ZindlerDeviation verify_zindler_body(const ConvexBody& body, double expected_length, int n_chords);

struct AuerbachConstants {
    double G = 0.0;
    double C = 0.0;
    QuotientReport g_report;
    QuotientReport c_report;
};

// G via the chord solver, C via the arc solver; asserts that the C witness is
// a genuinely curved arc joining two flat boundary parts.
AuerbachConstants auerbach_constants(const AuerbachTriangle& tri);

}  // namespace fencekit
