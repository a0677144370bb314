#include <doctest.h>

#include <cmath>

#include "fencekit/bodies.hpp"
#include "fencekit/chord_solver.hpp"

using namespace fencekit;

namespace {

ConvexBody unit_square() { return ConvexBody({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

ConvexBody equilateral(double side = 1.0) {
    return ConvexBody({{0, 0}, {side, 0}, {side / 2, side * std::sqrt(3.0) / 2}});
}

// independent oracle: dense direction scan, each chord solved by the same
// area bisection but with no refinement machinery
double brute_force_shortest(const ConvexBody& body, int dirs) {
    double best = std::numeric_limits<double>::max();
    for (int k = 0; k < dirs; ++k)
        best = std::min(best, halving_chord_in_direction(body, M_PI * k / dirs).length());
    return best;
}

}  // namespace

TEST_CASE("halving chord in a fixed direction") {
    ConvexBody disc = regular_ngon(4096, 1.0);
    for (double sig : {0.0, 0.7, 2.0}) {
        HalvingChord hc = halving_chord_in_direction(disc, sig);
        CHECK(std::abs(hc.length() - 2.0) < 1e-5);  // central symmetry
        // splits the area in half
        double left = disc.area() - disc.region_area(hc.s_a, hc.s_b);
        CHECK(left == doctest::Approx(disc.area() / 2).epsilon(1e-9));
    }

    HalvingChord sq = halving_chord_in_direction(unit_square(), M_PI / 2);
    CHECK(sq.length() == doctest::Approx(1.0).epsilon(1e-10));

    // chord parallel to the base: similar-triangle scaling sqrt(1/2)
    HalvingChord tri = halving_chord_in_direction(equilateral(), 0.0);
    CHECK(tri.chord.direction().y == doctest::Approx(1.0).epsilon(1e-9));
    HalvingChord tri_base = halving_chord_in_direction(equilateral(), M_PI / 2);
    CHECK(tri_base.length() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-10));
}

TEST_CASE("sigma and sigma + pi give the same chord up to swap") {
    ConvexBody b = random_valtr(40, std::uint64_t{77});
    for (double sig : {0.3, 1.2, 2.9}) {
        HalvingChord h1 = halving_chord_in_direction(b, sig);
        HalvingChord h2 = halving_chord_in_direction(b, sig + M_PI);
        CHECK((h1.chord.a - h2.chord.b).norm() < 1e-7 * b.boundary_length());
        CHECK((h1.chord.b - h2.chord.a).norm() < 1e-7 * b.boundary_length());
    }
}

TEST_CASE("shortest halving chord: disc, square, triangle") {
    CHECK(std::abs(shortest_halving_chord(regular_ngon(4096, 1.0)).length() - 2.0) < 1e-4);

    ConvexBody sq = unit_square();
    double oracle = brute_force_shortest(sq, 5000);
    CHECK(shortest_halving_chord(sq).length() == doctest::Approx(oracle).epsilon(1e-9));
    CHECK(shortest_halving_chord(sq).length() == doctest::Approx(1.0).epsilon(1e-9));

    ConvexBody tri = equilateral();
    CHECK(shortest_halving_chord(tri).length() ==
          doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("shortest halving chord <= width and <= 3^(1/4) sqrt(area)") {
    Rng rng(31);
    for (int i = 0; i < 25; ++i) {
        ConvexBody b = random_valtr(28, rng);
        double len = shortest_halving_chord(b).length();
        CHECK(len <= b.width() + 1e-9);
        CHECK(len <= std::pow(3.0, 0.25) * std::sqrt(b.area()) + 1e-9);
    }
}

TEST_CASE("chord optimality residuals") {
    ConvexBody disc = regular_ngon(2048, 1.0);
    HalvingChord d = halving_chord_in_direction(disc, 1.0);
    auto res = chord_optimality_residuals(disc, d.chord);
    CHECK(res[1].first == "orthogonality");
    CHECK(res[1].second < 2e-3);  // diameter is orthogonal to the circle

    HalvingChord m = halving_chord_in_direction(unit_square(), M_PI / 2);
    auto res2 = chord_optimality_residuals(unit_square(), m.chord);
    CHECK(res2[1].second < 1e-9);

    CHECK_THROWS(chord_optimality_residuals(unit_square(), Chord{{0.4, 0.4}, {0.6, 0.6}}));
}

TEST_CASE("relaxed G: disc, square") {
    ConvexBody disc = regular_ngon(4096, 1.0);
    QuotientReport g = relaxed_G(disc);
    CHECK(g.value == doctest::Approx(8.0 / M_PI).epsilon(1e-3));
    CHECK(g.witness_area_fraction == doctest::Approx(0.5));

    QuotientReport gs = relaxed_G(unit_square());
    CHECK(gs.value == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("relaxed G: equilateral triangle ties chord and cap families") {
    QuotientReport g = relaxed_G(equilateral());
    CHECK(g.value == doctest::Approx(4.0 / std::sqrt(3.0)).epsilon(1e-9));
    CHECK(g.family_tie_warning);
}

TEST_CASE("relaxed G is invariant under similarity transforms") {
    ConvexBody b = normalized_to_area(random_valtr(36, std::uint64_t{5}), 1.0);
    double v0 = relaxed_G(b).value;
    double v1 = relaxed_G(scaled(b, 3.7)).value;
    double v2 = relaxed_G(rotated(translated(b, {2.5, -1.0}), 0.9)).value;
    CHECK(v1 == doctest::Approx(v0).epsilon(1e-7));
    CHECK(v2 == doctest::Approx(v0).epsilon(1e-7));
}

TEST_CASE("chord bound holds on sample bodies") {
    CHECK(verify_chord_bound(unit_square()));
    CHECK(verify_chord_bound(regular_ngon(1024, 1.0)));
    CHECK(auerbach_G_constant() == doctest::Approx(2.5789).epsilon(1e-4));
}
