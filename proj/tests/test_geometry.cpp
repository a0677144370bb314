#include <doctest.h>

#include <cmath>

#include "fencekit/bodies.hpp"
#include "fencekit/geometry.hpp"

using namespace fencekit;

namespace {

ConvexBody unit_square() {
    return ConvexBody({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

ConvexBody equilateral(double side = 1.0) {
    return ConvexBody({{0, 0}, {side, 0}, {side / 2, side * std::sqrt(3.0) / 2}});
}

}  // namespace

TEST_CASE("area: unit cases and dense n-gon") {
    CHECK(unit_square().area() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(ConvexBody({{0, 0}, {1, 0}, {0, 1}}).area() == doctest::Approx(0.5).epsilon(1e-14));
    // analytic n-gon area (n/2) sin(2 pi/n)
    ConvexBody ngon = regular_ngon(4096, 1.0);
    double analytic = 4096.0 / 2.0 * std::sin(2.0 * M_PI / 4096.0);
    CHECK(ngon.area() == doctest::Approx(analytic).epsilon(1e-13));
    CHECK(std::abs(ngon.area() - M_PI) < 1e-5);
}

TEST_CASE("constructor rejects degenerate input") {
    CHECK_THROWS(ConvexBody({{0, 0}, {1, 0}}));
    CHECK_THROWS(ConvexBody({{0, 0}, {0, 1}, {1, 0}}));             // clockwise
    CHECK_THROWS(ConvexBody({{0, 0}, {1, 0}, {1, 0}, {0, 1}}));     // repeated vertex
    CHECK_THROWS(ConvexBody({{0, 0}, {1, 0}, {1, 1}, {0.9, 0.2}})); // reflex
}

TEST_CASE("width: square, equilateral triangle, disc") {
    CHECK(unit_square().width() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(equilateral().width() == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-12));
    CHECK(std::abs(regular_ngon(4096, 1.0).width() - 2.0) < 1e-5);
}

TEST_CASE("width <= diameter on random bodies") {
    Rng rng(7);
    for (int i = 0; i < 30; ++i) {
        ConvexBody b = random_valtr(32, rng);
        CHECK(b.width() <= b.diameter() + 1e-12);
    }
}

TEST_CASE("clip_halfplane: mid-line, miss, half disc") {
    ConvexBody sq = unit_square();
    auto r = sq.clip_halfplane({0.5, 0.5}, {1, 0});
    REQUIRE(r.body.has_value());
    REQUIRE(r.chord.has_value());
    CHECK(r.body->area() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r.chord->length() == doctest::Approx(1.0).epsilon(1e-12));

    auto miss = sq.clip_halfplane({5.0, 0.0}, {-1, 0});
    CHECK(!miss.body.has_value());
    CHECK(!miss.chord.has_value());

    ConvexBody disc = regular_ngon(4096, 1.0);
    auto half = disc.clip_halfplane({0, 0}, {1, 0});
    REQUIRE(half.body.has_value());
    CHECK(std::abs(half.body->area() - M_PI / 2) < 1e-5);
}

TEST_CASE("clip additivity and monotonicity on random bodies") {
    Rng rng(11);
    for (int i = 0; i < 25; ++i) {
        ConvexBody b = random_valtr(24, rng);
        double phi = rng.uniform(0.0, 2 * M_PI);
        Vec2 n{std::cos(phi), std::sin(phi)};
        Point2 p{rng.uniform(-0.2, 0.2), rng.uniform(-0.2, 0.2)};
        auto lo = b.clip_halfplane(p, n);
        auto hi = b.clip_halfplane(p, {-n.x, -n.y});
        double a1 = lo.body ? lo.body->area() : 0.0;
        double a2 = hi.body ? hi.body->area() : 0.0;
        CHECK(a1 + a2 == doctest::Approx(b.area()).epsilon(1e-10));
        // translating the line along its normal grows the kept side
        auto grown = b.clip_halfplane(p + n * 0.05, n);
        double a3 = grown.body ? grown.body->area() : 0.0;
        CHECK(a3 >= a1 - 1e-12);
    }
}

TEST_CASE("boundary_point on the unit square") {
    ConvexBody sq = unit_square();
    auto [p0, t0] = sq.boundary_point(0.0);
    CHECK(p0.x == doctest::Approx(0.0));
    CHECK(p0.y == doctest::Approx(0.0));
    CHECK(t0.x == doctest::Approx(1.0));
    CHECK(t0.y == doctest::Approx(0.0));
    auto [p1, t1] = sq.boundary_point(0.25);
    CHECK(p1.x == doctest::Approx(1.0));
    CHECK(p1.y == doctest::Approx(0.0));
    CHECK(t1.x == doctest::Approx(0.0));
    CHECK(t1.y == doctest::Approx(1.0));
    auto [p2, t2] = sq.boundary_point(0.5);
    CHECK(p2.x == doctest::Approx(1.0));
    CHECK(p2.y == doctest::Approx(1.0));
    CHECK(t2.x == doctest::Approx(-1.0));
    CHECK(t2.y == doctest::Approx(0.0));
}

TEST_CASE("boundary_point is 1-Lipschitz in rescaled arc length") {
    Rng rng(3);
    ConvexBody b = random_valtr(40, rng);
    double L = b.boundary_length();
    for (int i = 0; i < 200; ++i) {
        double s1 = rng.uniform(), s2 = rng.uniform();
        double ds = std::min(wrap(s2 - s1, 1.0), wrap(s1 - s2, 1.0)) * L;
        double dp = (b.point_at(s1) - b.point_at(s2)).norm();
        CHECK(dp <= ds + 1e-9);
    }
}

TEST_CASE("region_area complements sum to the area") {
    Rng rng(5);
    ConvexBody b = random_valtr(32, rng);
    for (int i = 0; i < 100; ++i) {
        double s1 = rng.uniform(), s2 = rng.uniform();
        double a = b.region_area(s1, s2) + b.region_area(s2, s1);
        CHECK(a == doctest::Approx(b.area()).epsilon(1e-10));
    }
}

TEST_CASE("split_by_arc: straight mid-chord of the unit square") {
    ConvexBody sq = unit_square();
    // chord from (0.5, 0) up to (0.5, 1): params 0.125 and 0.625
    SplitResult r = sq.split_by_arc(0.125, 0.625, 0.0);
    CHECK(r.area_left == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r.area_right == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r.cut_length == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.perim_left == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.perim_right == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("split_by_arc: quarter-circle sector at the square corner") {
    ConvexBody sq = unit_square();
    double r = std::sqrt(2.0 / M_PI);  // sector area (pi/4) r^2 = 1/2
    // arc from (r,0) to (0,r) centered at the origin corner
    CircularArc arc{{r, 0.0}, {0.0, r}, M_PI / 2};
    SplitResult s = sq.split_by_arc(arc);
    CHECK(s.area_left == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(s.area_right == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(s.cut_length == doctest::Approx(r * M_PI / 2).epsilon(1e-12));
}

TEST_CASE("split_by_arc converges to the chord split as opening -> 0") {
    Rng rng(17);
    ConvexBody b = random_valtr(48, rng);
    for (int i = 0; i < 20; ++i) {
        double s1 = rng.uniform();
        double s2 = wrap(s1 + rng.uniform(0.2, 0.5), 1.0);
        SplitResult chord = b.split_by_arc(s1, s2, 0.0);
        SplitResult tiny = b.split_by_arc(s1, s2, 1e-8);
        CHECK(std::abs(chord.area_left - tiny.area_left) < 1e-8 * b.area());
        CHECK(chord.area_left + chord.area_right == doctest::Approx(b.area()).epsilon(1e-12));
    }
}

TEST_CASE("split_by_arc rejects an arc that exits the body") {
    ConvexBody sq = unit_square();
    // positive opening bulges right of a->b, i.e. below the bottom edge
    CircularArc bad{{0.2, 0.0}, {0.8, 0.0}, 3.0};
    CHECK_THROWS(sq.split_by_arc(bad));
}

TEST_CASE("internal disc condition") {
    ConvexBody disc = regular_ngon(4096, 1.0);
    CHECK(disc.internal_disc_check(disc.point_at(0.0), 0.99));
    CHECK(disc.internal_disc_check(disc.point_at(0.37), 0.99));
    CHECK_FALSE(disc.internal_disc_check(disc.point_at(0.0), 1.01));

    ConvexBody sq = unit_square();
    CHECK_FALSE(sq.internal_disc_check({0.0, 0.0}, 0.1));  // corner
    CHECK(sq.internal_disc_check({0.5, 0.0}, 0.4));        // edge midpoint
    CHECK_FALSE(sq.internal_disc_check({0.5, 0.0}, 0.6));
    CHECK_THROWS(sq.internal_disc_check({0.5, 0.5}, 0.1));  // off boundary
}

TEST_CASE("circular arc primitives") {
    CircularArc arc{{0, 0}, {0, 1}, M_PI / 2};
    CHECK(arc.radius() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(arc.center().x == doctest::Approx(-0.5));
    CHECK(arc.center().y == doctest::Approx(0.5));
    // bulges to the right of a->b (positive x here)
    CHECK(arc.point_at(0.5).x > 0.0);
    CHECK((arc.point_at(0.0) - arc.a).norm() < 1e-14);
    CHECK((arc.point_at(1.0) - arc.b).norm() < 1e-14);
    CHECK(arc.length() == doctest::Approx(arc.radius() * M_PI / 2));
    // segment area: quarter disc minus triangle
    double r = arc.radius();
    CHECK(arc.segment_area() == doctest::Approx(r * r * (M_PI / 2 - 1.0) / 2));

    CircularArc seg{{0, 0}, {3, 4}, 0.0};
    CHECK(seg.length() == doctest::Approx(5.0));
    CHECK(seg.segment_area() == 0.0);
}
