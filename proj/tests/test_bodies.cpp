#include <doctest.h>

#include <cmath>

#include "fencekit/bodies.hpp"

using namespace fencekit;

TEST_CASE("valtr polygons are valid convex bodies") {
    Rng rng(42);
    for (int i = 0; i < 50; ++i) {
        ConvexBody b = random_valtr(32, rng);
        CHECK(b.area() > 0);
        CHECK(b.size() >= 3);
    }
}

TEST_CASE("valtr is deterministic under a fixed seed") {
    ConvexBody a = random_valtr(24, std::uint64_t{123});
    ConvexBody b = random_valtr(24, std::uint64_t{123});
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a.vertices()[i].x == b.vertices()[i].x);
        CHECK(a.vertices()[i].y == b.vertices()[i].y);
    }
}

TEST_CASE("normalization and transforms") {
    ConvexBody b = normalized_to_area(random_valtr(20, std::uint64_t{9}), 1.0);
    CHECK(b.area() == doctest::Approx(1.0).epsilon(1e-12));
    ConvexBody r = rotated(b, 1.1, centroid(b));
    CHECK(r.area() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.boundary_length() == doctest::Approx(b.boundary_length()).epsilon(1e-12));
}

TEST_CASE("body JSON round trip and generator forms") {
    ConvexBody sq({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
    ConvexBody back = body_from_json_text(body_to_json_text(sq));
    CHECK(back.area() == doctest::Approx(4.0));

    ConvexBody gen = body_from_json_text(R"({"kind":"regular-ngon","n":256,"radius":2.0})");
    CHECK(gen.area() == doctest::Approx(4.0 * M_PI).epsilon(1e-3));

    ConvexBody v1 = body_from_json_text(R"({"kind":"random-valtr","n":16,"seed":5})");
    ConvexBody v2 = body_from_json_text(R"({"kind":"random-valtr","n":16,"seed":5})");
    CHECK(v1.vertices()[3].x == v2.vertices()[3].x);

    CHECK_THROWS(body_from_json_text(R"({"kind":"moebius"})"));
    CHECK_THROWS(body_from_json_text(R"({"points":[[0,0]]})"));
}
