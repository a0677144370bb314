#pragma once

#include <cstdint>
#include <string>

#include "fencekit/geometry.hpp"

namespace fencekit {

// Deterministic RNG with a fixed cross-platform mapping (splitmix64 core);
// std::uniform_real_distribution is implementation-defined, which would break
// byte-identical sweep output.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform() * n) % n; }
    bool coin() { return (next() & 1) != 0; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[index(i)]);
    }

private:
    std::uint64_t state_;
};

ConvexBody regular_ngon(int n, double radius, Point2 center = {0.0, 0.0});

// Valtr's method: uniformly random convex polygon with n vertices in the unit
// square, then recentred on its centroid.
ConvexBody random_valtr(int n, Rng& rng);
ConvexBody random_valtr(int n, std::uint64_t seed);

// Homothety to the requested area about the centroid.
ConvexBody normalized_to_area(const ConvexBody& body, double target_area);

ConvexBody scaled(const ConvexBody& body, double factor, Point2 about = {0.0, 0.0});
ConvexBody rotated(const ConvexBody& body, double angle, Point2 about = {0.0, 0.0});
ConvexBody translated(const ConvexBody& body, Vec2 offset);

Point2 centroid(const ConvexBody& body);

// Body JSON: {"vertices": [[x,y],...]} counterclockwise, or a generator form
// {"kind":"regular-ngon","n":N,"radius":R} / {"kind":"random-valtr","n":N,"seed":S}.
ConvexBody body_from_json_text(const std::string& text);
ConvexBody body_from_json_file(const std::string& path);
std::string body_to_json_text(const ConvexBody& body);

}  // namespace fencekit
