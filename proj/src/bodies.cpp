#include "fencekit/bodies.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fencekit {

ConvexBody regular_ngon(int n, double radius, Point2 center) {
    if (n < 3) throw std::invalid_argument("regular_ngon: n must be >= 3");
    if (radius <= 0) throw std::invalid_argument("regular_ngon: radius must be positive");
    std::vector<Point2> v;
    v.reserve(n);
    for (int k = 0; k < n; ++k) {
        double a = 2.0 * M_PI * k / n;
        v.push_back(center + Vec2{radius * std::cos(a), radius * std::sin(a)});
    }
    return ConvexBody(std::move(v));
}

ConvexBody random_valtr(int n, Rng& rng) {
    if (n < 3) throw std::invalid_argument("random_valtr: n must be >= 3");
    auto deltas = [&](std::vector<double>& out) {
        std::vector<double> xs(n);
        for (double& x : xs) x = rng.uniform();
        std::sort(xs.begin(), xs.end());
        double lo = xs.front(), hi = xs.back();
        double last_top = lo, last_bot = lo;
        out.clear();
        for (int i = 1; i + 1 < n; ++i) {
            if (rng.coin()) {
                out.push_back(xs[i] - last_top);
                last_top = xs[i];
            } else {
                out.push_back(last_bot - xs[i]);
                last_bot = xs[i];
            }
        }
        out.push_back(hi - last_top);
        out.push_back(last_bot - hi);
    };
    std::vector<double> dx, dy;
    deltas(dx);
    deltas(dy);
    rng.shuffle(dy);

    std::vector<Vec2> vec(n);
    for (int i = 0; i < n; ++i) vec[i] = {dx[i], dy[i]};
    std::sort(vec.begin(), vec.end(), [](const Vec2& a, const Vec2& b) {
        return std::atan2(a.y, a.x) < std::atan2(b.y, b.x);
    });

    std::vector<Point2> pts(n);
    Point2 cur{0.0, 0.0};
    for (int i = 0; i < n; ++i) {
        pts[i] = cur;
        cur += vec[i];
    }
    // drop collinear duplicates that occasionally come out of the chain split
    std::vector<Point2> clean;
    double eps = 1e-12;
    for (const Point2& p : pts) {
        if (clean.empty() || (p - clean.back()).norm() > eps) clean.push_back(p);
    }
    if (clean.size() < 3) return random_valtr(n, rng);
    ConvexBody body(clean);
    Point2 c = centroid(body);
    return translated(body, Vec2{-c.x, -c.y});
}

ConvexBody random_valtr(int n, std::uint64_t seed) {
    Rng rng(seed);
    return random_valtr(n, rng);
}

Point2 centroid(const ConvexBody& body) {
    const auto& v = body.vertices();
    double cx = 0.0, cy = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point2& a = v[i];
        const Point2& b = v[(i + 1) % v.size()];
        double w = a.cross(b);
        cx += (a.x + b.x) * w;
        cy += (a.y + b.y) * w;
    }
    double s = 6.0 * body.area();
    return {cx / s, cy / s};
}

ConvexBody scaled(const ConvexBody& body, double factor, Point2 about) {
    std::vector<Point2> v = body.vertices();
    for (Point2& p : v) p = about + (p - about) * factor;
    return ConvexBody(std::move(v));
}

ConvexBody rotated(const ConvexBody& body, double angle, Point2 about) {
    std::vector<Point2> v = body.vertices();
    for (Point2& p : v) p = about + (p - about).rotated(angle);
    return ConvexBody(std::move(v));
}

ConvexBody translated(const ConvexBody& body, Vec2 offset) {
    std::vector<Point2> v = body.vertices();
    for (Point2& p : v) p += offset;
    return ConvexBody(std::move(v));
}

ConvexBody normalized_to_area(const ConvexBody& body, double target_area) {
    return scaled(body, std::sqrt(target_area / body.area()), centroid(body));
}

ConvexBody body_from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.contains("kind")) {
        std::string kind = j["kind"].get<std::string>();
        if (kind == "regular-ngon")
            return regular_ngon(j["n"].get<int>(), j.value("radius", 1.0));
        if (kind == "random-valtr")
            return random_valtr(j["n"].get<int>(), j.value("seed", std::uint64_t{1}));
        throw std::invalid_argument("unknown body kind: " + kind);
    }
    if (!j.contains("vertices")) throw std::invalid_argument("body JSON: missing \"vertices\"");
    std::vector<Point2> v;
    for (const auto& p : j["vertices"]) v.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    return ConvexBody(std::move(v));
}

ConvexBody body_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open body file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return body_from_json_text(ss.str());
}

std::string body_to_json_text(const ConvexBody& body) {
    nlohmann::json j;
    auto& arr = j["vertices"];
    arr = nlohmann::json::array();
    for (const Point2& p : body.vertices()) arr.push_back({p.x, p.y});
    return j.dump();
}

}  // namespace fencekit
