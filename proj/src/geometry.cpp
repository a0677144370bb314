#include "fencekit/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace fencekit {

double wrap(double x, double m) {
    double r = std::fmod(x, m);
    if (r < 0) r += m;
    return r;
}

double line_angle(const Vec2& u, const Vec2& v) {
    double c = std::abs(u.normalized().dot(v.normalized()));
    if (c > 1.0) c = 1.0;
    return std::acos(c);
}

double polygon_area(const std::vector<Point2>& pts) {
    double s = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Point2& a = pts[i];
        const Point2& b = pts[(i + 1) % pts.size()];
        s += a.cross(b);
    }
    return 0.5 * s;
}

double polygon_perimeter(const std::vector<Point2>& pts) {
    double s = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        s += (pts[(i + 1) % pts.size()] - pts[i]).norm();
    return s;
}

// ---------------------------------------------------------------- CircularArc

double CircularArc::radius() const {
    return chord_length() / (2.0 * std::sin(std::abs(opening) / 2.0));
}

double CircularArc::length() const {
    if (opening == 0.0) return chord_length();
    return radius() * std::abs(opening);
}

Point2 CircularArc::center() const {
    Point2 mid = (a + b) * 0.5;
    Vec2 left = (b - a).perp().normalized();
    double h = radius() * std::cos(opening / 2.0);
    // opening > 0: center on the left of a->b
    return opening > 0 ? mid + left * h : mid - left * h;
}

Point2 CircularArc::point_at(double t) const {
    if (opening == 0.0) return a + (b - a) * t;
    Point2 o = center();
    return o + (a - o).rotated(t * opening);
}

Vec2 CircularArc::tangent_at(double t) const {
    if (opening == 0.0) return (b - a).normalized();
    Point2 o = center();
    Vec2 r = (point_at(t) - o).normalized();
    return opening > 0 ? r.perp() : r.perp() * -1.0;
}

double CircularArc::segment_area() const {
    if (opening == 0.0) return 0.0;
    double r = radius();
    return r * r * (opening - std::sin(opening)) / 2.0;
}

// ----------------------------------------------------------------- ConvexBody

ConvexBody::ConvexBody(std::vector<Point2> vertices) : verts_(std::move(vertices)) {
    std::size_t n = verts_.size();
    if (n < 3) throw std::invalid_argument("ConvexBody: need at least 3 vertices");
    for (const Point2& p : verts_)
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw std::invalid_argument("ConvexBody: non-finite vertex");

    perimeter_ = polygon_perimeter(verts_);
    double eg = eps_geom();
    for (std::size_t i = 0; i < n; ++i)
        if ((verts_[(i + 1) % n] - verts_[i]).norm() < eg)
            throw std::invalid_argument("ConvexBody: coincident consecutive vertices at index " +
                                        std::to_string(i));

    double ec = eps_convex();
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 e1 = verts_[(i + 1) % n] - verts_[i];
        Vec2 e2 = verts_[(i + 2) % n] - verts_[(i + 1) % n];
        if (e1.cross(e2) < -ec)
            throw std::invalid_argument("ConvexBody: not counterclockwise convex at vertex " +
                                        std::to_string((i + 1) % n));
    }

    area_ = polygon_area(verts_);
    if (area_ <= 0.0) throw std::invalid_argument("ConvexBody: degenerate (non-positive area)");

    cum_len_.resize(n + 1);
    cum_cross_.resize(n + 1);
    cum_len_[0] = 0.0;
    cum_cross_[0] = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = verts_[i];
        const Point2& b = verts_[(i + 1) % n];
        cum_len_[i + 1] = cum_len_[i] + (b - a).norm();
        cum_cross_[i + 1] = cum_cross_[i] + a.cross(b);
    }
    perimeter_ = cum_len_[n];
}

std::pair<std::size_t, double> ConvexBody::edge_of(double s) const {
    double t = wrap(s, 1.0) * perimeter_;
    auto it = std::upper_bound(cum_len_.begin(), cum_len_.end(), t);
    std::size_t i = static_cast<std::size_t>(it - cum_len_.begin());
    if (i > 0) --i;
    if (i >= verts_.size()) i = verts_.size() - 1;
    return {i, t};
}

std::pair<Point2, Vec2> ConvexBody::boundary_point(double s) const {
    auto [i, t] = edge_of(s);
    const Point2& a = verts_[i];
    const Point2& b = verts_[(i + 1) % verts_.size()];
    double el = cum_len_[i + 1] - cum_len_[i];
    double f = (t - cum_len_[i]) / el;
    return {a + (b - a) * f, (b - a) / el};
}

double ConvexBody::locate_boundary_param(const Point2& p, double tol) const {
    if (tol < 0) tol = 64.0 * eps_geom();
    std::size_t n = verts_.size();
    double best_d2 = std::numeric_limits<double>::max();
    double best_t = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = verts_[i];
        const Point2& b = verts_[(i + 1) % n];
        Vec2 e = b - a;
        double f = std::clamp((p - a).dot(e) / e.norm2(), 0.0, 1.0);
        Point2 q = a + e * f;
        double d2 = (p - q).norm2();
        if (d2 < best_d2) {
            best_d2 = d2;
            best_t = cum_len_[i] + f * (cum_len_[i + 1] - cum_len_[i]);
        }
    }
    if (std::sqrt(best_d2) > tol)
        throw std::invalid_argument("point is not on the body boundary");
    return wrap(best_t / perimeter_, 1.0);
}

double ConvexBody::param_at_edge(std::size_t edge_index, double fraction) const {
    double t = cum_len_[edge_index] + fraction * (cum_len_[edge_index + 1] - cum_len_[edge_index]);
    return wrap(t / perimeter_, 1.0);
}

double ConvexBody::region_area(double s1, double s2) const {
    std::size_t n = verts_.size();
    auto [i1, t1] = edge_of(s1);
    auto [i2, t2] = edge_of(s2);
    Point2 q1 = boundary_point(s1).first;
    Point2 q2 = boundary_point(s2).first;

    double cr;
    bool same_edge_fwd = (i1 == i2) && (t2 >= t1);
    if (same_edge_fwd) {
        cr = q1.cross(q2);
    } else {
        // q1 -> end of edge i1, full edges (i1+1 .. i2-1), start of edge i2 -> q2
        cr = q1.cross(verts_[(i1 + 1) % n]);
        double full;
        if (i2 > i1) {
            full = cum_cross_[i2] - cum_cross_[i1 + 1];
        } else {
            // wraps past vertex 0 (i2 < i1, or same edge with t2 < t1)
            full = (cum_cross_[n] - cum_cross_[i1 + 1]) + cum_cross_[i2];
        }
        cr += full;
        cr += verts_[i2].cross(q2);
    }
    cr += q2.cross(q1);
    return 0.5 * cr;
}

double ConvexBody::chain_length(double s1, double s2) const {
    return wrap(s2 - s1, 1.0) * perimeter_;
}

std::pair<double, Vec2> ConvexBody::width_with_direction() const {
    std::size_t n = verts_.size();
    double best = std::numeric_limits<double>::max();
    Vec2 best_normal{1.0, 0.0};
    std::size_t j = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 d = (verts_[(i + 1) % n] - verts_[i]).normalized();
        auto h = [&](std::size_t k) { return d.cross(verts_[k] - verts_[i]); };
        std::size_t guard = 0;
        while (h((j + 1) % n) > h(j) && guard++ < 2 * n) j = (j + 1) % n;
        double w = h(j);
        if (w < best) {
            best = w;
            best_normal = Vec2{d.y, -d.x};  // outward normal of a ccw edge
        }
    }
    return {best, best_normal};
}

double ConvexBody::diameter() const {
    std::size_t n = verts_.size();
    double best = 0.0;
    std::size_t j = 1;
    // rotating calipers over antipodal pairs
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 e = verts_[(i + 1) % n] - verts_[i];
        std::size_t guard = 0;
        while (e.cross(verts_[(j + 1) % n] - verts_[j]) > 0 && guard++ < 2 * n) j = (j + 1) % n;
        best = std::max(best, (verts_[j] - verts_[i]).norm());
        best = std::max(best, (verts_[j] - verts_[(i + 1) % n]).norm());
    }
    return best;
}

bool ConvexBody::contains(const Point2& p, double tol) const {
    std::size_t n = verts_.size();
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 e = verts_[(i + 1) % n] - verts_[i];
        if (e.cross(p - verts_[i]) < -tol * e.norm()) return false;
    }
    return true;
}

double ConvexBody::arc_violation(const CircularArc& arc) const {
    std::size_t n = verts_.size();
    double worst = -std::numeric_limits<double>::max();
    if (std::abs(arc.opening) < 1e-9) {
        // straight segment between boundary points: max of endpoint violations
        for (std::size_t i = 0; i < n; ++i) {
            Vec2 e = verts_[(i + 1) % n] - verts_[i];
            Vec2 out = Vec2{e.y, -e.x} / e.norm();
            double v = std::max((arc.a - verts_[i]).dot(out), (arc.b - verts_[i]).dot(out));
            worst = std::max(worst, v);
        }
        return worst;
    }
    Point2 o = arc.center();
    double r = arc.radius();
    double phi_a = std::atan2(arc.a.y - o.y, arc.a.x - o.x);
    double sweep = arc.opening;
    auto on_arc = [&](double phi) {
        if (sweep > 0) return wrap(phi - phi_a, 2 * M_PI) <= sweep;
        return wrap(phi_a - phi, 2 * M_PI) <= -sweep;
    };
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 e = verts_[(i + 1) % n] - verts_[i];
        Vec2 out = Vec2{e.y, -e.x} / e.norm();
        double v;
        if (on_arc(std::atan2(out.y, out.x))) {
            v = (o - verts_[i]).dot(out) + r;  // extreme circle point in direction out
        } else {
            v = std::max((arc.a - verts_[i]).dot(out), (arc.b - verts_[i]).dot(out));
        }
        worst = std::max(worst, v);
    }
    return worst;
}

ConvexBody::ClipResult ConvexBody::clip_halfplane(const Point2& line_point,
                                                  const Vec2& unit_normal) const {
    std::size_t n = verts_.size();
    std::vector<Point2> kept;
    kept.reserve(n + 2);
    std::vector<Point2> crossings;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = verts_[i];
        const Point2& b = verts_[(i + 1) % n];
        double da = (a - line_point).dot(unit_normal);
        double db = (b - line_point).dot(unit_normal);
        if (da <= 0) kept.push_back(a);
        if ((da < 0) != (db < 0)) {
            double f = da / (da - db);
            Point2 q = a + (b - a) * f;
            kept.push_back(q);
            crossings.push_back(q);
        }
    }
    ClipResult res;
    if (crossings.size() >= 2) {
        // convex polygon: exactly two proper crossings
        res.chord = Chord{crossings[0], crossings[1]};
    }
    if (kept.size() >= 3 && polygon_area(kept) > eps_convex()) {
        // drop near-duplicate points created by crossings at vertices
        std::vector<Point2> clean;
        double eg = eps_geom();
        for (const Point2& p : kept) {
            if (clean.empty() || (p - clean.back()).norm() > eg) clean.push_back(p);
        }
        while (clean.size() > 1 && (clean.front() - clean.back()).norm() <= eg) clean.pop_back();
        if (clean.size() >= 3) res.body.emplace(std::move(clean));
    }
    return res;
}

SplitResult ConvexBody::split_by_arc(double s1, double s2, double opening) const {
    Point2 a = boundary_point(s1).first;
    Point2 b = boundary_point(s2).first;
    CircularArc arc{a, b, opening};
    if (arc_violation(arc) > 1e-6 * perimeter_)
        throw std::invalid_argument("split_by_arc: arc exits the body");

    double right = region_area(s1, s2);   // chain a->b plus chord b->a
    double left = area_ - right;
    double seg = arc.segment_area();
    SplitResult r;
    r.area_left = left + seg;
    r.area_right = right - seg;
    r.cut_length = arc.length();
    r.perim_left = chain_length(s2, s1);
    r.perim_right = chain_length(s1, s2);
    return r;
}

SplitResult ConvexBody::split_by_arc(const CircularArc& arc) const {
    double s1 = locate_boundary_param(arc.a);
    double s2 = locate_boundary_param(arc.b);
    return split_by_arc(s1, s2, arc.opening);
}

bool ConvexBody::internal_disc_check(const Point2& p, double r) const {
    double sp = locate_boundary_param(p);  // throws if p off the boundary
    Vec2 tangent = boundary_point(sp).second;
    Vec2 inward = tangent.perp();
    Point2 c = p + inward * r;
    double tol = 1e-3 * r + eps_geom();
    std::size_t n = verts_.size();
    for (std::size_t i = 0; i < n; ++i) {
        Vec2 e = verts_[(i + 1) % n] - verts_[i];
        Vec2 out = Vec2{e.y, -e.x} / e.norm();
        if ((c - verts_[i]).dot(out) + r > tol) return false;
    }
    return true;
}

double ConvexBody::support(const Vec2& dir) const {
    double best = -std::numeric_limits<double>::max();
    for (const Point2& v : verts_) best = std::max(best, v.dot(dir));
    return best;
}

}  // namespace fencekit
