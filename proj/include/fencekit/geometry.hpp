#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fencekit {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }

    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double cross(const Vec2& o) const { return x * o.y - y * o.x; }
    double norm() const { return std::hypot(x, y); }
    double norm2() const { return x * x + y * y; }
    Vec2 normalized() const { double n = norm(); return {x / n, y / n}; }
    // counterclockwise quarter turn
    Vec2 perp() const { return {-y, x}; }
    Vec2 rotated(double angle) const {
        double c = std::cos(angle), s = std::sin(angle);
        return {c * x - s * y, s * x + c * y};
    }
};

using Point2 = Vec2;

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

/// Straight halving cut between two boundary points.
struct Chord {
    Point2 a;
    Point2 b;
    double length() const { return (b - a).norm(); }
    Vec2 direction() const { return (b - a).normalized(); }
};

/// Circular arc from a to b with signed opening angle (central angle).
///
/// Convention: opening > 0 means the arc bulges to the right of the directed
/// chord a->b (the circle center lies on the left); opening == 0 is a straight
/// segment. |opening| < pi always.
struct CircularArc {
    Point2 a;
    Point2 b;
    double opening = 0.0;

    bool is_segment() const { return opening == 0.0; }
    double chord_length() const { return (b - a).norm(); }
    double radius() const;  // requires opening != 0
    double length() const;
    Point2 center() const;  // requires opening != 0
    Point2 point_at(double t) const;   // t in [0,1], from a to b
    Vec2 tangent_at(double t) const;   // unit vector in travel direction
    // Signed area between the chord a->b and the arc. Positive for
    // opening > 0 (bulge on the right of a->b), zero for a segment.
    double segment_area() const;
};

/// Outcome of splitting a body by a cut: the "left" part lies to the left of
/// the directed cut a->b.
struct SplitResult {
    double area_left = 0.0;
    double area_right = 0.0;
    double cut_length = 0.0;
    double perim_left = 0.0;   // boundary share, cut excluded
    double perim_right = 0.0;
};

/// Closed convex region given by a counterclockwise polygon boundary.
/// Immutable after construction; smooth bodies are represented as dense
/// polygons (4096 vertices by default in the generators).
class ConvexBody {
public:
    explicit ConvexBody(std::vector<Point2> vertices);

    const std::vector<Point2>& vertices() const { return verts_; }
    std::size_t size() const { return verts_.size(); }
    double area() const { return area_; }
    double boundary_length() const { return perimeter_; }

    double eps_geom() const { return 1e-9 * perimeter_; }
    double eps_convex() const { return 1e-12 * perimeter_ * perimeter_; }

    // --- boundary parametrization, s in [0,1) normalized by arc length ---

    // Point and counterclockwise unit tangent; at a polygon vertex the
    // tangent of the outgoing edge is used.
    std::pair<Point2, Vec2> boundary_point(double s) const;
    Point2 point_at(double s) const { return boundary_point(s).first; }

    // Nearest boundary parameter of a point; throws if farther than tol
    // (default 64 * eps_geom) from the boundary.
    double locate_boundary_param(const Point2& p, double tol = -1.0) const;

    // Normalized parameter of the point at the given fraction of edge i.
    double param_at_edge(std::size_t edge_index, double fraction) const;

    // Area of the region bounded by the ccw boundary chain from s1 to s2
    // (wrapping) closed by the straight segment back from point(s2) to
    // point(s1). The closing chord p(s1)->p(s2) has this region on its right.
    double region_area(double s1, double s2) const;
    // Boundary length of the same chain.
    double chain_length(double s1, double s2) const;

    // --- global quantities ---

    double width() const { return width_with_direction().first; }
    // Width and the unit outward normal of the minimizing support slab.
    std::pair<double, Vec2> width_with_direction() const;
    double diameter() const;

    bool contains(const Point2& p, double tol) const;
    // Largest signed violation of the arc against the edge half-planes
    // (<= 0 means the arc lies inside).
    double arc_violation(const CircularArc& arc) const;
    bool arc_inside(const CircularArc& arc, double tol) const {
        return arc_violation(arc) <= tol;
    }

    // --- cuts ---

    struct ClipResult;
    // Sutherland-Hodgman clip against one half-plane; exact for polygons.
    ClipResult clip_halfplane(const Point2& line_point, const Vec2& unit_normal) const;

    // Split by a circular arc whose endpoints lie on the boundary. The
    // circular-segment area between chord and arc is added analytically;
    // throws if the arc leaves the body.
    SplitResult split_by_arc(const CircularArc& arc) const;
    // Same, with endpoint boundary parameters already known (solver path).
    SplitResult split_by_arc(double s1, double s2, double opening) const;

    // True iff the disc of radius r internally tangent at boundary point p
    // lies inside the body. Tolerance 1e-3 * r absorbs the tangency artifacts
    // of dense polygon approximations of smooth bodies.
    bool internal_disc_check(const Point2& p, double r) const;

    // Support value max_v <v, dir>.
    double support(const Vec2& dir) const;

private:
    std::vector<Point2> verts_;
    std::vector<double> cum_len_;    // size n+1, cum_len_[n] = perimeter
    std::vector<double> cum_cross_;  // size n+1, prefix of cross(v_i, v_{i+1})
    double area_ = 0.0;
    double perimeter_ = 0.0;

    // edge index and absolute arc length position for parameter s
    std::pair<std::size_t, double> edge_of(double s) const;
    friend class BoundaryWalker;
};

struct ConvexBody::ClipResult {
    std::optional<ConvexBody> body;  // part with dot(x - p, n) <= 0
    std::optional<Chord> chord;      // intersection with the line
};

double polygon_area(const std::vector<Point2>& pts);
double polygon_perimeter(const std::vector<Point2>& pts);

// Angle between two lines spanned by u and v, in [0, pi/2].
double line_angle(const Vec2& u, const Vec2& v);

// Wrap x into [0, m).
double wrap(double x, double m);

}  // namespace fencekit
