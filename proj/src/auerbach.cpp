#include "fencekit/auerbach.hpp"

#include <cmath>
#include <stdexcept>

namespace fencekit {

namespace {

Point2 canonical_point(double t) {
    return {std::tanh(2.0 * t) - t, 1.0 / std::cosh(2.0 * t)};
}

Vec2 canonical_tangent(double t) {
    double sech = 1.0 / std::cosh(2.0 * t);
    return Vec2{2.0 * sech * sech - 1.0, -2.0 * sech * std::tanh(2.0 * t)}.normalized();
}

Point2 rotate_about(const Point2& p, double ang, const Point2& c) {
    return c + (p - c).rotated(ang);
}

}  // namespace

double auerbach_area_analytic() {
    double l3 = std::log(3.0);
    return std::sqrt(3.0) / 8.0 * (8.0 * l3 - l3 * l3 - 4.0);
}

AuerbachTriangle build_auerbach(int samples_per_arc) {
    if (samples_per_arc < 16)
        throw std::invalid_argument("build_auerbach: need at least 16 samples per arc");
    double tstar = std::log(3.0) / 4.0;

    // terminal tangent lines and the x-axis bound the equilateral triangle T
    Point2 pr = canonical_point(tstar);
    Vec2 dr = canonical_tangent(tstar);  // points down-right at +tstar
    double s_axis = -pr.y / dr.y;
    Point2 base_r = pr + dr * s_axis;                 // right base vertex of T
    double s_apex = -pr.x / dr.x;
    Point2 apex{0.0, pr.y + s_apex * dr.y};           // tangents meet on the y-axis
    Point2 bc{0.0, (base_r.y * 2.0 + apex.y) / 3.0};  // barycenter (base_l = -base_r)

    // top curved piece sampled ccw (right terminal to left terminal)
    std::vector<Point2> top;
    top.reserve(samples_per_arc + 1);
    for (int i = 0; i <= samples_per_arc; ++i) {
        double t = tstar - 2.0 * tstar * i / samples_per_arc;
        top.push_back(canonical_point(t));
    }

    auto rot_piece = [&](const std::vector<Point2>& src, double ang) {
        std::vector<Point2> out;
        out.reserve(src.size());
        for (const Point2& p : src) out.push_back(rotate_about(p, ang, bc));
        return out;
    };
    std::vector<Point2> left = rot_piece(top, 2.0 * M_PI / 3.0);
    std::vector<Point2> right = rot_piece(top, -2.0 * M_PI / 3.0);

    // flat pieces at the same linear density as the arcs
    double arc_len = 0.0;
    for (std::size_t i = 0; i + 1 < top.size(); ++i) arc_len += (top[i + 1] - top[i]).norm();
    double spacing = arc_len / samples_per_arc;
    auto flat = [&](const Point2& a, const Point2& b, std::vector<Point2>& dst) {
        int m = std::max(1, static_cast<int>(std::ceil((b - a).norm() / spacing)));
        for (int i = 1; i < m; ++i) dst.push_back(a + (b - a) * (static_cast<double>(i) / m));
    };

    std::vector<Point2> poly;
    std::array<std::pair<std::size_t, std::size_t>, 3> flat_idx;
    auto add_piece = [&](const std::vector<Point2>& piece) {
        for (std::size_t i = 0; i + 1 < piece.size(); ++i) poly.push_back(piece[i]);
        poly.push_back(piece.back());
    };
    // ccw: top arc, left side flat, left arc, base flat, right arc, right flat
    add_piece(top);
    std::size_t f0 = poly.size();
    flat(top.back(), left.front(), poly);
    flat_idx[0] = {f0, poly.size()};
    add_piece(left);
    std::size_t f1 = poly.size();
    flat(left.back(), right.front(), poly);
    flat_idx[1] = {f1, poly.size()};
    add_piece(right);
    std::size_t f2 = poly.size();
    flat(right.back(), top.front(), poly);
    flat_idx[2] = {f2, poly.size()};

    // drop duplicated junction points
    std::vector<Point2> clean;
    std::vector<std::size_t> remap(poly.size());
    double eps = 1e-12;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (clean.empty() || (poly[i] - clean.back()).norm() > eps) clean.push_back(poly[i]);
        remap[i] = clean.size() - 1;
    }

    AuerbachTriangle tri{ConvexBody(clean), 1.0, auerbach_area_analytic(), {}};

    double total = tri.body.boundary_length();
    const auto& cum = tri.body;  // parameters via vertex positions
    auto param_of_vertex = [&](std::size_t idx) {
        return cum.locate_boundary_param(clean[idx], total);
    };
    for (int j = 0; j < 3; ++j) {
        std::size_t a = remap[flat_idx[j].first];
        std::size_t b = remap[flat_idx[j].second % poly.size()];
        // widen by one sample so the flat piece includes its junction vertices
        double lo = param_of_vertex(a > 0 ? a - 1 : clean.size() - 1);
        double hi = param_of_vertex((b + 1) % clean.size());
        tri.flat_ranges[j] = {lo, hi};
    }
    return tri;
}

bool AuerbachTriangle::on_flat_part(double s, double slack) const {
    s = wrap(s, 1.0);
    for (const auto& [lo, hi] : flat_ranges) {
        double span = wrap(hi - lo, 1.0);
        if (wrap(s - lo, 1.0) <= span + slack || wrap(s - lo, 1.0) >= 1.0 - slack) return true;
    }
    return false;
}

ZindlerDeviation verify_zindler_body(const ConvexBody& body, double expected_length, int n_chords) {
    ZindlerDeviation dev;
    for (int i = 0; i < n_chords; ++i) {
        double sigma = M_PI * i / n_chords;
        HalvingChord hc = halving_chord_in_direction(body, sigma);
        dev.max_length_dev = std::max(dev.max_length_dev,
                                      std::abs(hc.length() - expected_length));
        double p_left = body.chain_length(hc.s_b, hc.s_a) / body.boundary_length();
        dev.max_perimeter_dev = std::max(dev.max_perimeter_dev, std::abs(p_left - 0.5));
    }
    return dev;
}

ZindlerDeviation verify_zindler(const AuerbachTriangle& tri, int n_chords) {
    return verify_zindler_body(tri.body, tri.halving_length, n_chords);
}

AuerbachConstants auerbach_constants(const AuerbachTriangle& tri) {
    AuerbachConstants out;
    out.g_report = relaxed_G(tri.body);
    out.c_report = relaxed_C(tri.body);
    out.G = out.g_report.value;
    out.C = out.c_report.value;

    const auto* arc = std::get_if<CircularArc>(&out.c_report.witness);
    if (!arc || std::abs(arc->opening) < 1e-3)
        throw std::runtime_error("auerbach_constants: expected a curved optimal arc");
    double sa = tri.body.locate_boundary_param(arc->a);
    double sb = tri.body.locate_boundary_param(arc->b);
    double slack = 2.0 / static_cast<double>(tri.body.size());
    if (!tri.on_flat_part(sa, slack) || !tri.on_flat_part(sb, slack))
        throw std::runtime_error("auerbach_constants: optimal arc does not join the flat sides");
    return out;
}

}  // namespace fencekit
