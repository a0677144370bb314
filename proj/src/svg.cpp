#include "fencekit/svg.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fencekit {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

std::string render_svg(const ConvexBody& body, const std::vector<SvgCut>& cuts) {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const Point2& p : body.vertices()) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    double span = std::max(xmax - xmin, ymax - ymin);
    double margin = 0.06 * span;
    // y axis flipped so the figure reads in mathematical orientation
    auto X = [&](double x) { return fmt(x); };
    auto Y = [&](double y) { return fmt(ymax + ymin - y); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\""
        << fmt(xmin - margin) << " " << fmt(ymin - margin) << " " << fmt(span + 2 * margin) << " "
        << fmt(span + 2 * margin) << "\">\n";
    double sw = span / 400.0;

    out << "<path d=\"M";
    for (const Point2& p : body.vertices()) out << " " << X(p.x) << " " << Y(p.y);
    out << " Z\" fill=\"#eef3f8\" stroke=\"#1f77b4\" stroke-width=\"" << fmt(sw) << "\"/>\n";

    for (const SvgCut& c : cuts) {
        if (const Chord* ch = std::get_if<Chord>(&c.cut)) {
            out << "<line x1=\"" << X(ch->a.x) << "\" y1=\"" << Y(ch->a.y) << "\" x2=\""
                << X(ch->b.x) << "\" y2=\"" << Y(ch->b.y) << "\" stroke=\"" << c.color
                << "\" stroke-width=\"" << fmt(1.4 * sw) << "\"/>\n";
        } else {
            const CircularArc& arc = std::get<CircularArc>(c.cut);
            if (std::abs(arc.opening) < 1e-9) {
                out << "<line x1=\"" << X(arc.a.x) << "\" y1=\"" << Y(arc.a.y) << "\" x2=\""
                    << X(arc.b.x) << "\" y2=\"" << Y(arc.b.y) << "\" stroke=\"" << c.color
                    << "\" stroke-width=\"" << fmt(1.4 * sw) << "\"/>\n";
            } else {
                double r = arc.radius();
                // y is flipped, so the sweep flag flips with it
                int sweep_flag = arc.opening > 0 ? 1 : 0;
                out << "<path d=\"M " << X(arc.a.x) << " " << Y(arc.a.y) << " A " << fmt(r) << " "
                    << fmt(r) << " 0 0 " << sweep_flag << " " << X(arc.b.x) << " " << Y(arc.b.y)
                    << "\" fill=\"none\" stroke=\"" << c.color << "\" stroke-width=\""
                    << fmt(1.4 * sw) << "\"/>\n";
            }
        }
        if (!c.label.empty()) {
            Point2 anchor;
            if (const Chord* ch = std::get_if<Chord>(&c.cut))
                anchor = (ch->a + ch->b) * 0.5;
            else {
                const CircularArc& arc = std::get<CircularArc>(c.cut);
                anchor = arc.point_at(0.5);
            }
            out << "<text x=\"" << X(anchor.x + 2 * sw) << "\" y=\"" << Y(anchor.y) << "\" font-size=\""
                << fmt(10 * sw) << "\" fill=\"" << c.color << "\">" << c.label << "</text>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

void write_svg_file(const std::string& path, const std::string& svg) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write SVG file: " + path);
    f << svg;
}

}  // namespace fencekit
