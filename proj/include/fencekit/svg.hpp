#pragma once

#include <string>
#include <variant>
#include <vector>

#include "fencekit/geometry.hpp"

namespace fencekit {

struct SvgCut {
    std::variant<Chord, CircularArc> cut;
    std::string color = "#d62728";
    std::string label;
};

// Body outline with optional cuts and labels; fixed canvas, viewBox scaled to
// the body bounds, no external assets.
std::string render_svg(const ConvexBody& body, const std::vector<SvgCut>& cuts = {});

void write_svg_file(const std::string& path, const std::string& svg);

}  // namespace fencekit
