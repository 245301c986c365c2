#pragma once

#include <string>

#include "superlum/diagrams.hpp"

namespace superlum {

/// Styling of rendered spacetime diagrams. Time runs up, space to the right,
/// both axes share one scale in units of (ct, x) so light rays sit at 45
/// degrees.
struct SvgStyle {
    double pixels_per_unit = 80.0;
    double margin = 40.0;
    double padding_units = 0.5;
    double stroke_width = 2.0;
    double event_radius = 4.0;
    double font_size = 14.0;
    const char* subluminal_dash = "";       // solid
    const char* superluminal_dash = "8,5";  // dashed
    const char* luminal_dash = "2,4";       // dotted
    const char* segment_color = "#1f2933";
    const char* guide_color = "#b8c2cc";
    const char* event_color = "#c0392b";
};

/// Renders the diagram with light-cone guides through its earliest event.
std::string render_svg(const Diagram& d, const SvgStyle& style = {});

}  // namespace superlum
