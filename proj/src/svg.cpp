#include "superlum/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

namespace superlum {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

}  // namespace

std::string render_svg(const Diagram& d, const SvgStyle& style) {
    double xmin = std::numeric_limits<double>::infinity();
    double xmax = -xmin;
    double tmin = xmin;
    double tmax = -xmin;
    for (const auto& [_, e] : d.events) {
        xmin = std::min(xmin, e.x);
        xmax = std::max(xmax, e.x);
        tmin = std::min(tmin, d.c * e.t);
        tmax = std::max(tmax, d.c * e.t);
    }
    if (d.events.empty()) xmin = xmax = tmin = tmax = 0.0;
    xmin -= style.padding_units;
    xmax += style.padding_units;
    tmin -= style.padding_units;
    tmax += style.padding_units;

    const double s = style.pixels_per_unit;
    const double width = 2.0 * style.margin + (xmax - xmin) * s;
    const double height = 2.0 * style.margin + (tmax - tmin) * s;
    auto px = [&](double x) { return style.margin + (x - xmin) * s; };
    auto py = [&](double ct) { return style.margin + (tmax - ct) * s; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
       << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height) << "\">\n";
    os << "  <defs>\n"
       << "    <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"7\" "
          "markerHeight=\"7\" orient=\"auto-start-reverse\">\n"
       << "      <path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"" << style.segment_color << "\"/>\n"
       << "    </marker>\n"
       << "    <clipPath id=\"plot\"><rect x=\"" << fmt(style.margin) << "\" y=\"" << fmt(style.margin)
       << "\" width=\"" << fmt(width - 2 * style.margin) << "\" height=\""
       << fmt(height - 2 * style.margin) << "\"/></clipPath>\n"
       << "  </defs>\n";
    os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    if (!d.events.empty()) {
        const auto earliest = std::min_element(
            d.events.begin(), d.events.end(),
            [](const auto& a, const auto& b) { return precedes(a.second, b.second); });
        const double ox = earliest->second.x;
        const double ot = d.c * earliest->second.t;
        const double reach = (xmax - xmin) + (tmax - tmin);
        os << "  <g clip-path=\"url(#plot)\" stroke=\"" << style.guide_color
           << "\" stroke-width=\"1\" class=\"light-cone\">\n";
        for (double dir : {1.0, -1.0}) {
            os << "    <line x1=\"" << fmt(px(ox - dir * reach)) << "\" y1=\"" << fmt(py(ot - reach))
               << "\" x2=\"" << fmt(px(ox + dir * reach)) << "\" y2=\"" << fmt(py(ot + reach))
               << "\"/>\n";
        }
        os << "  </g>\n";
    }

    for (const auto& seg : d.segments) {
        const auto& a = d.events.at(seg.from);
        const auto& b = d.events.at(seg.to);
        const SpeedClass cls = classify_segment(d, seg);
        const char* dash = cls == SpeedClass::Subluminal    ? style.subluminal_dash
                           : cls == SpeedClass::Superluminal ? style.superluminal_dash
                                                             : style.luminal_dash;
        os << "  <line class=\"" << to_string(cls) << "\" x1=\"" << fmt(px(a.x)) << "\" y1=\""
           << fmt(py(d.c * a.t)) << "\" x2=\"" << fmt(px(b.x)) << "\" y2=\"" << fmt(py(d.c * b.t))
           << "\" stroke=\"" << style.segment_color << "\" stroke-width=\"" << fmt(style.stroke_width)
           << '"';
        if (*dash != '\0') os << " stroke-dasharray=\"" << dash << '"';
        os << " marker-end=\"url(#arrow)\"/>\n";
    }

    for (const auto& [label, e] : d.events) {
        os << "  <circle cx=\"" << fmt(px(e.x)) << "\" cy=\"" << fmt(py(d.c * e.t)) << "\" r=\""
           << fmt(style.event_radius) << "\" fill=\"" << style.event_color << "\"/>\n";
        os << "  <text x=\"" << fmt(px(e.x) + 6) << "\" y=\"" << fmt(py(d.c * e.t) - 6)
           << "\" font-family=\"sans-serif\" font-size=\"" << fmt(style.font_size) << "\">"
           << escape(label) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace superlum
