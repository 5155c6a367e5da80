#pragma once

#include <optional>
#include <sstream>
#include <string>

#include "tip/io.hpp"
#include "tip/model.hpp"

namespace tip {

// Renders an instance in the style of the gadget figures: each 2-interval is
// a pair of horizontal segments on its own lane, joined by an arc; region
// spans from provenance (when given) are shaded and labelled along the base.
inline std::string render_svg(const Instance& inst,
                              const std::optional<ProvenanceFile>& prov = std::nullopt) {
    constexpr int width = 1200, margin = 40, lane_height = 14;
    const auto& ds = inst.two_intervals();

    int lo = 0, hi = 1;
    if (!ds.empty()) {
        lo = ds.front().left().lo();
        hi = ds.front().right().hi();
        for (const auto& d : ds) {
            lo = std::min(lo, d.left().lo());
            hi = std::max(hi, d.right().hi());
        }
    }
    if (prov)
        for (const auto& s : prov->region_spans) {
            lo = std::min(lo, s.lo);
            hi = std::max(hi, s.hi);
        }
    const double scale = static_cast<double>(width - 2 * margin) / std::max(1, hi - lo);
    auto x = [&](int coord) { return margin + scale * (coord - lo); };

    const int axis_y = margin + lane_height * static_cast<int>(ds.size()) + 20;
    const int height = axis_y + 60;

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "  <line x1=\"" << margin << "\" y1=\"" << axis_y << "\" x2=\"" << width - margin
        << "\" y2=\"" << axis_y << "\" stroke=\"black\"/>\n";

    if (prov) {
        for (const auto& s : prov->region_spans) {
            svg << "  <rect x=\"" << x(s.lo) << "\" y=\"" << margin - 10 << "\" width=\""
                << std::max(1.0, x(s.hi) - x(s.lo)) << "\" height=\"" << axis_y - margin + 10
                << "\" fill=\"#eef\" stroke=\"none\"/>\n";
            svg << "  <text x=\"" << x(s.lo) << "\" y=\"" << axis_y + 16
                << "\" font-size=\"10\">" << s.component << "</text>\n";
        }
    }

    int lane = 0;
    for (const auto& d : ds) {
        const int y = margin + lane_height * lane++;
        for (const Interval* iv : {&d.left(), &d.right()})
            svg << "  <line x1=\"" << x(iv->lo()) << "\" y1=\"" << y << "\" x2=\"" << x(iv->hi())
                << "\" y2=\"" << y << "\" stroke=\"#222\" stroke-width=\"3\"/>\n";
        // arc joining the two constituent intervals
        const double ax = x(d.left().hi()), bx = x(d.right().lo());
        svg << "  <path d=\"M " << ax << " " << y << " Q " << (ax + bx) / 2 << " " << y - 10
            << " " << bx << " " << y << "\" fill=\"none\" stroke=\"#888\" stroke-dasharray=\"3,2\"/>\n";
        svg << "  <text x=\"" << x(d.left().lo()) << "\" y=\"" << y - 2
            << "\" font-size=\"8\">" << d.label() << "</text>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace tip
