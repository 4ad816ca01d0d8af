#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "taskdiff/csvio.hpp"
#include "taskdiff/difficulty.hpp"

namespace taskdiff {

// Minimal static SVG 1.1 line chart for agent response curves:
// x = difficulty bin (bits), y = acceptance rate.
inline std::string curve_svg(const std::vector<CurvePoint>& points, const std::string& title) {
    const int w = 640, h = 420, ml = 60, mr = 20, mt = 40, mb = 50;
    const int pw = w - ml - mr, ph = h - mt - mb;
    double x_lo = 0.0, x_hi = 1.0;
    if (!points.empty()) {
        x_lo = points.front().bin_lo;
        x_hi = points.back().bin_lo;
        if (x_hi <= x_lo) x_hi = x_lo + 1.0;
    }
    auto px = [&](double x) { return ml + (x - x_lo) / (x_hi - x_lo) * pw; };
    auto py = [&](double y) { return mt + (1.0 - y) * ph; };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w
       << "\" height=\"" << h << "\">\n"
       << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n"
       << "<text x=\"" << w / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
          "font-size=\"15\">" << title << "</text>\n";
    // axes
    os << "<line x1=\"" << ml << "\" y1=\"" << mt + ph << "\" x2=\"" << ml + pw << "\" y2=\""
       << mt + ph << "\" stroke=\"black\"/>\n"
       << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << mt + ph
       << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        double y = i / 5.0;
        os << "<line x1=\"" << ml - 4 << "\" y1=\"" << py(y) << "\" x2=\"" << ml << "\" y2=\""
           << py(y) << "\" stroke=\"black\"/>\n"
           << "<text x=\"" << ml - 8 << "\" y=\"" << py(y) + 4
           << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
           << format_double(y) << "</text>\n";
    }
    for (size_t i = 0; i < points.size(); ++i) {
        double x = points[i].bin_lo;
        os << "<line x1=\"" << px(x) << "\" y1=\"" << mt + ph << "\" x2=\"" << px(x) << "\" y2=\""
           << mt + ph + 4 << "\" stroke=\"black\"/>\n"
           << "<text x=\"" << px(x) << "\" y=\"" << mt + ph + 18
           << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
           << format_double(x) << "</text>\n";
    }
    os << "<text x=\"" << ml + pw / 2 << "\" y=\"" << h - 12
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">difficulty "
          "(bits)</text>\n"
       << "<text x=\"16\" y=\"" << mt + ph / 2
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
          "transform=\"rotate(-90 16 " << mt + ph / 2 << ")\">acceptance rate</text>\n";
    if (points.size() > 1) {
        os << "<polyline fill=\"none\" stroke=\"#1965b0\" stroke-width=\"2\" points=\"";
        for (const CurvePoint& p : points) os << px(p.bin_lo) << ',' << py(p.rate) << ' ';
        os << "\"/>\n";
    }
    for (const CurvePoint& p : points) {
        os << "<circle cx=\"" << px(p.bin_lo) << "\" cy=\"" << py(p.rate)
           << "\" r=\"3.5\" fill=\"#1965b0\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace taskdiff
