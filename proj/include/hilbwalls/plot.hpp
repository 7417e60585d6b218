#pragma once

// SVG rendering of the walls in the (x, y) stability slice.

#include "hilbwalls/classify.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace hilbwalls {

struct PlotFrame {
    double width = 800;
    double height = 400;
    double x_min = -4;
    double x_max = 1;
    double y_min = 0;
    double y_max = 2.5;
};

namespace detail {

inline std::string fixed6(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    std::string s = buf;
    return s == "-0.000000" ? "0.000000" : s;  // tiny negatives round to -0
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace detail

/// Deterministic SVG: axes, the line x = -1, the stability threshold y = 1/k, and
/// one semicircle per wall labelled with Gamma.
inline std::string svg_plot(const SurfaceParams& p, const std::vector<Wall>& walls, const PlotFrame& f = {}) {
    using detail::fixed6;
    const double sx = f.width / (f.x_max - f.x_min);
    const double sy = f.height / (f.y_max - f.y_min);
    auto px = [&](double x) { return (x - f.x_min) * sx; };
    auto py = [&](double y) { return f.height - (y - f.y_min) * sy; };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed6(f.width) + "\" height=\"" +
           fixed6(f.height) + "\" viewBox=\"0 0 " + fixed6(f.width) + " " + fixed6(f.height) + "\">\n";
    out += "<title>walls for Delta=" + p.Delta.str() + " h=" + p.h.str() + " k=" + p.k.str() + "</title>\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + fixed6(f.width) + "\" height=\"" + fixed6(f.height) +
           "\" fill=\"white\"/>\n";

    auto line = [&](double x1, double y1, double x2, double y2, const char* cls, const char* style) {
        out += "<line class=\"" + std::string(cls) + "\" x1=\"" + fixed6(x1) + "\" y1=\"" + fixed6(y1) +
               "\" x2=\"" + fixed6(x2) + "\" y2=\"" + fixed6(y2) + "\" " + style + "/>\n";
    };
    // Axes: y = 0 and x = 0.
    line(0, py(0), f.width, py(0), "axis", "stroke=\"black\" stroke-width=\"1\"");
    line(px(0), 0, px(0), f.height, "axis", "stroke=\"black\" stroke-width=\"1\"");
    // x = -1.
    line(px(-1), 0, px(-1), f.height, "line-x-minus-one", "stroke=\"gray\" stroke-dasharray=\"4 4\"");
    // y = 1/k.
    const double threshold = 1.0 / p.k.convert_to<double>();
    line(0, py(threshold), f.width, py(threshold), "stability-threshold",
         "stroke=\"blue\" stroke-dasharray=\"2 3\"");
    out += "<text x=\"" + fixed6(f.width - 60) + "\" y=\"" + fixed6(py(threshold) - 4) +
           "\" font-size=\"12\" fill=\"blue\">y=1/" + p.k.str() + "</text>\n";

    for (const Wall& wall : walls) {
        const double c = detail::to_double(wall.semicircle.center);
        const double r = std::sqrt(detail::to_double(wall.semicircle.radius_sq));
        const double rx = r * sx, ry = r * sy;
        out += "<path class=\"wall\" d=\"M " + fixed6(px(c - r)) + " " + fixed6(py(0)) + " A " + fixed6(rx) + " " +
               fixed6(ry) + " 0 0 1 " + fixed6(px(c + r)) + " " + fixed6(py(0)) +
               "\" fill=\"none\" stroke=\"red\" stroke-width=\"1.5\"/>\n";
        out += "<text class=\"gamma\" x=\"" + fixed6(px(c)) + "\" y=\"" + fixed6(py(r) - 4) +
               "\" font-size=\"12\" text-anchor=\"middle\">" + display_string(wall.gamma) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace hilbwalls
