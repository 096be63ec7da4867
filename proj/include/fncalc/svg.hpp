#pragma once

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string>

#include "skyline.hpp"

namespace fncalc {

struct RenderSpec {
    double unit = 40.0;  // output units per point of width and per unit height
    double stroke = 1.5;
    double divider_stroke = 1.0;
    std::string dash = "4,3";
    double margin = 10.0;
    double gap = 30.0;  // between terms of a sum
};

namespace detail {

inline std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

inline double column_height(const GatheredBlock& b) {
    double h = 0;
    for (const auto& [l, d] : b.profile) h += d * (1.0 - 1.0 / static_cast<double>(1 << l));
    return h;
}

inline double monomial_height(const SkylineMonomial& m) {
    double h = 0;
    for (const auto& b : m.blocks()) h = std::max(h, column_height(b));
    return h;
}

inline int monomial_width(const SkylineMonomial& m) { return m.width() + (m.stable() ? 2 : m.unit_width()); }

// columns left to right, boxes bottom-up by decreasing l; baseline at y0
inline void draw_monomial(std::ostringstream& o, const SkylineMonomial& m, double x0, double y0, const RenderSpec& s) {
    double x = x0;
    for (const auto& b : m.blocks()) {
        const double w = b.points * s.unit;
        double y = y0;
        for (auto it = b.profile.rbegin(); it != b.profile.rend(); ++it) {
            const int l = it->first;
            const int parts = b.points >> l;
            const double h = (1.0 - 1.0 / static_cast<double>(1 << l)) * s.unit;
            for (int r = 0; r < it->second; ++r) {
                y -= h;
                o << "  <rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\"" << num(w) << "\" height=\"" << num(h)
                  << "\" fill=\"white\" stroke=\"black\" stroke-width=\"" << num(s.stroke) << "\"/>\n";
                for (int p = 1; p < parts; ++p) {
                    const double xd = x + w * p / parts;
                    o << "  <line x1=\"" << num(xd) << "\" y1=\"" << num(y) << "\" x2=\"" << num(xd) << "\" y2=\"" << num(y + h)
                      << "\" stroke=\"black\" stroke-width=\"" << num(s.divider_stroke) << "\" stroke-dasharray=\"" << s.dash << "\"/>\n";
                }
            }
        }
        x += w;
    }
    const int u = m.stable() ? 2 : m.unit_width();
    if (u > 0) {
        o << "  <line x1=\"" << num(x) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(x + u * s.unit) << "\" y2=\"" << num(y0)
          << "\" stroke=\"black\" stroke-width=\"" << num(s.stroke) << "\"";
        if (m.stable()) o << " stroke-dasharray=\"" << s.dash << "\"";
        o << "/>\n";
    }
}

}  // namespace detail

/// Deterministic SVG of a skyline class; terms of a sum are placed left to
/// right with "+" between them.
inline std::string render_svg(const SkylineClass& x, const RenderSpec& s = {}) {
    double width = 2 * s.margin, height = 0;
    std::size_t k = 0;
    for (const auto& [m, v] : x) {
        width += detail::monomial_width(m) * s.unit + (k++ ? s.gap : 0);
        height = std::max(height, detail::monomial_height(m));
    }
    if (x.is_zero()) width += s.gap;
    const double H = height * s.unit + 2 * s.margin;
    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << detail::num(width) << "\" height=\"" << detail::num(H) << "\" viewBox=\"0 0 "
      << detail::num(width) << " " << detail::num(H) << "\">\n";
    const double y0 = H - s.margin;
    if (x.is_zero()) {
        o << "  <text x=\"" << detail::num(s.margin) << "\" y=\"" << detail::num(y0) << "\" font-family=\"serif\" font-size=\"16\">0</text>\n";
    }
    double xpos = s.margin;
    k = 0;
    for (const auto& [m, v] : x) {
        if (k++) {
            o << "  <text x=\"" << detail::num(xpos + s.gap / 2 - 5) << "\" y=\"" << detail::num(y0) << "\" font-family=\"serif\" font-size=\"16\">+</text>\n";
            xpos += s.gap;
        }
        detail::draw_monomial(o, m, xpos, y0, s);
        xpos += detail::monomial_width(m) * s.unit;
    }
    o << "</svg>\n";
    return o.str();
}

}  // namespace fncalc
