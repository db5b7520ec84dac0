#pragma once
// Batch renderer: draw a witness in the z = 1 chart, one segment per block.
// Extension-field coordinates with d > 0 use the real embedding; d < 0 falls
// back to the rational projection and the picture is flagged "schematic".

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include "ennea/catalog.hpp"

namespace ennea {

namespace detail {

inline std::string fmt2(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    std::string s(buf);
    return s == "-0.00" ? "0.00" : s;
}

}  // namespace detail

inline std::string render_svg(const CatalogRecord& r) {
    if (!r.witness) throw IoError("record " + r.key + " carries no witness to draw");
    const Witness& w = *r.witness;

    // Chart coordinates; points at infinity are pushed out along their
    // direction so the segment geometry still reads correctly.
    std::array<double, 9> xs{}, ys{};
    std::array<bool, 9> infinite{};
    double cx = 0, cy = 0;
    int affine = 0;
    for (int p = 0; p < 9; ++p) {
        double X = w.pts[std::size_t(p)][0].to_double();
        double Y = w.pts[std::size_t(p)][1].to_double();
        double Z = w.pts[std::size_t(p)][2].to_double();
        if (std::fabs(Z) < 1e-9) {
            infinite[std::size_t(p)] = true;
            xs[std::size_t(p)] = X;
            ys[std::size_t(p)] = Y;
        } else {
            xs[std::size_t(p)] = X / Z;
            ys[std::size_t(p)] = Y / Z;
            cx += xs[std::size_t(p)];
            cy += ys[std::size_t(p)];
            ++affine;
        }
    }
    if (affine > 0) {
        cx /= affine;
        cy /= affine;
    }
    double extent = 1.0;
    for (int p = 0; p < 9; ++p)
        if (!infinite[std::size_t(p)])
            extent = std::max({extent, std::fabs(xs[std::size_t(p)] - cx),
                               std::fabs(ys[std::size_t(p)] - cy)});
    for (int p = 0; p < 9; ++p) {
        if (!infinite[std::size_t(p)]) continue;
        double n = std::hypot(xs[std::size_t(p)], ys[std::size_t(p)]);
        if (n < 1e-12) n = 1;
        xs[std::size_t(p)] = cx + xs[std::size_t(p)] / n * 2 * extent;
        ys[std::size_t(p)] = cy + ys[std::size_t(p)] / n * 2 * extent;
    }

    double lo_x = xs[0], hi_x = xs[0], lo_y = ys[0], hi_y = ys[0];
    for (int p = 1; p < 9; ++p) {
        lo_x = std::min(lo_x, xs[std::size_t(p)]);
        hi_x = std::max(hi_x, xs[std::size_t(p)]);
        lo_y = std::min(lo_y, ys[std::size_t(p)]);
        hi_y = std::max(hi_y, ys[std::size_t(p)]);
    }
    double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
    double scale = 520.0 / span;
    double mx = (lo_x + hi_x) / 2, my = (lo_y + hi_y) / 2;
    auto px = [&](int p) { return 300.0 + (xs[std::size_t(p)] - mx) * scale; };
    auto py = [&](int p) { return 300.0 - (ys[std::size_t(p)] - my) * scale; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 600 600\" "
           "width=\"600\" height=\"600\">\n";
    out << "<rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
    for (const auto& b : r.s.blocks) {
        // The three points are collinear; draw the extreme pair.
        int ids[3] = {b.a, b.b, b.c};
        int u = ids[0], v = ids[1];
        double best = -1;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                double dx = px(ids[i]) - px(ids[j]);
                double dy = py(ids[i]) - py(ids[j]);
                if (dx * dx + dy * dy > best) {
                    best = dx * dx + dy * dy;
                    u = ids[i];
                    v = ids[j];
                }
            }
        out << "<line x1=\"" << detail::fmt2(px(u)) << "\" y1=\"" << detail::fmt2(py(u))
            << "\" x2=\"" << detail::fmt2(px(v)) << "\" y2=\"" << detail::fmt2(py(v))
            << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }
    for (int p = 0; p < 9; ++p)
        out << "<circle cx=\"" << detail::fmt2(px(p)) << "\" cy=\"" << detail::fmt2(py(p))
            << "\" r=\"5\" fill=\"black\"/>\n";
    for (int p = 0; p < 9; ++p)
        out << "<text x=\"" << detail::fmt2(px(p) + 8) << "\" y=\"" << detail::fmt2(py(p) - 8)
            << "\" font-family=\"sans-serif\" font-size=\"14\">" << p << "</text>\n";
    out << "<text x=\"12\" y=\"20\" font-family=\"sans-serif\" font-size=\"12\">" << r.key
        << "</text>\n";
    if (w.d < 0)
        out << "<text x=\"12\" y=\"592\" font-family=\"sans-serif\" font-size=\"12\">"
               "schematic: rational projection of Q[sqrt(" << w.d << ")] coordinates"
               "</text>\n";
    out << "</svg>\n";
    return out.str();
}

inline void render_svg_file(const CatalogRecord& r, const std::string& path) {
    write_text_atomic(path, render_svg(r));
}

}  // namespace ennea
