#pragma once

// SVG drawing of a representation. Paths that share edges are pushed apart
// by a small constant shift so overlaps stay visible; the shift is purely
// cosmetic.

#include "epgt/epgt.hpp"

#include <array>
#include <iomanip>
#include <sstream>

namespace epgt {

struct RenderOptions {
    bool grid = true;
    /// Pixels per grid unit.
    double scale = 40.0;
    /// Pixels between neighbouring lanes of overlapping paths.
    double lane_gap = 4.0;
    double margin = 30.0;
};

namespace detail {

inline constexpr std::array<const char*, 10> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                                         "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};

/// Greedy lanes: each path takes the smallest lane unused by an earlier
/// path it shares an edge with.
inline std::vector<int> overlap_lanes(const Representation& rep) {
    std::vector<int> lane(rep.size(), 0);
    for (std::size_t i = 0; i < rep.size(); ++i) {
        std::vector<char> taken(rep.size() + 1, 0);
        for (std::size_t j = 0; j < i; ++j)
            if (share_edge(rep.paths[i], rep.paths[j])) taken[static_cast<std::size_t>(lane[j])] = 1;
        while (taken[static_cast<std::size_t>(lane[i])]) ++lane[i];
    }
    return lane;
}

} // namespace detail

/// Deterministic SVG 1.1 document, y axis pointing up.
inline std::string render_svg(const Representation& rep, const RenderOptions& opt = {}) {
    BoundingBox box = rep.bounding_box();
    if (box.empty()) box.add({0, 0});
    const int cols = box.max_x - box.min_x, rows = box.max_y - box.min_y;
    const double w = cols * opt.scale + 2 * opt.margin, h = rows * opt.scale + 2 * opt.margin;
    auto px = [&](double x) { return opt.margin + (x - box.min_x) * opt.scale; };
    auto py = [&](double y) { return h - opt.margin - (y - box.min_y) * opt.scale; };

    std::ostringstream os;
    os << std::fixed << std::setprecision(1);
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
       << ' ' << h << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (opt.grid) {
        os << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
        for (int x = box.min_x; x <= box.max_x; ++x)
            os << "<line x1=\"" << px(x) << "\" y1=\"" << py(box.min_y) << "\" x2=\"" << px(x) << "\" y2=\"" << py(box.max_y) << "\"/>\n";
        for (int y = box.min_y; y <= box.max_y; ++y)
            os << "<line x1=\"" << px(box.min_x) << "\" y1=\"" << py(y) << "\" x2=\"" << px(box.max_x) << "\" y2=\"" << py(y) << "\"/>\n";
        // Diagonals of slope +1 clipped to the box.
        for (int d = -rows; d <= cols; ++d) {
            const int x0 = box.min_x + std::max(0, d), y0 = box.min_y + std::max(0, -d);
            const int len = std::min(box.max_x - x0, box.max_y - y0);
            if (len <= 0) continue;
            os << "<line x1=\"" << px(x0) << "\" y1=\"" << py(y0) << "\" x2=\"" << px(x0 + len) << "\" y2=\"" << py(y0 + len) << "\"/>\n";
        }
        os << "</g>\n";
    }
    const auto lanes = detail::overlap_lanes(rep);
    for (std::size_t i = 0; i < rep.size(); ++i) {
        const auto& p = rep.paths[i];
        const char* color = detail::kPalette[i % detail::kPalette.size()];
        // A shift along (1,-1) is transverse to all three grid directions.
        const double shift = lanes[i] * opt.lane_gap / opt.scale;
        const int id = rep.labels ? (*rep.labels)[i] : static_cast<int>(i);
        os << "<g id=\"P" << id << "\"><title>P" << id << ": " << to_string(p) << "</title>\n<polyline fill=\"none\" stroke=\"" << color
           << "\" stroke-width=\"2.5\" stroke-linejoin=\"round\" points=\"";
        for (std::size_t v = 0; v < p.vertices().size(); ++v) {
            const GridPoint g = p.vertices()[v];
            os << (v ? " " : "") << px(g.x + shift) << ',' << py(g.y - shift);
        }
        os << "\"/>\n";
        for (GridPoint b : p.bend_points())
            os << "<circle cx=\"" << px(b.x + shift) << "\" cy=\"" << py(b.y - shift) << "\" r=\"4\" fill=\"" << color << "\"/>\n";
        os << "</g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace epgt
