#pragma once

// Exhaustive checks of the elementary intersection facts for pairs of
// single-bend paths.

#include "epgt/enumerate.hpp"
#include "epgt/epgt.hpp"
#include "epgt/report.hpp"

#include <map>
#include <numeric>
#include <set>

namespace epgt {

/// Maximal co-linear runs of an edge set, and the number of lines they use.
struct ColinearComponents {
    int components = 0;
    int lines = 0;
};

inline ColinearComponents colinear_components(const std::vector<GridEdge>& edges) {
    std::map<GridLine, std::vector<int>> by_line;
    for (const auto& e : edges) by_line[line_of(e)].push_back(position_along(e.direction(), e.lo));
    ColinearComponents out;
    out.lines = static_cast<int>(by_line.size());
    for (auto& [line, pos] : by_line) {
        std::sort(pos.begin(), pos.end());
        out.components += 1;
        for (std::size_t i = 1; i < pos.size(); ++i)
            if (pos[i] != pos[i - 1] + 1) out.components += 1;
    }
    return out;
}

/// Connected components of the common subgraph (shared points and shared edges).
inline int intersection_components(const LatticePath& p, const LatticePath& q) {
    const auto pts = vertex_intersection(p, q);
    std::vector<std::size_t> parent(pts.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    auto at = [&](GridPoint g) { return static_cast<std::size_t>(std::lower_bound(pts.begin(), pts.end(), g) - pts.begin()); };
    int comps = static_cast<int>(pts.size());
    for (const auto& e : edge_intersection(p, q)) {
        const auto a = find(at(e.lo)), b = find(at(e.hi));
        if (a != b) {
            parent[a] = b;
            --comps;
        }
    }
    return comps;
}

namespace detail {

inline bool all_in_one_segment(const std::vector<GridEdge>& common, const LatticePath& p, const LatticePath& q) {
    for (const auto* path : {&p, &q})
        for (const auto& s : path->segments())
            if (std::all_of(common.begin(), common.end(), [&](const GridEdge& e) { return s.contains(e); })) return true;
    return false;
}

inline std::vector<GridPoint> segment_points(const Segment& s) {
    std::vector<GridPoint> out;
    for (int t = s.lo(); t <= s.hi(); ++t) out.push_back(point_on(s.line, t));
    return out;
}

} // namespace detail

/// Checks, over every ordered pair of distinct paths with at most one bend
/// in the window:
///  R1' the edge intersection has at most 2 co-linear runs on at most 2 lines
///      (the literal component count of the common subgraph is only measured);
///  R2  a nonempty edge intersection either comes from equal bend points and
///      equal angle classes, or lies inside one of the four segments;
///  R3  co-linear segments touching in exactly one point b force b to be both
///      bend points, an endpoint of a shared edge, and the intersection to
///      leave the common line;
///  R4  no such path has edges on two parallel lines, and one meeting two
///      crossing lines bends at their crossing with a segment on each.
inline PropertyReport remark_suite(const SearchBounds& window) {
    if (window.width > 6 || window.height > 6)
        throw Error(ErrorCode::WindowTooLarge, "remark suite is limited to 6x6 windows");
    SearchBounds b = window;
    b.max_bends = 1;
    const auto paths = enumerate_paths(b);

    PropertyReport r;
    r.name = "remark-suite";
    r.set("window", std::to_string(b.width) + "x" + std::to_string(b.height));
    r.set("paths", paths.size());

    int r1_max_components = 0, r1_max_lines = 0, literal_max = 0;
    std::size_t pairs = 0, intersecting = 0, r3_cases = 0;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        const auto& p = paths[i];
        for (std::size_t j = 0; j < paths.size(); ++j) {
            if (i == j) continue;
            const auto& q = paths[j];
            ++pairs;
            const auto common = edge_intersection(p, q);
            const auto cc = colinear_components(common);
            r1_max_components = std::max(r1_max_components, cc.components);
            r1_max_lines = std::max(r1_max_lines, cc.lines);
            if (cc.components > 2 || cc.lines > 2) r.fail("R1' " + to_string(p) + " & " + to_string(q));
            if (!vertex_intersection(p, q).empty()) literal_max = std::max(literal_max, intersection_components(p, q));
            if (common.empty()) continue;
            ++intersecting;

            const bool same_bend = p.bend_point() && p.bend_point() == q.bend_point() && bend_shape(p).angle() == bend_shape(q).angle();
            if (!same_bend && !detail::all_in_one_segment(common, p, q)) r.fail("R2 " + to_string(p) + " & " + to_string(q));

            if (p.bend_count() != 1 || q.bend_count() != 1) continue;
            for (const auto& si : p.segments())
                for (const auto& sj : q.segments()) {
                    if (si.line != sj.line) continue;
                    const auto a = detail::segment_points(si), c = detail::segment_points(sj);
                    std::vector<GridPoint> touch;
                    std::set_intersection(a.begin(), a.end(), c.begin(), c.end(), std::back_inserter(touch));
                    if (touch.size() != 1) continue;
                    ++r3_cases;
                    const GridPoint bp = touch.front();
                    const bool bends = p.bend_point() == bp && q.bend_point() == bp;
                    const bool on_edge = std::any_of(common.begin(), common.end(), [&](const GridEdge& e) { return e.lo == bp || e.hi == bp; });
                    const bool leaves = std::any_of(common.begin(), common.end(), [&](const GridEdge& e) { return line_of(e) != si.line; });
                    if (!bends || !on_edge || !leaves) r.fail("R3 " + to_string(p) + " & " + to_string(q));
                }
        }
        // R4 concerns single paths.
        std::set<GridLine> lines;
        for (const auto& s : p.segments()) lines.insert(s.line);
        for (auto l1 = lines.begin(); l1 != lines.end(); ++l1)
            for (auto l2 = std::next(l1); l2 != lines.end(); ++l2) {
                const auto meet = line_intersection(*l1, *l2);
                if (meet.kind == LineIntersection::Kind::Empty) r.fail("R4 parallel lines " + to_string(p));
                if (meet.kind == LineIntersection::Kind::Point && p.bend_point() != meet.point) r.fail("R4 crossing " + to_string(p));
            }
    }
    r.set("ordered_pairs", pairs);
    r.set("intersecting_pairs", intersecting);
    r.set("r1_max_colinear_components", r1_max_components);
    r.set("r1_max_lines", r1_max_lines);
    r.set("r1_literal_max_components", literal_max);
    r.set("r3_hypothesis_cases", r3_cases);
    return r;
}

} // namespace epgt
