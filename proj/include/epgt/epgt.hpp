#pragma once

// Edge-intersection semantics of path families on the triangular grid.

#include "epgt/graph.hpp"
#include "epgt/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace epgt {

/// A family of paths, optionally labelled by target-graph vertices:
/// labels[i] is the vertex represented by paths[i].
struct Representation {
    std::vector<LatticePath> paths;
    std::optional<std::vector<int>> labels;

    std::size_t size() const { return paths.size(); }
    bool empty() const { return paths.empty(); }

    /// Throws BadParameter unless labels (when present) are a permutation of 0..n-1.
    void check_labels() const {
        if (!labels) return;
        if (labels->size() != paths.size()) throw Error(ErrorCode::BadParameter, "label count differs from path count");
        std::vector<int> sorted = *labels;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            if (sorted[i] != static_cast<int>(i)) throw Error(ErrorCode::BadParameter, "labels are not a bijection onto 0..n-1");
    }

    int max_bends() const {
        int m = 0;
        for (const auto& p : paths) m = std::max(m, p.bend_count());
        return m;
    }

    BoundingBox bounding_box() const {
        BoundingBox box;
        for (const auto& p : paths)
            for (const auto& v : p.vertices()) box.add(v);
        return box;
    }
};

inline std::vector<GridEdge> edge_intersection(const LatticePath& p, const LatticePath& q) {
    std::vector<GridEdge> out;
    std::set_intersection(p.edges().begin(), p.edges().end(), q.edges().begin(), q.edges().end(), std::back_inserter(out));
    return out;
}

inline std::vector<GridPoint> vertex_intersection(const LatticePath& p, const LatticePath& q) {
    std::vector<GridPoint> out;
    std::set_intersection(p.points().begin(), p.points().end(), q.points().begin(), q.points().end(), std::back_inserter(out));
    return out;
}

inline bool share_edge(const LatticePath& p, const LatticePath& q) {
    auto a = p.edges().begin(), b = q.edges().begin();
    while (a != p.edges().end() && b != q.edges().end()) {
        if (*a < *b) ++a;
        else if (*b < *a) ++b;
        else return true;
    }
    return false;
}

/// Vertex i is path i; i ~ j iff the paths share a grid edge.
inline SimpleGraph intersection_graph(const std::vector<LatticePath>& paths) {
    SimpleGraph g(static_cast<int>(paths.size()));
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (std::size_t j = i + 1; j < paths.size(); ++j)
            if (share_edge(paths[i], paths[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

inline SimpleGraph intersection_graph(const Representation& rep) { return intersection_graph(rep.paths); }

/// Common edges / points of a whole family.
inline std::vector<GridEdge> common_edges(const std::vector<const LatticePath*>& family) {
    if (family.empty()) return {};
    std::vector<GridEdge> core = family.front()->edges();
    for (std::size_t i = 1; i < family.size() && !core.empty(); ++i) {
        std::vector<GridEdge> next;
        std::set_intersection(core.begin(), core.end(), family[i]->edges().begin(), family[i]->edges().end(), std::back_inserter(next));
        core = std::move(next);
    }
    return core;
}

inline std::vector<GridPoint> common_points(const std::vector<const LatticePath*>& family) {
    if (family.empty()) return {};
    std::vector<GridPoint> core = family.front()->points();
    for (std::size_t i = 1; i < family.size() && !core.empty(); ++i) {
        std::vector<GridPoint> next;
        std::set_intersection(core.begin(), core.end(), family[i]->points().begin(), family[i]->points().end(), std::back_inserter(next));
        core = std::move(next);
    }
    return core;
}

/// Segments of the family that take part in some edge intersection.
struct UnderlyingGrid {
    struct Entry {
        std::size_t path;
        Segment segment;
    };
    std::vector<Entry> segments;
    std::vector<GridEdge> edges;  // sorted, deduplicated
    std::vector<GridPoint> points; // sorted, deduplicated

    bool contains(const GridEdge& e) const { return std::binary_search(edges.begin(), edges.end(), e); }
    bool contains(GridPoint p) const { return std::binary_search(points.begin(), points.end(), p); }
    /// True when every unit edge of the straight run a..b lies in the grid.
    bool contains_run(GridPoint a, GridPoint b) const {
        const GridPoint delta = b - a;
        const int steps = std::max(std::abs(delta.x), std::abs(delta.y));
        if (steps == 0) return false;
        const GridPoint unit{delta.x / steps, delta.y / steps};
        if (steps * unit != delta || !direction_of_step(unit)) return false;
        for (int s = 0; s < steps; ++s)
            if (!contains(edge_between(a + s * unit, a + (s + 1) * unit))) return false;
        return true;
    }
};

/// A segment qualifies iff it holds at least one edge shared with a
/// different path of the family.
inline UnderlyingGrid underlying_grid(const std::vector<const LatticePath*>& family) {
    UnderlyingGrid grid;
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (const auto& seg : family[i]->segments()) {
            bool shared = false;
            for (const auto& e : seg.edges()) {
                for (std::size_t j = 0; j < family.size() && !shared; ++j)
                    if (j != i && family[j]->contains(e)) shared = true;
                if (shared) break;
            }
            if (!shared) continue;
            grid.segments.push_back({i, seg});
            for (const auto& e : seg.edges()) {
                grid.edges.push_back(e);
                grid.points.push_back(e.lo);
                grid.points.push_back(e.hi);
            }
        }
    }
    std::sort(grid.edges.begin(), grid.edges.end());
    grid.edges.erase(std::unique(grid.edges.begin(), grid.edges.end()), grid.edges.end());
    std::sort(grid.points.begin(), grid.points.end());
    grid.points.erase(std::unique(grid.points.begin(), grid.points.end()), grid.points.end());
    return grid;
}

inline std::vector<const LatticePath*> pointers(const std::vector<LatticePath>& paths) {
    std::vector<const LatticePath*> out;
    for (const auto& p : paths) out.push_back(&p);
    return out;
}

inline UnderlyingGrid underlying_grid(const Representation& rep) { return underlying_grid(pointers(rep.paths)); }

// Symmetries -------------------------------------------------------------

inline Representation translated(const Representation& rep, GridPoint by) {
    Representation out{{}, rep.labels};
    for (const auto& p : rep.paths) out.paths.push_back(p.translated(by));
    return out;
}

inline LatticePath double_flipped(const LatticePath& p) {
    std::vector<GridPoint> v = p.vertices();
    for (auto& q : v) q = -q;
    return LatticePath(std::move(v));
}

/// Simultaneous horizontal and vertical reflection (point reflection
/// through the origin). It maps the diagonal onto itself, unlike either
/// single flip.
inline Representation double_flipped(const Representation& rep) {
    Representation out{{}, rep.labels};
    for (const auto& p : rep.paths) out.paths.push_back(double_flipped(p));
    return out;
}

// Validation -------------------------------------------------------------

enum class LabelMode { Labeled, Unlabeled };

struct ValidationReport {
    LabelMode mode = LabelMode::Labeled;
    int allowed_bends = 0;
    std::vector<int> bend_counts;
    int max_bends = 0;
    bool bends_ok = false;
    bool adjacency_ok = false;
    int rows = 0;
    int columns = 0;
    std::string detail;

    bool passed() const { return bends_ok && adjacency_ok; }

    std::string text() const {
        std::ostringstream os;
        os << "validation: " << (passed() ? "PASS" : "FAIL") << '\n'
           << "  paths: " << bend_counts.size() << '\n'
           << "  max bends: " << max_bends << " (allowed " << allowed_bends << ") " << (bends_ok ? "ok" : "EXCEEDED") << '\n'
           << "  adjacency (" << (mode == LabelMode::Labeled ? "labeled" : "unlabeled") << "): "
           << (adjacency_ok ? "ok" : "MISMATCH") << '\n'
           << "  bounding box: " << rows << " rows x " << columns << " columns\n";
        if (!detail.empty()) os << "  detail: " << detail << '\n';
        return os.str();
    }

    std::string key_values() const {
        std::ostringstream os;
        os << "result=" << (passed() ? "pass" : "fail") << '\n'
           << "mode=" << (mode == LabelMode::Labeled ? "labeled" : "unlabeled") << '\n'
           << "paths=" << bend_counts.size() << '\n'
           << "max_bends=" << max_bends << '\n'
           << "allowed_bends=" << allowed_bends << '\n'
           << "bends_ok=" << (bends_ok ? 1 : 0) << '\n'
           << "adjacency_ok=" << (adjacency_ok ? 1 : 0) << '\n'
           << "rows=" << rows << '\n'
           << "columns=" << columns << '\n'
           << "bend_counts=";
        for (std::size_t i = 0; i < bend_counts.size(); ++i) os << (i ? "," : "") << bend_counts[i];
        os << '\n';
        return os.str();
    }
};

inline ValidationReport validate(const Representation& rep, const SimpleGraph& target, int k, LabelMode mode) {
    ValidationReport r;
    r.mode = mode;
    r.allowed_bends = k;
    for (const auto& p : rep.paths) r.bend_counts.push_back(p.bend_count());
    r.max_bends = rep.max_bends();
    r.bends_ok = r.max_bends <= k;
    const auto box = rep.bounding_box();
    r.rows = box.rows();
    r.columns = box.columns();

    const SimpleGraph g = intersection_graph(rep);
    if (g.order() != target.order()) {
        r.detail = "family has " + std::to_string(g.order()) + " paths, target has " + std::to_string(target.order()) + " vertices";
        return r;
    }
    if (mode == LabelMode::Labeled) {
        if (!rep.labels) {
            r.detail = "labeled validation requested but the family carries no labels";
            return r;
        }
        try {
            rep.check_labels();
        } catch (const Error& e) {
            r.detail = e.what();
            return r;
        }
        r.adjacency_ok = g.relabeled(*rep.labels) == target;
        if (!r.adjacency_ok) {
            for (int u = 0; u < g.order() && r.detail.empty(); ++u)
                for (int v = u + 1; v < g.order(); ++v) {
                    const int lu = (*rep.labels)[static_cast<std::size_t>(u)], lv = (*rep.labels)[static_cast<std::size_t>(v)];
                    if (g.has_edge(u, v) != target.has_edge(lu, lv)) {
                        r.detail = "paths " + std::to_string(u) + "," + std::to_string(v) + (g.has_edge(u, v) ? " share an edge" : " share no edge") +
                                   " but vertices " + std::to_string(lu) + "," + std::to_string(lv) + (target.has_edge(lu, lv) ? " are adjacent" : " are not adjacent");
                        break;
                    }
                }
        }
    } else {
        r.adjacency_ok = is_isomorphic(g, target);
        if (!r.adjacency_ok) r.detail = "intersection graph is not isomorphic to the target";
    }
    return r;
}

// Path file format: "P<id>: (x1,y1) (x2,y2) ..." -------------------------

struct PathRecord {
    int id = 0;
    LatticePath path;
};

namespace detail {

inline void skip_spaces(const std::string& s, std::size_t& i) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
}

inline bool read_int(const std::string& s, std::size_t& i, int& value) {
    std::size_t j = i;
    if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
    const std::size_t digits = j;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == digits) return false;
    value = std::stoi(s.substr(i, j - i));
    i = j;
    return true;
}

} // namespace detail

inline std::vector<PathRecord> read_path_file(std::istream& in) {
    std::vector<PathRecord> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto fail = [&](const std::string& why) {
            return Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + why);
        };
        std::size_t i = 0;
        detail::skip_spaces(line, i);
        if (i == line.size() || line[i] == '#') continue;
        if (line[i] != 'P') throw fail("expected 'P<id>:'");
        ++i;
        int id = 0;
        if (!detail::read_int(line, i, id) || id < 0) throw fail("bad path id");
        if (i >= line.size() || line[i] != ':') throw fail("expected ':' after path id");
        ++i;
        std::vector<GridPoint> pts;
        while (true) {
            detail::skip_spaces(line, i);
            if (i == line.size()) break;
            GridPoint p;
            if (line[i] != '(') throw fail("expected '('");
            ++i;
            detail::skip_spaces(line, i);
            if (!detail::read_int(line, i, p.x)) throw fail("bad x coordinate");
            detail::skip_spaces(line, i);
            if (i >= line.size() || line[i] != ',') throw fail("expected ','");
            ++i;
            detail::skip_spaces(line, i);
            if (!detail::read_int(line, i, p.y)) throw fail("bad y coordinate");
            detail::skip_spaces(line, i);
            if (i >= line.size() || line[i] != ')') throw fail("expected ')'");
            ++i;
            if (!pts.empty() && !grid_adjacent(pts.back(), p)) {
                throw fail("points " + to_string(pts.back()) + " and " + to_string(p) + " are not grid-adjacent");
            }
            pts.push_back(p);
        }
        try {
            out.push_back({id, LatticePath(std::move(pts))});
        } catch (const Error& e) {
            throw fail(e.what());
        }
    }
    return out;
}

inline std::string format_path_line(int id, const LatticePath& p) { return "P" + std::to_string(id) + ": " + to_string(p); }

/// Labels are taken from the ids when they form a permutation of 0..n-1.
inline Representation representation_from_records(const std::vector<PathRecord>& records) {
    Representation rep;
    std::vector<int> ids;
    for (const auto& r : records) {
        rep.paths.push_back(r.path);
        ids.push_back(r.id);
    }
    std::vector<int> sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    bool permutation = true;
    for (std::size_t i = 0; i < sorted.size(); ++i) permutation = permutation && sorted[i] == static_cast<int>(i);
    if (permutation) rep.labels = ids;
    return rep;
}

inline Representation read_representation(std::istream& in) { return representation_from_records(read_path_file(in)); }

/// Writes one line per path; the id is the label when present, else the index.
inline void write_representation(std::ostream& out, const Representation& rep) {
    for (std::size_t i = 0; i < rep.paths.size(); ++i) {
        const int id = rep.labels ? (*rep.labels)[i] : static_cast<int>(i);
        out << format_path_line(id, rep.paths[i]) << '\n';
    }
}

} // namespace epgt
