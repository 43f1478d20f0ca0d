#pragma once

// Archetype classification of 3-cliques, larger cliques and chordless
// 4-cycles in single-bend representations.

#include "epgt/epgt.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace epgt {

/// Right triangle of the grid: corners {(x,y),(x+k,y),(x+k,y+k)} or
/// {(x,y),(x,y+k),(x+k,y+k)}, k >= 1. Corners are kept sorted.
class RightTriangle {
public:
    static std::optional<RightTriangle> from_corners(GridPoint a, GridPoint b, GridPoint c) {
        std::array<GridPoint, 3> s{a, b, c};
        std::sort(s.begin(), s.end());
        const GridPoint span = s[2] - s[0];
        const int k = span.x;
        if (k < 1 || span.y != k) return std::nullopt;
        if (s[1] != s[0] + GridPoint{k, 0} && s[1] != s[0] + GridPoint{0, k}) return std::nullopt;
        return RightTriangle(s);
    }

    const std::array<GridPoint, 3>& corners() const { return corners_; }
    int size() const { return corners_[2].x - corners_[0].x; }
    bool is_corner(GridPoint p) const { return std::find(corners_.begin(), corners_.end(), p) != corners_.end(); }

    /// The two triangle edges incident to `corner`.
    std::array<GridEdge, 2> incident_edges(GridPoint corner) const {
        std::array<GridEdge, 2> out{};
        std::size_t n = 0;
        for (const auto& other : corners_) {
            if (other == corner) continue;
            const GridPoint d = other - corner;
            const int steps = std::max(std::abs(d.x), std::abs(d.y));
            out[n++] = edge_between(corner, corner + GridPoint{d.x / steps, d.y / steps});
        }
        return out;
    }

    /// Every unit edge on the boundary.
    std::vector<GridEdge> edges() const {
        std::vector<GridEdge> out;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j) {
                const GridPoint d = corners_[j] - corners_[i];
                const int steps = std::max(std::abs(d.x), std::abs(d.y));
                const GridPoint unit{d.x / steps, d.y / steps};
                for (int s = 0; s < steps; ++s) out.push_back(edge_between(corners_[i] + s * unit, corners_[i] + (s + 1) * unit));
            }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<GridPoint> points() const {
        std::vector<GridPoint> out;
        for (const auto& e : edges()) {
            out.push_back(e.lo);
            out.push_back(e.hi);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    bool inside(const UnderlyingGrid& grid) const {
        for (const auto& e : edges())
            if (!grid.contains(e)) return false;
        return true;
    }

    friend bool operator==(const RightTriangle&, const RightTriangle&) = default;

private:
    explicit RightTriangle(std::array<GridPoint, 3> c) : corners_(c) {}
    std::array<GridPoint, 3> corners_;
};

inline std::string to_string(const RightTriangle& t) {
    return "triangle " + to_string(t.corners()[0]) + " " + to_string(t.corners()[1]) + " " + to_string(t.corners()[2]);
}

/// How a path bent at a triangle corner relates to the corner's two sides.
enum class Category { Inside = 0, Midway = 1, Outside = 2 };

inline char letter(Category c) {
    switch (c) {
    case Category::Inside: return 'I';
    case Category::Midway: return 'M';
    case Category::Outside: return 'O';
    }
    return '?';
}

inline Category path_corner_category(const LatticePath& path, const RightTriangle& triangle, GridPoint corner) {
    if (!triangle.is_corner(corner)) throw Error(ErrorCode::BadParameter, to_string(corner) + " is not a triangle corner");
    if (path.bend_point() != corner) throw Error(ErrorCode::NotBentAtCorner, "path does not bend at " + to_string(corner));
    const auto inc = triangle.incident_edges(corner);
    const int held = static_cast<int>(path.contains(inc[0])) + static_cast<int>(path.contains(inc[1]));
    return held == 2 ? Category::Inside : held == 1 ? Category::Midway : Category::Outside;
}

enum class TriangularSubtype { Flag, Paw, Cricket, Bull, ExtendedBull, Net };

inline std::string_view to_string(TriangularSubtype s) {
    switch (s) {
    case TriangularSubtype::Flag: return "flag";
    case TriangularSubtype::Paw: return "paw";
    case TriangularSubtype::Cricket: return "cricket";
    case TriangularSubtype::Bull: return "bull";
    case TriangularSubtype::ExtendedBull: return "extended-bull";
    case TriangularSubtype::Net: return "net";
    }
    return "?";
}

using CategoryTriple = std::array<Category, 3>;

inline std::string to_string(CategoryTriple t) {
    return std::string("(") + letter(t[0]) + "," + letter(t[1]) + "," + letter(t[2]) + ")";
}

/// Table rows, triples sorted I < M < O. The remaining four sorted triples
/// (M,M,O), (I,O,O), (M,O,O), (O,O,O) have no subtype.
inline std::optional<TriangularSubtype> subtype_of(CategoryTriple t) {
    std::sort(t.begin(), t.end());
    using C = Category;
    using S = TriangularSubtype;
    if (t == CategoryTriple{C::Inside, C::Inside, C::Inside}) return S::Flag;
    if (t == CategoryTriple{C::Inside, C::Inside, C::Midway}) return S::Paw;
    if (t == CategoryTriple{C::Inside, C::Inside, C::Outside}) return S::Cricket;
    if (t == CategoryTriple{C::Inside, C::Midway, C::Midway}) return S::Bull;
    if (t == CategoryTriple{C::Inside, C::Midway, C::Outside}) return S::ExtendedBull;
    if (t == CategoryTriple{C::Midway, C::Midway, C::Midway}) return S::Net;
    return std::nullopt;
}

struct CliqueClass {
    enum class Kind { Edge, Claw, Triangular };
    Kind kind = Kind::Edge;
    std::optional<GridEdge> common_edge;
    std::optional<GridPoint> center;
    std::optional<TriangularSubtype> subtype;
    CategoryTriple triple{};
    std::optional<RightTriangle> triangle;

    std::string name() const {
        switch (kind) {
        case Kind::Edge: return "edge-clique";
        case Kind::Claw: return "claw-clique";
        case Kind::Triangular: return std::string(to_string(*subtype)) + "-clique";
        }
        return "?";
    }

    std::string describe() const {
        std::string s = name();
        if (common_edge) s += " common-edge " + to_string(*common_edge);
        if (center) s += " center " + to_string(*center);
        if (triangle) s += " " + to_string(triple) + " " + to_string(*triangle);
        return s;
    }
};

namespace detail {

inline void require_b1(const std::vector<const LatticePath*>& paths) {
    for (const auto* p : paths)
        if (p->bend_count() > 1) throw Error(ErrorCode::NotB1, "path with " + std::to_string(p->bend_count()) + " bends");
}

inline void require_clique(const std::vector<const LatticePath*>& paths) {
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (std::size_t j = i + 1; j < paths.size(); ++j)
            if (!share_edge(*paths[i], *paths[j]))
                throw Error(ErrorCode::NotAClique, "members " + std::to_string(i) + " and " + std::to_string(j) + " share no edge");
}

inline std::vector<GridPoint> distinct_bend_points(const std::vector<const LatticePath*>& paths) {
    std::vector<GridPoint> out;
    for (const auto* p : paths)
        if (auto b = p->bend_point()) out.push_back(*b);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Right triangles with corners drawn from `points` whose boundary lies in `grid`.
inline std::vector<RightTriangle> triangles_on(const std::vector<GridPoint>& points, const UnderlyingGrid& grid) {
    std::vector<RightTriangle> out;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            for (std::size_t k = j + 1; k < points.size(); ++k)
                if (auto t = RightTriangle::from_corners(points[i], points[j], points[k]); t && t->inside(grid)) out.push_back(*t);
    return out;
}

/// Some right triangle whose boundary lies in `grid`, corners unrestricted.
inline std::optional<RightTriangle> any_triangle(const UnderlyingGrid& grid) {
    for (GridPoint a : grid.points)
        for (int k = 1; grid.contains(a + GridPoint{k, k}); ++k)
            for (GridPoint mid : {a + GridPoint{k, 0}, a + GridPoint{0, k}})
                if (auto t = RightTriangle::from_corners(a, mid, a + GridPoint{k, k}); t && t->inside(grid)) return t;
    return std::nullopt;
}

// Subtype from per-corner category groups. A group that is entirely inside
// contributes I; otherwise it contributes any non-inside category it holds
// ("at least one midway/outside path"). The first table row reachable by
// some choice wins.
inline std::optional<std::pair<TriangularSubtype, CategoryTriple>> subtype_from_groups(const std::array<std::vector<Category>, 3>& groups) {
    std::array<std::vector<Category>, 3> options;
    for (std::size_t c = 0; c < 3; ++c) {
        std::set<Category> present(groups[c].begin(), groups[c].end());
        present.erase(Category::Inside);
        if (present.empty()) options[c] = {Category::Inside};
        else options[c].assign(present.begin(), present.end());
    }
    std::optional<std::pair<TriangularSubtype, CategoryTriple>> best;
    for (Category a : options[0])
        for (Category b : options[1])
            for (Category c : options[2]) {
                CategoryTriple t{a, b, c};
                std::sort(t.begin(), t.end());
                if (auto s = subtype_of(t); s && (!best || *s < best->first)) best = std::pair{*s, t};
            }
    return best;
}

} // namespace detail

/// Edge / triangular / claw classification of a clique of B1 paths.
/// Triangular cases require every path to bend at a corner of a right
/// triangle of the clique's underlying grid; the per-corner groups then
/// select the subtype.
inline CliqueClass classify_clique(const std::vector<const LatticePath*>& paths) {
    detail::require_b1(paths);
    detail::require_clique(paths);
    if (paths.empty()) throw Error(ErrorCode::NotAClique, "empty clique");

    CliqueClass out;
    if (auto core = common_edges(paths); !core.empty()) {
        out.kind = CliqueClass::Kind::Edge;
        out.common_edge = core.front();
        return out;
    }

    // A corner-bent right triangle takes precedence over a single-point
    // vertex core: a clique with an outside path at corner u always has
    // vertex core {u}, so testing the claw first would hide those subtypes.
    const UnderlyingGrid grid = underlying_grid(paths);
    const auto triangles = detail::triangles_on(detail::distinct_bend_points(paths), grid);
    std::string forbidden;
    for (const auto& t : triangles) {
        std::array<std::vector<Category>, 3> groups;
        bool all_at_corners = true;
        for (const auto* p : paths) {
            const auto b = p->bend_point();
            const auto& cs = t.corners();
            const auto it = b ? std::find(cs.begin(), cs.end(), *b) : cs.end();
            if (it == cs.end()) {
                all_at_corners = false;
                break;
            }
            groups[static_cast<std::size_t>(it - cs.begin())].push_back(path_corner_category(*p, t, *b));
        }
        if (!all_at_corners) continue;
        auto sub = detail::subtype_from_groups(groups);
        if (!sub) {
            forbidden = "corner categories ";
            for (const auto& g : groups) {
                forbidden += '[';
                for (Category c : g) forbidden += letter(c);
                forbidden += ']';
            }
            forbidden += " on " + to_string(t) + " match no subtype";
            continue;
        }
        out.kind = CliqueClass::Kind::Triangular;
        out.subtype = sub->first;
        out.triple = sub->second;
        out.triangle = t;
        return out;
    }

    const auto points = common_points(paths);
    if (points.size() == 1) {
        out.kind = CliqueClass::Kind::Claw;
        out.center = points.front();
        return out;
    }
    if (!forbidden.empty()) throw Error(ErrorCode::Unclassifiable, forbidden);
    if (!triangles.empty()) throw Error(ErrorCode::AssumptionViolated, "some clique path bends away from every candidate triangle corner");
    if (auto t = detail::any_triangle(grid))
        throw Error(ErrorCode::AssumptionViolated, "the underlying grid holds " + to_string(*t) + " but some corner is no path's bend point");
    throw Error(ErrorCode::Unclassifiable, "no common edge, vertex core of size " + std::to_string(points.size()) +
                                               ", and no right triangle in the underlying grid");
}

inline CliqueClass classify_triangle(const LatticePath& p1, const LatticePath& p2, const LatticePath& p3) {
    return classify_clique({&p1, &p2, &p3});
}

inline CliqueClass classify_maximal_clique(const Representation& rep, const std::vector<int>& clique) {
    std::vector<const LatticePath*> paths;
    for (int v : clique) paths.push_back(&rep.paths.at(static_cast<std::size_t>(v)));
    return classify_clique(paths);
}

// Chordless 4-cycles -------------------------------------------------------

struct CycleClass {
    enum class Kind { TruePie, FalsePie, RFrame, TFrame, PFrame, Flag, Butterfly };
    Kind kind = Kind::TruePie;
    std::optional<GridPoint> center;
    std::vector<GridPoint> quad;
    std::vector<RightTriangle> triangles;
    std::optional<GridPoint> shared_corner;

    std::string name() const {
        switch (kind) {
        case Kind::TruePie: return "true-pie";
        case Kind::FalsePie: return "false-pie";
        case Kind::RFrame: return "r-frame";
        case Kind::TFrame: return "t-frame";
        case Kind::PFrame: return "p-frame";
        case Kind::Flag: return "flag";
        case Kind::Butterfly: return "butterfly";
        }
        return "?";
    }

    std::string describe() const {
        std::string s = name();
        if (center) s += " center " + to_string(*center);
        if (!quad.empty()) {
            s += " quad";
            for (auto p : quad) s += " " + to_string(p);
        }
        for (const auto& t : triangles) s += " " + to_string(t);
        if (shared_corner) s += " shared " + to_string(*shared_corner);
        return s;
    }
};

namespace detail {

inline std::optional<CycleClass> match_pie(const std::array<const LatticePath*, 4>& ps) {
    std::vector<const LatticePath*> fam(ps.begin(), ps.end());
    for (GridPoint b : common_points(fam)) {
        std::array<std::vector<GridPoint>, 4> arms;
        std::vector<GridPoint> all;
        bool ok = true;
        for (std::size_t i = 0; i < 4 && ok; ++i) {
            for (GridPoint ray : kRays)
                if (ps[i]->contains(b + ray) && ps[i]->contains(edge_between(b, b + ray))) arms[i].push_back(ray);
            ok = arms[i].size() == 2;
            all.insert(all.end(), arms[i].begin(), arms[i].end());
        }
        if (!ok) continue;
        std::sort(all.begin(), all.end());
        std::vector<GridPoint> distinct = all;
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        if (distinct.size() != 4) continue;
        if (std::any_of(distinct.begin(), distinct.end(), [&](GridPoint r) { return std::count(all.begin(), all.end(), r) != 2; })) continue;
        std::sort(distinct.begin(), distinct.end(), [](GridPoint a, GridPoint c) { return ray_angle(a) < ray_angle(c); });
        auto consecutive = [&](const std::vector<GridPoint>& pair) {
            const auto i = std::find(distinct.begin(), distinct.end(), pair[0]) - distinct.begin();
            const auto j = std::find(distinct.begin(), distinct.end(), pair[1]) - distinct.begin();
            const auto gap = std::abs(i - j);
            return gap == 1 || gap == 3;
        };
        CycleClass c;
        c.center = b;
        c.kind = std::all_of(arms.begin(), arms.end(), consecutive) ? CycleClass::Kind::TruePie : CycleClass::Kind::FalsePie;
        return c;
    }
    return std::nullopt;
}

inline std::optional<Direction> run_direction(GridPoint a, GridPoint b) {
    const GridPoint d = b - a;
    const int steps = std::max(std::abs(d.x), std::abs(d.y));
    if (steps == 0) return std::nullopt;
    const GridPoint unit{d.x / steps, d.y / steps};
    if (steps * unit != d) return std::nullopt;
    return direction_of_step(unit);
}

inline std::vector<GridPoint> run_points(GridPoint a, GridPoint b) {
    const GridPoint d = b - a;
    const int steps = std::max(std::abs(d.x), std::abs(d.y));
    const GridPoint unit{d.x / steps, d.y / steps};
    std::vector<GridPoint> out;
    for (int s = 0; s <= steps; ++s) out.push_back(a + s * unit);
    std::sort(out.begin(), out.end());
    return out;
}

inline bool runs_disjoint(GridPoint a, GridPoint b, GridPoint c, GridPoint d) {
    const auto p = run_points(a, b), q = run_points(c, d);
    std::vector<GridPoint> common;
    std::set_intersection(p.begin(), p.end(), q.begin(), q.end(), std::back_inserter(common));
    return common.empty();
}

inline std::optional<CycleClass> match_frame(const std::array<const LatticePath*, 4>& ps, const UnderlyingGrid& grid) {
    std::vector<GridPoint> bends;
    for (const auto* p : ps) {
        if (!p->bend_point()) return std::nullopt;
        bends.push_back(*p->bend_point());
    }
    std::vector<GridPoint> sorted = bends;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
    // The three cyclic orders of four corners, up to rotation and reflection.
    const std::array<std::array<std::size_t, 4>, 3> orders{{{0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}}};
    for (const auto& ord : orders) {
        std::array<GridPoint, 4> q{sorted[ord[0]], sorted[ord[1]], sorted[ord[2]], sorted[ord[3]]};
        std::array<Direction, 4> dirs{};
        bool ok = true;
        for (std::size_t i = 0; i < 4 && ok; ++i) {
            auto d = run_direction(q[i], q[(i + 1) % 4]);
            ok = d && grid.contains_run(q[i], q[(i + 1) % 4]);
            if (ok) dirs[i] = *d;
        }
        if (!ok) continue;
        for (std::size_t i = 0; i < 4 && ok; ++i) ok = dirs[i] != dirs[(i + 1) % 4];
        if (!ok) continue;
        if (!runs_disjoint(q[0], q[1], q[2], q[3]) || !runs_disjoint(q[1], q[2], q[3], q[0])) continue;
        const int parallel_pairs = static_cast<int>(dirs[0] == dirs[2]) + static_cast<int>(dirs[1] == dirs[3]);
        CycleClass c;
        c.quad.assign(q.begin(), q.end());
        if (parallel_pairs == 2) {
            const bool rectangle = std::none_of(dirs.begin(), dirs.end(), [](Direction d) { return d == Direction::Diagonal; });
            c.kind = rectangle ? CycleClass::Kind::RFrame : CycleClass::Kind::PFrame;
        } else {
            c.kind = CycleClass::Kind::TFrame;
        }
        return c;
    }
    return std::nullopt;
}

inline int bends_at(const std::array<const LatticePath*, 4>& ps, GridPoint p) {
    return static_cast<int>(std::count_if(ps.begin(), ps.end(), [&](const LatticePath* q) { return q->bend_point() == p; }));
}

inline std::optional<CycleClass> match_flag(const std::array<const LatticePath*, 4>& ps, const UnderlyingGrid& grid) {
    std::vector<const LatticePath*> fam(ps.begin(), ps.end());
    for (const auto& t : triangles_on(distinct_bend_points(fam), grid)) {
        const auto& cs = t.corners();
        if (std::all_of(cs.begin(), cs.end(), [&](GridPoint c) { return bends_at(ps, c) <= 2; })) {
            CycleClass c;
            c.kind = CycleClass::Kind::Flag;
            c.triangles = {t};
            return c;
        }
    }
    return std::nullopt;
}

inline std::optional<CycleClass> match_butterfly(const std::array<const LatticePath*, 4>& ps, const UnderlyingGrid& grid) {
    std::vector<GridPoint> bends;
    for (const auto* p : ps) {
        if (!p->bend_point()) return std::nullopt;
        bends.push_back(*p->bend_point());
    }
    std::sort(bends.begin(), bends.end());
    if (std::adjacent_find(bends.begin(), bends.end()) != bends.end()) return std::nullopt;
    // Pair the four bends into two triangles sharing one extra corner v.
    const std::array<std::array<std::size_t, 4>, 3> pairings{{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
    for (const auto& pr : pairings) {
        for (GridPoint v : grid.points) {
            if (std::binary_search(bends.begin(), bends.end(), v)) continue;
            auto t1 = RightTriangle::from_corners(v, bends[pr[0]], bends[pr[1]]);
            auto t2 = RightTriangle::from_corners(v, bends[pr[2]], bends[pr[3]]);
            if (!t1 || !t2 || !t1->inside(grid) || !t2->inside(grid)) continue;
            const auto a = t1->points(), b = t2->points();
            std::vector<GridPoint> common;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
            if (common != std::vector<GridPoint>{v}) continue;
            CycleClass c;
            c.kind = CycleClass::Kind::Butterfly;
            c.triangles = {*t1, *t2};
            c.shared_corner = v;
            return c;
        }
    }
    return std::nullopt;
}

} // namespace detail

/// Classifies the chordless cycle p1-p2-p3-p4-p1. Classes are tried in the
/// order pies, frames, flag, butterfly.
inline CycleClass classify_c4(const LatticePath& p1, const LatticePath& p2, const LatticePath& p3, const LatticePath& p4) {
    const std::array<const LatticePath*, 4> ps{&p1, &p2, &p3, &p4};
    detail::require_b1({ps.begin(), ps.end()});
    for (std::size_t i = 0; i < 4; ++i) {
        if (!share_edge(*ps[i], *ps[(i + 1) % 4])) throw Error(ErrorCode::NotChordlessC4, "cycle edge missing");
    }
    if (share_edge(p1, p3) || share_edge(p2, p4)) throw Error(ErrorCode::NotChordlessC4, "cycle has a chord");

    if (auto c = detail::match_pie(ps)) return *c;
    const UnderlyingGrid grid = underlying_grid(std::vector<const LatticePath*>(ps.begin(), ps.end()));
    if (auto c = detail::match_frame(ps, grid)) return *c;
    if (auto c = detail::match_flag(ps, grid)) return *c;
    if (auto c = detail::match_butterfly(ps, grid)) return *c;
    throw Error(ErrorCode::Unclassifiable, "chordless 4-cycle matches no archetype");
}

} // namespace epgt
