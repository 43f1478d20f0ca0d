#pragma once

// Seven-color clique coloring of B1 families: per-line two-coloring of
// segments, triple assembly, and recoloring at bend points.

#include "epgt/epgt.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace epgt {

enum class ComponentColor : std::uint8_t { A, B };

inline char letter(ComponentColor c) { return c == ComponentColor::A ? 'a' : 'b'; }

/// Indexed by Direction: horizontal, vertical, diagonal.
using ColorTriple = std::array<ComponentColor, 3>;

inline std::string to_string(const ColorTriple& t) {
    return std::string("(") + letter(t[0]) + "," + letter(t[1]) + "," + letter(t[2]) + ")";
}

inline int a_count(const ColorTriple& t) {
    return static_cast<int>(std::count(t.begin(), t.end(), ComponentColor::A));
}

/// Fixed map (a,a,b)->1, (a,b,a)->2, (b,a,a)->3, (a,b,b)->4, (b,a,b)->5,
/// (b,b,a)->6, (b,b,b)->7.
inline int color_index(const ColorTriple& t) {
    const bool h = t[0] == ComponentColor::A, v = t[1] == ComponentColor::A, d = t[2] == ComponentColor::A;
    const int mask = (h ? 4 : 0) | (v ? 2 : 0) | (d ? 1 : 0);
    switch (mask) {
    case 6: return 1;
    case 5: return 2;
    case 3: return 3;
    case 4: return 4;
    case 2: return 5;
    case 1: return 6;
    case 0: return 7;
    default: throw Error(ErrorCode::BadParameter, "triple (a,a,a) has no color");
    }
}

/// Two-colors co-linear segments so the b class is edge-disjoint and every
/// maximal clique of at least two overlapping segments holds a b segment.
/// Cliques are swept left to right; an unhit clique marks b its member with
/// the smallest right endpoint (then left endpoint, then input order) among
/// those sharing no edge with an existing b segment.
inline std::vector<ComponentColor> two_clique_color_line(const std::vector<Segment>& segments) {
    std::vector<ComponentColor> colors(segments.size(), ComponentColor::A);
    if (segments.empty()) return colors;
    const GridLine line = segments.front().line;
    for (const auto& s : segments) {
        if (s.line != line) throw Error(ErrorCode::SegmentsNotColinear, to_string(s) + " is not on " + to_string(line));
        if (s.length() < 1) throw Error(ErrorCode::BadParameter, "segment without edges");
    }
    // Maximal cliques of an interval family are stabbed at left endpoints.
    std::vector<int> starts;
    for (const auto& s : segments) starts.push_back(s.lo());
    std::sort(starts.begin(), starts.end());
    starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
    std::vector<std::vector<std::size_t>> stabbed;
    for (int t : starts) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < segments.size(); ++i)
            if (segments[i].lo() <= t && t + 1 <= segments[i].hi()) members.push_back(i);
        stabbed.push_back(std::move(members));
    }
    auto subset = [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    auto overlaps = [&](std::size_t i, std::size_t j) {
        return std::max(segments[i].lo(), segments[j].lo()) < std::min(segments[i].hi(), segments[j].hi());
    };
    for (std::size_t c = 0; c < stabbed.size(); ++c) {
        const auto& clique = stabbed[c];
        if (clique.size() < 2) continue;
        bool maximal = true;
        for (std::size_t o = 0; o < stabbed.size() && maximal; ++o)
            if (o != c && stabbed[o] != clique && subset(clique, stabbed[o])) maximal = false;
        if (!maximal) continue;
        if (std::any_of(clique.begin(), clique.end(), [&](std::size_t i) { return colors[i] == ComponentColor::B; })) continue;
        std::optional<std::size_t> pick;
        for (std::size_t i : clique) {
            bool fresh = true;
            for (std::size_t j = 0; j < segments.size() && fresh; ++j)
                if (colors[j] == ComponentColor::B && overlaps(i, j)) fresh = false;
            if (!fresh) continue;
            if (!pick || std::pair{segments[i].hi(), segments[i].lo()} < std::pair{segments[*pick].hi(), segments[*pick].lo()}) pick = i;
        }
        colors.at(*pick) = ComponentColor::B;
    }
    return colors;
}

/// Phase-1 coloring of one grid line.
struct LineColoring {
    GridLine line;
    std::vector<int> paths;
    std::vector<Segment> segments;
    std::vector<ComponentColor> colors;
};

inline void require_b1(const Representation& rep) {
    for (std::size_t i = 0; i < rep.paths.size(); ++i)
        if (rep.paths[i].bend_count() > 1) throw Error(ErrorCode::NotB1, "path " + std::to_string(i) + " has more than one bend");
}

inline std::vector<LineColoring> line_colorings(const Representation& rep) {
    require_b1(rep);
    std::map<GridLine, LineColoring> lines;
    for (std::size_t i = 0; i < rep.paths.size(); ++i) {
        for (const auto& s : rep.paths[i].segments()) {
            auto& lc = lines[s.line];
            lc.line = s.line;
            lc.paths.push_back(static_cast<int>(i));
            lc.segments.push_back(s);
        }
    }
    std::vector<LineColoring> out;
    for (auto& [line, lc] : lines) {
        lc.colors = two_clique_color_line(lc.segments);
        out.push_back(std::move(lc));
    }
    return out;
}

inline std::vector<ColorTriple> initial_colors(const Representation& rep) {
    std::vector<ColorTriple> triples(rep.paths.size(), ColorTriple{ComponentColor::B, ComponentColor::B, ComponentColor::B});
    for (const auto& lc : line_colorings(rep))
        for (std::size_t j = 0; j < lc.paths.size(); ++j)
            triples[static_cast<std::size_t>(lc.paths[j])][static_cast<std::size_t>(lc.line.direction)] = lc.colors[j];
    return triples;
}

/// Maximal cliques (size >= 2) of a representation, with the centered ones
/// (empty edge core, vertex core a single point) indexed by center.
class CliqueIndex {
public:
    explicit CliqueIndex(const Representation& rep) {
        for (auto& c : maximal_cliques(intersection_graph(rep))) {
            if (c.size() < 2) continue;
            std::vector<const LatticePath*> members;
            for (int v : c) members.push_back(&rep.paths[static_cast<std::size_t>(v)]);
            if (c.size() >= 3 && common_edges(members).empty()) {
                const auto pts = common_points(members);
                if (pts.size() == 1) centered_[pts.front()].push_back(cliques_.size());
            }
            cliques_.push_back(std::move(c));
        }
    }

    const std::vector<std::vector<int>>& cliques() const { return cliques_; }

    std::vector<std::vector<int>> centered_at(GridPoint x) const {
        std::vector<std::vector<int>> out;
        if (auto it = centered_.find(x); it != centered_.end())
            for (std::size_t i : it->second) out.push_back(cliques_[i]);
        return out;
    }

private:
    std::vector<std::vector<int>> cliques_;
    std::map<GridPoint, std::vector<std::size_t>> centered_;
};

inline bool monocolored(const std::vector<int>& clique, const std::vector<ColorTriple>& colors) {
    for (int v : clique)
        if (colors[static_cast<std::size_t>(v)] != colors[static_cast<std::size_t>(clique.front())]) return false;
    return true;
}

/// A centered clique is regular when some member does not bend at the center.
inline bool regular_at(const Representation& rep, const std::vector<int>& clique, GridPoint x) {
    return std::any_of(clique.begin(), clique.end(), [&](int v) { return !rep.paths[static_cast<std::size_t>(v)].bends_at(x); });
}

inline std::vector<std::vector<int>> monocolored_regular_claws_at(const Representation& rep, const CliqueIndex& index,
                                                                  const std::vector<ColorTriple>& colors, GridPoint x) {
    std::vector<std::vector<int>> out;
    for (const auto& c : index.centered_at(x)) {
        const auto& t = colors[static_cast<std::size_t>(c.front())];
        if (regular_at(rep, c, x) && a_count(t) == 2 && monocolored(c, colors)) out.push_back(c);
    }
    return out;
}

inline std::vector<std::vector<int>> monocolored_regular_claws_at(const Representation& rep, const std::vector<ColorTriple>& colors, GridPoint x) {
    return monocolored_regular_claws_at(rep, CliqueIndex(rep), colors, x);
}

/// One accepted recoloring: `paths` flipped component `flipped[i]` from a to b.
struct RecolorEvent {
    GridPoint x;
    std::vector<int> paths;
    std::vector<Direction> flipped;
    std::vector<ColorTriple> before;
    std::vector<ColorTriple> after;
};

namespace detail {

inline bool similar(const LatticePath& p, const LatticePath& q) {
    return p.bend_count() == 1 && q.bend_count() == 1 && bend_shape(p).directions() == bend_shape(q).directions();
}

// (II): the recolored segment lies in the same-direction segment of a
// similar path bent at x that is still colored a there.
inline bool property_two(const Representation& rep, const std::vector<ColorTriple>& colors, GridPoint x, int p, Direction d) {
    const auto& path = rep.paths[static_cast<std::size_t>(p)];
    const Segment seg = *path.segment_in(d);
    for (std::size_t q = 0; q < rep.paths.size(); ++q) {
        if (static_cast<int>(q) == p) continue;
        const auto& other = rep.paths[q];
        if (!other.bends_at(x) || !similar(path, other)) continue;
        if (colors[q][static_cast<std::size_t>(d)] != ComponentColor::A) continue;
        if (other.segment_in(d)->contains(seg)) return true;
    }
    return false;
}

// (III): two recolored paths share only x; with more, edge-sharing pairs
// never sit in a common regular claw at x.
inline bool property_three(const Representation& rep, const CliqueIndex& index, GridPoint x, const std::vector<int>& chosen) {
    if (chosen.size() == 2) {
        return vertex_intersection(rep.paths[static_cast<std::size_t>(chosen[0])], rep.paths[static_cast<std::size_t>(chosen[1])]) ==
               std::vector<GridPoint>{x};
    }
    const auto claws = index.centered_at(x);
    for (std::size_t i = 0; i < chosen.size(); ++i)
        for (std::size_t j = i + 1; j < chosen.size(); ++j) {
            if (!share_edge(rep.paths[static_cast<std::size_t>(chosen[i])], rep.paths[static_cast<std::size_t>(chosen[j])])) continue;
            for (const auto& c : claws) {
                if (!regular_at(rep, c, x)) continue;
                const bool both = std::binary_search(c.begin(), c.end(), chosen[i]) && std::binary_search(c.begin(), c.end(), chosen[j]);
                if (both) return false;
            }
        }
    return true;
}

// (IV), checked strictly: no maximal clique centered at x is monocolored.
inline bool property_four(const CliqueIndex& index, const std::vector<ColorTriple>& colors, GridPoint x) {
    for (const auto& c : index.centered_at(x))
        if (monocolored(c, colors)) return false;
    return true;
}

inline void for_each_subset(std::size_t n, std::size_t k, std::vector<std::size_t>& cur, std::size_t from,
                            const std::function<bool(const std::vector<std::size_t>&)>& fn, bool& stop) {
    if (stop) return;
    if (cur.size() == k) {
        stop = fn(cur);
        return;
    }
    for (std::size_t i = from; i < n && !stop; ++i) {
        cur.push_back(i);
        for_each_subset(n, k, cur, i + 1, fn, stop);
        cur.pop_back();
    }
}

} // namespace detail

/// Recolors at most four paths bent at x so that properties (I)-(IV) hold.
/// Candidate sets are tried by size, then lexicographically, with flip
/// choices in binary order; the first feasible one is applied.
inline std::optional<RecolorEvent> recolor_at(const Representation& rep, const CliqueIndex& index, std::vector<ColorTriple>& colors,
                                              std::vector<char>& recolored, GridPoint x) {
    if (monocolored_regular_claws_at(rep, index, colors, x).empty()) return std::nullopt;
    std::vector<int> candidates;
    for (std::size_t i = 0; i < rep.paths.size(); ++i)
        if (rep.paths[i].bends_at(x) && !recolored[i] && a_count(colors[i]) == 2) candidates.push_back(static_cast<int>(i));

    std::optional<RecolorEvent> found;
    for (std::size_t size = 1; size <= std::min<std::size_t>(4, candidates.size()) && !found; ++size) {
        bool stop = false;
        std::vector<std::size_t> cur;
        detail::for_each_subset(candidates.size(), size, cur, 0, [&](const std::vector<std::size_t>& pick) {
            std::vector<int> chosen;
            for (std::size_t i : pick) chosen.push_back(candidates[i]);
            if (size >= 2 && !detail::property_three(rep, index, x, chosen)) return false;
            for (unsigned mask = 0; mask < (1u << size); ++mask) {
                std::vector<ColorTriple> trial = colors;
                std::vector<Direction> flipped;
                for (std::size_t k = 0; k < size; ++k) {
                    const auto& path = rep.paths[static_cast<std::size_t>(chosen[k])];
                    const auto shape = bend_shape(path).directions();
                    const Direction d = (mask >> k) & 1u ? shape.second : shape.first;
                    trial[static_cast<std::size_t>(chosen[k])][static_cast<std::size_t>(d)] = ComponentColor::B;
                    flipped.push_back(d);
                }
                bool ok = true;
                for (std::size_t k = 0; k < size && ok; ++k) ok = detail::property_two(rep, trial, x, chosen[k], flipped[k]);
                if (!ok || !detail::property_four(index, trial, x)) continue;
                RecolorEvent ev{x, chosen, flipped, {}, {}};
                for (int p : chosen) {
                    ev.before.push_back(colors[static_cast<std::size_t>(p)]);
                    ev.after.push_back(trial[static_cast<std::size_t>(p)]);
                }
                found = std::move(ev);
                return true;
            }
            return false;
        }, stop);
    }
    if (!found) throw Error(ErrorCode::NoFeasibleRecoloring, "no recoloring at " + to_string(x) + " satisfies (I)-(IV)");
    for (std::size_t k = 0; k < found->paths.size(); ++k) {
        colors[static_cast<std::size_t>(found->paths[k])] = found->after[k];
        recolored[static_cast<std::size_t>(found->paths[k])] = 1;
    }
    return found;
}

struct ColoredRepresentation {
    std::vector<ColorTriple> initial;
    std::vector<ColorTriple> triples;
    std::vector<int> index;
    std::vector<RecolorEvent> events;

    int distinct_colors() const { return static_cast<int>(std::set<int>(index.begin(), index.end()).size()); }
};

/// Phase 1 on every line, then recoloring at each bend point in row-major
/// order (by y, then x).
inline ColoredRepresentation clique_color(const Representation& rep) {
    ColoredRepresentation out;
    out.initial = initial_colors(rep);
    out.triples = out.initial;
    const CliqueIndex index(rep);
    std::vector<GridPoint> sites;
    for (const auto& p : rep.paths)
        if (auto b = p.bend_point()) sites.push_back(*b);
    std::sort(sites.begin(), sites.end(), [](GridPoint a, GridPoint b) { return std::pair{a.y, a.x} < std::pair{b.y, b.x}; });
    sites.erase(std::unique(sites.begin(), sites.end()), sites.end());
    std::vector<char> recolored(rep.paths.size(), 0);
    for (GridPoint x : sites)
        if (auto ev = recolor_at(rep, index, out.triples, recolored, x)) out.events.push_back(std::move(*ev));
    for (const auto& t : out.triples) out.index.push_back(color_index(t));
    return out;
}

/// True iff no inclusion-maximal clique of size >= 2 is monochromatic.
inline bool verify_clique_coloring(const Representation& rep, const std::vector<int>& color) {
    if (color.size() != rep.paths.size()) return false;
    for (const auto& c : maximal_cliques(intersection_graph(rep))) {
        if (c.size() < 2) continue;
        const int first = color[static_cast<std::size_t>(c.front())];
        if (std::all_of(c.begin(), c.end(), [&](int v) { return color[static_cast<std::size_t>(v)] == first; })) return false;
    }
    return true;
}

} // namespace epgt
