#pragma once

// Explicit single-bend representations: k-suns, K_{2,n} for n <= 6, the
// claw witness, an archetype gallery, and seeded random families.

#include "epgt/epgt.hpp"

#include <random>
#include <set>

namespace epgt {

/// Labeled representation of the k-sun on 3 rows and ceil((k+4)/2) columns.
/// Path order is P_1^v..P_k^v then P_1^s..P_k^s; v_i is clique vertex i-1
/// and s_i, adjacent to v_i and v_{i+1}, is outer vertex k + (i mod k).
inline Representation sun_representation(int k) {
    if (k < 4) throw Error(ErrorCode::BadParameter, "sun_representation needs k >= 4");
    Representation rep;
    std::vector<int> labels;
    for (int i = 1; i <= k; ++i) {
        std::vector<GridPoint> corners;
        if (i == 1) corners = {{1, 3}, {3, 3}, {2, 2}};
        else if (i % 2 == 1) corners = {{2, 3}, {(i + 5) / 2, 3}, {(i + 1) / 2, 1}};
        else corners = {{2, 3}, {(i + 4) / 2, 3}, {(i + 4) / 2, 1}};
        if (i == k) corners.front() = {1, 3};
        rep.paths.push_back(LatticePath::through(corners));
        labels.push_back(i - 1);
    }
    for (int i = 1; i <= k; ++i) {
        std::vector<GridPoint> corners;
        if (i == k) corners = {{1, 3}, {2, 3}};
        else if (i % 2 == 1) corners = {{(i + 3) / 2, 2}, {(i + 5) / 2, 3}, {(i + 5) / 2, 2}};
        else corners = {{(i + 2) / 2, 1}, {(i + 4) / 2, 2}, {(i + 4) / 2, 1}};
        rep.paths.push_back(LatticePath::through(corners));
        labels.push_back(k + i % k);
    }
    rep.labels = std::move(labels);
    return rep;
}

namespace detail {

inline Representation labeled(std::initializer_list<std::vector<GridPoint>> corner_lists) {
    Representation rep;
    std::vector<int> labels;
    for (const auto& corners : corner_lists) {
        labels.push_back(static_cast<int>(rep.paths.size()));
        rep.paths.push_back(LatticePath::through(corners));
    }
    rep.labels = std::move(labels);
    return rep;
}

} // namespace detail

/// K_{2,n}: paths 0 and 1 are the hubs, 2..n+1 the leaves. Coordinates were
/// found once by find_representation in a 6x6 window and frozen.
inline Representation k2n_representation(int n) {
    using detail::labeled;
    switch (n) {
    case 1: return labeled({{{0, 0}, {0, 1}}, {{0, 1}, {0, 2}}, {{0, 0}, {0, 2}}});
    case 2: return labeled({{{0, 0}, {0, 2}}, {{0, 0}, {1, 1}, {0, 1}}, {{0, 1}, {0, 0}, {1, 1}}, {{0, 2}, {0, 1}, {1, 1}}});
    case 3:
        return labeled({{{0, 0}, {0, 5}, {1, 5}}, {{0, 0}, {2, 2}, {1, 2}}, {{0, 1}, {0, 0}, {1, 1}}, {{0, 1}, {0, 2}, {2, 2}},
                        {{0, 5}, {5, 5}, {1, 1}}});
    case 4:
        return labeled({{{0, 0}, {0, 4}, {3, 4}}, {{0, 2}, {3, 5}, {2, 5}}, {{0, 0}, {0, 2}, {1, 3}}, {{0, 2}, {0, 5}, {3, 5}},
                        {{0, 4}, {2, 4}, {1, 3}}, {{3, 4}, {2, 4}, {3, 5}}});
    case 5:
        return labeled({{{0, 0}, {0, 4}, {4, 4}}, {{1, 5}, {1, 2}, {4, 5}}, {{0, 0}, {0, 1}, {2, 3}}, {{0, 4}, {1, 4}, {1, 3}},
                        {{1, 5}, {1, 4}, {2, 4}}, {{2, 3}, {3, 4}, {2, 4}}, {{4, 4}, {3, 4}, {4, 5}}});
    case 6:
        return labeled({{{0, 2}, {3, 5}, {3, 0}}, {{0, 3}, {5, 3}, {2, 0}}, {{0, 2}, {1, 3}, {0, 3}}, {{2, 0}, {3, 1}, {3, 0}},
                        {{2, 3}, {1, 3}, {2, 4}}, {{2, 3}, {3, 3}, {3, 2}}, {{3, 2}, {3, 1}, {4, 2}}, {{3, 4}, {3, 3}, {4, 3}}});
    default:
        if (n >= 7) throw Error(ErrorCode::BadParameter, "K_{2,n} has no single-bend representation for n >= 7");
        throw Error(ErrorCode::BadParameter, "K_{2,n} needs n >= 1");
    }
}

/// Three single-bend paths around hub (1,1) that pairwise share an edge but
/// have no common edge.
inline Representation claw_witness() {
    return detail::labeled({{{0, 1}, {1, 1}, {1, 2}}, {{1, 2}, {1, 1}, {2, 2}}, {{2, 2}, {1, 1}, {0, 1}}});
}

inline const std::vector<std::string>& gallery_names() {
    static const std::vector<std::string> names{"edge",    "claw",     "flag",     "paw",    "cricket", "bull",   "extended-bull", "net",
                                                "truepie", "falsepie", "rframe",   "tframe", "pframe",  "c4flag", "butterfly"};
    return names;
}

/// Hand-built instance of a clique or chordless 4-cycle archetype. The six
/// triangular subtypes share the triangle (2,2),(4,2),(4,4); 4-cycles are
/// listed in cycle order.
inline Representation gallery(const std::string& name) {
    using detail::labeled;
    if (name == "edge") return labeled({{{0, 0}, {2, 0}}, {{0, 0}, {1, 0}, {1, 2}}, {{1, 0}, {0, 0}, {0, 1}}});
    if (name == "claw") return claw_witness();
    if (name == "flag") return labeled({{{4, 2}, {2, 2}, {4, 4}}, {{2, 2}, {4, 2}, {4, 4}}, {{4, 2}, {4, 4}, {2, 2}}});
    if (name == "paw") return labeled({{{4, 2}, {2, 2}, {5, 5}}, {{2, 2}, {4, 2}, {4, 4}}, {{4, 2}, {4, 4}, {5, 5}}});
    if (name == "cricket") return labeled({{{4, 2}, {2, 2}, {5, 5}}, {{2, 2}, {4, 2}, {4, 5}}, {{4, 5}, {4, 4}, {5, 5}}});
    if (name == "bull") return labeled({{{5, 2}, {2, 2}, {1, 1}}, {{5, 2}, {4, 2}, {4, 4}}, {{4, 2}, {4, 4}, {1, 1}}});
    if (name == "extended-bull") return labeled({{{5, 2}, {2, 2}, {5, 5}}, {{5, 2}, {4, 2}, {4, 5}}, {{4, 5}, {4, 4}, {5, 5}}});
    if (name == "net") return labeled({{{5, 2}, {2, 2}, {1, 1}}, {{5, 2}, {4, 2}, {4, 5}}, {{4, 5}, {4, 4}, {1, 1}}});
    if (name == "truepie") return labeled({{{1, 2}, {2, 2}, {2, 3}}, {{2, 3}, {2, 2}, {3, 2}}, {{3, 2}, {2, 2}, {2, 1}}, {{2, 1}, {2, 2}, {1, 2}}});
    if (name == "falsepie") return labeled({{{3, 2}, {2, 2}, {2, 3}}, {{2, 3}, {2, 1}}, {{2, 1}, {2, 2}, {1, 2}}, {{1, 2}, {3, 2}}});
    if (name == "rframe")
        return labeled({{{0, 2}, {0, 0}, {2, 0}}, {{1, 0}, {3, 0}, {3, 2}}, {{3, 1}, {3, 2}, {1, 2}}, {{2, 2}, {0, 2}, {0, 1}}});
    if (name == "tframe")
        return labeled({{{3, 0}, {0, 0}, {2, 2}}, {{2, 0}, {4, 0}, {4, 2}}, {{4, 1}, {4, 2}, {3, 2}}, {{4, 2}, {2, 2}, {1, 1}}});
    if (name == "pframe")
        return labeled({{{2, 0}, {0, 0}, {2, 2}}, {{1, 0}, {3, 0}, {5, 2}}, {{4, 1}, {5, 2}, {3, 2}}, {{4, 2}, {2, 2}, {1, 1}}});
    if (name == "c4flag") return labeled({{{2, 0}, {0, 0}, {1, 1}}, {{1, 0}, {0, 0}, {2, 2}}, {{1, 1}, {2, 2}, {2, 1}}, {{1, 0}, {2, 0}, {2, 2}}});
    if (name == "butterfly")
        return labeled({{{1, 0}, {0, 0}, {3, 3}}, {{0, 0}, {2, 0}, {2, 3}}, {{2, 2}, {2, 4}, {3, 4}}, {{2, 4}, {4, 4}, {2, 2}}});
    throw Error(ErrorCode::UnknownSubtype, "unknown gallery instance '" + name + "'");
}

/// `count` distinct paths with at most one bend inside a width x height
/// window, drawn from a seeded 64-bit Mersenne Twister.
inline Representation random_b1_family(int count, int width, int height, std::uint64_t seed) {
    if (count < 1) throw Error(ErrorCode::BadParameter, "count must be positive");
    if (width < 1 || height < 1 || width > 12 || height > 12 || width * height < 2)
        throw Error(ErrorCode::BadParameter, "window must be within 12x12 and hold an edge");
    std::mt19937_64 rng(seed);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    auto inside = [&](GridPoint p) { return p.x >= 0 && p.y >= 0 && p.x < width && p.y < height; };
    auto reach = [&](GridPoint from, GridPoint ray) {
        int n = 0;
        while (inside(from + (n + 1) * ray)) ++n;
        return n;
    };
    std::set<std::vector<GridPoint>> seen;
    Representation rep;
    for (int attempts = 0; static_cast<int>(rep.paths.size()) < count; ++attempts) {
        if (attempts > 1000 * count) throw Error(ErrorCode::BadParameter, "window too small for the requested number of paths");
        const GridPoint bend{pick(0, width - 1), pick(0, height - 1)};
        const GridPoint r1 = kRays[static_cast<std::size_t>(pick(0, 5))];
        const int n1 = reach(bend, r1);
        if (n1 == 0) continue;
        std::vector<GridPoint> corners{bend + pick(1, n1) * r1, bend};
        if (pick(0, 3) != 0) {
            const GridPoint r2 = kRays[static_cast<std::size_t>(pick(0, 5))];
            const int n2 = reach(bend, r2);
            if (r2 != r1 && r2 != -r1 && n2 > 0) corners.push_back(bend + pick(1, n2) * r2);
        }
        LatticePath path = LatticePath::through(corners);
        if (!seen.insert(path.vertices()).second) continue;
        rep.paths.push_back(std::move(path));
    }
    return rep;
}

} // namespace epgt
