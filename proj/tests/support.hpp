#pragma once

// Seeded generators and corpora shared by the unit tests and the
// acceptance binary. Every generator takes an explicit engine so a failing
// case can be replayed from the printed seed.

#include "epgt/constructions.hpp"
#include "epgt/graph.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace epgt::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Simple path built as a self-avoiding walk with at most `max_bends` turns.
inline LatticePath random_path(Rng& rng, int max_bends, int max_steps = 8, int span = 6) {
    for (;;) {
        std::vector<GridPoint> chain{{uniform(rng, -span, span), uniform(rng, -span, span)}};
        GridPoint ray = kRays[static_cast<std::size_t>(uniform(rng, 0, 5))];
        int bends = 0;
        const int steps = uniform(rng, 1, max_steps);
        bool ok = true;
        for (int s = 0; s < steps && ok; ++s) {
            if (s > 0 && bends < max_bends && uniform(rng, 0, 2) == 0) {
                const GridPoint turn = kRays[static_cast<std::size_t>(uniform(rng, 0, 5))];
                if (turn != ray && turn != -ray) {
                    ray = turn;
                    ++bends;
                }
            }
            const GridPoint next = chain.back() + ray;
            ok = std::find(chain.begin(), chain.end(), next) == chain.end();
            if (ok) chain.push_back(next);
        }
        if (ok) return LatticePath(chain);
    }
}

inline SimpleGraph random_graph(Rng& rng, int n, double p) {
    SimpleGraph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

inline std::vector<int> random_permutation(Rng& rng, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

/// Random family number `seed` of the shared corpus: 5..30 paths.
inline Representation corpus_family(std::uint64_t seed, int window = 8) {
    return random_b1_family(5 + static_cast<int>(seed % 26), window, window, seed);
}

struct NamedRep {
    std::string name;
    Representation rep;
};

/// Suns k=4..12, K_{2,n} n<=6, the gallery, and 200 seeded random families
/// in an 8x8 window.
inline std::vector<NamedRep> full_corpus(int random_count = 200) {
    std::vector<NamedRep> out;
    for (int k = 4; k <= 12; ++k) out.push_back({"sun" + std::to_string(k), sun_representation(k)});
    for (int n = 1; n <= 6; ++n) out.push_back({"k2," + std::to_string(n), k2n_representation(n)});
    for (const auto& name : gallery_names()) out.push_back({"gallery:" + name, gallery(name)});
    for (int s = 1; s <= random_count; ++s)
        out.push_back({"random#" + std::to_string(s), corpus_family(static_cast<std::uint64_t>(s))});
    return out;
}

/// All triangles {a<b<c} of a graph.
inline std::vector<std::array<int, 3>> triangles(const SimpleGraph& g) {
    std::vector<std::array<int, 3>> out;
    for (int a = 0; a < g.order(); ++a)
        for (int b : g.neighbors(a))
            if (b > a)
                for (int c : g.neighbors(b))
                    if (c > b && g.has_edge(a, c)) out.push_back({a, b, c});
    return out;
}

/// Paths of `rep` holding edge (a,b).
inline std::vector<int> holders(const Representation& rep, GridPoint a, GridPoint b) {
    const GridEdge e = edge_between(a, b);
    std::vector<int> out;
    for (std::size_t i = 0; i < rep.size(); ++i)
        if (rep.paths[i].contains(e)) out.push_back(static_cast<int>(i));
    return out;
}

/// The itemised edge-sharing facts behind the k-sun construction, checked
/// on path indices (P_i^v is i-1, P_i^s is k+i-1). Returns the violations.
inline std::vector<std::string> sun_sharing_failures(int k) {
    const auto rep = sun_representation(k);
    std::vector<std::string> bad;
    auto expect = [&](GridPoint a, GridPoint b, std::vector<int> want, const std::string& what) {
        std::sort(want.begin(), want.end());
        if (holders(rep, a, b) != want) bad.push_back("k=" + std::to_string(k) + " " + what + " " + to_string(edge_between(a, b)));
    };
    std::vector<int> clique(static_cast<std::size_t>(k));
    std::iota(clique.begin(), clique.end(), 0);
    expect({2, 3}, {3, 3}, clique, "clique edge");
    expect({1, 3}, {2, 3}, {0, k - 1, 2 * k - 1}, "left edge");
    for (int i = 1; i < k; ++i) {
        const int s = k + i - 1, v = i - 1, next = i;
        if (i % 2 == 1) {
            expect({(i + 3) / 2, 2}, {(i + 5) / 2, 3}, {s, v}, "odd s_i/v_i");
            expect({(i + 5) / 2, 3}, {(i + 5) / 2, 2}, {s, next}, "odd s_i/v_i+1");
        } else {
            expect({(i + 4) / 2, 2}, {(i + 4) / 2, 1}, {s, v}, "even s_i/v_i");
            expect({(i + 2) / 2, 1}, {(i + 4) / 2, 2}, {s, next}, "even s_i/v_i+1");
        }
    }
    return bad;
}

} // namespace epgt::testing
