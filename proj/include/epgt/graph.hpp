#pragma once

// Undirected loopless graphs on a small vertex set, with the enumeration
// routines the representation modules depend on.

#include "epgt/error.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace epgt {

class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n) : n_(n), matrix_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0), adj_(static_cast<std::size_t>(n)) {
        if (n < 0) throw Error(ErrorCode::BadParameter, "negative vertex count");
    }

    int order() const { return n_; }
    std::size_t size() const { return edge_count_; }

    /// Adds {u,v}; repeated insertions are ignored, loops rejected.
    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw Error(ErrorCode::BadParameter, "loop at vertex " + std::to_string(u));
        if (has_edge(u, v)) return;
        matrix_[index(u, v)] = matrix_[index(v, u)] = 1;
        insert_sorted(adj_[static_cast<std::size_t>(u)], v);
        insert_sorted(adj_[static_cast<std::size_t>(v)], u);
        ++edge_count_;
    }

    bool has_edge(int u, int v) const { return matrix_[index(u, v)] != 0; }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    /// Edges as (u,v) with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    /// Image under the vertex map `perm` (old vertex i becomes perm[i]).
    SimpleGraph relabeled(const std::vector<int>& perm) const {
        SimpleGraph g(n_);
        for (auto [u, v] : edges()) g.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
        return g;
    }

    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) { return a.n_ == b.n_ && a.matrix_ == b.matrix_; }

private:
    std::size_t index(int u, int v) const { return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v); }
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw Error(ErrorCode::BadParameter, "vertex " + std::to_string(v) + " out of range");
    }
    static void insert_sorted(std::vector<int>& list, int v) { list.insert(std::upper_bound(list.begin(), list.end(), v), v); }

    int n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::uint8_t> matrix_;
    std::vector<std::vector<int>> adj_;
};

namespace detail {

// Bron-Kerbosch with Tomita pivoting over sorted vectors.
inline void bron_kerbosch(const SimpleGraph& g, std::vector<int>& r, std::vector<int> p, std::vector<int> x,
                          std::vector<std::vector<int>>& out) {
    if (p.empty()) {
        if (x.empty()) {
            auto clique = r;
            std::sort(clique.begin(), clique.end());
            out.push_back(std::move(clique));
        }
        return;
    }
    int pivot = -1;
    std::size_t best = 0;
    for (const auto* set : {&p, &x}) {
        for (int u : *set) {
            std::size_t cnt = 0;
            for (int w : p)
                if (g.has_edge(u, w)) ++cnt;
            if (pivot < 0 || cnt > best) {
                pivot = u;
                best = cnt;
            }
        }
    }
    std::vector<int> branch;
    for (int v : p)
        if (!g.has_edge(pivot, v)) branch.push_back(v);
    for (int v : branch) {
        std::vector<int> np, nx;
        for (int w : p)
            if (g.has_edge(v, w)) np.push_back(w);
        for (int w : x)
            if (g.has_edge(v, w)) nx.push_back(w);
        r.push_back(v);
        bron_kerbosch(g, r, std::move(np), std::move(nx), out);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.insert(std::upper_bound(x.begin(), x.end(), v), v);
    }
}

} // namespace detail

/// Inclusion-maximal cliques as sorted vertex lists, the list itself sorted.
inline std::vector<std::vector<int>> maximal_cliques(const SimpleGraph& g) {
    std::vector<std::vector<int>> out;
    std::vector<int> r;
    std::vector<int> p(static_cast<std::size_t>(g.order()));
    std::iota(p.begin(), p.end(), 0);
    detail::bron_kerbosch(g, r, std::move(p), {}, out);
    std::sort(out.begin(), out.end());
    return out;
}

/// Induced 4-cycles (a,b,c,d): a is the smallest vertex and b < d, so each
/// cycle appears once regardless of rotation or reflection.
inline std::vector<std::array<int, 4>> chordless_4cycles(const SimpleGraph& g) {
    std::vector<std::array<int, 4>> out;
    const int n = g.order();
    for (int a = 0; a < n; ++a) {
        for (int b : g.neighbors(a)) {
            if (b <= a) continue;
            for (int d : g.neighbors(a)) {
                if (d <= b || g.has_edge(b, d)) continue;
                for (int c : g.neighbors(b)) {
                    if (c <= a || c == d || g.has_edge(a, c) || !g.has_edge(c, d)) continue;
                    out.push_back({a, b, c, d});
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct IsomorphismOptions {
    int max_order = 24;
};

/// Edge-preserving bijection g -> h (mapping[v] is the image of v), or
/// nullopt. Backtracking over vertices in descending-degree order, pruned
/// by degree and by the sorted degree multiset of each neighbourhood.
inline std::optional<std::vector<int>> find_isomorphism(const SimpleGraph& g, const SimpleGraph& h,
                                                        IsomorphismOptions opts = {}) {
    const int n = g.order();
    if (n > opts.max_order || h.order() > opts.max_order) {
        throw Error(ErrorCode::SizeLimitExceeded,
                    "isomorphism test supports at most " + std::to_string(opts.max_order) + " vertices");
    }
    if (n != h.order() || g.size() != h.size()) return std::nullopt;

    auto signature = [](const SimpleGraph& x, int v) {
        std::vector<int> s;
        for (int w : x.neighbors(v)) s.push_back(x.degree(w));
        std::sort(s.begin(), s.end());
        s.insert(s.begin(), x.degree(v));
        return s;
    };
    std::vector<std::vector<int>> sig_g(static_cast<std::size_t>(n)), sig_h(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        sig_g[static_cast<std::size_t>(v)] = signature(g, v);
        sig_h[static_cast<std::size_t>(v)] = signature(h, v);
    }
    {
        auto a = sig_g, b = sig_h;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }

    // Order: start from the highest degree vertex, then prefer vertices with
    // most already-ordered neighbours so adjacency checks prune early.
    std::vector<int> order;
    std::vector<char> placed(static_cast<std::size_t>(n), 0);
    for (int step = 0; step < n; ++step) {
        int best = -1, best_links = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[static_cast<std::size_t>(v)]) continue;
            int links = 0;
            for (int w : g.neighbors(v)) links += placed[static_cast<std::size_t>(w)];
            if (links > best_links || (links == best_links && g.degree(v) > g.degree(best))) {
                best = v;
                best_links = links;
            }
        }
        placed[static_cast<std::size_t>(best)] = 1;
        order.push_back(best);
    }

    std::vector<int> map(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
        if (depth == order.size()) return true;
        const int v = order[depth];
        for (int cand = 0; cand < n; ++cand) {
            if (used[static_cast<std::size_t>(cand)] || sig_g[static_cast<std::size_t>(v)] != sig_h[static_cast<std::size_t>(cand)]) continue;
            bool ok = true;
            for (std::size_t i = 0; i < depth && ok; ++i) {
                const int u = order[i];
                ok = g.has_edge(u, v) == h.has_edge(map[static_cast<std::size_t>(u)], cand);
            }
            if (!ok) continue;
            map[static_cast<std::size_t>(v)] = cand;
            used[static_cast<std::size_t>(cand)] = 1;
            if (extend(depth + 1)) return true;
            used[static_cast<std::size_t>(cand)] = 0;
            map[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    };
    if (!extend(0)) return std::nullopt;
    return map;
}

inline bool is_isomorphic(const SimpleGraph& g, const SimpleGraph& h, IsomorphismOptions opts = {}) {
    return find_isomorphism(g, h, opts).has_value();
}

// Named families ---------------------------------------------------------

inline SimpleGraph cycle_graph(int k) {
    if (k < 3) throw Error(ErrorCode::BadParameter, "C_k needs k >= 3");
    SimpleGraph g(k);
    for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
    return g;
}

inline SimpleGraph complete_graph(int n) {
    if (n < 1) throw Error(ErrorCode::BadParameter, "K_n needs n >= 1");
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

/// K_{m,n}: vertices 0..m-1 on one side, m..m+n-1 on the other.
inline SimpleGraph complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw Error(ErrorCode::BadParameter, "K_{m,n} needs m,n >= 1");
    SimpleGraph g(m + n);
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v) g.add_edge(u, m + v);
    return g;
}

inline SimpleGraph star_graph(int k) {
    if (k < 3) throw Error(ErrorCode::BadParameter, "k-star needs k >= 3");
    return complete_bipartite(1, k);
}

inline SimpleGraph claw_graph() { return star_graph(3); }

/// k-sun: vertices 0..k-1 are the inner clique y_1..y_k, k..2k-1 the outer
/// vertices x_1..x_k; x_i is adjacent to y_{i-1} and y_i (indices mod k).
inline SimpleGraph sun_graph(int k) {
    if (k < 3) throw Error(ErrorCode::BadParameter, "S_k needs k >= 3");
    SimpleGraph g(2 * k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
    for (int i = 0; i < k; ++i) {
        g.add_edge(k + i, i);
        g.add_edge(k + i, (i + k - 1) % k);
    }
    return g;
}

/// Catalog lookup by family name: "cycle" (C_k), "complete" (K_n),
/// "bipartite" (K_{m,n}), "star", "claw", "sun".
inline SimpleGraph catalog(const std::string& name, int p1 = 0, int p2 = 0) {
    if (name == "cycle") return cycle_graph(p1);
    if (name == "complete") return complete_graph(p1);
    if (name == "bipartite") return complete_bipartite(p1, p2);
    if (name == "star") return star_graph(p1);
    if (name == "claw") return claw_graph();
    if (name == "sun") return sun_graph(p1);
    throw Error(ErrorCode::BadParameter, "unknown graph family '" + name + "'");
}

// Graph file format: "n <count>" then one "u v" edge per line, 0-based.

inline SimpleGraph read_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    std::optional<SimpleGraph> g;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        if (!g) {
            std::string tag;
            int n = -1;
            if (!(ls >> tag >> n) || tag != "n" || n < 0) {
                throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected 'n <count>'");
            }
            g.emplace(n);
            continue;
        }
        int u = 0, v = 0;
        std::string rest;
        if (!(ls >> u >> v) || (ls >> rest)) {
            throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected 'u v'");
        }
        try {
            g->add_edge(u, v);
        } catch (const Error& e) {
            throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!g) throw Error(ErrorCode::ParseError, "missing 'n <count>' header");
    return *g;
}

inline void write_graph(std::ostream& out, const SimpleGraph& g) {
    out << "n " << g.order() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

} // namespace epgt
