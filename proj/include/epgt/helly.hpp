#pragma once

// Helly machinery over path families whose ground set is the set of grid
// edges, and the bounded searches behind the Helly and strong Helly numbers
// of single-bend families.

#include "epgt/enumerate.hpp"
#include "epgt/epgt.hpp"
#include "epgt/remarks.hpp"
#include "epgt/report.hpp"

#include <boost/dynamic_bitset.hpp>

#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <optional>
#include <thread>

namespace epgt {

/// Paths viewed as sets of grid edges. Duplicates are rejected unless the
/// family is built with `allow_duplicates`.
struct PathFamily {
    std::vector<LatticePath> members;

    PathFamily() = default;
    explicit PathFamily(std::vector<LatticePath> paths, bool allow_duplicates = false) : members(std::move(paths)) {
        if (allow_duplicates) return;
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (members[i] == members[j]) throw Error(ErrorCode::DuplicateMember, "duplicate member " + to_string(members[i]));
    }
    explicit PathFamily(const Representation& rep, bool allow_duplicates = false) : PathFamily(rep.paths, allow_duplicates) {}

    std::size_t size() const { return members.size(); }
    bool empty() const { return members.empty(); }
};

namespace detail {

using EdgeSet = boost::dynamic_bitset<std::uint64_t>;

/// Members as bitsets over the union of their edges.
inline std::vector<EdgeSet> member_sets(const PathFamily& f) {
    std::vector<GridEdge> all;
    for (const auto& p : f.members) all.insert(all.end(), p.edges().begin(), p.edges().end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    std::vector<EdgeSet> out;
    out.reserve(f.size());
    for (const auto& p : f.members) {
        EdgeSet s(all.size());
        for (const auto& e : p.edges()) s.set(static_cast<std::size_t>(std::lower_bound(all.begin(), all.end(), e) - all.begin()));
        out.push_back(std::move(s));
    }
    return out;
}

inline EdgeSet core_of(const std::vector<EdgeSet>& sets, std::uint32_t subset) {
    EdgeSet core;
    bool first = true;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (!(subset >> i & 1u)) continue;
        if (first) core = sets[i];
        else core &= sets[i];
        first = false;
    }
    return core;
}

inline void require_small(const PathFamily& f) {
    if (f.size() > 20) throw Error(ErrorCode::BoundsTooLarge, "subfamily enumeration is limited to 20 members");
}

} // namespace detail

/// Edges common to every member.
inline std::vector<GridEdge> core_edges(const PathFamily& family) {
    if (family.empty()) throw Error(ErrorCode::EmptyFamily, "the core of an empty family is undefined");
    return common_edges(pointers(family.members));
}

/// Every min(h, |family|) members share an edge.
inline bool is_h_intersecting(const PathFamily& family, int h) {
    if (h < 1) throw Error(ErrorCode::BadParameter, "h must be positive");
    if (family.empty()) return true;
    detail::require_small(family);
    const auto sets = detail::member_sets(family);
    const int n = static_cast<int>(family.size());
    const int k = std::min(h, n);
    for (std::uint32_t s = 1; s < (1u << n); ++s)
        if (std::popcount(s) == k && detail::core_of(sets, s).none()) return false;
    return true;
}

/// Every subfamily of at least h members contains h members with the same
/// core as the subfamily.
inline bool strong_helly_equals(const PathFamily& family, int h) {
    if (h < 1 || static_cast<std::size_t>(h) > family.size())
        throw Error(ErrorCode::BadParameter, "strong Helly test needs 1 <= h <= family size");
    detail::require_small(family);
    const auto sets = detail::member_sets(family);
    const int n = static_cast<int>(family.size());
    std::vector<detail::EdgeSet> cores(std::size_t{1} << n);
    for (std::uint32_t s = 1; s < (1u << n); ++s) cores[s] = detail::core_of(sets, s);
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        if (std::popcount(s) < h) continue;
        bool found = false;
        for (std::uint32_t t = s; t && !found; t = (t - 1) & s)
            found = std::popcount(t) == h && cores[t] == cores[s];
        if (!found) return false;
    }
    return true;
}

/// Outcome of the exhaustive four-member search.
struct HellySearchResult {
    SearchBounds bounds;
    std::size_t paths = 0;
    /// Families examined; all anchored ones unless the scan stopped early.
    std::uint64_t families = 0;
    /// 3-intersecting with empty core.
    std::optional<PathFamily> helly_witness;
    /// No three members have the core of the whole family.
    std::optional<PathFamily> strong_witness;
    double seconds = 0;

    PropertyReport report() const {
        PropertyReport r;
        r.name = "helly-violation-search";
        r.set("window", std::to_string(bounds.width) + "x" + std::to_string(bounds.height));
        r.set("max_bends", bounds.max_bends);
        r.set("max_seg_len", bounds.max_seg_len ? std::to_string(*bounds.max_seg_len) : "none");
        r.set("paths", paths);
        r.set("families", families);
        r.set("helly_violation", helly_witness ? "found" : "none");
        r.set("strong_violation", strong_witness ? "found" : "none");
        if (helly_witness) r.fail("3-intersecting with empty core: " + describe(*helly_witness));
        if (strong_witness) r.fail("no 3 members reach the core: " + describe(*strong_witness));
        return r;
    }

    static std::string describe(const PathFamily& f) {
        std::string s;
        for (const auto& p : f.members) s += (s.empty() ? "" : " | ") + to_string(p);
        return s;
    }
};

namespace detail {

struct HellyUniverse {
    std::vector<LatticePath> paths;
    std::vector<std::uint64_t> masks;
    std::vector<std::vector<std::uint32_t>> later; // edge-sharing neighbours with a larger index
    std::vector<char> on_x0, on_y0;
};

inline HellyUniverse helly_universe(const SearchBounds& b) {
    HellyUniverse u;
    u.paths = enumerate_paths(b);
    const WindowEdges edges(b);
    for (const auto& p : u.paths) {
        std::uint64_t m = 0;
        for (const auto& e : p.edges()) m |= std::uint64_t{1} << edges.index(e);
        u.masks.push_back(m);
        u.on_x0.push_back(std::any_of(p.points().begin(), p.points().end(), [](GridPoint q) { return q.x == 0; }));
        u.on_y0.push_back(std::any_of(p.points().begin(), p.points().end(), [](GridPoint q) { return q.y == 0; }));
    }
    u.later.resize(u.paths.size());
    for (std::size_t i = 0; i < u.paths.size(); ++i)
        for (std::size_t j = i + 1; j < u.paths.size(); ++j)
            if (u.masks[i] & u.masks[j]) u.later[i].push_back(static_cast<std::uint32_t>(j));
    return u;
}

struct QuadFindings {
    std::uint64_t families = 0;
    std::optional<std::array<std::uint32_t, 4>> helly, strong;
};

/// All anchored 4-cliques of the edge-sharing graph whose smallest member is `i`.
inline void scan_from(const HellyUniverse& u, std::uint32_t i, QuadFindings& out) {
    const auto& ni = u.later[i];
    for (std::size_t a = 0; a < ni.size(); ++a) {
        const std::uint32_t j = ni[a];
        for (std::size_t c = a + 1; c < ni.size(); ++c) {
            const std::uint32_t k = ni[c];
            if (!(u.masks[j] & u.masks[k])) continue;
            for (std::size_t d = c + 1; d < ni.size(); ++d) {
                const std::uint32_t l = ni[d];
                if (!(u.masks[j] & u.masks[l]) || !(u.masks[k] & u.masks[l])) continue;
                const std::array<std::uint32_t, 4> q{i, j, k, l};
                if (!std::any_of(q.begin(), q.end(), [&](auto v) { return u.on_x0[v]; }) ||
                    !std::any_of(q.begin(), q.end(), [&](auto v) { return u.on_y0[v]; }))
                    continue;
                ++out.families;
                const std::uint64_t core = u.masks[i] & u.masks[j] & u.masks[k] & u.masks[l];
                const std::array<std::uint64_t, 4> triples{u.masks[j] & u.masks[k] & u.masks[l], u.masks[i] & u.masks[k] & u.masks[l],
                                                           u.masks[i] & u.masks[j] & u.masks[l], u.masks[i] & u.masks[j] & u.masks[k]};
                const bool all_meet = std::all_of(triples.begin(), triples.end(), [](auto t) { return t != 0; });
                const bool none_tight = std::none_of(triples.begin(), triples.end(), [&](auto t) { return t == core; });
                if (all_meet && core == 0 && !out.helly) out.helly = q;
                if (none_tight && !out.strong) out.strong = q;
            }
        }
    }
}

} // namespace detail

/// Exhaustive search over 4-member families of distinct paths in the window
/// for a Helly violation (3-intersecting, empty core) and a strong Helly
/// violation (no 3 members reach the family core). Both kinds of violation
/// force every pair to share an edge, so only 4-cliques of the edge-sharing
/// graph are visited; families are counted up to translation by requiring
/// the union to touch both axes. The scan stops once both kinds of witness
/// are in hand; with one thread the witnesses have the smallest first member.
inline HellySearchResult helly_violation_search(const SearchBounds& window, int threads = 1) {
    if (window.width > 5 || window.height > 5) throw Error(ErrorCode::BoundsTooLarge, "Helly search is limited to 5x5 windows");
    if (!window.max_seg_len || *window.max_seg_len > 3 || *window.max_seg_len < 1)
        throw Error(ErrorCode::BoundsTooLarge, "Helly search needs a segment length limit between 1 and 3");
    if (window.max_bends < 0 || window.max_bends > 2) throw Error(ErrorCode::BadParameter, "Helly search supports 0 to 2 bends");
    const auto start = std::chrono::steady_clock::now();
    const auto u = detail::helly_universe(window);

    const auto workers = static_cast<std::uint32_t>(std::max(1, threads));
    std::vector<std::vector<std::pair<std::uint32_t, detail::QuadFindings>>> found(workers);
    std::atomic<bool> have_helly{false}, have_strong{false};
    auto work = [&](std::uint32_t w) {
        for (auto i = w; i < u.paths.size() && !(have_helly && have_strong); i += workers) {
            detail::QuadFindings f;
            detail::scan_from(u, i, f);
            if (f.helly) have_helly = true;
            if (f.strong) have_strong = true;
            found[w].emplace_back(i, f);
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (std::uint32_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }

    std::vector<std::pair<std::uint32_t, detail::QuadFindings>> all;
    for (auto& part : found) all.insert(all.end(), part.begin(), part.end());
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    HellySearchResult r;
    r.bounds = window;
    r.paths = u.paths.size();
    auto family = [&](const std::array<std::uint32_t, 4>& q) {
        std::vector<LatticePath> m;
        for (auto v : q) m.push_back(u.paths[v]);
        return PathFamily(std::move(m));
    };
    for (const auto& [i, f] : all) {
        r.families += f.families;
        if (f.helly && !r.helly_witness) r.helly_witness = family(*f.helly);
        if (f.strong && !r.strong_witness) r.strong_witness = family(*f.strong);
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

/// Exhaustive path-level checks in the window:
///  (a) a path with at most 2 bends never holds two edges of a line while
///      skipping an edge of that line between them;
///  (b) a path with at most 1 bend never holds two edges of another such
///      path while skipping an edge of it between them.
/// The smallest bend counts that do achieve each pattern are reported.
inline PropertyReport lemma_checks(const SearchBounds& window) {
    if (window.width > 5 || window.height > 5) throw Error(ErrorCode::BoundsTooLarge, "lemma checks are limited to 5x5 windows");
    if (window.width < 1 || window.height < 1) throw Error(ErrorCode::BadParameter, "empty window");
    PropertyReport r;
    r.name = "lemma-checks";
    r.set("window", std::to_string(window.width) + "x" + std::to_string(window.height));

    auto bounded = [&](int bends) {
        SearchBounds b{window.width, window.height, bends, std::nullopt};
        return enumerate_paths(b);
    };
    auto gapped = [](const LatticePath& p) {
        const auto cc = colinear_components(p.edges());
        return cc.components > cc.lines;
    };

    // (a) co-linear gaps.
    const auto b3 = bounded(3);
    int a_min = -1;
    std::size_t a_checked = 0;
    for (const auto& p : b3) {
        if (!gapped(p)) continue;
        if (p.bend_count() < 3) r.fail("(a) " + to_string(p) + " skips a co-linear edge with " + std::to_string(p.bend_count()) + " bends");
        if (a_min < 0 || p.bend_count() < a_min) a_min = p.bend_count();
    }
    for (const auto& p : b3) a_checked += p.bend_count() <= 2;
    r.set("a_paths_checked", a_checked);
    r.set("a_min_bends_for_gap", a_min < 0 ? std::string("none") : std::to_string(a_min));

    // (b) gaps along a single-bend path.
    const auto b1 = bounded(1);
    const auto b2 = bounded(2);
    const WindowEdges edges(SearchBounds{window.width, window.height, 0, std::nullopt});
    auto mask = [&](const LatticePath& p) {
        std::uint64_t m = 0;
        for (const auto& e : p.edges()) m |= std::uint64_t{1} << edges.index(e);
        return m;
    };
    std::vector<std::uint64_t> m1, m2;
    for (const auto& p : b1) m1.push_back(mask(p));
    for (const auto& p : b2) m2.push_back(mask(p));
    int b_min = -1;
    std::size_t b_pairs = 0;
    for (std::size_t qi = 0; qi < b1.size(); ++qi) {
        const auto& q = b1[qi];
        std::vector<std::uint64_t> along;
        for (std::size_t v = 0; v + 1 < q.vertices().size(); ++v)
            along.push_back(std::uint64_t{1} << edges.index(edge_between(q.vertices()[v], q.vertices()[v + 1])));
        if (along.size() < 3) continue;
        auto skips = [&](std::uint64_t pm) {
            const std::uint64_t c = pm & m1[qi];
            if (std::popcount(c) < 2) return false;
            std::size_t first = along.size(), last = 0;
            int held = 0;
            for (std::size_t t = 0; t < along.size(); ++t)
                if (c & along[t]) {
                    first = std::min(first, t);
                    last = t;
                    ++held;
                }
            return static_cast<std::size_t>(held) != last - first + 1;
        };
        for (std::size_t pi = 0; pi < b2.size(); ++pi) {
            if (b2[pi].bend_count() <= 1) ++b_pairs;
            if (!skips(m2[pi])) continue;
            const int bends = b2[pi].bend_count();
            if (bends < 2) r.fail("(b) " + to_string(b2[pi]) + " skips an edge of " + to_string(q));
            if (b_min < 0 || bends < b_min) b_min = bends;
        }
    }
    r.set("b_pairs_checked", b_pairs);
    r.set("b_min_bends_for_gap", b_min < 0 ? std::string("none") : std::to_string(b_min));
    return r;
}

} // namespace epgt
