#pragma once

// Bounded exhaustive search for single-bend representations, plus the
// common-neighbour count behind the K_{2,7} obstruction.

#include "epgt/enumerate.hpp"
#include "epgt/epgt.hpp"
#include "epgt/report.hpp"

#include <boost/dynamic_bitset.hpp>

#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <thread>

namespace epgt {

using Bits = boost::dynamic_bitset<std::uint64_t>;

/// All paths of a window with their pairwise edge-sharing relation. A path
/// is adjacent to itself.
class PathUniverse {
public:
    explicit PathUniverse(const SearchBounds& bounds) : bounds_(bounds), paths_(enumerate_paths(bounds)), edges_(bounds) {
        masks_.reserve(paths_.size());
        for (const auto& p : paths_) {
            Bits m(edges_.size());
            for (const auto& e : p.edges()) m.set(edges_.index(e));
            masks_.push_back(std::move(m));
        }
        adjacency_.assign(paths_.size(), Bits(paths_.size()));
        for (std::size_t i = 0; i < paths_.size(); ++i) {
            adjacency_[i].set(i);
            for (std::size_t j = i + 1; j < paths_.size(); ++j)
                if (masks_[i].intersects(masks_[j])) {
                    adjacency_[i].set(j);
                    adjacency_[j].set(i);
                }
        }
    }

    const SearchBounds& bounds() const { return bounds_; }
    std::size_t size() const { return paths_.size(); }
    const LatticePath& path(std::size_t i) const { return paths_[i]; }
    const Bits& adjacent(std::size_t i) const { return adjacency_[i]; }
    const Bits& edge_mask(std::size_t i) const { return masks_[i]; }

private:
    SearchBounds bounds_;
    std::vector<LatticePath> paths_;
    WindowEdges edges_;
    std::vector<Bits> masks_;
    std::vector<Bits> adjacency_;
};

/// Upper bound on the largest pairwise edge-disjoint subset of `set`:
/// the size of a greedy partition into groups of pairwise edge-sharing paths.
/// Stops counting at `cap`.
inline std::size_t clique_cover_bound(const PathUniverse& u, Bits set, std::size_t cap = static_cast<std::size_t>(-1)) {
    std::size_t groups = 0;
    for (auto v = set.find_first(); v != Bits::npos && groups < cap; v = set.find_first()) {
        ++groups;
        Bits pool = set & u.adjacent(v);
        set.reset(v);
        pool.reset(v);
        for (auto w = pool.find_first(); w != Bits::npos; w = pool.find_next(w)) {
            set.reset(w);
            pool &= u.adjacent(w);
        }
    }
    return groups;
}

namespace detail {

inline void grow_independent(const PathUniverse& u, Bits set, std::vector<std::size_t>& cur, std::vector<std::size_t>& best) {
    if (set.none()) {
        if (cur.size() > best.size()) best = cur;
        return;
    }
    const std::size_t cap = best.size() >= cur.size() ? best.size() - cur.size() + 1 : Bits::npos;
    if (cur.size() + clique_cover_bound(u, set, cap) <= best.size()) return;
    const auto v = set.find_first();
    cur.push_back(v);
    Bits with = set;
    with -= u.adjacent(v);
    grow_independent(u, with, cur, best);
    cur.pop_back();
    set.reset(v);
    grow_independent(u, set, cur, best);
}

} // namespace detail

/// A largest subset of `set` whose paths pairwise share no edge; only
/// subsets larger than `at_least - 1` are looked for.
inline std::vector<std::size_t> max_edge_disjoint(const PathUniverse& u, const Bits& set, std::size_t at_least = 0) {
    std::vector<std::size_t> cur, best;
    if (at_least > 0) best.assign(at_least - 1, Bits::npos);
    detail::grow_independent(u, set, cur, best);
    if (!best.empty() && best.front() == Bits::npos) return {};
    return best;
}

enum class SearchStatus { Found, Exhausted, Timeout };

inline std::string_view to_string(SearchStatus s) {
    switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Exhausted: return "exhausted";
    case SearchStatus::Timeout: return "timeout";
    }
    return "?";
}

struct SearchOptions {
    std::optional<double> timeout_seconds;
    int threads = 1;
    int max_order = 12;
};

struct SearchResult {
    SearchStatus status = SearchStatus::Exhausted;
    std::optional<Representation> representation;
    std::uint64_t nodes = 0;
    double seconds = 0;
    std::string bounds;
};

namespace detail {

struct SearchPlan {
    std::vector<int> order;          // vertices in assignment order
    std::vector<int> twin_before;    // previous twin in order, or -1
    std::vector<char> twin_adjacent; // twins are adjacent (may share a path)
    std::vector<std::vector<int>> independent_classes; // order positions of non-adjacent twin classes (size >= 2)
};

inline SearchPlan plan_search(const SimpleGraph& g) {
    const int n = g.order();
    SearchPlan plan;
    plan.order.resize(static_cast<std::size_t>(n));
    std::iota(plan.order.begin(), plan.order.end(), 0);
    std::stable_sort(plan.order.begin(), plan.order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    auto open = [&](int v) { return g.neighbors(v); };
    auto closed = [&](int v) {
        auto c = g.neighbors(v);
        c.insert(std::upper_bound(c.begin(), c.end(), v), v);
        return c;
    };
    plan.twin_before.assign(static_cast<std::size_t>(n), -1);
    plan.twin_adjacent.assign(static_cast<std::size_t>(n), 0);
    std::vector<int> class_of(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < plan.order.size(); ++i) {
        const int v = plan.order[i];
        for (std::size_t j = i; j-- > 0;) {
            const int w = plan.order[j];
            if (!g.has_edge(v, w) && open(v) == open(w)) {
                plan.twin_before[i] = static_cast<int>(j);
                if (class_of[j] < 0) {
                    class_of[j] = static_cast<int>(plan.independent_classes.size());
                    plan.independent_classes.push_back({static_cast<int>(j)});
                }
                class_of[i] = class_of[j];
                plan.independent_classes[static_cast<std::size_t>(class_of[j])].push_back(static_cast<int>(i));
                break;
            }
            if (g.has_edge(v, w) && closed(v) == closed(w)) {
                plan.twin_before[i] = static_cast<int>(j);
                plan.twin_adjacent[i] = 1;
                break;
            }
        }
    }
    return plan;
}

class Searcher {
public:
    Searcher(const PathUniverse& u, const SimpleGraph& g, const SearchPlan& plan,
             std::optional<std::chrono::steady_clock::time_point> deadline, std::atomic<bool>& timed_out)
        : u_(u), g_(g), plan_(plan), deadline_(deadline), timed_out_(timed_out) {
        const auto n = static_cast<std::size_t>(g.order());
        choice_.assign(n, 0);
    }

    /// Explores assignments whose first vertex takes path `first`.
    bool run_from(std::size_t first) {
        const auto n = plan_.order.size();
        std::vector<Bits> domains(n, Bits(u_.size()));
        for (auto& d : domains) d.set();
        return assign(0, first, domains);
    }

    std::uint64_t nodes() const { return nodes_; }
    const std::vector<std::size_t>& choice() const { return choice_; }

private:
    bool expired() {
        if (!deadline_) return false;
        if ((nodes_ & 1023u) == 0 && std::chrono::steady_clock::now() > *deadline_) timed_out_ = true;
        return timed_out_.load(std::memory_order_relaxed);
    }

    bool anchored() const {
        int min_x = std::numeric_limits<int>::max(), min_y = std::numeric_limits<int>::max();
        for (std::size_t i = 0; i < choice_.size(); ++i)
            for (const auto& p : u_.path(choice_[i]).points()) {
                min_x = std::min(min_x, p.x);
                min_y = std::min(min_y, p.y);
            }
        return min_x == 0 && min_y == 0;
    }

    bool bound_ok(std::size_t depth, const std::vector<Bits>& domains) const {
        for (const auto& cls : plan_.independent_classes) {
            std::size_t remaining = 0;
            int first_open = -1;
            for (int pos : cls)
                if (static_cast<std::size_t>(pos) > depth) {
                    ++remaining;
                    if (first_open < 0) first_open = pos;
                }
            if (remaining < 2) continue;
            if (clique_cover_bound(u_, domains[static_cast<std::size_t>(first_open)], remaining) < remaining) return false;
        }
        return true;
    }

    bool assign(std::size_t depth, std::size_t path, const std::vector<Bits>& domains) {
        ++nodes_;
        if (expired()) return false;
        const int v = plan_.order[depth];
        choice_[depth] = path;
        const auto n = plan_.order.size();
        if (depth + 1 == n) return anchored();
        std::vector<Bits> next(domains.begin(), domains.end());
        for (std::size_t k = depth + 1; k < n; ++k) {
            const int w = plan_.order[k];
            if (g_.has_edge(v, w)) next[k] &= u_.adjacent(path);
            else next[k] -= u_.adjacent(path);
            if (next[k].none()) return false;
        }
        if (!bound_ok(depth, next)) return false;
        const std::size_t k = depth + 1;
        Bits cand = next[k];
        if (const int tb = plan_.twin_before[k]; tb >= 0) {
            const std::size_t floor = choice_[static_cast<std::size_t>(tb)] + (plan_.twin_adjacent[k] ? 0 : 1);
            for (std::size_t i = cand.find_first(); i != Bits::npos && i < floor; i = cand.find_next(i)) cand.reset(i);
        }
        for (auto c = cand.find_first(); c != Bits::npos; c = cand.find_next(c)) {
            if (assign(k, c, next)) return true;
            if (timed_out_) return false;
        }
        return false;
    }

    const PathUniverse& u_;
    const SimpleGraph& g_;
    const SearchPlan& plan_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::atomic<bool>& timed_out_;
    std::vector<std::size_t> choice_;
    std::uint64_t nodes_ = 0;
};

} // namespace detail

/// Backtracking over path choices vertex by vertex (descending degree),
/// with forward checking of adjacency and non-adjacency, increasing path
/// indices among twins, and an edge-disjointness bound for independent twin
/// classes. Only placements touching both window axes are accepted, which
/// loses nothing up to translation. With several threads the first
/// vertex's choices are dealt round-robin and the smallest-index success
/// wins, so the answer matches the sequential one.
inline SearchResult find_representation(const SimpleGraph& target, const SearchBounds& bounds, const SearchOptions& opts = {}) {
    if (target.order() > opts.max_order)
        throw Error(ErrorCode::SizeLimitExceeded, "target order " + std::to_string(target.order()) + " exceeds " + std::to_string(opts.max_order));
    const auto start = std::chrono::steady_clock::now();
    SearchResult result;
    result.bounds = to_string(bounds);
    if (target.order() == 0) {
        result.status = SearchStatus::Found;
        result.representation = Representation{{}, std::vector<int>{}};
        return result;
    }
    const PathUniverse universe(bounds);
    const auto plan = detail::plan_search(target);
    std::optional<std::chrono::steady_clock::time_point> deadline;
    if (opts.timeout_seconds)
        deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(*opts.timeout_seconds));
    std::atomic<bool> timed_out{false};

    const std::size_t workers = static_cast<std::size_t>(std::max(1, opts.threads));
    std::atomic<std::size_t> best_first{Bits::npos};
    std::mutex mu;
    std::vector<std::size_t> best_choice;
    std::atomic<std::uint64_t> nodes{0};
    auto work = [&](std::size_t id) {
        detail::Searcher s(universe, target, plan, deadline, timed_out);
        for (std::size_t first = id; first < universe.size(); first += workers) {
            if (first > best_first.load() || timed_out) break;
            if (s.run_from(first)) {
                std::lock_guard lock(mu);
                if (first < best_first.load()) {
                    best_first = first;
                    best_choice = s.choice();
                }
                break;
            }
        }
        nodes += s.nodes();
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(work, i);
        for (auto& t : pool) t.join();
    }

    result.nodes = nodes;
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (best_first.load() != Bits::npos) {
        Representation rep;
        std::vector<int> labels;
        for (std::size_t i = 0; i < plan.order.size(); ++i) {
            rep.paths.push_back(universe.path(best_choice[i]));
            labels.push_back(plan.order[i]);
        }
        rep.labels = labels;
        result.status = SearchStatus::Found;
        result.representation = std::move(rep);
    } else {
        result.status = timed_out ? SearchStatus::Timeout : SearchStatus::Exhausted;
    }
    return result;
}

/// Largest number of pairwise edge-disjoint paths sharing an edge with both
/// of two edge-disjoint paths P1, P2, maximised over all such pairs in the
/// window. Overlapping pairs are skipped: a K_{2,n} needs non-adjacent hubs.
inline PropertyReport k27_counting_check(const SearchBounds& bounds) {
    const auto start = std::chrono::steady_clock::now();
    const PathUniverse u(bounds);
    PropertyReport r;
    r.name = "k27-counting";
    r.set("window", to_string(bounds));
    r.set("paths", u.size());
    std::size_t best = 0, pairs = 0, exact_runs = 0;
    std::vector<std::size_t> witness;
    std::pair<std::size_t, std::size_t> hubs{0, 0};
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = i + 1; j < u.size(); ++j) {
            if (u.adjacent(i).test(j)) continue;
            ++pairs;
            const Bits common = u.adjacent(i) & u.adjacent(j);
            if (common.count() <= best || clique_cover_bound(u, common, best + 1) <= best) continue;
            ++exact_runs;
            auto set = max_edge_disjoint(u, common, best + 1);
            if (set.size() > best) {
                best = set.size();
                witness = set;
                hubs = {i, j};
            }
        }
    }
    r.set("hub_pairs", pairs);
    r.set("exact_solves", exact_runs);
    r.set("max_common_neighbours", best);
    if (!witness.empty()) {
        r.set("hub_1", to_string(u.path(hubs.first)));
        r.set("hub_2", to_string(u.path(hubs.second)));
        std::string ws;
        for (auto w : witness) ws += (ws.empty() ? "" : " ; ") + to_string(u.path(w));
        r.set("witness", ws);
    }
    if (best > 6) r.fail(std::to_string(best) + " pairwise edge-disjoint common neighbours");
    r.set("seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    return r;
}

} // namespace epgt
