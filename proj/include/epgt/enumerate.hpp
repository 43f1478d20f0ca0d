#pragma once

#include "epgt/lattice.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace epgt {

/// Rectangular window of grid points [0,width) x [0,height) plus path
/// restrictions for bounded enumeration.
struct SearchBounds {
    int width = 0;
    int height = 0;
    int max_bends = 1;
    std::optional<int> max_seg_len;
    /// Tractability guard on width * height.
    int max_area = 144;

    bool inside(GridPoint p) const { return p.x >= 0 && p.y >= 0 && p.x < width && p.y < height; }
    int area() const { return width * height; }
};

inline std::string to_string(const SearchBounds& b) {
    std::string s = std::to_string(b.width) + "x" + std::to_string(b.height) + " window, <= " + std::to_string(b.max_bends) + " bends";
    if (b.max_seg_len) s += ", segments <= " + std::to_string(*b.max_seg_len);
    return s;
}

namespace detail {

inline void extend_paths(const SearchBounds& b, std::vector<GridPoint>& chain, std::vector<char>& visited, GridPoint last_ray,
                         int bends_used, std::vector<std::vector<GridPoint>>& out) {
    for (const GridPoint ray : kRays) {
        if (chain.size() > 1 && (ray == last_ray || ray == -last_ray)) continue;
        const int new_bends = chain.size() > 1 ? bends_used + 1 : 0;
        if (new_bends > b.max_bends) continue;
        const std::size_t base = chain.size();
        for (int len = 1;; ++len) {
            if (b.max_seg_len && len > *b.max_seg_len) break;
            const GridPoint next = chain.back() + ray;
            if (!b.inside(next)) break;
            const std::size_t cell = static_cast<std::size_t>(next.y * b.width + next.x);
            if (visited[cell]) break;
            visited[cell] = 1;
            chain.push_back(next);
            out.push_back(chain);
            extend_paths(b, chain, visited, ray, new_bends, out);
        }
        while (chain.size() > base) {
            const GridPoint p = chain.back();
            visited[static_cast<std::size_t>(p.y * b.width + p.x)] = 0;
            chain.pop_back();
        }
    }
}

} // namespace detail

/// Every canonical path inside the window with at most `max_bends` bends
/// (and segment lengths within `max_seg_len`), sorted, without duplicates.
inline std::vector<LatticePath> enumerate_paths(const SearchBounds& b) {
    if (b.width < 1 || b.height < 1) throw Error(ErrorCode::BadParameter, "empty window");
    if (b.area() > b.max_area) {
        throw Error(ErrorCode::BoundsTooLarge, "window " + std::to_string(b.width) + "x" + std::to_string(b.height) +
                                                   " exceeds the area limit " + std::to_string(b.max_area));
    }
    if (b.max_bends < 0) throw Error(ErrorCode::BadParameter, "negative bend limit");
    std::vector<std::vector<GridPoint>> chains;
    std::vector<char> visited(static_cast<std::size_t>(b.area()), 0);
    for (int y = 0; y < b.height; ++y) {
        for (int x = 0; x < b.width; ++x) {
            std::vector<GridPoint> chain{{x, y}};
            visited[static_cast<std::size_t>(y * b.width + x)] = 1;
            detail::extend_paths(b, chain, visited, {0, 0}, 0, chains);
            visited[static_cast<std::size_t>(y * b.width + x)] = 0;
        }
    }
    for (auto& c : chains) c = canonicalize(std::move(c));
    std::sort(chains.begin(), chains.end());
    chains.erase(std::unique(chains.begin(), chains.end()), chains.end());
    std::vector<LatticePath> out;
    out.reserve(chains.size());
    for (auto& c : chains) out.emplace_back(std::move(c));
    return out;
}

/// Dense index of the unit edges inside a window, for bitset-based search.
class WindowEdges {
public:
    explicit WindowEdges(const SearchBounds& b) : bounds_(b) {
        for (int y = 0; y < b.height; ++y)
            for (int x = 0; x < b.width; ++x)
                for (Direction d : kDirections) {
                    const GridPoint p{x, y};
                    if (b.inside(p + unit_step(d))) edges_.push_back({p, p + unit_step(d)});
                }
        std::sort(edges_.begin(), edges_.end());
    }

    std::size_t size() const { return edges_.size(); }
    const GridEdge& edge(std::size_t i) const { return edges_[i]; }
    std::size_t index(const GridEdge& e) const {
        return static_cast<std::size_t>(std::lower_bound(edges_.begin(), edges_.end(), e) - edges_.begin());
    }

private:
    SearchBounds bounds_;
    std::vector<GridEdge> edges_;
};

} // namespace epgt
