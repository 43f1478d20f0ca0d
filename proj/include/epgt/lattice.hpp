#pragma once

// Integer triangular-lattice geometry: the rectangular grid plus the single
// diagonal direction (+1,+1). Everything here is an immutable value type.

#include "epgt/error.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace epgt {

struct GridPoint {
    int x = 0;
    int y = 0;

    friend constexpr auto operator<=>(const GridPoint&, const GridPoint&) = default;
    friend constexpr GridPoint operator+(GridPoint a, GridPoint b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr GridPoint operator-(GridPoint a, GridPoint b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr GridPoint operator*(int k, GridPoint a) { return {k * a.x, k * a.y}; }
    friend constexpr GridPoint operator-(GridPoint a) { return {-a.x, -a.y}; }
};

inline std::string to_string(GridPoint p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

inline std::ostream& operator<<(std::ostream& os, GridPoint p) { return os << to_string(p); }

enum class Direction : std::uint8_t { Horizontal = 0, Vertical = 1, Diagonal = 2 };

inline constexpr std::array<Direction, 3> kDirections = {Direction::Horizontal, Direction::Vertical,
                                                         Direction::Diagonal};

inline constexpr GridPoint unit_step(Direction d) {
    switch (d) {
    case Direction::Horizontal: return {1, 0};
    case Direction::Vertical: return {0, 1};
    case Direction::Diagonal: return {1, 1};
    }
    return {0, 0};
}

inline constexpr char direction_letter(Direction d) {
    switch (d) {
    case Direction::Horizontal: return 'H';
    case Direction::Vertical: return 'V';
    case Direction::Diagonal: return 'D';
    }
    return '?';
}

/// Direction of a unit step, accepting either sign. The anti-diagonal
/// (1,-1) is not a grid direction.
inline constexpr std::optional<Direction> direction_of_step(GridPoint delta) {
    if (delta.x < 0 || (delta.x == 0 && delta.y < 0)) delta = -delta;
    if (delta == GridPoint{1, 0}) return Direction::Horizontal;
    if (delta == GridPoint{0, 1}) return Direction::Vertical;
    if (delta == GridPoint{1, 1}) return Direction::Diagonal;
    return std::nullopt;
}

/// Six unit rays leaving a grid point, in counter-clockwise order of the
/// rectangular-plus-diagonal drawing: 0, 45, 90, 180, 225, 270 degrees.
inline constexpr std::array<GridPoint, 6> kRays = {
    GridPoint{1, 0}, GridPoint{1, 1}, GridPoint{0, 1}, GridPoint{-1, 0}, GridPoint{-1, -1}, GridPoint{0, -1}};

inline constexpr int ray_angle(GridPoint ray) {
    for (int i = 0; i < 6; ++i) {
        if (kRays[static_cast<std::size_t>(i)] == ray) return std::array{0, 45, 90, 180, 225, 270}[static_cast<std::size_t>(i)];
    }
    return -1;
}

/// Unit edge of the grid, endpoints in lexicographic order.
struct GridEdge {
    GridPoint lo;
    GridPoint hi;

    Direction direction() const { return *direction_of_step(hi - lo); }

    friend constexpr auto operator<=>(const GridEdge&, const GridEdge&) = default;
};

inline std::string to_string(const GridEdge& e) { return "(" + to_string(e.lo) + "," + to_string(e.hi) + ")"; }

inline std::ostream& operator<<(std::ostream& os, const GridEdge& e) { return os << to_string(e); }

inline GridEdge edge_between(GridPoint p, GridPoint q) {
    if (!direction_of_step(q - p)) {
        throw Error(ErrorCode::NotAdjacent, to_string(p) + " and " + to_string(q) + " are not grid-adjacent");
    }
    return p < q ? GridEdge{p, q} : GridEdge{q, p};
}

inline bool grid_adjacent(GridPoint p, GridPoint q) { return direction_of_step(q - p).has_value(); }

/// Horizontal: y = offset; Vertical: x = offset; Diagonal: y - x = offset.
struct GridLine {
    Direction direction = Direction::Horizontal;
    int offset = 0;

    friend constexpr auto operator<=>(const GridLine&, const GridLine&) = default;
};

inline std::string to_string(const GridLine& l) {
    switch (l.direction) {
    case Direction::Horizontal: return "H[y=" + std::to_string(l.offset) + "]";
    case Direction::Vertical: return "V[x=" + std::to_string(l.offset) + "]";
    case Direction::Diagonal: return "D[y-x=" + std::to_string(l.offset) + "]";
    }
    return "?";
}

inline constexpr GridLine line_through(GridPoint p, Direction d) {
    switch (d) {
    case Direction::Horizontal: return {d, p.y};
    case Direction::Vertical: return {d, p.x};
    case Direction::Diagonal: return {d, p.y - p.x};
    }
    return {};
}

inline GridLine line_of(const GridEdge& e) { return line_through(e.lo, e.direction()); }

inline constexpr bool on_line(const GridLine& l, GridPoint p) { return line_through(p, l.direction) == l; }

/// Coordinate that increases along a line of the given direction.
inline constexpr int position_along(Direction d, GridPoint p) { return d == Direction::Vertical ? p.y : p.x; }

/// The lattice point of `line` at position `t` (inverse of position_along).
inline constexpr GridPoint point_on(const GridLine& l, int t) {
    switch (l.direction) {
    case Direction::Horizontal: return {t, l.offset};
    case Direction::Vertical: return {l.offset, t};
    case Direction::Diagonal: return {t, t + l.offset};
    }
    return {};
}

struct LineIntersection {
    enum class Kind { Point, Same, Empty };
    Kind kind = Kind::Empty;
    GridPoint point{};

    friend bool operator==(const LineIntersection&, const LineIntersection&) = default;
};

inline LineIntersection line_intersection(const GridLine& a, const GridLine& b) {
    using Kind = LineIntersection::Kind;
    if (a.direction == b.direction) return {a.offset == b.offset ? Kind::Same : Kind::Empty, {}};
    // Order the pair as (H,V), (H,D) or (V,D).
    const GridLine& l1 = a.direction < b.direction ? a : b;
    const GridLine& l2 = a.direction < b.direction ? b : a;
    if (l1.direction == Direction::Horizontal && l2.direction == Direction::Vertical) {
        return {Kind::Point, {l2.offset, l1.offset}};
    }
    if (l1.direction == Direction::Horizontal) { // l2 diagonal: y = a, y - x = c
        return {Kind::Point, {l1.offset - l2.offset, l1.offset}};
    }
    return {Kind::Point, {l1.offset, l1.offset + l2.offset}}; // vertical x = b, diagonal
}

/// Maximal straight piece of a path. `first`/`last` follow path order.
struct Segment {
    GridLine line;
    GridPoint first;
    GridPoint last;

    Direction direction() const { return line.direction; }
    int lo() const { return std::min(position_along(line.direction, first), position_along(line.direction, last)); }
    int hi() const { return std::max(position_along(line.direction, first), position_along(line.direction, last)); }
    int length() const { return hi() - lo(); }

    bool contains(GridPoint p) const {
        if (!on_line(line, p)) return false;
        const int t = position_along(line.direction, p);
        return lo() <= t && t <= hi();
    }
    bool contains(const GridEdge& e) const {
        return line_of(e) == line && lo() <= position_along(line.direction, e.lo) &&
               position_along(line.direction, e.hi) <= hi();
    }
    /// Edge containment of another segment.
    bool contains(const Segment& s) const { return s.line == line && lo() <= s.lo() && s.hi() <= hi(); }

    std::vector<GridEdge> edges() const {
        std::vector<GridEdge> out;
        out.reserve(static_cast<std::size_t>(length()));
        for (int t = lo(); t < hi(); ++t) out.push_back({point_on(line, t), point_on(line, t + 1)});
        return out;
    }

    friend bool operator==(const Segment&, const Segment&) = default;
};

inline std::string to_string(const Segment& s) {
    return std::string(1, direction_letter(s.direction())) + "-segment " + to_string(s.first) + "-" + to_string(s.last);
}

/// Reverses `vertices` if needed so the lexicographically smaller endpoint
/// comes first.
inline std::vector<GridPoint> canonicalize(std::vector<GridPoint> vertices) {
    if (!vertices.empty() && vertices.back() < vertices.front()) std::reverse(vertices.begin(), vertices.end());
    return vertices;
}

/// A nontrivial simple path along grid lines, stored as its full unit-step
/// vertex chain in canonical orientation.
class LatticePath {
public:
    explicit LatticePath(std::vector<GridPoint> vertices) : vertices_(canonicalize(std::move(vertices))) {
        if (vertices_.size() < 2) throw Error(ErrorCode::InvalidPath, "a path needs at least two vertices");
        for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
            if (!grid_adjacent(vertices_[i], vertices_[i + 1])) {
                throw Error(ErrorCode::NotAdjacent, "path vertices " + to_string(vertices_[i]) + " and " +
                                                        to_string(vertices_[i + 1]) + " are not grid-adjacent");
            }
        }
        points_ = vertices_;
        std::sort(points_.begin(), points_.end());
        if (std::adjacent_find(points_.begin(), points_.end()) != points_.end()) {
            throw Error(ErrorCode::InvalidPath, "path revisits a grid point");
        }
        edges_.reserve(vertices_.size() - 1);
        for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) edges_.push_back(edge_between(vertices_[i], vertices_[i + 1]));
        std::sort(edges_.begin(), edges_.end());
        build_segments();
    }

    /// Builds a path from its corner sequence (endpoints and bend points);
    /// consecutive corners must lie on a common grid line.
    static LatticePath through(const std::vector<GridPoint>& corners) {
        if (corners.size() < 2) throw Error(ErrorCode::InvalidPath, "need at least two corner points");
        std::vector<GridPoint> chain{corners.front()};
        for (std::size_t i = 0; i + 1 < corners.size(); ++i) {
            const GridPoint delta = corners[i + 1] - corners[i];
            const int steps = std::max(std::abs(delta.x), std::abs(delta.y));
            if (steps == 0) throw Error(ErrorCode::InvalidPath, "repeated corner " + to_string(corners[i]));
            const GridPoint unit{delta.x / steps, delta.y / steps};
            if (steps * unit != delta || !direction_of_step(unit)) {
                throw Error(ErrorCode::NotAdjacent, to_string(corners[i]) + " and " + to_string(corners[i + 1]) +
                                                        " do not share a grid line");
            }
            for (int s = 1; s <= steps; ++s) chain.push_back(corners[i] + s * unit);
        }
        return LatticePath(std::move(chain));
    }
    static LatticePath through(std::initializer_list<GridPoint> corners) {
        return through(std::vector<GridPoint>(corners));
    }

    const std::vector<GridPoint>& vertices() const { return vertices_; }
    /// Grid points sorted lexicographically.
    const std::vector<GridPoint>& points() const { return points_; }
    /// Grid edges sorted lexicographically.
    const std::vector<GridEdge>& edges() const { return edges_; }
    const std::vector<Segment>& segments() const { return segments_; }

    GridPoint front() const { return vertices_.front(); }
    GridPoint back() const { return vertices_.back(); }
    std::size_t length() const { return edges_.size(); }

    int bend_count() const { return static_cast<int>(segments_.size()) - 1; }
    bool is_bk(int k) const { return bend_count() <= k; }

    std::vector<GridPoint> bend_points() const {
        std::vector<GridPoint> out;
        for (std::size_t i = 0; i + 1 < segments_.size(); ++i) out.push_back(segments_[i].last);
        return out;
    }
    /// The bend point of a 1-bend path.
    std::optional<GridPoint> bend_point() const {
        if (bend_count() != 1) return std::nullopt;
        return segments_.front().last;
    }
    bool bends_at(GridPoint p) const {
        for (std::size_t i = 0; i + 1 < segments_.size(); ++i)
            if (segments_[i].last == p) return true;
        return false;
    }

    /// The segment lying in direction `d`, if the path has exactly one.
    std::optional<Segment> segment_in(Direction d) const {
        std::optional<Segment> found;
        for (const auto& s : segments_) {
            if (s.direction() != d) continue;
            if (found) return std::nullopt;
            found = s;
        }
        return found;
    }

    bool contains(const GridEdge& e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }
    bool contains(GridPoint p) const { return std::binary_search(points_.begin(), points_.end(), p); }

    LatticePath translated(GridPoint by) const {
        std::vector<GridPoint> v = vertices_;
        for (auto& p : v) p = p + by;
        return LatticePath(std::move(v));
    }

    friend bool operator==(const LatticePath& a, const LatticePath& b) { return a.vertices_ == b.vertices_; }
    friend auto operator<=>(const LatticePath& a, const LatticePath& b) { return a.vertices_ <=> b.vertices_; }

private:
    void build_segments() {
        std::size_t start = 0;
        Direction current = *direction_of_step(vertices_[1] - vertices_[0]);
        GridPoint step = vertices_[1] - vertices_[0];
        for (std::size_t i = 1; i + 1 < vertices_.size(); ++i) {
            const GridPoint next = vertices_[i + 1] - vertices_[i];
            if (next == step) continue;
            // Reversing along the same line would revisit a vertex, so any
            // change of step is a change of line.
            segments_.push_back({line_through(vertices_[start], current), vertices_[start], vertices_[i]});
            start = i;
            step = next;
            current = *direction_of_step(next);
        }
        segments_.push_back({line_through(vertices_[start], current), vertices_[start], vertices_.back()});
    }

    std::vector<GridPoint> vertices_;
    std::vector<GridPoint> points_;
    std::vector<GridEdge> edges_;
    std::vector<Segment> segments_;
};

inline std::string to_string(const LatticePath& p) {
    std::string out;
    for (const auto& v : p.vertices()) {
        if (!out.empty()) out += ' ';
        out += to_string(v);
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const LatticePath& p) { return os << to_string(p); }

enum class AngleClass { Narrow, Normal, Wide };

inline std::string_view to_string(AngleClass a) {
    switch (a) {
    case AngleClass::Narrow: return "narrow";
    case AngleClass::Normal: return "normal";
    case AngleClass::Wide: return "wide";
    }
    return "?";
}

/// Angle (45, 90 or 135) between two non-opposite, distinct unit rays.
inline int angle_between(GridPoint ray1, GridPoint ray2) {
    const int d = std::abs(ray_angle(ray1) - ray_angle(ray2));
    return std::min(d, 360 - d);
}

inline AngleClass angle_class(GridPoint ray1, GridPoint ray2) {
    switch (angle_between(ray1, ray2)) {
    case 45: return AngleClass::Narrow;
    case 90: return AngleClass::Normal;
    default: return AngleClass::Wide;
    }
}

/// Bend point plus the two unit rays leaving it, rays kept sorted.
struct BendShape {
    GridPoint bend;
    std::pair<GridPoint, GridPoint> arms;

    AngleClass angle() const { return angle_class(arms.first, arms.second); }
    /// The two directions used by the arms.
    std::pair<Direction, Direction> directions() const {
        auto a = *direction_of_step(arms.first);
        auto b = *direction_of_step(arms.second);
        return a < b ? std::pair{a, b} : std::pair{b, a};
    }

    friend bool operator==(const BendShape&, const BendShape&) = default;
};

inline std::pair<GridPoint, GridPoint> sorted_arms(GridPoint a, GridPoint b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

inline BendShape bend_shape(const LatticePath& path) {
    if (path.bend_count() != 1) {
        throw Error(ErrorCode::NotOneBend, "path has " + std::to_string(path.bend_count()) + " bends");
    }
    const auto& segs = path.segments();
    const GridPoint b = segs[0].last;
    const auto& v = path.vertices();
    const auto it = std::find(v.begin(), v.end(), b);
    const GridPoint before = *(it - 1) - b;
    const GridPoint after = *(it + 1) - b;
    return {b, sorted_arms(before, after)};
}

/// All unordered arm pairs that form a bend: 15 ray pairs minus 3 opposite.
inline std::vector<std::pair<GridPoint, GridPoint>> all_bend_arm_pairs() {
    std::vector<std::pair<GridPoint, GridPoint>> out;
    for (std::size_t i = 0; i < kRays.size(); ++i)
        for (std::size_t j = i + 1; j < kRays.size(); ++j)
            if (kRays[i] != -kRays[j]) out.push_back(sorted_arms(kRays[i], kRays[j]));
    return out;
}

/// Axis-aligned bounding box in grid points.
struct BoundingBox {
    int min_x = 0, min_y = 0, max_x = -1, max_y = -1;

    bool empty() const { return max_x < min_x; }
    int rows() const { return empty() ? 0 : max_y - min_y + 1; }
    int columns() const { return empty() ? 0 : max_x - min_x + 1; }
    void add(GridPoint p) {
        if (empty()) {
            min_x = max_x = p.x;
            min_y = max_y = p.y;
            return;
        }
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
};

} // namespace epgt
