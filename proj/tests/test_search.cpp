#include "epgt/search.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace epgt;
using epgt::testing::Rng;

namespace {

// Oracle: count single-bend paths by formula. A straight path is a pair of
// points on one line; a bent path is a bend point with two non-collinear
// rays and a length along each.
std::size_t formula_b1_count(int w, int h, std::optional<int> seg = std::nullopt) {
    const SearchBounds b{w, h};
    auto reach = [&](GridPoint from, GridPoint ray) {
        int n = 0;
        while (b.inside(from + (n + 1) * ray)) ++n;
        return seg ? std::min(n, *seg) : n;
    };
    std::size_t straight = 0, bent = 0;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            const GridPoint p{x, y};
            // Count each straight path from its lower end.
            for (GridPoint ray : {GridPoint{1, 0}, GridPoint{0, 1}, GridPoint{1, 1}}) straight += static_cast<std::size_t>(reach(p, ray));
            for (std::size_t i = 0; i < kRays.size(); ++i)
                for (std::size_t j = i + 1; j < kRays.size(); ++j)
                    if (kRays[i] != -kRays[j]) bent += static_cast<std::size_t>(reach(p, kRays[i]) * reach(p, kRays[j]));
        }
    return straight + bent;
}

// Oracle: plain branching for the largest pairwise edge-disjoint subset.
std::size_t brute_disjoint(const std::vector<std::vector<GridEdge>>& sets, std::vector<std::size_t> pool) {
    if (pool.empty()) return 0;
    const std::size_t v = pool.back();
    pool.pop_back();
    const std::size_t without = brute_disjoint(sets, pool);
    std::vector<std::size_t> rest;
    for (std::size_t u : pool) {
        std::vector<GridEdge> common;
        std::set_intersection(sets[u].begin(), sets[u].end(), sets[v].begin(), sets[v].end(), std::back_inserter(common));
        if (common.empty()) rest.push_back(u);
    }
    return std::max(without, 1 + brute_disjoint(sets, rest));
}

void expect_valid(const SearchResult& r, const SimpleGraph& g) {
    ASSERT_EQ(r.status, SearchStatus::Found);
    ASSERT_TRUE(r.representation);
    const auto v = validate(*r.representation, g, 1, LabelMode::Labeled);
    EXPECT_TRUE(v.passed()) << v.text();
}

} // namespace

TEST(Enumerate, CountsMatchTheFormula) {
    EXPECT_EQ(formula_b1_count(2, 2), 13u);
    for (int w = 1; w <= 5; ++w)
        for (int h = 1; h <= 5; ++h) {
            if (w * h < 2) continue;
            EXPECT_EQ(enumerate_paths(SearchBounds{w, h}).size(), formula_b1_count(w, h)) << w << "x" << h;
            EXPECT_EQ(enumerate_paths(SearchBounds{w, h, 1, 2}).size(), formula_b1_count(w, h, 2)) << w << "x" << h;
        }
    EXPECT_EQ(enumerate_paths(SearchBounds{4, 4}).size(), 374u);
    EXPECT_EQ(enumerate_paths(SearchBounds{5, 5}).size(), 1010u);
    EXPECT_EQ(enumerate_paths(SearchBounds{4, 4, 1, 2}).size(), 289u);
    EXPECT_EQ(enumerate_paths(SearchBounds{5, 5, 2}).size(), 6212u);
}

TEST(Enumerate, PathsAreDistinctInsideAndWithinBends) {
    const auto ps = enumerate_paths(SearchBounds{4, 3, 2, 2});
    EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end()));
    EXPECT_EQ(std::adjacent_find(ps.begin(), ps.end()), ps.end());
    for (const auto& p : ps) {
        EXPECT_LE(p.bend_count(), 2);
        for (const auto& s : p.segments()) EXPECT_LE(s.length(), 2);
        for (GridPoint v : p.vertices()) EXPECT_TRUE((SearchBounds{4, 3}.inside(v)));
    }
}

TEST(Enumerate, Guards) {
    EXPECT_THROW(enumerate_paths(SearchBounds{13, 12}), Error);
    EXPECT_THROW(enumerate_paths(SearchBounds{0, 3}), Error);
}

TEST(FindRepresentation, SmallTargets) {
    expect_valid(find_representation(complete_graph(3), SearchBounds{2, 2}), complete_graph(3));
    expect_valid(find_representation(cycle_graph(4), SearchBounds{3, 3}), cycle_graph(4));
    expect_valid(find_representation(claw_graph(), SearchBounds{4, 4}), claw_graph());
    const auto empty = find_representation(SimpleGraph(0), SearchBounds{2, 2});
    EXPECT_EQ(empty.status, SearchStatus::Found);
}

TEST(FindRepresentation, K26FoundInSixBySix) {
    const auto r = find_representation(complete_bipartite(2, 6), SearchBounds{6, 6});
    expect_valid(r, complete_bipartite(2, 6));
}

TEST(FindRepresentation, K27ExhaustedInFiveByFive) {
    const auto r = find_representation(complete_bipartite(2, 7), SearchBounds{5, 5});
    EXPECT_EQ(r.status, SearchStatus::Exhausted);
    EXPECT_FALSE(r.representation);
}

TEST(FindRepresentation, GuardsAndTimeout) {
    try {
        find_representation(cycle_graph(13), SearchBounds{3, 3});
        FAIL() << "expected SizeLimitExceeded";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SizeLimitExceeded);
    }
    SearchOptions quick;
    quick.timeout_seconds = 0.0;
    EXPECT_EQ(find_representation(complete_bipartite(2, 7), SearchBounds{6, 6}, quick).status, SearchStatus::Timeout);
}

TEST(FindRepresentation, ThreadsGiveTheSequentialAnswer) {
    SearchOptions two;
    two.threads = 2;
    const auto a = find_representation(complete_bipartite(2, 4), SearchBounds{5, 5});
    const auto b = find_representation(complete_bipartite(2, 4), SearchBounds{5, 5}, two);
    ASSERT_EQ(a.status, SearchStatus::Found);
    EXPECT_EQ(a.representation->paths, b.representation->paths);
}

TEST(FindRepresentationProperty, NestedWindowsAndRelabeling) {
    Rng rng(701);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = epgt::testing::uniform(rng, 2, 5);
        const auto g = epgt::testing::random_graph(rng, n, 0.5);
        const auto small = find_representation(g, SearchBounds{3, 3});
        const auto large = find_representation(g, SearchBounds{4, 4});
        ASSERT_NE(small.status, SearchStatus::Timeout);
        if (small.status == SearchStatus::Found) {
            expect_valid(small, g);
            ASSERT_EQ(large.status, SearchStatus::Found) << trial;
        }
        if (large.status == SearchStatus::Found) expect_valid(large, g);
        const auto h = g.relabeled(epgt::testing::random_permutation(rng, n));
        ASSERT_EQ(find_representation(h, SearchBounds{3, 3}).status, small.status) << trial;
    }
}

TEST(K27Counting, MatchesBruteForceInThreeByThree) {
    const SearchBounds b{3, 3};
    const auto r = k27_counting_check(b);
    const auto ps = enumerate_paths(b);
    std::vector<std::vector<GridEdge>> sets;
    for (const auto& p : ps) sets.push_back(p.edges());
    std::size_t best = 0;
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
            if (share_edge(ps[i], ps[j])) continue;
            std::vector<std::size_t> common;
            for (std::size_t k = 0; k < ps.size(); ++k)
                if (share_edge(ps[k], ps[i]) && share_edge(ps[k], ps[j])) common.push_back(k);
            if (common.size() > best) best = std::max(best, brute_disjoint(sets, common));
        }
    EXPECT_EQ(r.get("max_common_neighbours"), std::to_string(best));
    EXPECT_TRUE(r.passed);
}

TEST(K27Counting, FiveByFiveStaysBelowSeven) {
    const auto r = k27_counting_check(SearchBounds{5, 5});
    EXPECT_TRUE(r.passed) << r.text();
    EXPECT_EQ(r.get("max_common_neighbours"), "5");
}
