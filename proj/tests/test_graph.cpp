#include "epgt/graph.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <set>
#include <sstream>

using namespace epgt;
using epgt::testing::Rng;

namespace {

// Oracle: every vertex subset, kept when it is a clique that no single
// outside vertex extends.
std::vector<std::vector<int>> brute_force_maximal_cliques(const SimpleGraph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> out;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (s >> v & 1u) members.push_back(v);
        bool clique = true;
        for (std::size_t i = 0; i < members.size() && clique; ++i)
            for (std::size_t j = i + 1; j < members.size() && clique; ++j) clique = g.has_edge(members[i], members[j]);
        if (!clique) continue;
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v) {
            if (s >> v & 1u) continue;
            maximal = !std::all_of(members.begin(), members.end(), [&](int u) { return g.has_edge(u, v); });
        }
        if (maximal) out.push_back(members);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> sorted_cliques(const SimpleGraph& g) {
    auto c = maximal_cliques(g);
    for (auto& k : c) std::sort(k.begin(), k.end());
    std::sort(c.begin(), c.end());
    return c;
}

SimpleGraph path3() {
    SimpleGraph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    return g;
}

} // namespace

TEST(MaximalCliques, Examples) {
    EXPECT_EQ(sorted_cliques(complete_graph(3)), (std::vector<std::vector<int>>{{0, 1, 2}}));
    EXPECT_EQ(sorted_cliques(path3()), (std::vector<std::vector<int>>{{0, 1}, {1, 2}}));
    const auto s4 = sun_graph(4);
    EXPECT_EQ(sorted_cliques(s4), brute_force_maximal_cliques(s4));
}

TEST(MaximalCliques, IsolatedVertexIsItsOwnClique) {
    SimpleGraph g(2);
    EXPECT_EQ(sorted_cliques(g), (std::vector<std::vector<int>>{{0}, {1}}));
}

TEST(MaximalCliquesProperty, AgreesWithBruteForce) {
    Rng rng(201);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = epgt::testing::uniform(rng, 1, 8);
        const double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
        const auto g = epgt::testing::random_graph(rng, n, p);
        SCOPED_TRACE("trial " + std::to_string(trial));
        ASSERT_EQ(sorted_cliques(g), brute_force_maximal_cliques(g));
    }
}

TEST(MaximalCliquesProperty, IncomparableAndCoverEveryEdge) {
    Rng rng(202);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = epgt::testing::random_graph(rng, epgt::testing::uniform(rng, 2, 14), 0.4);
        const auto cliques = sorted_cliques(g);
        for (std::size_t i = 0; i < cliques.size(); ++i)
            for (std::size_t j = 0; j < cliques.size(); ++j)
                if (i != j) ASSERT_FALSE(std::includes(cliques[j].begin(), cliques[j].end(), cliques[i].begin(), cliques[i].end()));
        for (auto [u, v] : g.edges()) {
            const bool covered = std::any_of(cliques.begin(), cliques.end(), [&](const auto& c) {
                return std::binary_search(c.begin(), c.end(), u) && std::binary_search(c.begin(), c.end(), v);
            });
            ASSERT_TRUE(covered);
        }
    }
}

TEST(Chordless4Cycles, Examples) {
    EXPECT_EQ(chordless_4cycles(cycle_graph(4)).size(), 1u);
    EXPECT_TRUE(chordless_4cycles(complete_graph(4)).empty());
    EXPECT_EQ(chordless_4cycles(complete_bipartite(2, 3)).size(), 3u);
}

TEST(Chordless4CyclesProperty, EachReturnedCycleIsInducedC4) {
    Rng rng(203);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = epgt::testing::uniform(rng, 4, 9);
        const auto g = epgt::testing::random_graph(rng, n, 0.45);
        std::set<std::set<int>> seen;
        std::size_t oracle = 0;
        // Oracle count: induced C4s on 4-sets, three pairings each.
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c)
                    for (int d = c + 1; d < n; ++d) {
                        const std::array<int, 4> q{a, b, c, d};
                        int edges = 0;
                        for (int i = 0; i < 4; ++i)
                            for (int j = i + 1; j < 4; ++j) edges += g.has_edge(q[i], q[j]);
                        if (edges != 4) continue;
                        bool regular = true;
                        for (int v : q) {
                            int deg = 0;
                            for (int w : q) deg += v != w && g.has_edge(v, w);
                            regular = regular && deg == 2;
                        }
                        oracle += regular;
                    }
        const auto cycles = chordless_4cycles(g);
        ASSERT_EQ(cycles.size(), oracle);
        for (const auto& c : cycles) {
            for (int i = 0; i < 4; ++i) ASSERT_TRUE(g.has_edge(c[i], c[(i + 1) % 4]));
            ASSERT_FALSE(g.has_edge(c[0], c[2]));
            ASSERT_FALSE(g.has_edge(c[1], c[3]));
            ASSERT_TRUE(seen.insert({c.begin(), c.end()}).second);
        }
    }
}

TEST(Isomorphism, Examples) {
    EXPECT_TRUE(is_isomorphic(cycle_graph(4), complete_bipartite(2, 2)));
    EXPECT_FALSE(is_isomorphic(cycle_graph(5), cycle_graph(4)));
    EXPECT_TRUE(is_isomorphic(claw_graph(), complete_bipartite(1, 3)));
}

TEST(Isomorphism, SizeGuard) {
    IsomorphismOptions opts;
    opts.max_order = 5;
    try {
        is_isomorphic(cycle_graph(6), cycle_graph(6), opts);
        FAIL() << "expected SizeLimitExceeded";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SizeLimitExceeded);
    }
}

TEST(IsomorphismProperty, RelabelingPreservesVerdict) {
    Rng rng(204);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = epgt::testing::uniform(rng, 1, 10);
        const auto g = epgt::testing::random_graph(rng, n, 0.4);
        const auto h = g.relabeled(epgt::testing::random_permutation(rng, n));
        ASSERT_TRUE(is_isomorphic(g, g));
        ASSERT_TRUE(is_isomorphic(g, h));
        ASSERT_TRUE(is_isomorphic(h, g));
        const auto other = epgt::testing::random_graph(rng, n, 0.4);
        ASSERT_EQ(is_isomorphic(g, other), is_isomorphic(other, g));
        ASSERT_EQ(is_isomorphic(g, other), is_isomorphic(h, other.relabeled(epgt::testing::random_permutation(rng, n))));
    }
}

TEST(Catalog, Counts) {
    const auto s3 = catalog("sun", 3);
    EXPECT_EQ(s3.order(), 6);
    EXPECT_EQ(s3.size(), 9u);
    const auto k26 = catalog("bipartite", 2, 6);
    EXPECT_EQ(k26.order(), 8);
    EXPECT_EQ(k26.size(), 12u);
    EXPECT_TRUE(is_isomorphic(catalog("claw"), star_graph(3)));
    EXPECT_EQ(catalog("cycle", 5).size(), 5u);
    EXPECT_EQ(catalog("complete", 5).size(), 10u);
}

TEST(Catalog, BadParameters) {
    EXPECT_THROW(catalog("cycle", 2), Error);
    EXPECT_THROW(catalog("sun", 2), Error);
    EXPECT_THROW(catalog("bipartite", 0, 3), Error);
    EXPECT_THROW(catalog("petersen"), Error);
}

TEST(GraphFile, RoundTripAndErrors) {
    std::stringstream ss;
    write_graph(ss, sun_graph(5));
    EXPECT_EQ(read_graph(ss), sun_graph(5));
    std::istringstream bad("n 3\n0 1\n1 x\n");
    try {
        read_graph(bad);
        FAIL() << "expected ParseError";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ParseError);
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    }
    std::istringstream loop("n 2\n1 1\n");
    EXPECT_THROW(read_graph(loop), Error);
}
