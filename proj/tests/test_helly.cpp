#include "epgt/helly.hpp"
#include "epgt/constructions.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <iostream>
#include <set>

using namespace epgt;
using epgt::testing::Rng;

namespace {

using Edges = std::set<GridEdge>;

// Oracle: cores computed with std::set over every subfamily.
Edges set_core(const std::vector<LatticePath>& ps, std::uint32_t subset) {
    std::optional<Edges> core;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (!(subset >> i & 1u)) continue;
        const Edges e(ps[i].edges().begin(), ps[i].edges().end());
        if (!core) {
            core = e;
            continue;
        }
        Edges keep;
        std::set_intersection(core->begin(), core->end(), e.begin(), e.end(), std::inserter(keep, keep.end()));
        core = std::move(keep);
    }
    return core.value_or(Edges{});
}

bool oracle_h_intersecting(const std::vector<LatticePath>& ps, int h) {
    const int n = static_cast<int>(ps.size());
    const int k = std::min(h, n);
    for (std::uint32_t s = 1; s < (1u << n); ++s)
        if (std::popcount(s) == k && set_core(ps, s).empty()) return false;
    return true;
}

bool oracle_strong(const std::vector<LatticePath>& ps, int h) {
    const int n = static_cast<int>(ps.size());
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        if (std::popcount(s) < h) continue;
        const auto whole = set_core(ps, s);
        bool found = false;
        for (std::uint32_t t = 1; t < (1u << n) && !found; ++t)
            found = (t & ~s) == 0 && std::popcount(t) == h && set_core(ps, t) == whole;
        if (!found) return false;
    }
    return true;
}

// Small families of B1 paths crowded into a 4x4 window so edges are shared.
std::vector<LatticePath> crowded_family(Rng& rng) {
    const int n = epgt::testing::uniform(rng, 2, 6);
    return random_b1_family(n, 4, 4, rng()).paths;
}

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::BadParameter;
}

} // namespace

TEST(PathFamily, RejectsDuplicatesUnlessAllowed) {
    const auto p = LatticePath::through({{0, 0}, {2, 0}});
    EXPECT_EQ(code_of([&] { PathFamily({p, p}); }), ErrorCode::DuplicateMember);
    EXPECT_EQ(PathFamily({p, p}, true).size(), 2u);
}

TEST(Core, Examples) {
    const auto sun = sun_representation(5);
    const PathFamily sun_clique(std::vector<LatticePath>(sun.paths.begin(), sun.paths.begin() + 5));
    EXPECT_EQ(core_edges(sun_clique), (std::vector<GridEdge>{edge_between({2, 3}, {3, 3})}));
    EXPECT_TRUE(core_edges(PathFamily(claw_witness())).empty());
    EXPECT_EQ(code_of([] { core_edges(PathFamily{}); }), ErrorCode::EmptyFamily);
}

TEST(HIntersecting, ClawIsPairwiseButNotThreeWise) {
    const PathFamily claw(claw_witness());
    EXPECT_TRUE(is_h_intersecting(claw, 1));
    EXPECT_TRUE(is_h_intersecting(claw, 2));
    EXPECT_FALSE(is_h_intersecting(claw, 3));
    EXPECT_FALSE(is_h_intersecting(claw, 5));
    EXPECT_TRUE(is_h_intersecting(PathFamily{}, 3));
    EXPECT_EQ(code_of([&] { is_h_intersecting(claw, 0); }), ErrorCode::BadParameter);
}

TEST(StrongHelly, Examples) {
    const PathFamily claw(claw_witness());
    EXPECT_FALSE(strong_helly_equals(claw, 2));
    EXPECT_TRUE(strong_helly_equals(claw, 3));
    EXPECT_TRUE(strong_helly_equals(PathFamily(sun_representation(4)), 3));
    EXPECT_EQ(code_of([&] { strong_helly_equals(claw, 4); }), ErrorCode::BadParameter);
    EXPECT_EQ(code_of([] { strong_helly_equals(PathFamily(random_b1_family(21, 8, 8, 1)), 3); }), ErrorCode::BoundsTooLarge);
}

TEST(HellyProperty, AgreesWithSetOracle) {
    Rng rng(501);
    for (int trial = 0; trial < 300; ++trial) {
        const auto ps = crowded_family(rng);
        const PathFamily f(ps);
        for (int h = 1; h <= static_cast<int>(ps.size()); ++h) {
            ASSERT_EQ(is_h_intersecting(f, h), oracle_h_intersecting(ps, h)) << trial << " h=" << h;
            ASSERT_EQ(strong_helly_equals(f, h), oracle_strong(ps, h)) << trial << " h=" << h;
        }
        const auto core = core_edges(f);
        ASSERT_EQ(Edges(core.begin(), core.end()), set_core(ps, (1u << ps.size()) - 1));
    }
}

TEST(HellyProperty, Monotone) {
    Rng rng(502);
    for (int trial = 0; trial < 300; ++trial) {
        const auto ps = crowded_family(rng);
        const PathFamily f(ps);
        const int n = static_cast<int>(ps.size());
        for (int h = 2; h <= n; ++h) {
            if (is_h_intersecting(f, h)) ASSERT_TRUE(is_h_intersecting(f, h - 1));
            if (strong_helly_equals(f, h - 1)) ASSERT_TRUE(strong_helly_equals(f, h));
        }
        // A family is always strong-Helly at its own size.
        ASSERT_TRUE(strong_helly_equals(f, n));
        // n-intersecting means the core is nonempty.
        ASSERT_EQ(is_h_intersecting(f, n), !core_edges(f).empty());
    }
}

// Frozen from the first run: no four-member violation in these windows.
TEST(HellySearch, FourByFourSegmentTwoIsClean) {
    const auto r = helly_violation_search(SearchBounds{4, 4, 1, 2});
    EXPECT_EQ(r.paths, 289u);
    EXPECT_EQ(r.families, 253006u);
    EXPECT_FALSE(r.helly_witness);
    EXPECT_FALSE(r.strong_witness);
    EXPECT_TRUE(r.report().passed) << r.report().text();
    const auto two = helly_violation_search(SearchBounds{4, 4, 1, 2}, 2);
    EXPECT_EQ(two.families, r.families);
}

TEST(HellySearch, FiveByFiveSegmentThreeIsClean) {
    const auto r = helly_violation_search(SearchBounds{5, 5, 1, 3});
    EXPECT_EQ(r.paths, 871u);
    EXPECT_EQ(r.families, 11155588u);
    EXPECT_FALSE(r.helly_witness);
    EXPECT_FALSE(r.strong_witness);
}

TEST(HellySearch, BoundsErrors) {
    EXPECT_EQ(code_of([] { helly_violation_search(SearchBounds{6, 5, 1, 2}); }), ErrorCode::BoundsTooLarge);
    EXPECT_EQ(code_of([] { helly_violation_search(SearchBounds{4, 4, 1, std::nullopt}); }), ErrorCode::BoundsTooLarge);
    EXPECT_EQ(code_of([] { helly_violation_search(SearchBounds{4, 4, 1, 4}); }), ErrorCode::BoundsTooLarge);
    EXPECT_EQ(code_of([] { helly_violation_search(SearchBounds{4, 4, 3, 2}); }), ErrorCode::BadParameter);
}

// Exploratory: with two bends the search is expected to find witnesses. Any
// witness it reports is checked with the set oracle; the outcome is printed.
TEST(HellySearch, TwoBendsExploratory) {
    const auto r = helly_violation_search(SearchBounds{4, 4, 2, 2});
    std::cout << r.report().text();
    if (r.helly_witness) {
        const auto& ps = r.helly_witness->members;
        EXPECT_TRUE(oracle_h_intersecting(ps, 3));
        EXPECT_TRUE(set_core(ps, 0xFu).empty());
    }
    if (r.strong_witness) EXPECT_FALSE(oracle_strong(r.strong_witness->members, 3));
}

TEST(LemmaChecks, FourAndFiveByFive) {
    for (int w : {4, 5}) {
        const auto r = lemma_checks(SearchBounds{w, w});
        EXPECT_TRUE(r.passed) << r.text();
        EXPECT_EQ(r.get("a_min_bends_for_gap"), "3");
        EXPECT_EQ(r.get("b_min_bends_for_gap"), "2");
    }
    EXPECT_EQ(code_of([] { lemma_checks(SearchBounds{6, 5}); }), ErrorCode::BoundsTooLarge);
}
