#include <gtest/gtest.h>

#include <random>

#include <goodset/apery.hpp>
#include <goodset/duality.hpp>

#include "support/fixtures.hpp"
#include "support/random_sets.hpp"

using namespace goodset;
using namespace fixtures;

namespace {

// nonzero elements of S in its small window
std::vector<Point> nonzero_small(const GoodSet& s) {
    std::vector<Point> out;
    for (const auto& p : s.small())
        if (p != Point(s.dim())) out.push_back(p);
    return out;
}

}  // namespace

TEST(Apery, Membership) {
    EXPECT_TRUE(apery_membership(s_cusp(), Point{2}, Point{3}));
    EXPECT_FALSE(apery_membership(s_cusp(), Point{2}, Point{4}));
    EXPECT_TRUE(apery_membership(s_tacnode(), Point{1, 1}, Point{3, 2}));
    EXPECT_THROW(apery_membership(s_cusp(), Point{1}, Point{3}), precondition_error);
}

TEST(Apery, Window) {
    EXPECT_EQ(apery_window(s_cusp(), Point{2}, Point{5}), (std::vector<Point>{Point{0}, Point{3}}));
    EXPECT_EQ(apery_window(s_tacnode(), Point{1, 1}, Point{3, 3}),
              (std::vector<Point>{Point{0, 0}, Point{2, 3}, Point{3, 2}}));
    // (2,1) and (1,2) lie in S_B while (1,0) and (0,1) do not
    EXPECT_EQ(apery_window(s_node(), Point{1, 1}, Point{2, 2}),
              (std::vector<Point>{Point{0, 0}, Point{1, 2}, Point{2, 1}}));
    EXPECT_THROW(apery_window(s_node(), Point{1, 1}, Point{-1, 0}), precondition_error);
}

TEST(Apery, WindowIsEMinusShift) {
    std::mt19937_64 rng(301);
    for (int t = 0; t < 60; ++t) {
        GoodSet s = testing_support::random_semigroup(rng, 1 + t % 3);
        for (const auto& a : nonzero_small(s)) {
            Point hi = s.conductor() + a + ones(s.dim());
            std::vector<Point> brute;
            for_each_in_box(s.min(), hi, [&](const Point& b) {
                if (!s.contains(b)) return;
                // b ∉ alpha + S
                bool shifted = false;
                for_each_in_box(s.min(), b, [&](const Point& x) {
                    if (s.contains(x) && x + a == b) shifted = true;
                });
                if (!shifted) brute.push_back(b);
            });
            std::sort(brute.begin(), brute.end());
            EXPECT_EQ(apery_window(s, a, hi), brute);
        }
    }
}

TEST(Apery, NumericalCount) {
    // #A_alpha = alpha for a numerical semigroup
    EXPECT_EQ(apery_window(s_cusp(), Point{2}, Point{2 + 2}).size(), 2u);
    GoodSet s = validate_good_set(1, {Point{0}, Point{3}, Point{5}, Point{6}, Point{8}});
    for (Coord a : {3, 5, 6, 8, 9, 11}) EXPECT_EQ(apery_window(s, Point{a}, Point{8 + a}).size(), std::size_t(a));
}

TEST(GapDecomposition, Examples) {
    auto g = gap_decomposition(s_cusp(), Point{2}, Point{1});
    EXPECT_EQ(g.a, Point{3});
    EXPECT_EQ(g.rho, 1);
    g = gap_decomposition(s_tacnode(), Point{1, 1}, Point{1, 0});
    EXPECT_EQ(g.a, (Point{3, 2}));
    EXPECT_EQ(g.rho, 2);
    g = gap_decomposition(s_node(), Point{1, 1}, Point{0, 1});
    EXPECT_EQ(g.a, (Point{1, 2}));
    EXPECT_EQ(g.rho, 1);
    EXPECT_THROW(gap_decomposition(s_node(), Point{1, 1}, Point{0, 0}), precondition_error);
    EXPECT_THROW(gap_decomposition(s_node(), Point{0, 0}, Point{0, 1}), precondition_error);
}

TEST(GapDecomposition, RoundTripBothWays) {
    std::mt19937_64 rng(303);
    std::vector<GoodSet> sets{s_cusp(), s_node(), s_axes(), s_tacnode()};
    for (int t = 0; t < 30; ++t) sets.push_back(testing_support::random_semigroup(rng, 1 + t % 3));
    for (const auto& s : sets) {
        for (const auto& a : nonzero_small(s)) {
            // every gap below the conductor decomposes
            for_each_in_box(Point(s.dim()), s.conductor(), [&](const Point& b) {
                if (s.contains(b)) return;
                auto g = gap_decomposition(s, a, b);
                EXPECT_TRUE(apery_membership(s, a, g.a));
                EXPECT_GE(g.rho, 1);
                EXPECT_EQ(g.a - g.rho * a, b);
            });
            // and a - rho·alpha is never in S
            for (const auto& x : apery_window(s, a, s.conductor() + a))
                for (Coord rho = 1; rho <= 3; ++rho) EXPECT_FALSE(s.contains(x - rho * a));
        }
    }
}

TEST(AperySymmetry, Examples) {
    EXPECT_TRUE(apery_symmetry_check(s_cusp(), s_cusp(), s_cusp(), Point{2}, Box{Point{0}, Point{5}}).passed);
    EXPECT_TRUE(apery_symmetry_check(s_tacnode(), s_tacnode(), s_tacnode(), Point{1, 1},
                                     Box{Point{0, 0}, Point{4, 4}})
                    .passed);
    auto c = apery_symmetry_check(s_axes(), s_axes(), s_axes(), Point{1, 1, 1});
    EXPECT_FALSE(c.passed);
    ASSERT_FALSE(c.witnesses.empty());
    EXPECT_THROW(apery_symmetry_check(s_node(), m_node(), s_node(), Point{0, 0}), precondition_error);
}

TEST(AperySymmetry, EveryAlphaOnFixtures) {
    for (const auto& s : {s_cusp(), s_node(), s_tacnode()})
        for (const auto& a : nonzero_small(s)) EXPECT_TRUE(apery_symmetry_check(s, s, s, a).passed);
    for (const auto& a : nonzero_small(s_axes()))
        EXPECT_FALSE(apery_symmetry_check(s_axes(), s_axes(), s_axes(), a).passed);
}

TEST(AperySymmetry, EquivalentFormOnFixtures) {
    // a ∈ A_alpha  ⟺  a ∈ S and ∅ ≠ F(S, f + alpha − a) ⊆ A_alpha, for symmetric S
    for (const auto& s : {s_cusp(), s_node(), s_tacnode()}) {
        const Point f = frobenius(s);
        for (const auto& a : nonzero_small(s)) {
            const Point top = s.conductor() + a;
            for_each_in_box(Point(s.dim()), top + ones(s.dim()), [&](const Point& x) {
                bool lhs = apery_membership(s, a, x);
                bool rhs = false;
                if (s.contains(x)) {
                    auto fib = full_fiber_points(s, f + a - x, top);
                    rhs = !fib.empty() &&
                          std::all_of(fib.begin(), fib.end(), [&](const Point& g) { return apery_membership(s, a, g); });
                }
                EXPECT_EQ(lhs, rhs) << to_string(x);
            });
        }
    }
}

TEST(AperySymmetry, CharacterizesSymmetryOnRandomSemigroups) {
    std::mt19937_64 rng(307);
    for (int t = 0; t < 60; ++t) {
        GoodSet s = testing_support::random_semigroup(rng, 1 + t % 3);
        bool sym = symmetry_check(s).symmetric;
        for (const auto& a : nonzero_small(s)) EXPECT_EQ(apery_symmetry_check(s, s, s, a).passed, sym);
    }
}
