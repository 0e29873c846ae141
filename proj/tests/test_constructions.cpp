#include "erstab/cliques.hpp"
#include "erstab/constructions.hpp"
#include "erstab/covering.hpp"
#include "erstab/errors.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace erstab;

TEST(Alpha, Examples) {
    EXPECT_EQ(alpha(10, 2, 1, 0), 1);
    EXPECT_EQ(alpha(11, 3, 1, 1), 0);
    EXPECT_EQ(alpha(10, 2, 1, 2), -3);
}

TEST(Alpha, EqualsForcedMissingCrossEdges) {
    // |A||B| - e^c + s = floor(n^2/4) + t  =>  e^c = alpha.
    for (int n = 4; n <= 40; ++n)
        for (int s = 2; s <= 8; ++s)
            for (int t = 1; t < s; ++t)
                for (int a = 0; a <= 4 && n / 2 - a >= 0; ++a) {
                    const std::int64_t ab = std::int64_t{(n + 1) / 2 + a} * (n / 2 - a);
                    EXPECT_EQ(alpha(n, s, t, a), ab + s - t - n * n / 4);
                }
}

TEST(BuildG1, Examples) {
    const Graph g = build_g1({10, 2, 2, 1, 0});
    EXPECT_EQ(g.edge_count(), 26);
    EXPECT_EQ(count_cliques(g, 3), 8u);
    EXPECT_EQ(clique_cover_number(g, 3).size, 2);
    EXPECT_EQ(build_g1({11, 2, 3, 2, 0}).edge_count(), 32);
}

TEST(BuildG1, Layout) {
    // A = 0..4, B = 5..9; x1y1 = {0,1}, u1u2 = {5,6}, deleted {5,0}.
    const Graph g = build_g1({10, 2, 2, 1, 0});
    EXPECT_TRUE(g.adjacent(0, 1));
    EXPECT_TRUE(g.adjacent(5, 6));
    EXPECT_FALSE(g.adjacent(0, 5));
    EXPECT_TRUE(g.adjacent(1, 5));
}

TEST(BuildG1, Infeasible) {
    EXPECT_THROW(build_g1({10, 2, 2, 1, 2}), Infeasible);  // alpha < 0
    EXPECT_THROW(build_g1({10, 3, 2, 1, 0}), Infeasible);  // r != 2
    EXPECT_THROW(build_g1({10, 2, 6, 1, 0}), Infeasible);  // A cannot hold 10 matching vertices
    EXPECT_THROW(build_g1({10, 2, 1, 1, 0}), Infeasible);  // t = s
    EXPECT_THROW(build_g1({4, 2, 2, 1, 1}), Infeasible);   // B too small
    EXPECT_NE(*g1_infeasibility({10, 2, 2, 1, 2}), *g1_infeasibility({10, 2, 6, 1, 0}));
}

TEST(BuildG2, Examples) {
    const Graph g = build_g2({10, 2, 2, 1, 0});
    EXPECT_EQ(g.edge_count(), 26);
    EXPECT_EQ(count_cliques(g, 3), 9u);
    EXPECT_EQ(clique_cover_number(g, 3).size, 2);
    EXPECT_EQ(alpha(12, 3, 1, 1), 1);
    const Graph h = build_g2({12, 2, 3, 1, 1});
    EXPECT_EQ(count_cliques(h, 3), 14u);
    EXPECT_EQ(h.edge_count(), 37);
    EXPECT_THROW(build_g2({10, 2, 4, 1, 1}), Infeasible); // A has 6 < 8
}

TEST(BuildG3, Examples) {
    const Graph g = build_g3(9, 3);
    EXPECT_EQ(g.edge_count(), 28);
    EXPECT_EQ(count_cliques(g, 4), 12u);
    EXPECT_EQ(count_cliques(build_g3(10, 3), 4), 15u);
    const Graph h = build_g3(8, 2);
    EXPECT_EQ(h.edge_count(), 17);
    EXPECT_EQ(count_cliques(h, 3), 6u);
}

TEST(BuildG3, TooSmall) {
    EXPECT_NO_THROW(build_g3(5, 3));
    EXPECT_THROW(build_g3(4, 3), Infeasible);
    EXPECT_THROW(build_g3(10, 1), Infeasible);
}

TEST(G3Formulas, AgreeWithEnumeration) {
    for (int r = 2; r <= 5; ++r) {
        for (int n = 2 * r + 2; n <= 24; ++n) {
            const Graph g = build_g3(n, r);
            EXPECT_EQ(g.edge_count(), turan_edges(n, r) + 1);
            const auto count = static_cast<std::int64_t>(count_cliques(g, r + 1));
            EXPECT_EQ(count, g3_clique_product(n, r)) << n << "," << r;
            EXPECT_EQ(count, g3_clique_cases(n, r)) << n << "," << r;
        }
    }
}

TEST(BuildG4, Examples) {
    // (9,3,2) and (10,2,3) need a class of 4 resp. 6 vertices; neither fits.
    EXPECT_THROW(build_g4(9, 3, 2), Infeasible);
    EXPECT_THROW(build_g4(10, 2, 3), Infeasible);
    const Graph g = build_g4(12, 3, 2);
    EXPECT_EQ(count_cliques(g, 4), 32u);
    EXPECT_EQ(g4_clique_count(12, 3, 2), 32);
    const Graph h = build_g4(12, 2, 3);
    EXPECT_EQ(h.edge_count(), 36 + 3);
    EXPECT_EQ(count_cliques(h, 3), 18u);
    const Graph one = build_g4(9, 3, 1);
    EXPECT_EQ(count_cliques(one, 4), 9u);
    EXPECT_EQ(clique_cover_number(one, 4).size, 1);
}

TEST(Formulas, Examples) {
    EXPECT_EQ(t3_g1_formula(10, 2, 1, 0), 8);
    EXPECT_EQ(t3_g2_formula(10, 2, 1, 0), 9);
    EXPECT_EQ(t3_g1_formula(10, 6, 1, 1), 18);
    EXPECT_EQ(t3_g1_formula(10, 6, 1, 0), 20);
    EXPECT_THROW(t3_g1_formula(10, 2, 1, 2), Infeasible);
    EXPECT_THROW(t3_g2_formula(10, 2, 1, 2), Infeasible);
}

TEST(Formulas, MatchBuilders) {
    for (int n = 8; n <= 40; ++n)
        for (int s = 2; s <= 6; ++s)
            for (int t = 1; t < s; ++t)
                for (int a = 0; alpha(n, s, t, a) >= 0; ++a) {
                    const ConstructionParams p{n, 2, s, t, a};
                    if (!g1_infeasibility(p)) {
                        const Graph g = build_g1(p);
                        EXPECT_EQ(static_cast<std::int64_t>(count_cliques(g, 3)), t3_g1_formula(n, s, t, a));
                        EXPECT_EQ(g.edge_count(), n * n / 4 + t);
                    }
                    if (!g2_infeasibility(p)) {
                        const Graph g = build_g2(p);
                        EXPECT_EQ(static_cast<std::int64_t>(count_cliques(g, 3)), t3_g2_formula(n, s, t, a));
                        EXPECT_EQ(g.edge_count(), n * n / 4 + t);
                    }
                }
}

TEST(OptimizeA, Examples) {
    const auto g1 = optimize_a(10, 2, 1, Family::G1);
    EXPECT_EQ(g1.a, 0);
    EXPECT_EQ(g1.count, 8);
    // a in {0,1,2}: 20, 18, 20 from the formula alone; no a is buildable at n=10.
    const auto formula_only = optimize_a(10, 6, 1, Family::G1, Feasibility::FormulaOnly);
    EXPECT_EQ(formula_only.a, 1);
    EXPECT_EQ(formula_only.count, 18);
    EXPECT_THROW(optimize_a(10, 6, 1, Family::G1), Infeasible);
    // a=0: 13, a=1: 11.
    const auto g2 = optimize_a(10, 3, 1, Family::G2);
    EXPECT_EQ(g2.a, 1);
    EXPECT_EQ(g2.count, 11);
    EXPECT_THROW(optimize_a(10, 2, 2, Family::G1), std::invalid_argument);
}

TEST(OptimizeA, MatchesFullEnumeration) {
    for (int n = 8; n <= 40; ++n)
        for (int s = 2; s <= 9; ++s)
            for (int t = 1; t < s; ++t)
                for (Family f : {Family::G1, Family::G2}) {
                    std::optional<OptimizedA> best;
                    for (int a = 0; a < n / 2; ++a) {
                        if (alpha(n, s, t, a) < 0) continue;
                        const ConstructionParams p{n, 2, s, t, a};
                        if (f == Family::G1 ? g1_infeasibility(p) : g2_infeasibility(p)) continue;
                        const auto v = t3_formula(f, n, s, t, a);
                        if (!best || v < best->count) best = OptimizedA{a, v};
                    }
                    const auto got = try_optimize_a(n, s, t, f);
                    ASSERT_EQ(best.has_value(), got.has_value());
                    if (best) {
                        EXPECT_EQ(best->a, got->a);
                        EXPECT_EQ(best->count, got->count);
                    }
                }
}

TEST(TheoremBound, Examples) {
    EXPECT_EQ(theorem_bound(10, 2, 1), 8);
    EXPECT_EQ(theorem_bound(12, 2, 1), 10);
    // n odd: a=1 gives alpha < 0, a=0 gives 7 for both constructions.
    const auto odd = theorem_bound_detail(9, 2, 1);
    EXPECT_EQ(odd.value, 7);
    EXPECT_EQ(odd.family, Family::G1);
    EXPECT_EQ(odd.a, 0);
    EXPECT_EQ(theorem_bound(7, 2, 1), 5);
    EXPECT_EQ(theorem_bound(8, 2, 1), 6);
}

TEST(Conjecture, Values) {
    EXPECT_EQ(conjecture11_value(10, 2, 1), 8);
    // Even n, s = 6, t = 1: a = 1 undercuts the conjectured value by s - 4.
    for (int n = 24; n <= 40; n += 2) {
        const auto c = conjecture11_value(n, 6, 1);
        EXPECT_EQ(c, 5 * (n / 2) + n / 2 - 10);
        EXPECT_EQ(t3_g1_formula(n, 6, 1, 1), c - 2);
        EXPECT_LT(theorem_bound(n, 6, 1), c);
    }
}

TEST(ConjectureGap, G1GapZeroUpToFour) {
    for (const auto& row : conjecture_gap_report(16, 40, 4)) {
        if (row.n % 2 != 0) continue;
        ASSERT_TRUE(row.g1_gap.has_value());
        EXPECT_EQ(*row.g1_gap, 0) << row.n << " " << row.s << " " << row.t;
        EXPECT_EQ(row.g1->a, 0);
    }
}

TEST(ConjectureGap, TheoremBoundGapFromG2) {
    // With t >= 2, G2 at a = 1 beats the conjectured value by t - 1 for even n.
    for (const auto& row : conjecture_gap_report(16, 40, 4)) {
        if (row.n % 2 != 0) continue;
        EXPECT_EQ(*row.bound_gap, row.t - 1) << row.n << " " << row.s << " " << row.t;
    }
}
