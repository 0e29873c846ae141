#include "erstab/cliques.hpp"
#include "erstab/errors.hpp"
#include "erstab/partition.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace erstab;

namespace {

// K_{6,6} on 0..5 | 6..11 plus the given class-edges, minus the given cross-edges.
Graph bipartite_with(std::initializer_list<Edge> add, std::initializer_list<Edge> remove) {
    Graph g = complete_multipartite({6, 6});
    for (auto [u, v] : add) g.add_edge(u, v);
    for (auto [u, v] : remove) g.remove_edge(u, v);
    return g;
}

const RPartition kHalves = RPartition::from_sizes(std::vector<int>{6, 6});

} // namespace

TEST(Partition, FromSizes) {
    const auto p = RPartition::from_sizes(std::vector<int>{2, 3});
    EXPECT_EQ(p.labels, (std::vector<int>{0, 0, 1, 1, 1}));
    EXPECT_EQ(p.class_mask(1), Mask{0b11100});
    EXPECT_EQ(p.class_sizes(), (std::vector<int>{2, 3}));
    EXPECT_THROW(p.validate_for(Graph(4)), std::invalid_argument);
    RPartition bad{2, {0, 2, 1}};
    EXPECT_THROW(bad.validate_for(Graph(3)), std::invalid_argument);
}

TEST(Partition, Classify) {
    const Graph k4 = complete_multipartite({1, 1, 1, 1});
    const auto p = RPartition::from_sizes(std::vector<int>{2, 2});
    const auto cls = classify_edges(k4, p);
    EXPECT_EQ(cls.class_edges, (std::vector<Edge>{{0, 1}, {2, 3}}));
    EXPECT_EQ(cls.cross_edges.size(), 4u);
    EXPECT_TRUE(cls.missing_cross_edges.empty());
    EXPECT_EQ(class_edge_endpoints(k4, p), Mask{0b1111});

    const Graph g = bipartite_with({{0, 1}}, {{2, 6}});
    const auto c2 = classify_edges(g, kHalves);
    EXPECT_EQ(c2.missing_cross_edges, (std::vector<Edge>{{2, 6}}));
    EXPECT_EQ(c2.cross_edges.size(), 35u);
}

TEST(MinClassEdges, Examples) {
    const Graph c5 = from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    EXPECT_EQ(min_class_edges(c5, 2).count, 1);
    const Graph k4 = complete_multipartite({1, 1, 1, 1});
    EXPECT_EQ(min_class_edges(k4, 2).count, 2);
    EXPECT_EQ(min_class_edges(k4, 3).count, 1);
    EXPECT_EQ(min_class_edges(k4, 4).count, 0);
    const auto w = min_class_edges(c5, 2);
    EXPECT_EQ(static_cast<int>(classify_edges(c5, w.witness).class_edges.size()), w.count);
}

TEST(MinClassEdges, BudgetAndLocalSearch) {
    std::mt19937_64 rng(31);
    const Graph g = oracle::random_graph(20, 0.5, rng);
    EXPECT_THROW(min_class_edges(g, 2), BudgetExceeded);
    PartitionOptions loose;
    loose.exact = false;
    const auto approx = min_class_edges(g, 2, loose);
    EXPECT_FALSE(approx.exact);
    EXPECT_EQ(static_cast<int>(classify_edges(g, approx.witness).class_edges.size()), approx.count);
    EXPECT_THROW(is_x_far(g, 2, 1, loose), BudgetExceeded);
    PartitionOptions big;
    big.budget = std::uint64_t{1} << 20;
    EXPECT_LE(min_class_edges(g, 2, big).count, approx.count);
}

TEST(MinClassEdges, LocalSearchNeverBelowExact) {
    std::mt19937_64 rng(32);
    PartitionOptions loose;
    loose.exact = false;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 9);
        const Graph g = oracle::random_graph(n, 0.5, rng);
        for (int r = 2; r <= 3; ++r) EXPECT_GE(min_class_edges(g, r, loose).count, min_class_edges(g, r).count);
    }
}

TEST(XFar, MatchesDeletionSearch) {
    std::mt19937_64 rng(33);
    for (int n = 2; n <= 6; ++n)
        for (int trial = 0; trial < 60; ++trial) {
            const Graph g = oracle::random_graph(n, 0.6, rng);
            for (int r = 2; r <= 3; ++r)
                for (int x = 0; x <= 3; ++x)
                    ASSERT_EQ(is_x_far(g, r, x), oracle::literal_x_far(g, r, x)) << n << " " << r << " " << x;
        }
}

TEST(Supersat, Examples) {
    EXPECT_NEAR(supersat_lower_bound(10, 2, 26, 1), 0.18315638888734184, 1e-12);
    EXPECT_NEAR(supersat_lower_bound(12, 3, 49, 5), 0.3569403134399557, 1e-12);
    EXPECT_LT(supersat_lower_bound(10, 2, 20, 0), 0);
    EXPECT_GT(proof_far_threshold(2, 2), 200);
}

TEST(FlipStep, Example) {
    const Graph g = bipartite_with({{0, 1}}, {{2, 6}});
    const auto next = flip_step(g, kHalves);
    ASSERT_TRUE(next);
    EXPECT_EQ(*next, bipartite_with({{0, 1}}, {{0, 6}}));
    EXPECT_EQ(count_cliques(g, 3), 6u);
    EXPECT_EQ(count_cliques(*next, 3), 5u);
    EXPECT_FALSE(flip_step(complete_multipartite({6, 6}), kHalves));
}

TEST(FlipStep, PreservesEdgesAndNeverAddsTriangles) {
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 300; ++trial) {
        Graph g = complete_multipartite({6, 6});
        g.add_edge(0, 1);
        g.add_edge(6, 7);
        for (int k = 0; k < 3; ++k) {
            const int u = 2 + static_cast<int>(rng() % 4), v = 8 + static_cast<int>(rng() % 4);
            if (g.adjacent(u, v)) g.remove_edge(u, v);
        }
        const auto next = flip_step(g, kHalves);
        ASSERT_TRUE(next);
        EXPECT_EQ(next->edge_count(), g.edge_count());
        EXPECT_LT(count_cliques(*next, 3), count_cliques(g, 3));
    }
}

TEST(Redistribute, Example) {
    const Graph g = bipartite_with({{0, 1}, {2, 3}, {6, 7}}, {{4, 8}});
    const Graph out = redistribute_missing_edges(g, kHalves);
    EXPECT_EQ(out, bipartite_with({{0, 1}, {2, 3}, {6, 7}}, {{0, 6}}));
    EXPECT_EQ(count_cliques(g, 3), 18u);
    EXPECT_EQ(count_cliques(out, 3), 16u);
}

TEST(Redistribute, Infeasible) {
    EXPECT_THROW(redistribute_missing_edges(bipartite_with({{0, 1}, {1, 2}, {6, 7}}, {}), kHalves), Infeasible);
    EXPECT_THROW(redistribute_missing_edges(bipartite_with({{0, 1}, {2, 3}}, {}), kHalves), Infeasible);
    EXPECT_THROW(redistribute_missing_edges(bipartite_with({{0, 1}, {6, 7}}, {{4, 8}, {5, 9}}), kHalves),
                 Infeasible);
}

TEST(Redistribute, NeverIncreasesTriangles) {
    std::mt19937_64 rng(35);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = complete_multipartite({6, 6});
        g.add_edge(0, 1);
        g.add_edge(2, 3);
        g.add_edge(6, 7);
        g.add_edge(8, 9);
        const int missing = 1 + static_cast<int>(rng() % 3);
        for (int k = 0; k < missing;) {
            const int u = static_cast<int>(rng() % 6), v = 6 + static_cast<int>(rng() % 6);
            if (g.adjacent(u, v)) {
                g.remove_edge(u, v);
                ++k;
            }
        }
        const Graph out = redistribute_missing_edges(g, kHalves);
        EXPECT_EQ(out.edge_count(), g.edge_count());
        EXPECT_LE(count_cliques(out, 3), count_cliques(g, 3));
    }
}
