#include <gtest/gtest.h>

#include <random>

#include "dce/distance.hpp"
#include "dce/p3.hpp"
#include "support/brute.hpp"
#include "support/fixtures.hpp"

using namespace dce;
using fixtures::graph_of;

TEST(Graph, RejectsSelfLoopsDuplicatesAndRange) {
    EXPECT_THROW(graph_of(3, {{1, 1}}), Error);
    EXPECT_THROW(graph_of(3, {{0, 1}, {1, 0}}), Error);
    EXPECT_THROW(graph_of(3, {{0, 3}}), Error);
    auto g = graph_of(70, {{0, 69}, {3, 64}});
    EXPECT_TRUE(g.has_edge(69, 0));
    EXPECT_EQ(g.edge_count(), 2);
    EXPECT_EQ(g.neighbors(64), std::vector<Vertex>{3});
}

TEST(IsClusterGraph, Basics) {
    EXPECT_FALSE(is_cluster_graph(graph_of(3, {{0, 1}, {1, 2}})));
    EXPECT_TRUE(is_cluster_graph(graph_of(4, {{0, 1}, {1, 2}, {0, 2}})));
    EXPECT_TRUE(is_cluster_graph(cluster_to_graph(fixtures::fig1_g1())));
}

TEST(IsClusterGraph, AgreesWithTripleScan) {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 300; ++t) {
        auto g = brute::random_graph(rng, Vertex(rng() % 9), 0.5);
        EXPECT_EQ(is_cluster_graph(g), brute::is_cluster_graph(g));
    }
}

TEST(ToClusterGraph, Conversions) {
    auto tri = graph_of(4, {{0, 1}, {1, 2}, {0, 2}});
    EXPECT_EQ(to_cluster_graph(tri), ClusterGraph(4, {{0, 1, 2}, {3}}));
    EXPECT_EQ(to_cluster_graph(Graph(3)), ClusterGraph(3));
    try {
        to_cluster_graph(graph_of(3, {{0, 1}, {1, 2}}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotClusterGraph);
    }
    EXPECT_EQ(cluster_to_graph(ClusterGraph(3, {{0, 1}, {2}})).edges(), (std::vector<VertexPair>{{0, 1}}));
    EXPECT_EQ(cluster_to_graph(ClusterGraph(2)).edge_count(), 0);
    EXPECT_EQ(cluster_to_graph(ClusterGraph(3, {{0, 1, 2}})).edge_count(), 3);
}

TEST(ToClusterGraph, RoundTrip) {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 200; ++t) {
        auto c = brute::random_cluster(rng, Vertex(rng() % 12));
        EXPECT_EQ(to_cluster_graph(cluster_to_graph(c)), c);
    }
}

TEST(ClusterGraph, CanonicalAndValidated) {
    ClusterGraph a(4, {{3, 1}, {2}, {0}});
    EXPECT_EQ(a.cluster(0), std::vector<Vertex>{0});
    EXPECT_EQ(a.cluster(1), (std::vector<Vertex>{1, 3}));
    EXPECT_EQ(a.cluster_of(3), 1);
    EXPECT_THROW(ClusterGraph(3, {{0, 1}}), Error);
    EXPECT_THROW(ClusterGraph(3, {{0, 1}, {1, 2}}), Error);
    EXPECT_THROW(ClusterGraph(3, {{0, 1, 2}, {}}), Error);
}

TEST(P3, PathAndStar) {
    auto census = enumerate_p3_pairs(graph_of(3, {{0, 1}, {1, 2}}));
    EXPECT_EQ(census.pair_counts.size(), 3u);
    EXPECT_EQ(census.pair_counts.at({0, 1}), 1);
    EXPECT_EQ(census.pair_counts.at({0, 2}), 1);
    EXPECT_EQ(census.pair_counts.at({1, 2}), 1);
    EXPECT_TRUE(enumerate_p3_pairs(cluster_to_graph(fixtures::fig1_g1())).pair_counts.empty());
    auto star = enumerate_p3_pairs(graph_of(4, {{0, 1}, {0, 2}, {0, 3}}));
    EXPECT_EQ(star.pair_counts.at({0, 1}), 2);
    EXPECT_EQ(star.vertices, (std::vector<Vertex>{0, 1, 2, 3}));
}

TEST(P3, CountsMatchTripleScan) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 300; ++t) {
        auto g = brute::random_graph(rng, Vertex(rng() % 10), 0.45);
        auto census = enumerate_p3_pairs(g);
        auto ref = brute::p3_counts(g);
        EXPECT_EQ(census.pair_counts, ref);
        std::set<Vertex> vs;
        for (const auto& [p, c] : ref) {
            vs.insert(p.u);
            vs.insert(p.v);
        }
        EXPECT_EQ(census.vertices, std::vector<Vertex>(vs.begin(), vs.end()));
    }
}

TEST(Matching, SmallExamples) {
    WeightedBipartite zero(3, 2);
    EXPECT_EQ(max_weight_bipartite_matching(zero).weight, 0);
    WeightedBipartite b(2, 2);
    b.set_weight(0, 0, 2);
    b.set_weight(0, 1, 3);
    b.set_weight(1, 0, 3);
    b.set_weight(1, 1, 2);
    auto m = max_weight_bipartite_matching(b);
    EXPECT_EQ(m.weight, 6);
    EXPECT_EQ(m.pairs, (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 0}}));
    EXPECT_THROW(b.set_weight(0, 0, -1), Error);
}

TEST(Matching, Fig1) {
    auto bip = overlap_bipartite(fixtures::fig1_g1(), fixtures::fig1_g2());
    auto m = max_weight_bipartite_matching(bip);
    EXPECT_EQ(m.weight, 5);
    // (C1, C2') and (C2, C1').
    EXPECT_EQ(m.pairs, (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 0}}));
}

TEST(Matching, AgreesWithExhaustiveMatchings) {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 500; ++t) {
        const std::size_t L = rng() % 6, R = rng() % 6;
        WeightedBipartite b(L, R);
        std::vector<std::vector<std::int64_t>> w(L, std::vector<std::int64_t>(R));
        for (std::size_t i = 0; i < L; ++i)
            for (std::size_t j = 0; j < R; ++j) {
                w[i][j] = std::int64_t(rng() % 7);
                b.set_weight(i, j, w[i][j]);
            }
        auto m = max_weight_bipartite_matching(b);
        ASSERT_EQ(m.weight, brute::max_matching(w));
        std::int64_t sum = 0;
        std::set<std::size_t> ls, rs;
        for (auto [i, j] : m.pairs) {
            sum += w[i][j];
            EXPECT_TRUE(ls.insert(i).second);
            EXPECT_TRUE(rs.insert(j).second);
        }
        EXPECT_EQ(sum, m.weight);
    }
}

TEST(Distance, Fig1Values) {
    EXPECT_EQ(matching_distance(fixtures::fig1_g1(), fixtures::fig1_g2()), 4);
    EXPECT_EQ(edge_distance(fixtures::fig1_g1(), fixtures::fig1_g2()), 18);
}

TEST(Distance, SmallExamples) {
    ClusterGraph a(3, {{0, 1}, {2}}), b(3, {{0}, {1, 2}});
    EXPECT_EQ(matching_distance(a, b), 1);
    EXPECT_EQ(edge_distance(a, b), 2);
    EXPECT_EQ(matching_distance(a, a), 0);
    EXPECT_EQ(edge_distance(a, a), 0);
    EXPECT_EQ(matching_distance(ClusterGraph(0), ClusterGraph(0)), 0);
    try {
        matching_distance(a, ClusterGraph(4));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SizeMismatch);
    }
    EXPECT_THROW(edge_distance(a, ClusterGraph(4)), Error);
}

TEST(Distance, PropertiesOnRandomPairs) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 1000; ++t) {
        const Vertex n = Vertex(rng() % 13);
        auto a = brute::random_cluster(rng, n), b = brute::random_cluster(rng, n);
        const auto dm = matching_distance(a, b), de = edge_distance(a, b);
        EXPECT_LE(dm, de);
        EXPECT_EQ(dm, matching_distance(b, a));
        EXPECT_EQ(de, edge_distance(b, a));
        EXPECT_EQ(dm == 0, a == b);
        EXPECT_EQ(de == 0, a == b);
        EXPECT_EQ(de, brute::edge_distance(a, b));
        EXPECT_EQ(de, symmetric_difference_size(cluster_to_graph(a), b));
        if (a.cluster_count() <= 5 && b.cluster_count() <= 5) {
            EXPECT_EQ(dm, brute::matching_distance(a, b));
        }
    }
}
