#include <gtest/gtest.h>

#include <random>

#include "dce/kernelize.hpp"
#include "dce/oracle.hpp"
#include "support/brute.hpp"
#include "support/fixtures.hpp"

using namespace dce;
using fixtures::graph_of;

namespace {

Instance random_instance(std::mt19937_64& rng, Variant var, Measure mea) {
    const Vertex n = Vertex(rng() % 9);
    auto gc = brute::random_cluster(rng, n);
    Graph g = rng() % 3 == 0 ? brute::random_graph(rng, n, 0.4) : brute::perturbed(rng, gc, double(rng() % 4) / 10);
    return Instance(var, mea, g, gc, std::int64_t(rng() % 4), std::int64_t(rng() % 4));
}

}  // namespace

TEST(ApplyRule, Trivial) {
    Instance inst(Variant::Editing, Measure::EdgeDist, Graph(2), ClusterGraph(2), -1, 0);
    EXPECT_EQ(apply_rule(inst, RuleId::RR1_Trivial).status, RuleStatus::No);
    inst.k = 0;
    EXPECT_EQ(apply_rule(inst, RuleId::RR1_Trivial).status, RuleStatus::NotApplicable);
}

TEST(ApplyRule, HeavyEdgeOnPath) {
    Instance inst(Variant::Editing, Measure::EdgeDist, graph_of(3, {{0, 1}, {1, 2}}), ClusterGraph(3), 0, 0);
    auto out = apply_rule(inst, RuleId::RR2_HeavyEdge);
    ASSERT_EQ(out.status, RuleStatus::Applied);
    EXPECT_EQ(out.inst.k, -1);
    EXPECT_FALSE(out.inst.g.has_edge(0, 1));
    EXPECT_EQ(out.entry.pair, VertexPair(0, 1));
    EXPECT_EQ(apply_rule(out.inst, RuleId::RR1_Trivial).status, RuleStatus::No);
    inst.variant = Variant::Completion;
    EXPECT_EQ(apply_rule(inst, RuleId::RR2_HeavyEdge).status, RuleStatus::No);
    auto ins = apply_rule(inst, RuleId::RR3_HeavyNonEdge);
    ASSERT_EQ(ins.status, RuleStatus::Applied);
    EXPECT_TRUE(ins.inst.g.has_edge(0, 2));
    inst.variant = Variant::Deletion;
    EXPECT_EQ(apply_rule(inst, RuleId::RR3_HeavyNonEdge).status, RuleStatus::No);
}

TEST(ApplyRule, HeavyNeedsThreshold) {
    // {0,1} lies in two P3s of the star; k=2 needs three.
    Instance inst(Variant::Editing, Measure::EdgeDist, graph_of(4, {{0, 1}, {0, 2}, {0, 3}}), ClusterGraph(4), 2, 0);
    EXPECT_EQ(apply_rule(inst, RuleId::RR2_HeavyEdge).status, RuleStatus::NotApplicable);
    inst.k = 1;
    EXPECT_EQ(apply_rule(inst, RuleId::RR2_HeavyEdge).status, RuleStatus::Applied);
}

TEST(ApplyRule, P3VertexBound) {
    // Two disjoint paths: 6 P3 vertices, k=1 allows 3.
    Instance inst(Variant::Editing, Measure::EdgeDist, graph_of(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}}), ClusterGraph(6),
                  1, 9);
    EXPECT_EQ(apply_rule(inst, RuleId::RR4_P3VertexBound).status, RuleStatus::No);
    inst.k = 2;
    EXPECT_EQ(apply_rule(inst, RuleId::RR4_P3VertexBound).status, RuleStatus::NotApplicable);
}

TEST(ApplyRule, SameClique) {
    ClusterGraph c(8, {{0, 1}, {2, 3, 4}, {5, 6, 7}});
    Graph g = cluster_to_graph(c);
    g.add_edge(1, 2);
    Instance inst(Variant::Editing, Measure::MatchingDist, g, ClusterGraph(8, {{0, 1, 2, 3, 4}, {5, 6, 7}}), 1, 1);
    auto out = apply_rule(inst, RuleId::RR5_SameClique);
    ASSERT_EQ(out.status, RuleStatus::Applied);
    EXPECT_EQ(out.entry.removed, (std::vector<Vertex>{5, 6, 7}));
    EXPECT_EQ(out.inst.n(), 5);
    EXPECT_EQ(out.inst.k, 1);
    EXPECT_EQ(out.inst.d, 1);
}

TEST(ApplyRule, LargeCliqueEdgeCharge) {
    // C = {0,1,2} with k=1 equals a gc cluster: charge is zero.
    Instance inst(Variant::Editing, Measure::EdgeDist, cluster_to_graph(ClusterGraph(5, {{0, 1, 2}, {3, 4}})),
                  ClusterGraph(5, {{0, 1, 2}, {3}, {4}}), 1, 2);
    auto out = apply_rule(inst, RuleId::RR6_LargeCliqueEdge);
    ASSERT_EQ(out.status, RuleStatus::Applied);
    EXPECT_EQ(out.entry.dd, 0);
    EXPECT_EQ(out.inst.n(), 2);
    // Split across gc: |E_c| + C(3,2) - 2|E(gc[C])| - |E(gc[V\C])| = 2 + 3 - 2 - 0 = 3.
    Instance split(Variant::Editing, Measure::EdgeDist, cluster_to_graph(ClusterGraph(5, {{0, 1, 2}, {3}, {4}})),
                   ClusterGraph(5, {{0, 1}, {2, 3}, {4}}), 1, 5);
    out = apply_rule(split, RuleId::RR6_LargeCliqueEdge);
    ASSERT_EQ(out.status, RuleStatus::Applied);
    EXPECT_EQ(out.entry.dd, -3);
    EXPECT_EQ(out.inst.d, 2);
    EXPECT_EQ(apply_rule(split, RuleId::RR6_LargeCliqueMatching).status, RuleStatus::NotApplicable);
}

TEST(ApplyRule, LargeCliqueMatching) {
    // k=0, d=1: cliques above 4 vertices. C = {0..5}, gc cluster {0..4, 6}.
    ClusterGraph g(8, {{0, 1, 2, 3, 4, 5}, {6}, {7}});
    ClusterGraph gc(8, {{0, 1, 2, 3, 4, 6}, {5, 7}});
    Instance inst(Variant::Editing, Measure::MatchingDist, cluster_to_graph(g), gc, 0, 1);
    auto out = apply_rule(inst, RuleId::RR6_LargeCliqueMatching);
    ASSERT_EQ(out.status, RuleStatus::Applied);
    EXPECT_EQ(out.entry.dd, -1);
    EXPECT_EQ(out.inst.d, 0);
    // One fresh vertex (k+d+1) joins the rest {6} of the matched cluster.
    EXPECT_EQ(out.entry.added, std::vector<Vertex>{8});
    EXPECT_EQ(out.entry.joined, std::vector<Vertex>{6});
    EXPECT_EQ(out.inst.n(), 3);
    EXPECT_EQ(out.inst.gc, ClusterGraph(3, {{0, 2}, {1}}));
    EXPECT_EQ(oracle_solve(inst).has_value(), oracle_solve(out.inst).has_value());
    // Every gc cluster shares at most d vertices with C.
    Instance spread(Variant::Editing, Measure::MatchingDist, cluster_to_graph(ClusterGraph(6, {{0, 1, 2, 3, 4, 5}})),
                    ClusterGraph(6), 0, 1);
    EXPECT_EQ(apply_rule(spread, RuleId::RR6_LargeCliqueMatching).status, RuleStatus::No);
}

TEST(ApplyRule, ManyCliques) {
    // Singletons under a one-cluster gc: 4 isolated cliques, limits 2k+2d and 2(k+d).
    Instance inst(Variant::Editing, Measure::MatchingDist, Graph(4), ClusterGraph(4, {{0, 1, 2, 3}}), 0, 1);
    EXPECT_EQ(apply_rule(inst, RuleId::RR7_ManyCliquesMatching).status, RuleStatus::No);
    inst.d = 2;
    EXPECT_EQ(apply_rule(inst, RuleId::RR7_ManyCliquesMatching).status, RuleStatus::NotApplicable);
    inst.measure = Measure::EdgeDist;
    inst.d = 1;
    EXPECT_EQ(apply_rule(inst, RuleId::RR7_ManyCliquesEdge).status, RuleStatus::No);
    EXPECT_EQ(apply_rule(inst, RuleId::RR7_ManyCliquesMatching).status, RuleStatus::NotApplicable);
}

TEST(Kernelize, ManyCliquesLimitIsSound) {
    // Two cliques, k=0, d=1: leaving G unchanged has matching distance 1, so this is a yes-instance
    // even though there are more than 2k+d isolated cliques.
    Instance inst(Variant::Editing, Measure::MatchingDist, graph_of(3, {{0, 1}}), ClusterGraph(3, {{0, 1, 2}}), 0, 1);
    ASSERT_TRUE(oracle_solve(inst));
    auto kr = kernelize(inst);
    EXPECT_FALSE(kr.no);
}

TEST(Kernelize, IdenticalGraphsVanish) {
    auto c = ClusterGraph(6, {{0, 1, 2}, {3, 4}, {5}});
    Instance inst(Variant::Editing, Measure::MatchingDist, cluster_to_graph(c), c, 0, 0);
    auto kr = kernelize(inst);
    ASSERT_FALSE(kr.no);
    EXPECT_EQ(kr.reduced.n(), 0);
    EXPECT_EQ(kr.trace.size(), 3u);
}

TEST(Kernelize, TraceReplaysAndIsDeterministic) {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 600; ++t) {
        auto inst = random_instance(rng, Variant(rng() % 3), Measure(rng() % 2));
        auto a = kernelize(inst), b = kernelize(inst);
        EXPECT_EQ(a.trace, b.trace);
        if (a.no) continue;
        EXPECT_EQ(replay_trace(inst, a.trace), a.reduced);
        for (RuleId r : {RuleId::RR1_Trivial, RuleId::RR2_HeavyEdge, RuleId::RR3_HeavyNonEdge,
                         RuleId::RR4_P3VertexBound, RuleId::RR5_SameClique, RuleId::RR6_LargeCliqueMatching,
                         RuleId::RR6_LargeCliqueEdge, RuleId::RR7_ManyCliquesMatching, RuleId::RR7_ManyCliquesEdge})
            EXPECT_EQ(apply_rule(a.reduced, r).status, RuleStatus::NotApplicable) << to_string(r);
        EXPECT_LE(a.reduced.n(), guaranteed_kernel_vertex_bound(inst.measure, a.reduced.k, a.reduced.d));
    }
}

TEST(Kernelize, PreservesDecisionAndLifts) {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 1200; ++t) {
        auto inst = random_instance(rng, Variant(rng() % 3), Measure(rng() % 2));
        const bool yes = oracle_solve(inst).has_value();
        auto kr = kernelize(inst);
        if (kr.no) {
            EXPECT_FALSE(yes) << to_string(kr.no_rule);
            continue;
        }
        auto ks = oracle_solve(kr.reduced);
        ASSERT_EQ(ks.has_value(), yes);
        if (!ks || !kr.lifts_to_original()) continue;
        auto lifted = lift_solution(inst, kr, *ks);
        ASSERT_TRUE(lifted);
        EXPECT_TRUE(verify_solution(inst, *lifted));
    }
}

TEST(Kernelize, ForcedEditsAppearInAWitness) {
    std::mt19937_64 rng(43);
    int seen = 0;
    for (int t = 0; t < 800; ++t) {
        auto inst = random_instance(rng, Variant(rng() % 3), Measure(rng() % 2));
        auto kr = kernelize(inst);
        std::vector<VertexPair> forced;
        for (const auto& e : kr.trace)
            if (e.pair && !e.no) forced.push_back(*e.pair);
        if (forced.empty() || !oracle_solve(inst)) continue;
        bool found = false;
        oracle_for_each_solution(inst, [&](const Solution& s) {
            bool all = true;
            for (auto p : forced)
                all = all && std::any_of(s.edits.begin(), s.edits.end(), [&](const Edit& e) { return e.pair == p; });
            found = found || all;
        });
        EXPECT_TRUE(found);
        ++seen;
    }
    EXPECT_GT(seen, 0);
}
