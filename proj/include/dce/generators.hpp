#pragma once

// Instance generators built from the hardness gadgets, plus seeded random instances.
//
// Vertex id layout:
//   3-Partition:  m big cliques of M vertices, then the 3m small cliques in input order.
//   X3C:          clique C_j occupies 5j..5j+4; 5j and 5j+1 are the two set vertices,
//                 5j+2.. are the element vertices in ascending element order.
//   Clique:       C_v for every v of g0 (L1 vertices, then the single vertex), then C_e for
//                 every edge u<v of g0 in sorted order (first L2 vertices lean to u, rest to v).
//   McClique:     C_v occupies 2*ell*v .. 2*ell*v + 2*ell - 1; the universal vertex is last.

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dce/cluster_graph.hpp"
#include "dce/common.hpp"
#include "dce/distance.hpp"
#include "dce/graph.hpp"
#include "dce/instance.hpp"

namespace dce {

struct ThreePartitionSource {
    std::int64_t m = 0;
    std::int64_t B = 0;
    std::vector<std::int64_t> a;
};

struct X3cSource {
    int q = 0;  // elements are 0..3q-1
    std::vector<std::array<int, 3>> sets;
};

struct CliqueSource {
    Graph g0;
    int ell = 0;
};

struct McCliqueSource {
    Graph g0;
    std::vector<int> coloring;  // per vertex, 1..ell
    int ell = 0;
};

namespace detail {

inline void add_clique(Graph& g, Vertex first, Vertex size) {
    for (Vertex u = first; u < first + size; ++u)
        for (Vertex v = u + 1; v < first + size; ++v) g.add_edge(u, v);
}

inline std::vector<Vertex> iota_block(Vertex first, Vertex size) {
    std::vector<Vertex> out(static_cast<std::size_t>(size));
    for (Vertex i = 0; i < size; ++i) out[i] = first + i;
    return out;
}

inline Vertex checked_vertex_count(std::int64_t n) {
    if (n < 0 || n > std::int64_t(1) << 20) throw Error(ErrorCode::InvalidSource, "generated instance too large");
    return Vertex(n);
}

inline void validate(const ThreePartitionSource& s) {
    if (s.m <= 0 || s.B <= 0) throw Error(ErrorCode::InvalidSource, "m and B must be positive");
    if (std::int64_t(s.a.size()) != 3 * s.m) throw Error(ErrorCode::InvalidSource, "need exactly 3m numbers");
    std::int64_t sum = 0;
    for (auto x : s.a) {
        if (!(4 * x > s.B && 2 * x < s.B))
            throw Error(ErrorCode::InvalidSource, "number outside (B/4, B/2): " + std::to_string(x));
        sum += x;
    }
    if (sum != s.m * s.B) throw Error(ErrorCode::InvalidSource, "numbers do not sum to mB");
}

inline void validate(const X3cSource& s) {
    if (s.q <= 0) throw Error(ErrorCode::InvalidSource, "q must be positive");
    for (const auto& set : s.sets) {
        for (int x : set)
            if (x < 0 || x >= 3 * s.q) throw Error(ErrorCode::InvalidSource, "element out of range");
        if (set[0] == set[1] || set[0] == set[2] || set[1] == set[2])
            throw Error(ErrorCode::InvalidSource, "set with repeated element");
    }
}

inline void validate(const McCliqueSource& s) {
    if (s.ell <= 0) throw Error(ErrorCode::InvalidSource, "ell must be positive");
    if (Vertex(s.coloring.size()) != s.g0.n()) throw Error(ErrorCode::InvalidSource, "coloring is not total");
    for (int c : s.coloring)
        if (c < 1 || c > s.ell) throw Error(ErrorCode::InvalidSource, "color out of range");
}

}  // namespace detail

// ---- 3-Partition -> Completion (edge distance) ----

inline std::int64_t three_partition_big_size(const ThreePartitionSource& s) { return 4 * (s.m * s.B) * (s.m * s.B); }

inline Instance gen_3partition_completion_edge(const ThreePartitionSource& src) {
    detail::validate(src);
    const std::int64_t M = three_partition_big_size(src);
    const Vertex n = detail::checked_vertex_count(src.m * M + src.m * src.B);
    Graph g(n);
    Vertex next = 0;
    for (std::int64_t i = 0; i < src.m; ++i, next += Vertex(M)) detail::add_clique(g, next, Vertex(M));
    for (auto x : src.a) {
        detail::add_clique(g, next, Vertex(x));
        next += Vertex(x);
    }
    ClusterGraph gc(n, {detail::iota_block(0, n)});
    if (n == 0) gc = ClusterGraph(0);
    std::int64_t sq = 0;
    for (auto x : src.a) sq += x * x;
    const std::int64_t k = src.m * M * src.B + (src.m * src.B * src.B - sq) / 2;
    const std::int64_t d = symmetric_difference_size(g, gc) - k;
    return Instance(Variant::Completion, Measure::EdgeDist, std::move(g), std::move(gc), k, d);
}

/// Forward witness: groups[i] lists the indices of the numbers joined with big clique i.
inline Solution three_partition_witness(const ThreePartitionSource& src,
                                        const std::vector<std::vector<std::size_t>>& groups) {
    detail::validate(src);
    if (std::int64_t(groups.size()) != src.m) throw Error(ErrorCode::InvalidSource, "need one group per big clique");
    const std::int64_t M = three_partition_big_size(src);
    const Vertex n = Vertex(src.m * M + src.m * src.B);
    std::vector<Vertex> small_start(src.a.size());
    Vertex next = Vertex(src.m * M);
    for (std::size_t i = 0; i < src.a.size(); ++i) {
        small_start[i] = next;
        next += Vertex(src.a[i]);
    }
    std::vector<Vertex> labels(static_cast<std::size_t>(n), -1);
    for (std::int64_t i = 0; i < src.m; ++i)
        for (Vertex v = Vertex(i * M); v < Vertex((i + 1) * M); ++v) labels[v] = Vertex(i);
    for (std::size_t i = 0; i < groups.size(); ++i)
        for (std::size_t idx : groups[i]) {
            if (idx >= src.a.size()) throw Error(ErrorCode::InvalidSource, "number index out of range");
            for (Vertex v = small_start[idx]; v < small_start[idx] + Vertex(src.a[idx]); ++v) labels[v] = Vertex(i);
        }
    if (std::count(labels.begin(), labels.end(), -1) != 0)
        throw Error(ErrorCode::InvalidSource, "groups do not cover every number");
    auto inst = gen_3partition_completion_edge(src);
    return make_solution(inst.g, ClusterGraph::from_labels(labels));
}

// ---- X3C -> Deletion (matching distance) ----

inline Instance gen_x3c_deletion_matching(const X3cSource& src) {
    detail::validate(src);
    const Vertex m = Vertex(src.sets.size());
    const Vertex n = 5 * m;
    Graph g(n);
    std::vector<std::vector<Vertex>> clusters;
    std::vector<std::vector<Vertex>> by_element(static_cast<std::size_t>(3 * src.q));
    for (Vertex j = 0; j < m; ++j) {
        detail::add_clique(g, 5 * j, 5);
        clusters.push_back({5 * j, 5 * j + 1});
        auto set = src.sets[j];
        std::sort(set.begin(), set.end());
        for (int t = 0; t < 3; ++t) by_element[set[t]].push_back(5 * j + 2 + t);
    }
    for (auto& occ : by_element)
        if (!occ.empty()) clusters.push_back(std::move(occ));
    return Instance(Variant::Deletion, Measure::MatchingDist, std::move(g), ClusterGraph(n, std::move(clusters)),
                    9 * std::int64_t(src.q), 3 * std::int64_t(m) - 3 * std::int64_t(src.q));
}

/// Forward witness: every chosen set's clique is split into its set pair and three singletons.
inline Solution x3c_witness(const X3cSource& src, const std::vector<std::size_t>& cover) {
    auto inst = gen_x3c_deletion_matching(src);
    std::vector<Vertex> labels(static_cast<std::size_t>(inst.n()));
    for (Vertex v = 0; v < inst.n(); ++v) labels[v] = v / 5;
    for (std::size_t j : cover) {
        if (j >= src.sets.size()) throw Error(ErrorCode::InvalidSource, "set index out of range");
        for (Vertex t = 2; t < 5; ++t) labels[5 * j + t] = inst.n() + Vertex(5 * j) + t;
    }
    return make_solution(inst.g, ClusterGraph::from_labels(labels));
}

// ---- Clique -> Editing (edge distance) ----

struct CliqueLayout {
    std::int64_t L1 = 0, L2 = 0;
    std::vector<Vertex> vertex_start;  // C_v starts here; its single vertex is at start + L1
    std::vector<std::pair<VertexPair, Vertex>> edge_start;
};

inline CliqueLayout clique_layout(const CliqueSource& src) {
    if (src.ell < 3) throw Error(ErrorCode::InvalidSource, "clique gadget needs ell >= 3");
    CliqueLayout lay;
    const std::int64_t l = src.ell;
    lay.L1 = l * l * l * l * l * l * l + 1;
    lay.L2 = l * l;
    std::int64_t next = 0;
    for (Vertex v = 0; v < src.g0.n(); ++v, next += lay.L1 + 1) lay.vertex_start.push_back(Vertex(next));
    for (auto e : src.g0.edges()) {
        lay.edge_start.emplace_back(e, Vertex(next));
        next += 2 * lay.L2;
    }
    detail::checked_vertex_count(next);
    return lay;
}

inline std::int64_t clique_budget(int ell) {
    const std::int64_t l = ell, L1 = l * l * l * l * l * l * l + 1, L2 = l * l;
    return l * L1 + l * (l - 1) * L2 + l * choose2(l - 1) * L2 * L2 + choose2(l) * L2 * L2;
}

inline Instance gen_clique_editing_edge(const CliqueSource& src) {
    const auto lay = clique_layout(src);
    const Vertex n = Vertex(src.g0.n() * (lay.L1 + 1) + std::int64_t(lay.edge_start.size()) * 2 * lay.L2);
    Graph g(n);
    std::vector<Vertex> labels(static_cast<std::size_t>(n));
    // gc label 2v holds the L1 part of C_v; 2v+1 holds its single vertex and the leaning halves.
    for (Vertex v = 0; v < src.g0.n(); ++v) {
        const Vertex s = lay.vertex_start[v];
        detail::add_clique(g, s, Vertex(lay.L1 + 1));
        for (Vertex i = 0; i < Vertex(lay.L1); ++i) labels[s + i] = 2 * v;
        labels[s + Vertex(lay.L1)] = 2 * v + 1;
    }
    for (const auto& [e, s] : lay.edge_start) {
        detail::add_clique(g, s, Vertex(2 * lay.L2));
        for (Vertex i = 0; i < Vertex(lay.L2); ++i) {
            labels[s + i] = 2 * e.u + 1;
            labels[s + Vertex(lay.L2) + i] = 2 * e.v + 1;
        }
    }
    auto gc = ClusterGraph::from_labels(labels);
    const std::int64_t k = clique_budget(src.ell);
    const std::int64_t d = symmetric_difference_size(g, gc) - k;
    return Instance(Variant::Editing, Measure::EdgeDist, std::move(g), std::move(gc), k, d);
}

/// Forward witness for an ell-clique of g0.
inline Solution clique_witness(const CliqueSource& src, const std::vector<Vertex>& clique) {
    const auto lay = clique_layout(src);
    auto inst = gen_clique_editing_edge(src);
    std::vector<Vertex> labels = to_cluster_graph(inst.g).cluster_ids();
    std::vector<char> chosen(static_cast<std::size_t>(src.g0.n()), 0);
    for (Vertex v : clique) chosen.at(std::size_t(v)) = 1;
    const Vertex fresh = inst.n();
    for (Vertex v : clique) labels[lay.vertex_start[v] + Vertex(lay.L1)] = fresh + v;
    for (const auto& [e, s] : lay.edge_start) {
        if (!chosen[e.u] || !chosen[e.v]) continue;
        for (Vertex i = 0; i < Vertex(lay.L2); ++i) {
            labels[s + i] = fresh + e.u;
            labels[s + Vertex(lay.L2) + i] = fresh + e.v;
        }
    }
    return make_solution(inst.g, ClusterGraph::from_labels(labels));
}

// ---- Multicolored Clique -> Deletion (edge distance) ----

inline Instance gen_mcclique_deletion_edge(const McCliqueSource& src) {
    detail::validate(src);
    const Vertex w = Vertex(2 * src.ell);
    const Vertex n = detail::checked_vertex_count(std::int64_t(w) * src.g0.n() + 1);
    const Vertex star = n - 1;
    Graph g(n);
    std::vector<std::vector<Vertex>> clusters;
    for (Vertex v = 0; v < src.g0.n(); ++v) {
        detail::add_clique(g, w * v, w);
        clusters.push_back(detail::iota_block(w * v, w));
    }
    clusters.push_back({star});
    for (Vertex v = 0; v < star; ++v) g.add_edge(v, star);
    for (auto e : src.g0.edges()) {
        if (src.coloring[e.u] == src.coloring[e.v]) continue;
        for (Vertex a = w * e.u; a < w * (e.u + 1); ++a)
            for (Vertex b = w * e.v; b < w * (e.v + 1); ++b) g.add_edge(a, b);
    }
    ClusterGraph gc(n, std::move(clusters));
    const std::int64_t l = src.ell;
    const std::int64_t d = 2 * l * l + 4 * l * l * choose2(l);
    const std::int64_t k = symmetric_difference_size(g, gc) - d;
    return Instance(Variant::Deletion, Measure::EdgeDist, std::move(g), std::move(gc), k, d);
}

/// Forward witness: the chosen vertices' cliques and the universal vertex become one cluster.
inline Solution mcclique_witness(const McCliqueSource& src, const std::vector<Vertex>& clique) {
    auto inst = gen_mcclique_deletion_edge(src);
    const Vertex w = Vertex(2 * src.ell), star = inst.n() - 1;
    std::vector<Vertex> labels(static_cast<std::size_t>(inst.n()));
    for (Vertex v = 0; v < star; ++v) labels[v] = v / w;
    labels[star] = star;
    for (Vertex c : clique)
        for (Vertex a = w * c; a < w * (c + 1); ++a) labels[a] = star;
    return make_solution(inst.g, ClusterGraph::from_labels(labels));
}

// ---- random ----

inline Instance gen_random(Vertex n, double edge_prob, Variant variant, Measure measure, std::int64_t k,
                           std::int64_t d, std::uint64_t seed) {
    if (n < 0 || !(edge_prob >= 0.0 && edge_prob <= 1.0))
        throw Error(ErrorCode::InvalidSource, "need n >= 0 and 0 <= p <= 1");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(edge_prob);
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    std::vector<Vertex> labels(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) labels[v] = std::uniform_int_distribution<Vertex>(0, v)(rng);
    return Instance(variant, measure, std::move(g), ClusterGraph::from_labels(labels), k, d);
}

}  // namespace dce
