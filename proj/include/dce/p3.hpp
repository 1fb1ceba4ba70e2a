#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "dce/common.hpp"
#include "dce/graph.hpp"

namespace dce {

struct P3Census {
    /// Pairs lying in at least one induced P3, with the exact number of such P3s.
    std::map<VertexPair, std::int64_t> pair_counts;
    /// Sorted vertices contained in some induced P3.
    std::vector<Vertex> vertices;
};

/// Induced P3s through the pair {u,v}: for an edge, witnesses adjacent to exactly
/// one endpoint; for a non-edge, common neighbours.
inline std::int64_t p3_count(const Graph& g, Vertex u, Vertex v) {
    const std::int64_t common = g.common_neighbors(u, v);
    if (g.has_edge(u, v)) return g.degree(u) + g.degree(v) - 2 * common - 2;
    return common;
}

/// Vertices of components that are not cliques; exactly the vertices lying in an induced P3.
inline std::vector<Vertex> p3_vertices(const Graph& g) {
    std::vector<Vertex> out;
    for (const auto& comp : connected_components(g)) {
        std::int64_t deg_sum = 0;
        for (Vertex u : comp) deg_sum += g.degree(u);
        if (deg_sum != std::int64_t(comp.size()) * (std::int64_t(comp.size()) - 1))
            out.insert(out.end(), comp.begin(), comp.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline P3Census enumerate_p3_pairs(const Graph& g) {
    P3Census census;
    census.vertices = p3_vertices(g);
    // Pairs outside the P3 vertex set never lie in a P3.
    const auto& r = census.vertices;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = i + 1; j < r.size(); ++j) {
            std::int64_t c = p3_count(g, r[i], r[j]);
            if (c > 0) census.pair_counts.emplace(VertexPair(r[i], r[j]), c);
        }
    return census;
}

}  // namespace dce
