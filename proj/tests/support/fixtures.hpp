#pragma once

#include <vector>

#include "dce/cluster_graph.hpp"
#include "dce/instance.hpp"

namespace fixtures {

// Worked example with V = {u1..u6, v1, v2, w} as 0..5, 6, 7, 8.
inline dce::ClusterGraph fig1_g1() { return dce::ClusterGraph(9, {{0, 1, 2, 3, 4, 5}, {6, 7}, {8}}); }
inline dce::ClusterGraph fig1_g2() { return dce::ClusterGraph(9, {{0, 1, 2, 6, 7}, {3, 4, 5, 8}}); }

inline dce::Instance fig1_instance(dce::Variant v, dce::Measure m, std::int64_t k, std::int64_t d) {
    return dce::Instance(v, m, dce::cluster_to_graph(fig1_g1()), fig1_g2(), k, d);
}

inline dce::Graph graph_of(dce::Vertex n, std::vector<dce::VertexPair> edges) { return dce::Graph(n, edges); }

}  // namespace fixtures
