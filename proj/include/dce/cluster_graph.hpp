#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "dce/common.hpp"
#include "dce/graph.hpp"

namespace dce {

/// Partition of 0..n-1 into non-empty clusters.
///
/// Always canonical: every cluster is sorted and clusters are ordered by their
/// smallest vertex, so cluster id i is the i-th cluster in that order. Two
/// ClusterGraphs compare equal iff they describe the same partition.
class ClusterGraph {
public:
    ClusterGraph() = default;

    /// All singletons.
    explicit ClusterGraph(Vertex n) {
        std::vector<Vertex> labels(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) labels[v] = v;
        *this = from_labels(labels);
    }

    /// Throws InvalidGraph unless `clusters` is a partition of 0..n-1 without empty blocks.
    ClusterGraph(Vertex n, std::vector<std::vector<Vertex>> clusters) {
        if (n < 0) throw Error(ErrorCode::InvalidGraph, "negative vertex count");
        std::vector<Vertex> labels(std::size_t(n), -1);
        for (std::size_t c = 0; c < clusters.size(); ++c) {
            if (clusters[c].empty()) throw Error(ErrorCode::InvalidGraph, "empty cluster");
            for (Vertex v : clusters[c]) {
                if (v < 0 || v >= n)
                    throw Error(ErrorCode::InvalidGraph, "cluster vertex out of range: " + std::to_string(v));
                if (labels[v] != -1)
                    throw Error(ErrorCode::InvalidGraph, "vertex in two clusters: " + std::to_string(v));
                labels[v] = Vertex(c);
            }
        }
        for (Vertex v = 0; v < n; ++v)
            if (labels[v] == -1)
                throw Error(ErrorCode::InvalidGraph, "vertex not covered: " + std::to_string(v));
        *this = from_labels(labels);
    }

    /// Arbitrary integer labels; vertices with equal labels share a cluster.
    static ClusterGraph from_labels(std::span<const Vertex> labels) {
        ClusterGraph c;
        c.n_ = Vertex(labels.size());
        c.cluster_of_.assign(labels.size(), -1);
        // Labels may be sparse; a sort keeps this independent of their range.
        std::vector<std::pair<Vertex, Vertex>> by_label;
        by_label.reserve(labels.size());
        for (Vertex v = 0; v < c.n_; ++v) by_label.emplace_back(labels[v], v);
        std::sort(by_label.begin(), by_label.end());
        // Minimum vertex per label decides the canonical order.
        std::vector<std::pair<Vertex, Vertex>> groups;  // (min vertex, start index in by_label)
        for (std::size_t i = 0; i < by_label.size(); ++i)
            if (i == 0 || by_label[i].first != by_label[i - 1].first) groups.emplace_back(by_label[i].second, Vertex(i));
        std::vector<std::size_t> order(groups.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return groups[a].first < groups[b].first; });
        c.clusters_.resize(groups.size());
        for (std::size_t rank = 0; rank < order.size(); ++rank) {
            std::size_t gi = order[rank];
            std::size_t start = std::size_t(groups[gi].second);
            std::size_t end = gi + 1 < groups.size() ? std::size_t(groups[gi + 1].second) : by_label.size();
            auto& cl = c.clusters_[rank];
            for (std::size_t i = start; i < end; ++i) {
                cl.push_back(by_label[i].second);
                c.cluster_of_[by_label[i].second] = Vertex(rank);
            }
        }
        return c;
    }

    Vertex n() const noexcept { return n_; }
    std::size_t cluster_count() const noexcept { return clusters_.size(); }
    Vertex cluster_of(Vertex v) const { return cluster_of_[v]; }
    const std::vector<Vertex>& cluster_ids() const noexcept { return cluster_of_; }
    const std::vector<Vertex>& cluster(std::size_t i) const { return clusters_[i]; }
    const std::vector<std::vector<Vertex>>& clusters() const noexcept { return clusters_; }

    bool same_cluster(Vertex u, Vertex v) const { return cluster_of_[u] == cluster_of_[v]; }

    /// Number of intra-cluster pairs, i.e. |E| of the cluster graph.
    std::int64_t edge_count() const noexcept {
        std::int64_t m = 0;
        for (const auto& cl : clusters_) m += choose2(std::int64_t(cl.size()));
        return m;
    }

    friend bool operator==(const ClusterGraph& a, const ClusterGraph& b) {
        return a.n_ == b.n_ && a.cluster_of_ == b.cluster_of_;
    }

private:
    Vertex n_ = 0;
    std::vector<Vertex> cluster_of_;
    std::vector<std::vector<Vertex>> clusters_;
};

/// Partition given by the connected components; throws NotClusterGraph if an induced P3 exists.
inline ClusterGraph to_cluster_graph(const Graph& g) {
    auto comps = connected_components(g);
    for (const auto& comp : comps) {
        if (!is_clique(g, comp)) {
            throw Error(ErrorCode::NotClusterGraph,
                        "component containing vertex " + std::to_string(comp.front()) + " is not a clique");
        }
    }
    return ClusterGraph(g.n(), std::move(comps));
}

inline Graph cluster_to_graph(const ClusterGraph& c) {
    Graph g(c.n());
    for (const auto& cl : c.clusters())
        for (std::size_t i = 0; i < cl.size(); ++i)
            for (std::size_t j = i + 1; j < cl.size(); ++j) g.add_edge(cl[i], cl[j]);
    return g;
}

}  // namespace dce
