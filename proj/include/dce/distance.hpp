#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dce/cluster_graph.hpp"
#include "dce/common.hpp"
#include "dce/graph.hpp"

namespace dce {

/// Complete bipartite graph with nonnegative integer weights; unset entries are 0.
class WeightedBipartite {
public:
    WeightedBipartite(std::size_t left_count, std::size_t right_count)
        : left_(left_count), right_(right_count), w_(left_count * right_count, 0) {}

    std::size_t left_count() const noexcept { return left_; }
    std::size_t right_count() const noexcept { return right_; }

    std::int64_t weight(std::size_t i, std::size_t j) const { return w_[i * right_ + j]; }

    void set_weight(std::size_t i, std::size_t j, std::int64_t w) {
        if (w < 0) throw Error(ErrorCode::InvalidGraph, "negative bipartite weight");
        w_[i * right_ + j] = w;
    }

    void add_weight(std::size_t i, std::size_t j, std::int64_t w) { set_weight(i, j, weight(i, j) + w); }

private:
    std::size_t left_;
    std::size_t right_;
    std::vector<std::int64_t> w_;
};

struct BipartiteMatching {
    std::int64_t weight = 0;
    /// (left, right) pairs with positive weight, sorted by left index.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

namespace detail {

// Hungarian method with potentials, rows <= cols, minimizing cost.
// Returns for each row its assigned column.
inline std::vector<std::size_t> hungarian_min(std::size_t rows, std::size_t cols,
                                              const std::vector<std::int64_t>& cost) {
    constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
    std::vector<std::int64_t> u(rows + 1, 0), v(cols + 1, 0);
    std::vector<std::size_t> p(cols + 1, 0), way(cols + 1, 0);
    for (std::size_t i = 1; i <= rows; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::vector<std::int64_t> minv(cols + 1, inf);
        std::vector<char> used(cols + 1, 0);
        do {
            used[j0] = 1;
            std::size_t i0 = p[j0], j1 = 0;
            std::int64_t delta = inf;
            for (std::size_t j = 1; j <= cols; ++j) {
                if (used[j]) continue;
                std::int64_t cur = cost[(i0 - 1) * cols + (j - 1)] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= cols; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<std::size_t> assignment(rows, 0);
    for (std::size_t j = 1; j <= cols; ++j)
        if (p[j] != 0) assignment[p[j] - 1] = j - 1;
    return assignment;
}

}  // namespace detail

/// Exact maximum-weight matching, O(min^2 * max) via the Hungarian method.
inline BipartiteMatching max_weight_bipartite_matching(const WeightedBipartite& b) {
    BipartiteMatching result;
    const std::size_t L = b.left_count(), R = b.right_count();
    if (L == 0 || R == 0) return result;
    const bool transpose = L > R;
    const std::size_t rows = transpose ? R : L, cols = transpose ? L : R;
    std::vector<std::int64_t> cost(rows * cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            cost[r * cols + c] = -(transpose ? b.weight(c, r) : b.weight(r, c));
    auto assignment = detail::hungarian_min(rows, cols, cost);
    for (std::size_t r = 0; r < rows; ++r) {
        std::size_t i = transpose ? assignment[r] : r;
        std::size_t j = transpose ? r : assignment[r];
        std::int64_t w = b.weight(i, j);
        if (w > 0) {
            result.weight += w;
            result.pairs.emplace_back(i, j);
        }
    }
    std::sort(result.pairs.begin(), result.pairs.end());
    return result;
}

/// Overlap bipartite graph B(a, b): w(i, j) = |A_i ∩ B_j|.
inline WeightedBipartite overlap_bipartite(const ClusterGraph& a, const ClusterGraph& b) {
    if (a.n() != b.n()) throw Error(ErrorCode::SizeMismatch, "cluster graphs differ in vertex count");
    WeightedBipartite bip(a.cluster_count(), b.cluster_count());
    for (Vertex v = 0; v < a.n(); ++v) bip.add_weight(std::size_t(a.cluster_of(v)), std::size_t(b.cluster_of(v)), 1);
    return bip;
}

/// Number of vertices that must move between clusters: n minus the maximum overlap matching.
inline std::int64_t matching_distance(const ClusterGraph& a, const ClusterGraph& b) {
    if (a.n() != b.n()) throw Error(ErrorCode::SizeMismatch, "cluster graphs differ in vertex count");
    if (a.n() == 0) return 0;
    // Only clusters that actually overlap matter; compress to keep the matrix small.
    std::unordered_map<std::int64_t, std::int64_t> overlap;
    std::vector<std::int64_t> left_id(a.cluster_count(), -1), right_id(b.cluster_count(), -1);
    std::vector<std::pair<std::size_t, std::size_t>> keys;
    for (Vertex v = 0; v < a.n(); ++v) {
        const auto ca = std::size_t(a.cluster_of(v)), cb = std::size_t(b.cluster_of(v));
        auto key = std::int64_t(ca) * std::int64_t(b.cluster_count()) + std::int64_t(cb);
        if (overlap[key]++ == 0) keys.emplace_back(ca, cb);
    }
    std::size_t L = 0, R = 0;
    for (auto [ca, cb] : keys) {
        if (left_id[ca] < 0) left_id[ca] = std::int64_t(L++);
        if (right_id[cb] < 0) right_id[cb] = std::int64_t(R++);
    }
    WeightedBipartite bip(L, R);
    for (auto [ca, cb] : keys) {
        auto key = std::int64_t(ca) * std::int64_t(b.cluster_count()) + std::int64_t(cb);
        bip.set_weight(std::size_t(left_id[ca]), std::size_t(right_id[cb]), overlap[key]);
    }
    return std::int64_t(a.n()) - max_weight_bipartite_matching(bip).weight;
}

/// Σ over cluster pairs of C(|A ∩ B|, 2): the number of pairs joined in both partitions.
inline std::int64_t shared_edge_count(const ClusterGraph& a, const ClusterGraph& b) {
    if (a.n() != b.n()) throw Error(ErrorCode::SizeMismatch, "cluster graphs differ in vertex count");
    std::unordered_map<std::int64_t, std::int64_t> overlap;
    for (Vertex v = 0; v < a.n(); ++v)
        ++overlap[std::int64_t(a.cluster_of(v)) * std::int64_t(b.cluster_count()) + b.cluster_of(v)];
    std::int64_t shared = 0;
    for (const auto& [key, c] : overlap) shared += choose2(c);
    return shared;
}

/// |E(a) ⊕ E(b)|.
inline std::int64_t edge_distance(const ClusterGraph& a, const ClusterGraph& b) {
    if (a.n() != b.n()) throw Error(ErrorCode::SizeMismatch, "cluster graphs differ in vertex count");
    return a.edge_count() + b.edge_count() - 2 * shared_edge_count(a, b);
}

/// |E(g) ⊕ E(c)| for an arbitrary graph g against a partition c.
inline std::int64_t symmetric_difference_size(const Graph& g, const ClusterGraph& c) {
    if (g.n() != c.n()) throw Error(ErrorCode::SizeMismatch, "graph and cluster graph differ in vertex count");
    std::int64_t inside = 0;
    for (Vertex u = 0; u < g.n(); ++u)
        g.for_each_neighbor(u, [&](Vertex v) {
            if (u < v && c.same_cluster(u, v)) ++inside;
        });
    return g.edge_count() + c.edge_count() - 2 * inside;
}

}  // namespace dce
