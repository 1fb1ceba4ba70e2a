#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dce/cluster_graph.hpp"
#include "dce/common.hpp"
#include "dce/graph.hpp"
#include "dce/instance.hpp"

namespace dce {

struct OracleOptions {
    Vertex cap = 11;
};

/// Cap from DCE_ORACLE_CAP when set, else the default.
inline OracleOptions oracle_options_from_env() {
    OracleOptions o;
    if (const char* s = std::getenv("DCE_ORACLE_CAP")) o.cap = Vertex(std::stoi(s));
    return o;
}

namespace detail {

// Enumerates candidate partitions of the variant as restricted growth strings,
// pruning once the edit count exceeds `limit`. `limit` may shrink during the run.
class PartitionSearch {
public:
    PartitionSearch(const Instance& inst, std::function<void(const std::vector<Vertex>&, std::int64_t)> leaf)
        : inst_(inst), leaf_(std::move(leaf)) {
        const Graph& g = inst.g;
        if (inst.variant == Variant::Completion) {
            units_ = connected_components(g);
            for (const auto& u : units_) {
                std::int64_t e = 0;
                for (Vertex v : u) e += g.degree(v);
                base_ += choose2(std::int64_t(u.size())) - e / 2;
            }
        } else {
            for (Vertex v = 0; v < g.n(); ++v) units_.push_back({v});
        }
        labels_.assign(std::size_t(g.n()), -1);
    }

    void run(std::int64_t* limit) {
        limit_ = limit;
        block_size_.clear();
        if (base_ > *limit_) return;
        recurse(0, base_);
    }

private:
    void recurse(std::size_t i, std::int64_t cost) {
        if (i == units_.size()) {
            leaf_(labels_, cost);
            return;
        }
        const Graph& g = inst_.g;
        const auto& unit = units_[i];
        const std::size_t blocks = block_size_.size();
        for (std::size_t b = 0; b <= blocks; ++b) {
            std::int64_t add = 0;
            bool ok = true;
            if (inst_.variant == Variant::Completion) {
                if (b < blocks) add = std::int64_t(unit.size()) * block_size_[b];
            } else {
                const Vertex v = unit.front();
                // Pairs to earlier vertices: non-edges inside the block, edges leaving it.
                for (Vertex u = 0; u < v; ++u) {
                    const bool same = labels_[u] == Vertex(b);
                    if (same == g.has_edge(u, v)) continue;
                    if (inst_.variant == Variant::Deletion && same) {
                        ok = false;
                        break;
                    }
                    ++add;
                }
            }
            if (!ok || cost + add > *limit_) continue;
            if (b == blocks) block_size_.push_back(0);
            block_size_[b] += std::int64_t(unit.size());
            for (Vertex v : unit) labels_[v] = Vertex(b);
            recurse(i + 1, cost + add);
            for (Vertex v : unit) labels_[v] = -1;
            block_size_[b] -= std::int64_t(unit.size());
            if (b == blocks) block_size_.pop_back();
        }
    }

    const Instance& inst_;
    std::function<void(const std::vector<Vertex>&, std::int64_t)> leaf_;
    std::vector<std::vector<Vertex>> units_;
    std::vector<Vertex> labels_;
    std::vector<std::int64_t> block_size_;
    std::int64_t base_ = 0;
    std::int64_t* limit_ = nullptr;
};

inline void check_oracle_size(const Instance& inst, const OracleOptions& opt) {
    if (inst.n() > opt.cap)
        throw Error(ErrorCode::TooLarge, "oracle cap is " + std::to_string(opt.cap) + " vertices, instance has " +
                                             std::to_string(inst.n()) + "; raise --cap or DCE_ORACLE_CAP");
}

}  // namespace detail

/// Exhaustive search over the variant's candidate partitions. Returns a witness
/// minimal in (edit count, distance), the first found on ties, or nullopt for NO.
inline std::optional<Solution> oracle_solve(const Instance& inst, const OracleOptions& opt = {}) {
    detail::check_oracle_size(inst, opt);
    if (inst.k < 0 || inst.d < 0) return std::nullopt;
    std::optional<std::vector<Vertex>> best;
    std::int64_t best_cost = 0, best_dist = 0;
    std::int64_t limit = inst.k;
    detail::PartitionSearch search(inst, [&](const std::vector<Vertex>& labels, std::int64_t cost) {
        if (best && cost > best_cost) return;
        const auto c = ClusterGraph::from_labels(labels);
        const std::int64_t dist = distance(inst.measure, c, inst.gc);
        if (dist > inst.d) return;
        if (!best || cost < best_cost || dist < best_dist) {
            best = labels;
            best_cost = cost;
            best_dist = dist;
            limit = cost;
        }
    });
    search.run(&limit);
    if (!best) return std::nullopt;
    return make_solution(inst.g, ClusterGraph::from_labels(*best));
}

/// Calls fn for every solution of the instance, in enumeration order.
inline void oracle_for_each_solution(const Instance& inst, const std::function<void(const Solution&)>& fn,
                                     const OracleOptions& opt = {}) {
    detail::check_oracle_size(inst, opt);
    if (inst.k < 0 || inst.d < 0) return;
    std::int64_t limit = inst.k;
    detail::PartitionSearch search(inst, [&](const std::vector<Vertex>& labels, std::int64_t) {
        auto c = ClusterGraph::from_labels(labels);
        if (distance(inst.measure, c, inst.gc) > inst.d) return;
        fn(make_solution(inst.g, std::move(c)));
    });
    search.run(&limit);
}

}  // namespace dce
