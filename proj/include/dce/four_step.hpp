#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dce/cluster_graph.hpp"
#include "dce/common.hpp"
#include "dce/graph.hpp"
#include "dce/instance.hpp"
#include "dce/mck.hpp"

namespace dce {

/// Local solution of one part: a partition of the part's vertices (labels aligned
/// with the part's vertex list) with its edit cost and distance gain.
struct PartTuple {
    std::int64_t cost = 0;
    std::int64_t gain = 0;
    std::vector<Vertex> labels;
};

struct TupleSet {
    int part_id = 0;
    std::vector<PartTuple> tuples;
};

struct FourStepOutcome {
    Solution solution;
    std::int64_t cost = 0;
    std::int64_t profit = 0;
    std::vector<std::size_t> selection;
};

/// Keeps, per cost, only tuples whose gain beats every cheaper tuple. The first
/// tuple of each surviving (cost, gain) wins.
inline std::vector<PartTuple> pareto_filter(std::vector<PartTuple> tuples) {
    std::stable_sort(tuples.begin(), tuples.end(), [](const PartTuple& a, const PartTuple& b) {
        return a.cost != b.cost ? a.cost < b.cost : a.gain > b.gain;
    });
    std::vector<PartTuple> out;
    for (auto& t : tuples)
        if (out.empty() || t.gain > out.back().gain) out.push_back(std::move(t));
    return out;
}

namespace detail {

inline std::int64_t local_cost(const Graph& g, const std::vector<Vertex>& part, const std::vector<Vertex>& labels,
                               Variant variant) {
    std::int64_t cost = 0;
    for (std::size_t i = 0; i < part.size(); ++i)
        for (std::size_t j = i + 1; j < part.size(); ++j) {
            const bool e = g.has_edge(part[i], part[j]), same = labels[i] == labels[j];
            if (e == same) continue;
            if ((variant == Variant::Deletion && same) || (variant == Variant::Completion && !same))
                throw Error(ErrorCode::MalformedParts, "tuple needs an edit the variant forbids");
            ++cost;
        }
    return cost;
}

}  // namespace detail

/// Steps 3 and 4: one MCK group per part with budget k and profit target P.
/// Vertices outside every part keep their G neighbourhood and must form cliques.
inline std::optional<FourStepOutcome> four_step_drive(const std::vector<std::vector<Vertex>>& parts,
                                                      const std::vector<TupleSet>& sets, const Instance& inst,
                                                      std::int64_t target) {
    const Graph& g = inst.g;
    if (sets.size() != parts.size()) throw Error(ErrorCode::MalformedParts, "one tuple set per part expected");
    std::vector<int> part_of(std::size_t(g.n()), -1);
    for (std::size_t p = 0; p < parts.size(); ++p)
        for (Vertex v : parts[p]) {
            if (v < 0 || v >= g.n()) throw Error(ErrorCode::MalformedParts, "part vertex out of range");
            if (part_of[v] != -1) throw Error(ErrorCode::MalformedParts, "parts overlap at " + std::to_string(v));
            part_of[v] = int(p);
        }
    for (const auto& e : g.edges())
        if (part_of[e.u] != part_of[e.v])
            throw Error(ErrorCode::MalformedParts,
                        "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} crosses parts");

    MckInstance m;
    m.capacity = inst.k;
    m.target = target;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (sets[p].tuples.empty()) throw Error(ErrorCode::MalformedParts, "empty tuple set");
        m.groups.emplace_back();
        for (const auto& t : sets[p].tuples) {
            if (t.labels.size() != parts[p].size()) throw Error(ErrorCode::MalformedParts, "tuple size mismatch");
            if (detail::local_cost(g, parts[p], t.labels, inst.variant) != t.cost)
                throw Error(ErrorCode::MalformedParts, "tuple cost differs from its edit count");
            m.groups.back().push_back({t.cost, t.gain});
        }
    }
    auto sel = solve_mck(m);
    if (!sel) return std::nullopt;

    // Global labels: parts first, then the untouched components.
    std::vector<Vertex> label(std::size_t(g.n()), -1);
    Vertex offset = 0;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        const auto& t = sets[p].tuples[sel->selection[p]];
        Vertex top = 0;
        for (std::size_t i = 0; i < parts[p].size(); ++i) {
            label[parts[p][i]] = offset + t.labels[i];
            top = std::max(top, Vertex(t.labels[i] + 1));
        }
        offset += top;
    }
    for (const auto& comp : connected_components(g)) {
        if (part_of[comp.front()] != -1) continue;
        if (!is_clique(g, comp)) throw Error(ErrorCode::MalformedParts, "vertices outside parts are not a cluster graph");
        for (Vertex v : comp) label[v] = offset;
        ++offset;
    }
    FourStepOutcome out{make_solution(g, ClusterGraph::from_labels(label)), sel->weight, sel->profit,
                        sel->selection};
    return out;
}

}  // namespace dce
