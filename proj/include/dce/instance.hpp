#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dce/cluster_graph.hpp"
#include "dce/common.hpp"
#include "dce/distance.hpp"
#include "dce/graph.hpp"

namespace dce {

enum class Variant { Editing, Deletion, Completion };
enum class Measure { MatchingDist, EdgeDist };

inline const char* to_string(Variant v) {
    switch (v) {
        case Variant::Editing: return "editing";
        case Variant::Deletion: return "deletion";
        case Variant::Completion: return "completion";
    }
    return "?";
}

inline const char* to_string(Measure m) { return m == Measure::MatchingDist ? "matching" : "edge"; }

inline std::optional<Variant> parse_variant(const std::string& s) {
    if (s == "editing") return Variant::Editing;
    if (s == "deletion") return Variant::Deletion;
    if (s == "completion") return Variant::Completion;
    return std::nullopt;
}

inline std::optional<Measure> parse_measure(const std::string& s) {
    if (s == "matching") return Measure::MatchingDist;
    if (s == "edge") return Measure::EdgeDist;
    return std::nullopt;
}

inline std::int64_t distance(Measure m, const ClusterGraph& a, const ClusterGraph& b) {
    return m == Measure::MatchingDist ? matching_distance(a, b) : edge_distance(a, b);
}

/// One instance of any of the six variants. k and d are signed so reduction
/// rules can overshoot below zero before the trivial rule rejects.
struct Instance {
    Variant variant = Variant::Editing;
    Measure measure = Measure::MatchingDist;
    Graph g;
    ClusterGraph gc;
    std::int64_t k = 0;
    std::int64_t d = 0;

    Instance() = default;
    Instance(Variant var, Measure mea, Graph graph, ClusterGraph target, std::int64_t budget, std::int64_t bound)
        : variant(var), measure(mea), g(std::move(graph)), gc(std::move(target)), k(budget), d(bound) {
        if (g.n() != gc.n()) throw Error(ErrorCode::SizeMismatch, "g and gc differ in vertex count");
    }

    Vertex n() const noexcept { return g.n(); }

    friend bool operator==(const Instance&, const Instance&) = default;
};

struct Edit {
    VertexPair pair;
    bool insertion = false;
    friend auto operator<=>(const Edit&, const Edit&) = default;
};

struct Solution {
    ClusterGraph gprime;
    /// E(g) ⊕ E(gprime), sorted by pair.
    std::vector<Edit> edits;
};

/// Edits turning g into the cluster graph gprime.
inline std::vector<Edit> edits_between(const Graph& g, const ClusterGraph& gprime) {
    if (g.n() != gprime.n()) throw Error(ErrorCode::SizeMismatch, "graph and solution differ in vertex count");
    std::vector<Edit> out;
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = u + 1; v < g.n(); ++v) {
            const bool in_g = g.has_edge(u, v), in_s = gprime.same_cluster(u, v);
            if (in_g != in_s) out.push_back({VertexPair(u, v), in_s});
        }
    return out;
}

inline Solution make_solution(const Graph& g, ClusterGraph gprime) {
    Solution s{std::move(gprime), {}};
    s.edits = edits_between(g, s.gprime);
    return s;
}

enum class VerifyReason { BudgetExceeded, DistanceExceeded, ForbiddenEdit, InconsistentEdits };

inline const char* to_string(VerifyReason r) {
    switch (r) {
        case VerifyReason::BudgetExceeded: return "BudgetExceeded";
        case VerifyReason::DistanceExceeded: return "DistanceExceeded";
        case VerifyReason::ForbiddenEdit: return "ForbiddenEdit";
        case VerifyReason::InconsistentEdits: return "InconsistentEdits";
    }
    return "?";
}

struct Verdict {
    bool ok = true;
    std::vector<VerifyReason> reasons;
    std::int64_t edit_count = 0;
    std::int64_t dist = 0;

    explicit operator bool() const noexcept { return ok; }
};

/// Checks budget, distance and the variant's allowed operation. Budget and operation
/// are judged on edits recomputed from gprime; a stored list that disagrees is reported.
inline Verdict verify_solution(const Instance& inst, const Solution& sol) {
    if (sol.gprime.n() != inst.g.n()) throw Error(ErrorCode::SizeMismatch, "solution vertex count differs");
    Verdict v;
    const auto edits = edits_between(inst.g, sol.gprime);
    v.edit_count = std::int64_t(edits.size());
    v.dist = distance(inst.measure, sol.gprime, inst.gc);
    auto fail = [&](VerifyReason r) {
        v.ok = false;
        v.reasons.push_back(r);
    };
    if (v.edit_count > inst.k) fail(VerifyReason::BudgetExceeded);
    if (v.dist > inst.d) fail(VerifyReason::DistanceExceeded);
    const bool forbidden = std::any_of(edits.begin(), edits.end(), [&](const Edit& e) {
        return (inst.variant == Variant::Deletion && e.insertion) ||
               (inst.variant == Variant::Completion && !e.insertion);
    });
    if (forbidden) fail(VerifyReason::ForbiddenEdit);
    auto stored = sol.edits;
    std::sort(stored.begin(), stored.end());
    if (stored != edits) fail(VerifyReason::InconsistentEdits);
    return v;
}

/// Editing/EdgeDist with g a cluster graph: exchange the roles of g and gc, and of k and d.
inline Instance swap_instance(const Instance& inst) {
    if (inst.variant != Variant::Editing || inst.measure != Measure::EdgeDist)
        throw Error(ErrorCode::NotApplicable, "swap needs an editing instance with edge distance");
    if (!is_cluster_graph(inst.g)) throw Error(ErrorCode::NotApplicable, "swap needs g to be a cluster graph");
    return Instance(inst.variant, inst.measure, cluster_to_graph(inst.gc), to_cluster_graph(inst.g), inst.d, inst.k);
}

/// On a tight edge-distance instance (k + d = |E ⊕ E_c|) a verified solution spends
/// exactly k edits, all inside E ⊕ E_c, and lands at distance exactly d.
inline bool exact_modification_check(const Instance& inst, const Solution& sol) {
    if (inst.measure != Measure::EdgeDist || inst.k + inst.d != symmetric_difference_size(inst.g, inst.gc))
        throw Error(ErrorCode::NotApplicable, "instance is not a tight edge-distance instance");
    const auto edits = edits_between(inst.g, sol.gprime);
    if (std::int64_t(edits.size()) != inst.k) return false;
    if (edge_distance(sol.gprime, inst.gc) != inst.d) return false;
    return std::all_of(edits.begin(), edits.end(), [&](const Edit& e) {
        return inst.g.has_edge(e.pair.u, e.pair.v) != inst.gc.same_cluster(e.pair.u, e.pair.v);
    });
}

}  // namespace dce
