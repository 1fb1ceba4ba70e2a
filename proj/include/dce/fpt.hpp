#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dce/cluster_graph.hpp"
#include "dce/common.hpp"
#include "dce/distance.hpp"
#include "dce/four_step.hpp"
#include "dce/graph.hpp"
#include "dce/instance.hpp"
#include "dce/kernelize.hpp"
#include "dce/p3.hpp"
#include "dce/solve_result.hpp"

namespace dce {

namespace detail {

inline void require(const Instance& inst, Variant v, std::optional<Measure> m, const char* who) {
    if (inst.variant != v || (m && inst.measure != *m))
        throw Error(ErrorCode::WrongVariant, std::string(who) + " does not handle " + to_string(inst.variant) + "/" +
                                                 to_string(inst.measure));
}

inline SolveResult no_result(const char* solver) {
    SolveResult r;
    r.solver = solver;
    return r;
}

inline SolveResult yes_result(const char* solver, const Instance& original, const ClusterGraph& gprime) {
    SolveResult r;
    r.solver = solver;
    r.yes = true;
    r.witness = make_solution(original.g, gprime);
    return r;
}

// Every partition of the cliques (given as vertex lists) into merged blocks, as block labels per clique.
inline void for_each_clique_partition(std::size_t count, const std::function<void(const std::vector<Vertex>&)>& fn) {
    std::vector<Vertex> lab(count, 0);
    std::function<void(std::size_t, Vertex)> go = [&](std::size_t i, Vertex used) {
        if (i == count) {
            fn(lab);
            return;
        }
        for (Vertex b = 0; b <= used && b < Vertex(count); ++b) {
            lab[i] = b;
            go(i + 1, std::max(used, Vertex(b + 1)));
        }
    };
    go(0, 0);
}

}  // namespace detail

/// Majority home of each cluster of `cliques` in gc: 1-based gc cluster index, or 0.
inline std::vector<int> t_map(const ClusterGraph& cliques, const ClusterGraph& gc) {
    if (cliques.n() != gc.n()) throw Error(ErrorCode::SizeMismatch, "clique partition and gc differ in size");
    std::vector<int> t(cliques.cluster_count(), 0);
    for (std::size_t c = 0; c < cliques.cluster_count(); ++c) {
        const auto& members = cliques.cluster(c);
        std::map<Vertex, std::int64_t> overlap;
        for (Vertex v : members) ++overlap[gc.cluster_of(v)];
        for (const auto& [d, o] : overlap)
            if (2 * o > std::int64_t(members.size())) t[c] = int(d) + 1;
    }
    return t;
}

/// Majority home of a single vertex set.
inline int t_value(const std::vector<Vertex>& c, const ClusterGraph& gc) {
    std::map<Vertex, std::int64_t> overlap;
    for (Vertex v : c) ++overlap[gc.cluster_of(v)];
    for (const auto& [d, o] : overlap)
        if (2 * o > std::int64_t(c.size())) return int(d) + 1;
    return 0;
}

/// Cross pairs E* between c0 and the other sets, split into (inside gc, outside gc).
/// Requires T(c0) = 0 or T(c0) different from every T(other).
inline std::pair<std::int64_t, std::int64_t> tmap_merge_inequality(const std::vector<Vertex>& c0,
                                                                   const std::vector<std::vector<Vertex>>& others,
                                                                   const ClusterGraph& gc) {
    const int t0 = t_value(c0, gc);
    for (const auto& c : others)
        if (t0 != 0 && t_value(c, gc) == t0)
            throw Error(ErrorCode::PreconditionViolated, "a merged clique shares the majority home of c0");
    std::int64_t in = 0, out = 0;
    for (const auto& c : others)
        for (Vertex u : c0)
            for (Vertex v : c) (gc.same_cluster(u, v) ? in : out) += 1;
    return {in, out};
}

/// Completion must turn every component into a clique; those insertions are charged
/// to k up front. A negative k in the result marks a no-instance.
inline Instance normalize_completion(const Instance& inst) {
    detail::require(inst, Variant::Completion, std::nullopt, "normalize_completion");
    Graph g(inst.n());
    std::int64_t inserted = 0;
    for (const auto& comp : connected_components(inst.g)) {
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (std::size_t j = i + 1; j < comp.size(); ++j) {
                if (!inst.g.has_edge(comp[i], comp[j])) ++inserted;
                g.add_edge(comp[i], comp[j]);
            }
    }
    return Instance(inst.variant, inst.measure, std::move(g), inst.gc, inst.k - inserted, inst.d);
}

/// Deletion with edge distance, exponential only in k.
inline SolveResult fpt_deletion_edge_k(const Instance& inst) {
    constexpr const char* name = "fpt-deletion-edge-k";
    detail::require(inst, Variant::Deletion, Measure::EdgeDist, name);
    if (inst.k < 0 || inst.d < 0) return detail::no_result(name);

    // Heavy pairs and the P3 vertex bound; forced deletions stay in the graph edits.
    Instance cur = inst;
    for (;;) {
        if (cur.k < 0) return detail::no_result(name);
        auto r = apply_rule(cur, RuleId::RR2_HeavyEdge);
        if (r.status == RuleStatus::NotApplicable) r = apply_rule(cur, RuleId::RR3_HeavyNonEdge);
        if (r.status == RuleStatus::No) return detail::no_result(name);
        if (r.status == RuleStatus::NotApplicable) break;
        cur = std::move(r.inst);
    }
    if (cur.k < 0 || apply_rule(cur, RuleId::RR4_P3VertexBound).status == RuleStatus::No)
        return detail::no_result(name);

    const Graph& g = cur.g;
    std::vector<std::vector<Vertex>> parts;
    auto r = p3_vertices(g);
    if (!r.empty()) parts.push_back(r);
    std::vector<char> in_r(std::size_t(g.n()), 0);
    for (Vertex v : r) in_r[v] = 1;
    for (const auto& comp : connected_components(g))
        if (!in_r[comp.front()]) parts.push_back(comp);

    std::vector<TupleSet> sets;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        const auto& part = parts[p];
        std::vector<PartTuple> tuples;
        std::vector<Vertex> lab(part.size(), -1);
        // Split the part into G-cliques; each edge leaving a block is one deletion.
        std::function<void(std::size_t, Vertex, std::int64_t, std::int64_t)> go =
            [&](std::size_t i, Vertex blocks, std::int64_t cost, std::int64_t gain) {
                if (i == part.size()) {
                    tuples.push_back({cost, gain, lab});
                    return;
                }
                for (Vertex b = 0; b <= blocks; ++b) {
                    std::int64_t dc = 0, dg = 0;
                    bool ok = true;
                    for (std::size_t j = 0; j < i; ++j) {
                        const bool e = g.has_edge(part[i], part[j]);
                        if (lab[j] == b) {
                            if (!e) {
                                ok = false;
                                break;
                            }
                        } else if (e) {
                            ++dc;
                            dg += cur.gc.same_cluster(part[i], part[j]) ? -1 : 1;
                        }
                    }
                    if (!ok || cost + dc > cur.k) continue;
                    lab[i] = b;
                    go(i + 1, b == blocks ? blocks + 1 : blocks, cost + dc, gain + dg);
                    lab[i] = -1;
                }
            };
        go(0, 0, 0, 0);
        if (tuples.empty()) return detail::no_result(name);
        sets.push_back({int(p), pareto_filter(std::move(tuples))});
    }
    auto out = four_step_drive(parts, sets, cur, symmetric_difference_size(cur.g, cur.gc) - cur.d);
    if (!out) return detail::no_result(name);
    return detail::yes_result(name, inst, out->solution.gprime);
}

/// Completion with edge distance, exponential only in d.
inline SolveResult fpt_completion_edge_d(const Instance& inst) {
    constexpr const char* name = "fpt-completion-edge-d";
    detail::require(inst, Variant::Completion, Measure::EdgeDist, name);
    if (inst.k < 0 || inst.d < 0) return detail::no_result(name);
    const Instance norm = normalize_completion(inst);
    if (norm.k < 0) return detail::no_result(name);

    // Cliques above k+1 vertices can never change: drop them and charge d.
    detail::KernelWork w(norm);
    std::vector<std::vector<Vertex>> dropped;
    while (auto e = detail::rr6_edge_step(w)) dropped.push_back(e->removed);
    if (w.d < 0) return detail::no_result(name);
    const Instance cur = w.to_instance();

    const auto cliques = to_cluster_graph(cur.g);
    const auto t = t_map(cliques, cur.gc);
    std::map<int, std::vector<std::size_t>> groups;
    for (std::size_t c = 0; c < t.size(); ++c)
        if (t[c] > 0) groups[t[c]].push_back(c);

    std::vector<std::vector<Vertex>> parts;
    std::vector<TupleSet> sets;
    for (const auto& [home, members] : groups) {
        if (members.size() < 2) continue;
        std::vector<Vertex> part;
        std::vector<std::size_t> owner;  // clique index per part vertex
        for (std::size_t i = 0; i < members.size(); ++i)
            for (Vertex v : cliques.cluster(members[i])) {
                part.push_back(v);
                owner.push_back(i);
            }
        auto tuple_for = [&](const std::vector<Vertex>& block) {
            PartTuple tp;
            for (std::size_t a = 0; a < part.size(); ++a) tp.labels.push_back(block[owner[a]]);
            for (std::size_t a = 0; a < part.size(); ++a)
                for (std::size_t b = a + 1; b < part.size(); ++b)
                    if (owner[a] != owner[b] && tp.labels[a] == tp.labels[b]) {
                        ++tp.cost;
                        tp.gain += cur.gc.same_cluster(part[a], part[b]) ? 1 : -1;
                    }
            return tp;
        };
        std::vector<PartTuple> tuples;
        if (std::int64_t(members.size()) >= cur.d + 2) {
            // Leaving any two sides apart would miss at least d+1 gc pairs.
            tuples.push_back(tuple_for(std::vector<Vertex>(members.size(), 0)));
        } else {
            detail::for_each_clique_partition(members.size(),
                                              [&](const std::vector<Vertex>& b) { tuples.push_back(tuple_for(b)); });
        }
        parts.push_back(std::move(part));
        sets.push_back({int(sets.size()), pareto_filter(std::move(tuples))});
    }
    auto out = four_step_drive(parts, sets, cur, symmetric_difference_size(cur.g, cur.gc) - cur.d);
    if (!out) return detail::no_result(name);

    // Back to the original ids, dropped cliques as their own clusters.
    std::vector<Vertex> label(std::size_t(inst.n()), -1);
    const auto& kg = out->solution.gprime;
    for (Vertex v = 0; v < kg.n(); ++v) label[w.labels[v]] = kg.cluster_of(v);
    Vertex next = Vertex(kg.cluster_count());
    for (const auto& c : dropped) {
        for (Vertex v : c) label[v] = next;
        ++next;
    }
    return detail::yes_result(name, inst, ClusterGraph::from_labels(label));
}

namespace detail {

// Left-out choices for the contained cliques of one gc cluster: for each size class
// x <= budget, how many cliques of that size stay outside the main clique.
inline void for_each_leave_out(const std::vector<std::pair<std::int64_t, std::size_t>>& classes, std::int64_t budget,
                               const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> pick(classes.size(), 0);
    std::function<void(std::size_t, std::int64_t)> go = [&](std::size_t i, std::int64_t left) {
        if (i == classes.size()) {
            fn(pick);
            return;
        }
        const auto [size, count] = classes[i];
        for (std::size_t c = 0; c <= count && std::int64_t(c) * size <= left; ++c) {
            pick[i] = c;
            go(i + 1, left - std::int64_t(c) * size);
        }
        pick[i] = 0;
    };
    go(0, budget);
}

}  // namespace detail

/// Completion with matching distance, exponential only in d.
inline SolveResult fpt_completion_matching_d(const Instance& inst) {
    constexpr const char* name = "fpt-completion-matching-d";
    detail::require(inst, Variant::Completion, Measure::MatchingDist, name);
    if (inst.k < 0 || inst.d < 0) return detail::no_result(name);
    const Instance cur = normalize_completion(inst);
    if (cur.k < 0) return detail::no_result(name);
    const std::int64_t n = cur.n(), d = cur.d;

    const auto cliques = to_cluster_graph(cur.g);
    const std::size_t q = cur.gc.cluster_count();
    // Spanning cliques with the gc clusters they touch; contained cliques per gc cluster.
    std::vector<std::size_t> spanning;
    std::vector<std::vector<std::size_t>> touches;
    std::vector<std::vector<std::size_t>> contained(q);
    for (std::size_t c = 0; c < cliques.cluster_count(); ++c) {
        std::vector<std::size_t> homes;
        for (Vertex v : cliques.cluster(c)) homes.push_back(std::size_t(cur.gc.cluster_of(v)));
        std::sort(homes.begin(), homes.end());
        homes.erase(std::unique(homes.begin(), homes.end()), homes.end());
        if (homes.size() == 1) {
            contained[homes[0]].push_back(c);
        } else {
            if (std::int64_t(homes.size()) > d + 1) return detail::no_result(name);
            spanning.push_back(c);
            touches.push_back(std::move(homes));
        }
    }
    if (std::int64_t(spanning.size()) > d) return detail::no_result(name);

    auto size_of = [&](std::size_t c) { return std::int64_t(cliques.cluster(c).size()); };
    // assign[i] = gc cluster the i-th spanning clique is matched to, or q for none.
    std::vector<std::size_t> assign(spanning.size(), q);
    std::optional<FourStepOutcome> found;
    std::function<void(std::size_t)> branch = [&](std::size_t i) {
        if (found) return;
        if (i < spanning.size()) {
            for (std::size_t home : touches[i]) {
                assign[i] = home;
                branch(i + 1);
            }
            assign[i] = q;
            branch(i + 1);
            return;
        }
        std::vector<std::vector<std::size_t>> assigned(q);
        for (std::size_t s = 0; s < spanning.size(); ++s)
            if (assign[s] < q) assigned[assign[s]].push_back(spanning[s]);
        std::vector<std::vector<Vertex>> parts;
        std::vector<TupleSet> sets;
        for (std::size_t di = 0; di < q; ++di) {
            if (assigned[di].empty() && contained[di].empty()) continue;
            // Forced into the main clique: assigned spanning cliques and contained cliques above d.
            std::vector<std::size_t> forced = assigned[di];
            std::map<std::int64_t, std::vector<std::size_t>> small;
            for (std::size_t c : contained[di]) {
                if (size_of(c) > d) {
                    forced.push_back(c);
                } else {
                    small[size_of(c)].push_back(c);
                }
            }
            std::vector<std::pair<std::int64_t, std::size_t>> classes;
            for (const auto& [x, cs] : small) classes.emplace_back(x, cs.size());

            std::vector<std::size_t> members = forced;
            for (const auto& [x, cs] : small) members.insert(members.end(), cs.begin(), cs.end());
            std::vector<Vertex> part;
            std::vector<std::size_t> owner;
            for (std::size_t m = 0; m < members.size(); ++m)
                for (Vertex v : cliques.cluster(members[m])) {
                    part.push_back(v);
                    owner.push_back(m);
                }
            std::vector<PartTuple> tuples;
            detail::for_each_leave_out(classes, d, [&](const std::vector<std::size_t>& leave) {
                // Main clique is label 0; left-out cliques keep their own label. Within a class
                // the last cliques are the ones left out.
                std::vector<Vertex> block(members.size(), 0);
                std::size_t m = forced.size();
                Vertex next = 1;
                std::size_t cls = 0;
                for (const auto& [x, cs] : small) {
                    for (std::size_t j = 0; j < cs.size(); ++j, ++m)
                        if (j + leave[cls] >= cs.size()) block[m] = next++;
                    ++cls;
                }
                PartTuple tp;
                std::int64_t main_size = 0;
                for (std::size_t a = 0; a < part.size(); ++a) {
                    tp.labels.push_back(block[owner[a]]);
                    if (block[owner[a]] == 0) {
                        ++main_size;
                        if (std::size_t(cur.gc.cluster_of(part[a])) == di) ++tp.gain;
                    }
                }
                // Merging blocks of sizes s_1..s_r into one inserts sum_{i<j} s_i s_j pairs.
                std::int64_t sq = 0;
                for (std::size_t mm = 0; mm < members.size(); ++mm)
                    if (block[mm] == 0) sq += size_of(members[mm]) * size_of(members[mm]);
                tp.cost = (main_size * main_size - sq) / 2;
                tuples.push_back(std::move(tp));
            });
            parts.push_back(std::move(part));
            sets.push_back({int(sets.size()), pareto_filter(std::move(tuples))});
        }
        auto out = four_step_drive(parts, sets, cur, n - d);
        if (out) found = std::move(out);
    };
    branch(0);
    if (!found) return detail::no_result(name);
    auto res = detail::yes_result(name, inst, found->solution.gprime);
    if (matching_distance(res.witness->gprime, inst.gc) > n - found->profit)
        throw Error(ErrorCode::InvalidInstance, "assembled witness exceeds its matching bound");
    return res;
}

}  // namespace dce
