#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dce/cluster_graph.hpp"
#include "dce/common.hpp"
#include "dce/graph.hpp"
#include "dce/instance.hpp"
#include "dce/p3.hpp"

namespace dce {

enum class RuleId {
    RR1_Trivial,
    RR2_HeavyEdge,
    RR3_HeavyNonEdge,
    RR4_P3VertexBound,
    RR5_SameClique,
    RR6_LargeCliqueMatching,
    RR6_LargeCliqueEdge,
    RR7_ManyCliquesMatching,
    RR7_ManyCliquesEdge,
};

inline const char* to_string(RuleId r) {
    switch (r) {
        case RuleId::RR1_Trivial: return "RR1_Trivial";
        case RuleId::RR2_HeavyEdge: return "RR2_HeavyEdge";
        case RuleId::RR3_HeavyNonEdge: return "RR3_HeavyNonEdge";
        case RuleId::RR4_P3VertexBound: return "RR4_P3VertexBound";
        case RuleId::RR5_SameClique: return "RR5_SameClique";
        case RuleId::RR6_LargeCliqueMatching: return "RR6_LargeCliqueMatching";
        case RuleId::RR6_LargeCliqueEdge: return "RR6_LargeCliqueEdge";
        case RuleId::RR7_ManyCliquesMatching: return "RR7_ManyCliquesMatching";
        case RuleId::RR7_ManyCliquesEdge: return "RR7_ManyCliquesEdge";
    }
    return "?";
}

inline std::optional<RuleId> parse_rule(const std::string& s) {
    for (int i = 0; i <= int(RuleId::RR7_ManyCliquesEdge); ++i)
        if (s == to_string(RuleId(i))) return RuleId(i);
    return std::nullopt;
}

/// One rule application. Vertex lists hold labels: original vertices keep their
/// id, fresh vertices are numbered n, n+1, ... in creation order.
struct TraceEntry {
    RuleId rule = RuleId::RR1_Trivial;
    std::string effect;
    std::int64_t dk = 0;
    std::int64_t dd = 0;
    std::vector<Vertex> removed;
    std::vector<Vertex> added;
    /// Surviving members of the gc cluster the added vertices join.
    std::vector<Vertex> joined;
    std::optional<VertexPair> pair;
    bool no = false;

    friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct KernelResult {
    bool no = false;
    RuleId no_rule = RuleId::RR1_Trivial;
    /// Meaningful only when !no.
    Instance reduced;
    std::vector<TraceEntry> trace;
    /// Label of each vertex of `reduced`, increasing.
    std::vector<Vertex> labels;
    Vertex original_n = 0;

    bool lifts_to_original() const {
        return std::none_of(trace.begin(), trace.end(),
                            [](const TraceEntry& e) { return e.rule == RuleId::RR6_LargeCliqueMatching && !e.no; });
    }
};

enum class RuleStatus { NotApplicable, No, Applied };

struct RuleOutcome {
    RuleStatus status = RuleStatus::NotApplicable;
    Instance inst;
    TraceEntry entry;
};

inline std::int64_t isolated_clique_limit(Measure m, std::int64_t k, std::int64_t d) {
    // Matching: a solution with t clusters that are not gc clusters has distance
    // at least t/2, and each edit creates at most two such clusters.
    return m == Measure::MatchingDist ? 2 * k + 2 * d : 2 * (k + d);
}

/// Vertex bound claimed for reduced instances.
inline std::int64_t kernel_vertex_bound(Measure m, std::int64_t k, std::int64_t d) {
    if (m == Measure::MatchingDist) return 3 * k * k + 2 * d * d + 5 * d * k + 2 * d + 6 * k;
    return 2 * d * k + 2 * d + 3 * k * k + 4 * k;
}

/// Bound actually guaranteed by the implemented rules: P3 vertices plus at most
/// isolated_clique_limit cliques of at most the large-clique threshold each.
inline std::int64_t guaranteed_kernel_vertex_bound(Measure m, std::int64_t k, std::int64_t d) {
    const std::int64_t clique_size = m == Measure::MatchingDist ? k + 2 * d + 2 : k + 1;
    return k * k + 2 * k + isolated_clique_limit(m, k, d) * clique_size;
}

namespace detail {

inline std::string pair_text(Vertex u, Vertex v) { return "{" + std::to_string(u) + "," + std::to_string(v) + "}"; }

// Mutable working copy; vertices stay sorted by label because removals keep
// relative order and fresh vertices get the largest labels.
struct KernelWork {
    Variant variant = Variant::Editing;
    Measure measure = Measure::MatchingDist;
    Graph g;
    std::vector<Vertex> gc_label;
    std::vector<Vertex> labels;
    std::int64_t k = 0;
    std::int64_t d = 0;
    Vertex next_label = 0;
    Vertex next_gc_label = 0;

    explicit KernelWork(const Instance& inst)
        : variant(inst.variant), measure(inst.measure), g(inst.g), gc_label(inst.gc.cluster_ids()),
          labels(std::size_t(inst.n())), k(inst.k), d(inst.d), next_label(inst.n()),
          next_gc_label(Vertex(inst.gc.cluster_count())) {
        for (Vertex v = 0; v < inst.n(); ++v) labels[v] = v;
    }

    Vertex n() const { return g.n(); }

    Instance to_instance() const {
        return Instance(variant, measure, g, ClusterGraph::from_labels(gc_label), k, d);
    }

    Vertex index_of(Vertex label) const {
        auto it = std::lower_bound(labels.begin(), labels.end(), label);
        if (it == labels.end() || *it != label) throw Error(ErrorCode::InvalidInstance, "unknown vertex label in trace");
        return Vertex(it - labels.begin());
    }

    std::vector<Vertex> labels_of(const std::vector<Vertex>& vs) const {
        std::vector<Vertex> out;
        for (Vertex v : vs) out.push_back(labels[v]);
        return out;
    }

    void remove(const std::vector<Vertex>& vs) {
        std::vector<Vertex> new_id(std::size_t(n()), 0);
        for (Vertex v : vs) new_id[v] = -1;
        Vertex m = 0;
        for (Vertex v = 0; v < n(); ++v)
            if (new_id[v] != -1) new_id[v] = m++;
        Graph h(m);
        std::vector<Vertex> gl, ll;
        for (Vertex u = 0; u < n(); ++u) {
            if (new_id[u] == -1) continue;
            gl.push_back(gc_label[u]);
            ll.push_back(labels[u]);
            g.for_each_neighbor(u, [&](Vertex v) {
                if (u < v && new_id[v] != -1) h.add_edge(new_id[u], new_id[v]);
            });
        }
        g = std::move(h);
        gc_label = std::move(gl);
        labels = std::move(ll);
    }

    std::vector<Vertex> add_clique(std::int64_t size, Vertex gc) {
        const Vertex old = n(), m = Vertex(old + size);
        Graph h(m);
        for (const auto& e : g.edges()) h.add_edge(e.u, e.v);
        std::vector<Vertex> added;
        for (Vertex v = old; v < m; ++v) {
            for (Vertex u = old; u < v; ++u) h.add_edge(u, v);
            gc_label.push_back(gc);
            labels.push_back(next_label++);
            added.push_back(labels.back());
        }
        g = std::move(h);
        return added;
    }
};

inline TraceEntry no_entry(RuleId rule, std::string effect) {
    TraceEntry e;
    e.rule = rule;
    e.effect = std::move(effect);
    e.no = true;
    return e;
}

inline bool rr1_fires(const KernelWork& w) { return w.k < 0 || w.d < 0; }

inline TraceEntry rr1_entry(const KernelWork& w) {
    return no_entry(RuleId::RR1_Trivial, "k=" + std::to_string(w.k) + ", d=" + std::to_string(w.d) + ": answer NO");
}

// Heavy pair handling shared by the driver and apply_rule. Returns the entry; sets `no`
// when the variant cannot perform the needed operation.
inline TraceEntry apply_heavy_pair(KernelWork& w, Vertex u, Vertex v) {
    const bool edge = w.g.has_edge(u, v);
    const RuleId rule = edge ? RuleId::RR2_HeavyEdge : RuleId::RR3_HeavyNonEdge;
    const auto text = pair_text(w.labels[u], w.labels[v]);
    if (edge && w.variant == Variant::Completion)
        return no_entry(rule, "edge " + text + " lies in more than k induced P3s: answer NO");
    if (!edge && w.variant == Variant::Deletion)
        return no_entry(rule, "non-edge " + text + " lies in more than k induced P3s: answer NO");
    TraceEntry e;
    e.rule = rule;
    e.effect = (edge ? "delete edge " : "insert edge ") + text;
    e.dk = -1;
    e.pair = VertexPair(w.labels[u], w.labels[v]);
    w.g.toggle_edge(u, v);
    w.k -= 1;
    return e;
}

inline std::optional<VertexPair> find_heavy_pair_direct(const KernelWork& w, bool want_edge) {
    const auto census = enumerate_p3_pairs(w.g);
    for (const auto& [p, c] : census.pair_counts)
        if (c >= w.k + 1 && w.g.has_edge(p.u, p.v) == want_edge) return p;
    return std::nullopt;
}

inline std::optional<TraceEntry> rr4_check(const KernelWork& w) {
    const auto r = p3_vertices(w.g);
    if (std::int64_t(r.size()) > w.k * w.k + 2 * w.k)
        return no_entry(RuleId::RR4_P3VertexBound,
                        std::to_string(r.size()) + " vertices lie in induced P3s, more than k^2+2k: answer NO");
    return std::nullopt;
}

// Clique components of g in order of smallest vertex.
inline std::vector<std::vector<Vertex>> isolated_cliques(const Graph& g) {
    std::vector<std::vector<Vertex>> out;
    for (auto& comp : connected_components(g))
        if (is_clique(g, comp)) out.push_back(std::move(comp));
    return out;
}

inline std::map<Vertex, std::int64_t> gc_sizes(const KernelWork& w) {
    std::map<Vertex, std::int64_t> s;
    for (Vertex l : w.gc_label) ++s[l];
    return s;
}

inline std::optional<TraceEntry> rr5_step(KernelWork& w) {
    const auto sizes = gc_sizes(w);
    for (const auto& c : isolated_cliques(w.g)) {
        const Vertex l = w.gc_label[c.front()];
        if (sizes.at(l) != std::int64_t(c.size())) continue;
        if (!std::all_of(c.begin(), c.end(), [&](Vertex v) { return w.gc_label[v] == l; })) continue;
        TraceEntry e;
        e.rule = RuleId::RR5_SameClique;
        e.removed = w.labels_of(c);
        e.effect = "remove clique of " + std::to_string(c.size()) + " vertices isolated in g and gc";
        w.remove(c);
        return e;
    }
    return std::nullopt;
}

inline std::optional<TraceEntry> rr6_matching_step(KernelWork& w) {
    for (const auto& c : isolated_cliques(w.g)) {
        if (std::int64_t(c.size()) <= w.k + 2 * w.d + 2) continue;
        // Overlap per gc cluster, remembering each cluster's smallest vertex for ties.
        std::map<Vertex, std::int64_t> overlap;
        for (Vertex v : c) ++overlap[w.gc_label[v]];
        std::map<Vertex, Vertex> first_vertex;
        for (Vertex v = 0; v < w.n(); ++v) first_vertex.try_emplace(w.gc_label[v], v);
        Vertex best = -1;
        std::int64_t best_overlap = -1;
        for (const auto& [l, o] : overlap)
            if (o > best_overlap || (o == best_overlap && first_vertex[l] < first_vertex[best])) {
                best = l;
                best_overlap = o;
            }
        if (best_overlap <= w.d)
            return no_entry(RuleId::RR6_LargeCliqueMatching,
                            "clique of " + std::to_string(c.size()) +
                                " vertices overlaps every gc cluster in at most d vertices: answer NO");
        TraceEntry e;
        e.rule = RuleId::RR6_LargeCliqueMatching;
        e.removed = w.labels_of(c);
        e.dd = -(std::int64_t(c.size()) - best_overlap);
        std::vector<Vertex> rest;
        std::vector<char> in_c(std::size_t(w.n()), 0);
        for (Vertex v : c) in_c[v] = 1;
        for (Vertex v = 0; v < w.n(); ++v)
            if (w.gc_label[v] == best && !in_c[v]) rest.push_back(w.labels[v]);
        e.effect = "remove clique of " + std::to_string(c.size()) + " vertices matched to the gc cluster of vertex " +
                   std::to_string(w.labels[first_vertex[best]]);
        w.remove(c);
        w.d += e.dd;
        if (w.d >= 0) {
            const std::int64_t fresh = w.k + w.d + 1;
            const Vertex target = rest.empty() ? w.next_gc_label++ : best;
            e.added = w.add_clique(fresh, target);
            e.joined = rest;
            e.effect += ", add " + std::to_string(fresh) + " fresh vertices";
        }
        return e;
    }
    return std::nullopt;
}

inline std::optional<TraceEntry> rr6_edge_step(KernelWork& w) {
    const auto sizes = gc_sizes(w);
    std::int64_t ec = 0;
    for (const auto& [l, s] : sizes) ec += choose2(s);
    for (const auto& c : isolated_cliques(w.g)) {
        if (std::int64_t(c.size()) <= w.k + 1) continue;
        std::map<Vertex, std::int64_t> inside;
        for (Vertex v : c) ++inside[w.gc_label[v]];
        std::int64_t in_c = 0, outside = 0;
        for (const auto& [l, s] : sizes) {
            auto it = inside.find(l);
            const std::int64_t o = it == inside.end() ? 0 : it->second;
            in_c += choose2(o);
            outside += choose2(s - o);
        }
        TraceEntry e;
        e.rule = RuleId::RR6_LargeCliqueEdge;
        e.removed = w.labels_of(c);
        e.dd = -(ec + choose2(std::int64_t(c.size())) - 2 * in_c - outside);
        e.effect = "remove clique of " + std::to_string(c.size()) + " vertices, charge " + std::to_string(-e.dd) +
                   " to d";
        w.remove(c);
        w.d += e.dd;
        return e;
    }
    return std::nullopt;
}

inline std::optional<TraceEntry> rr7_check(const KernelWork& w) {
    const auto count = std::int64_t(isolated_cliques(w.g).size());
    const std::int64_t limit = isolated_clique_limit(w.measure, w.k, w.d);
    if (count <= limit) return std::nullopt;
    const RuleId rule =
        w.measure == Measure::MatchingDist ? RuleId::RR7_ManyCliquesMatching : RuleId::RR7_ManyCliquesEdge;
    return no_entry(rule, std::to_string(count) + " isolated cliques, more than " + std::to_string(limit) +
                              ": answer NO");
}

}  // namespace detail

/// Applies one rule once, at its smallest trigger.
inline RuleOutcome apply_rule(const Instance& inst, RuleId rule) {
    detail::KernelWork w(inst);
    RuleOutcome out;
    out.inst = inst;
    std::optional<TraceEntry> e;
    switch (rule) {
        case RuleId::RR1_Trivial:
            if (detail::rr1_fires(w)) e = detail::rr1_entry(w);
            break;
        case RuleId::RR2_HeavyEdge:
        case RuleId::RR3_HeavyNonEdge:
            if (auto p = detail::find_heavy_pair_direct(w, rule == RuleId::RR2_HeavyEdge))
                e = detail::apply_heavy_pair(w, p->u, p->v);
            break;
        case RuleId::RR4_P3VertexBound: e = detail::rr4_check(w); break;
        case RuleId::RR5_SameClique: e = detail::rr5_step(w); break;
        case RuleId::RR6_LargeCliqueMatching:
            if (inst.measure == Measure::MatchingDist) e = detail::rr6_matching_step(w);
            break;
        case RuleId::RR6_LargeCliqueEdge:
            if (inst.measure == Measure::EdgeDist) e = detail::rr6_edge_step(w);
            break;
        case RuleId::RR7_ManyCliquesMatching:
        case RuleId::RR7_ManyCliquesEdge:
            if ((rule == RuleId::RR7_ManyCliquesMatching) == (inst.measure == Measure::MatchingDist))
                e = detail::rr7_check(w);
            break;
    }
    if (!e) return out;
    out.entry = *e;
    out.status = e->no ? RuleStatus::No : RuleStatus::Applied;
    if (!e->no) out.inst = w.to_instance();
    return out;
}

namespace detail {

// Heavy pairs via a P3-count matrix over the initial P3 vertex set. Toggling a
// pair only changes counts of pairs through its endpoints, so those two rows are
// refreshed and each application costs O(n^2).
class HeavyPairIndex {
public:
    explicit HeavyPairIndex(const Graph& g) : verts_(p3_vertices(g)), pos_(std::size_t(g.n()), -1) {
        r_ = verts_.size();
        counts_.assign(r_ * r_, 0);
        for (std::size_t i = 0; i < r_; ++i) pos_[verts_[i]] = Vertex(i);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = i + 1; j < r_; ++j) set(i, j, p3_count(g, verts_[i], verts_[j]));
    }

    void refresh(const Graph& g, Vertex u, Vertex v) {
        for (Vertex x : {u, v}) {
            const std::size_t i = std::size_t(pos_[x]);
            for (std::size_t j = 0; j < r_; ++j)
                if (j != i) set(i, j, p3_count(g, x, verts_[j]));
        }
    }

    /// Smallest pair with count >= threshold whose edge state is `want_edge`.
    std::optional<VertexPair> find(const Graph& g, std::int64_t threshold, bool want_edge) const {
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = i + 1; j < r_; ++j)
                if (counts_[i * r_ + j] >= threshold && g.has_edge(verts_[i], verts_[j]) == want_edge)
                    return VertexPair(verts_[i], verts_[j]);
        return std::nullopt;
    }

private:
    void set(std::size_t i, std::size_t j, std::int64_t c) {
        counts_[i * r_ + j] = counts_[j * r_ + i] = std::int32_t(c);
    }

    std::vector<Vertex> verts_;
    std::vector<Vertex> pos_;
    std::size_t r_ = 0;
    std::vector<std::int32_t> counts_;
};

inline KernelResult finish(KernelWork& w, KernelResult r) {
    r.labels = w.labels;
    r.reduced = w.to_instance();
    return r;
}

}  // namespace detail

/// Exhaustive reduction: heavy pairs and the P3 bound first, then the
/// isolated-clique rules, restarting from the first rule after every change.
inline KernelResult kernelize(const Instance& inst) {
    detail::KernelWork w(inst);
    KernelResult r;
    r.original_n = inst.n();
    auto stop = [&](TraceEntry e) {
        r.no = true;
        r.no_rule = e.rule;
        r.trace.push_back(std::move(e));
        return detail::finish(w, std::move(r));
    };

    if (detail::rr1_fires(w)) return stop(detail::rr1_entry(w));
    detail::HeavyPairIndex heavy(w.g);
    for (;;) {
        auto p = heavy.find(w.g, w.k + 1, true);
        if (!p) p = heavy.find(w.g, w.k + 1, false);
        if (!p) break;
        auto e = detail::apply_heavy_pair(w, p->u, p->v);
        if (e.no) return stop(std::move(e));
        r.trace.push_back(std::move(e));
        if (detail::rr1_fires(w)) return stop(detail::rr1_entry(w));
        heavy.refresh(w.g, p->u, p->v);
    }
    if (auto e = detail::rr4_check(w)) return stop(std::move(*e));

    for (;;) {
        if (detail::rr1_fires(w)) return stop(detail::rr1_entry(w));
        if (auto e = detail::rr5_step(w)) {
            r.trace.push_back(std::move(*e));
            continue;
        }
        auto e = w.measure == Measure::MatchingDist ? detail::rr6_matching_step(w) : detail::rr6_edge_step(w);
        if (e) {
            if (e->no) return stop(std::move(*e));
            r.trace.push_back(std::move(*e));
            continue;
        }
        if (auto no = detail::rr7_check(w)) return stop(std::move(*no));
        break;
    }
    return detail::finish(w, std::move(r));
}

/// Rebuilds the reduced instance by applying the recorded effects to the original.
inline Instance replay_trace(const Instance& original, const std::vector<TraceEntry>& trace) {
    detail::KernelWork w(original);
    for (const auto& e : trace) {
        if (e.no) break;
        if (e.pair) w.g.toggle_edge(w.index_of(e.pair->u), w.index_of(e.pair->v));
        if (!e.removed.empty()) {
            std::vector<Vertex> idx;
            for (Vertex l : e.removed) idx.push_back(w.index_of(l));
            w.remove(idx);
        }
        if (!e.added.empty()) {
            const Vertex target = e.joined.empty() ? w.next_gc_label++ : w.gc_label[w.index_of(e.joined.front())];
            w.add_clique(std::int64_t(e.added.size()), target);
        }
        w.k += e.dk;
        w.d += e.dd;
    }
    return w.to_instance();
}

/// Lifts a solution of the reduced instance back to the original vertex set.
/// Removed cliques return as their own clusters. Not possible once fresh vertices
/// replaced a clique.
inline std::optional<Solution> lift_solution(const Instance& original, const KernelResult& kr,
                                             const Solution& kernel_sol) {
    if (kr.no || !kr.lifts_to_original()) return std::nullopt;
    std::vector<Vertex> label(std::size_t(original.n()), -1);
    Vertex next = Vertex(kernel_sol.gprime.cluster_count());
    for (Vertex v = 0; v < kernel_sol.gprime.n(); ++v) label[kr.labels[v]] = kernel_sol.gprime.cluster_of(v);
    for (const auto& e : kr.trace) {
        if (e.removed.empty()) continue;
        for (Vertex l : e.removed) label[l] = next;
        ++next;
    }
    return make_solution(original.g, ClusterGraph::from_labels(label));
}

}  // namespace dce
