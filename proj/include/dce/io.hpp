#pragma once

// JSON file formats. Field order is fixed so output is byte-stable.
//
//   instance:  {"version":1,"variant","measure","n","g_edges":[[u,v],...],"gc_clusters":[[...],...],"k","d"}
//   clusters:  {"version":1,"n","clusters":[[...],...]}
//   result:    {"decision","witness_scope","witness_clusters","edits":[[u,v,"ins"|"del"],...],"stats","trace"}

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dce/cluster_graph.hpp"
#include "dce/common.hpp"
#include "dce/graph.hpp"
#include "dce/instance.hpp"
#include "dce/kernelize.hpp"
#include "dce/solve_result.hpp"

namespace dce {

using Json = nlohmann::ordered_json;

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& where, const std::string& what) {
    throw Error(ErrorCode::Parse, where + ": " + what);
}

inline const Json& field(const Json& obj, const std::string& where, const char* name) {
    if (!obj.is_object()) parse_fail(where, "expected an object");
    auto it = obj.find(name);
    if (it == obj.end()) parse_fail(where, std::string("missing field '") + name + "'");
    return *it;
}

inline std::int64_t int_field(const Json& obj, const std::string& where, const char* name) {
    const auto& f = field(obj, where, name);
    if (!f.is_number_integer()) parse_fail(where + "." + name, "expected an integer");
    return f.get<std::int64_t>();
}

inline std::string string_field(const Json& obj, const std::string& where, const char* name) {
    const auto& f = field(obj, where, name);
    if (!f.is_string()) parse_fail(where + "." + name, "expected a string");
    return f.get<std::string>();
}

inline Vertex vertex_value(const Json& v, const std::string& where, std::int64_t n) {
    if (!v.is_number_integer()) parse_fail(where, "expected a vertex id");
    auto x = v.get<std::int64_t>();
    if (x < 0 || x >= n) parse_fail(where, "vertex " + std::to_string(x) + " out of range 0.." + std::to_string(n - 1));
    return Vertex(x);
}

inline std::vector<std::vector<Vertex>> cluster_list(const Json& arr, const std::string& where, std::int64_t n) {
    if (!arr.is_array()) parse_fail(where, "expected a list of clusters");
    std::vector<std::vector<Vertex>> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string w = where + "[" + std::to_string(i) + "]";
        if (!arr[i].is_array()) parse_fail(w, "expected a list of vertex ids");
        auto& cl = out.emplace_back();
        for (std::size_t j = 0; j < arr[i].size(); ++j)
            cl.push_back(vertex_value(arr[i][j], w + "[" + std::to_string(j) + "]", n));
    }
    return out;
}

inline ClusterGraph cluster_graph_value(const Json& arr, const std::string& where, std::int64_t n) {
    try {
        return ClusterGraph(Vertex(n), cluster_list(arr, where, n));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Parse) throw;
        parse_fail(where, e.what());
    }
}

inline std::int64_t vertex_count(const Json& obj, const std::string& where) {
    auto n = int_field(obj, where, "n");
    if (n < 0 || n > (std::int64_t(1) << 20)) parse_fail(where + ".n", "vertex count out of range");
    return n;
}

inline void check_version(const Json& obj, const std::string& where) {
    if (int_field(obj, where, "version") != 1) parse_fail(where + ".version", "unsupported version");
}

inline Json clusters_json(const ClusterGraph& c) {
    Json arr = Json::array();
    for (const auto& cl : c.clusters()) arr.push_back(cl);
    return arr;
}

}  // namespace detail

/// Parses text, reporting syntax errors with line and column.
inline Json parse_json_text(const std::string& text, const std::string& source = "input") {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw Error(ErrorCode::Parse, source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                                          ": invalid JSON");
    }
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Parse, path + ": cannot open");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str(), path);
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::Parse, path + ": cannot write");
    out << text;
}

inline Json instance_to_json(const Instance& inst) {
    Json j;
    j["version"] = 1;
    j["variant"] = to_string(inst.variant);
    j["measure"] = to_string(inst.measure);
    j["n"] = inst.n();
    Json edges = Json::array();
    for (auto e : inst.g.edges()) edges.push_back({e.u, e.v});
    j["g_edges"] = std::move(edges);
    j["gc_clusters"] = detail::clusters_json(inst.gc);
    j["k"] = inst.k;
    j["d"] = inst.d;
    return j;
}

inline Instance instance_from_json(const Json& j, const std::string& where = "instance") {
    detail::check_version(j, where);
    auto var = parse_variant(detail::string_field(j, where, "variant"));
    if (!var) detail::parse_fail(where + ".variant", "expected editing, deletion or completion");
    auto mea = parse_measure(detail::string_field(j, where, "measure"));
    if (!mea) detail::parse_fail(where + ".measure", "expected matching or edge");
    const auto n = detail::vertex_count(j, where);
    const auto& edges = detail::field(j, where, "g_edges");
    if (!edges.is_array()) detail::parse_fail(where + ".g_edges", "expected a list of edges");
    Graph g(static_cast<Vertex>(n));
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string w = where + ".g_edges[" + std::to_string(i) + "]";
        if (!edges[i].is_array() || edges[i].size() != 2) detail::parse_fail(w, "expected [u, v]");
        Vertex u = detail::vertex_value(edges[i][0], w + "[0]", n), v = detail::vertex_value(edges[i][1], w + "[1]", n);
        if (u == v) detail::parse_fail(w, "self loop");
        if (g.has_edge(u, v)) detail::parse_fail(w, "duplicate edge");
        g.add_edge(u, v);
    }
    auto gc = detail::cluster_graph_value(detail::field(j, where, "gc_clusters"), where + ".gc_clusters", n);
    const auto k = detail::int_field(j, where, "k"), d = detail::int_field(j, where, "d");
    if (k < 0) detail::parse_fail(where + ".k", "must be nonnegative");
    if (d < 0) detail::parse_fail(where + ".d", "must be nonnegative");
    return Instance(*var, *mea, std::move(g), std::move(gc), k, d);
}

inline Json clusters_file_json(const ClusterGraph& c) {
    Json j;
    j["version"] = 1;
    j["n"] = c.n();
    j["clusters"] = detail::clusters_json(c);
    return j;
}

inline ClusterGraph clusters_from_json(const Json& j, const std::string& where = "clusters") {
    detail::check_version(j, where);
    const auto n = detail::vertex_count(j, where);
    return detail::cluster_graph_value(detail::field(j, where, "clusters"), where + ".clusters", n);
}

inline Json edits_json(const std::vector<Edit>& edits) {
    Json arr = Json::array();
    for (const auto& e : edits) arr.push_back({e.pair.u, e.pair.v, e.insertion ? "ins" : "del"});
    return arr;
}

inline Json trace_json(const std::vector<TraceEntry>& trace) {
    Json arr = Json::array();
    for (const auto& e : trace) {
        Json t;
        t["rule"] = to_string(e.rule);
        t["effect"] = e.effect;
        t["dk"] = e.dk;
        t["dd"] = e.dd;
        if (e.pair) t["pair"] = {e.pair->u, e.pair->v};
        if (!e.removed.empty()) t["removed"] = e.removed;
        if (!e.added.empty()) t["added"] = e.added;
        if (!e.joined.empty()) t["joined"] = e.joined;
        if (e.no) t["no"] = true;
        arr.push_back(std::move(t));
    }
    return arr;
}

inline Json result_to_json(const SolveResult& r, bool emit_witness, std::int64_t runtime_ms) {
    Json j;
    j["decision"] = r.yes ? "yes" : "no";
    if (r.yes && emit_witness && r.witness) {
        j["witness_scope"] = to_string(r.scope);
        j["witness_clusters"] = detail::clusters_json(r.witness->gprime);
        j["edits"] = edits_json(r.witness->edits);
        if (r.scope == WitnessScope::Kernel) {
            j["kernel_labels"] = r.kernel_labels;
            j["kernel_instance"] = instance_to_json(*r.kernel);
        }
    }
    Json stats;
    stats["solver"] = r.solver;
    stats["runtime_ms"] = runtime_ms;
    stats["kernel_vertices_before"] = r.kernel_before;
    stats["kernel_vertices_after"] = r.kernel_after;
    j["stats"] = std::move(stats);
    if (!r.trace.empty()) j["trace"] = trace_json(r.trace);
    return j;
}

/// Solution read from a result file (witness_clusters, optional edits) or a clusters file.
/// Without an edit list the edits are derived from g.
inline Solution solution_from_json(const Json& j, const Graph& g, const std::string& where = "solution") {
    const std::int64_t n = g.n();
    ClusterGraph gp;
    if (j.is_object() && j.contains("witness_clusters")) {
        gp = detail::cluster_graph_value(j["witness_clusters"], where + ".witness_clusters", n);
    } else if (j.is_object() && j.contains("clusters")) {
        gp = clusters_from_json(j, where);
    } else {
        detail::parse_fail(where, "expected witness_clusters or clusters");
    }
    if (!j.contains("edits")) return make_solution(g, std::move(gp));
    const auto& arr = j["edits"];
    if (!arr.is_array()) detail::parse_fail(where + ".edits", "expected a list of edits");
    Solution s;
    s.gprime = std::move(gp);
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string w = where + ".edits[" + std::to_string(i) + "]";
        const auto& e = arr[i];
        if (!e.is_array() || e.size() != 3 || !e[2].is_string()) detail::parse_fail(w, "expected [u, v, \"ins\"|\"del\"]");
        Vertex u = detail::vertex_value(e[0], w + "[0]", n), v = detail::vertex_value(e[1], w + "[1]", n);
        if (u == v) detail::parse_fail(w, "self loop");
        const auto kind = e[2].get<std::string>();
        if (kind != "ins" && kind != "del") detail::parse_fail(w + "[2]", "expected \"ins\" or \"del\"");
        s.edits.push_back({VertexPair(u, v), kind == "ins"});
    }
    return s;
}

}  // namespace dce
