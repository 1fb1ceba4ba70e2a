// dce: command-line front end.
//
// Exit codes: 0 yes / ok, 1 no / rejected, 2 usage or parse error, 3 the solver could not decide.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dce/combined.hpp"
#include "dce/generators.hpp"
#include "dce/io.hpp"
#include "dce/kernelize.hpp"

using namespace dce;

namespace {

constexpr int kYes = 0, kNo = 1, kUsage = 2, kUndecided = 3;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_text_file(out_path, text);
    }
}

std::vector<std::int64_t> int_list(const std::string& s, char sep) {
    std::vector<std::int64_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Error(ErrorCode::Parse, "not an integer: '" + item + "'");
        }
    }
    return out;
}

// "0-1,1-2" over n vertices.
Graph edge_list_graph(Vertex n, const std::string& s) {
    Graph g(n);
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto dash = item.find('-');
        if (dash == std::string::npos) throw Error(ErrorCode::Parse, "edge must be u-v: '" + item + "'");
        auto u = int_list(item.substr(0, dash), ','), v = int_list(item.substr(dash + 1), ',');
        if (u.size() != 1 || v.size() != 1 || u[0] < 0 || v[0] < 0 || u[0] >= n || v[0] >= n || u[0] == v[0])
            throw Error(ErrorCode::Parse, "bad edge '" + item + "'");
        g.add_edge(Vertex(u[0]), Vertex(v[0]));
    }
    return g;
}

int report_error(const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
        case ErrorCode::TooLarge:
        case ErrorCode::KernelTooLargeForOracle:
            std::cerr << "hint: raise --cap (or DCE_ORACLE_CAP), or pick an FPT solver with --algo\n";
            return kUndecided;
        case ErrorCode::WrongVariant:
            std::cerr << "hint: --algo auto picks a solver that fits the instance\n";
            return kUndecided;
        case ErrorCode::Parse:
        case ErrorCode::InvalidGraph:
        case ErrorCode::SizeMismatch:
        case ErrorCode::InvalidSource:
        case ErrorCode::InvalidInstance: return kUsage;
        default: return kUndecided;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dynamic cluster editing: exact solvers, kernelization and gadget generators"};
    app.require_subcommand(1);

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Decide an instance");
    std::string solve_path, solve_out, algo_name = "auto";
    int cap = oracle_options_from_env().cap;
    bool emit_witness = false, as_json = false;
    solve_cmd->add_option("instance", solve_path, "Instance file")->required();
    solve_cmd->add_option("--algo", algo_name, "auto|oracle|combined|fpt-k|fpt-d")
        ->check(CLI::IsMember({"auto", "oracle", "combined", "fpt-k", "fpt-d"}));
    solve_cmd->add_option("--cap", cap, "Largest vertex count handed to the exhaustive search");
    solve_cmd->add_flag("--emit-witness", emit_witness, "Include the solution cluster graph and edits");
    solve_cmd->add_flag("--json", as_json, "Print the result file instead of a summary");
    solve_cmd->add_option("-o,--output", solve_out, "Write output here instead of stdout");

    // kernelize
    auto* kern_cmd = app.add_subcommand("kernelize", "Reduce an instance and print the rule trace");
    std::string kern_path, kern_out;
    bool kern_json = false;
    kern_cmd->add_option("instance", kern_path, "Instance file")->required();
    kern_cmd->add_flag("--json", kern_json, "Print reduced instance and trace as JSON");
    kern_cmd->add_option("-o,--output", kern_out, "Write output here instead of stdout");

    // distance
    auto* dist_cmd = app.add_subcommand("distance", "Distance between two cluster files");
    std::string dist_a, dist_b, dist_measure = "matching";
    dist_cmd->add_option("a", dist_a, "Clusters file")->required();
    dist_cmd->add_option("b", dist_b, "Clusters file")->required();
    dist_cmd->add_option("--measure", dist_measure, "matching|edge")->check(CLI::IsMember({"matching", "edge"}));

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Check a solution against an instance");
    std::string verify_inst, verify_sol;
    verify_cmd->add_option("instance", verify_inst, "Instance file")->required();
    verify_cmd->add_option("solution", verify_sol, "Result file with witness_clusters, or a clusters file")
        ->required();

    // generate
    auto* gen_cmd = app.add_subcommand("generate", "Write a generated instance");
    gen_cmd->require_subcommand(1);
    gen_cmd->fallthrough();
    std::string gen_out;
    gen_cmd->add_option("-o,--output", gen_out, "Write the instance here instead of stdout");

    auto* g3p = gen_cmd->add_subcommand("3partition", "3-Partition gadget (completion, edge distance)");
    std::int64_t tp_m = 0, tp_B = 0;
    std::string tp_a;
    g3p->add_option("--m", tp_m)->required();
    g3p->add_option("--B", tp_B)->required();
    g3p->add_option("--a", tp_a, "Comma separated numbers")->required();

    auto* gx3c = gen_cmd->add_subcommand("x3c", "Exact cover gadget (deletion, matching distance)");
    int x_q = 0;
    std::string x_sets;
    gx3c->add_option("--q", x_q)->required();
    gx3c->add_option("--sets", x_sets, "Triples of 0-based elements, e.g. 0,1,2;0,1,2")->required();

    auto* gcl = gen_cmd->add_subcommand("clique", "Clique gadget (editing, edge distance)");
    int cl_ell = 0;
    Vertex cl_n = 0;
    std::string cl_edges;
    gcl->add_option("--ell", cl_ell)->required();
    gcl->add_option("--n0", cl_n, "Vertices of g0")->required();
    gcl->add_option("--edges", cl_edges, "Edges of g0, e.g. 0-1,1-2");

    auto* gmc = gen_cmd->add_subcommand("mcclique", "Multicolored clique gadget (deletion, edge distance)");
    int mc_ell = 0;
    Vertex mc_n = 0;
    std::string mc_edges, mc_colors;
    gmc->add_option("--ell", mc_ell)->required();
    gmc->add_option("--n0", mc_n, "Vertices of g0")->required();
    gmc->add_option("--edges", mc_edges, "Edges of g0, e.g. 0-1,1-2");
    gmc->add_option("--colors", mc_colors, "Color 1..ell per vertex, comma separated")->required();

    auto* grnd = gen_cmd->add_subcommand("random", "Random graph and random target partition");
    Vertex r_n = 0;
    double r_p = 0.5;
    std::string r_variant = "editing", r_measure = "matching";
    std::int64_t r_k = 0, r_d = 0;
    std::uint64_t r_seed = 1;
    grnd->add_option("--n", r_n)->required();
    grnd->add_option("--p", r_p, "Edge probability")->check(CLI::Range(0.0, 1.0));
    grnd->add_option("--variant", r_variant)->check(CLI::IsMember({"editing", "deletion", "completion"}));
    grnd->add_option("--measure", r_measure)->check(CLI::IsMember({"matching", "edge"}));
    grnd->add_option("--k", r_k)->check(CLI::NonNegativeNumber);
    grnd->add_option("--d", r_d)->check(CLI::NonNegativeNumber);
    grnd->add_option("--seed", r_seed, "Default 1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }

    try {
        if (*solve_cmd) {
            auto inst = instance_from_json(read_json_file(solve_path), solve_path);
            static const std::map<std::string, Algo> algos{{"auto", Algo::Auto},
                                                           {"oracle", Algo::Oracle},
                                                           {"combined", Algo::Combined},
                                                           {"fpt-k", Algo::FptK},
                                                           {"fpt-d", Algo::FptD}};
            OracleOptions opt{Vertex(cap)};
            const auto t0 = std::chrono::steady_clock::now();
            auto r = solve(inst, algos.at(algo_name), opt);
            const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
                                .count();
            if (as_json) {
                emit(result_to_json(r, emit_witness, ms).dump() + "\n", solve_out);
            } else {
                std::ostringstream os;
                os << (r.yes ? "yes" : "no") << "\n";
                os << "solver: " << r.solver << "\n";
                os << "vertices: " << r.kernel_before << " -> " << r.kernel_after << "\n";
                if (r.yes && emit_witness && r.witness) {
                    os << "witness (" << to_string(r.scope) << "):";
                    for (const auto& cl : r.witness->gprime.clusters()) {
                        os << " {";
                        for (std::size_t i = 0; i < cl.size(); ++i) os << (i ? "," : "") << cl[i];
                        os << "}";
                    }
                    os << "\nedits: " << r.witness->edits.size() << "\n";
                }
                emit(os.str(), solve_out);
            }
            return r.yes ? kYes : kNo;
        }

        if (*kern_cmd) {
            auto inst = instance_from_json(read_json_file(kern_path), kern_path);
            auto kr = kernelize(inst);
            const auto bound = kernel_vertex_bound(inst.measure, kr.reduced.k, kr.reduced.d);
            const auto safe = guaranteed_kernel_vertex_bound(inst.measure, kr.reduced.k, kr.reduced.d);
            if (kern_json) {
                Json j;
                j["decision"] = kr.no ? "no" : "reduced";
                j["vertices_before"] = inst.n();
                if (!kr.no) {
                    j["vertices_after"] = kr.reduced.n();
                    j["bound"] = bound;
                    j["guaranteed_bound"] = safe;
                    j["reduced"] = instance_to_json(kr.reduced);
                    j["labels"] = kr.labels;
                } else {
                    j["no_rule"] = to_string(kr.no_rule);
                }
                j["trace"] = trace_json(kr.trace);
                emit(j.dump() + "\n", kern_out);
            } else {
                std::ostringstream os;
                for (const auto& e : kr.trace) os << to_string(e.rule) << ": " << e.effect << "\n";
                if (kr.no) {
                    os << "no (" << to_string(kr.no_rule) << ")\n";
                } else {
                    os << "vertices: " << inst.n() << " -> " << kr.reduced.n() << "\n";
                    os << "k: " << kr.reduced.k << ", d: " << kr.reduced.d << "\n";
                    os << "bound: " << bound << " (guaranteed " << safe << ")\n";
                }
                emit(os.str(), kern_out);
            }
            return kr.no ? kNo : kYes;
        }

        if (*dist_cmd) {
            auto a = clusters_from_json(read_json_file(dist_a), dist_a);
            auto b = clusters_from_json(read_json_file(dist_b), dist_b);
            const auto m = dist_measure == "edge" ? Measure::EdgeDist : Measure::MatchingDist;
            std::cout << distance(m, a, b) << "\n";
            return kYes;
        }

        if (*verify_cmd) {
            auto inst = instance_from_json(read_json_file(verify_inst), verify_inst);
            auto sol = solution_from_json(read_json_file(verify_sol), inst.g, verify_sol);
            auto v = verify_solution(inst, sol);
            if (v) {
                std::cout << "ok edits=" << v.edit_count << " distance=" << v.dist << "\n";
                return kYes;
            }
            std::cout << "rejected";
            for (auto reason : v.reasons) std::cout << " " << to_string(reason);
            std::cout << " edits=" << v.edit_count << " distance=" << v.dist << "\n";
            return kNo;
        }

        if (*gen_cmd) {
            Instance inst;
            if (*g3p) {
                inst = gen_3partition_completion_edge({tp_m, tp_B, int_list(tp_a, ',')});
            } else if (*gx3c) {
                X3cSource src{x_q, {}};
                std::stringstream ss(x_sets);
                std::string triple;
                while (std::getline(ss, triple, ';')) {
                    auto xs = int_list(triple, ',');
                    if (xs.size() != 3) throw Error(ErrorCode::InvalidSource, "each set needs three elements");
                    src.sets.push_back({int(xs[0]), int(xs[1]), int(xs[2])});
                }
                inst = gen_x3c_deletion_matching(src);
            } else if (*gcl) {
                inst = gen_clique_editing_edge({edge_list_graph(cl_n, cl_edges), cl_ell});
            } else if (*gmc) {
                std::vector<int> colors;
                for (auto c : int_list(mc_colors, ',')) colors.push_back(int(c));
                inst = gen_mcclique_deletion_edge({edge_list_graph(mc_n, mc_edges), colors, mc_ell});
            } else {
                inst = gen_random(r_n, r_p, *parse_variant(r_variant), *parse_measure(r_measure), r_k, r_d, r_seed);
            }
            emit(instance_to_json(inst).dump() + "\n", gen_out);
            return kYes;
        }
    } catch (const Error& e) {
        return report_error(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUndecided;
    }
    return kUsage;
}
