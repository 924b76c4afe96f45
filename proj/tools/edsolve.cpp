// Command-line front end: solve / kernelize / mmm / matrix / oracle / bench.
// Exit codes: 0 = yes, 1 = no, 2 = error.

#include "eds/generators.hpp"
#include "eds/graph.hpp"
#include "eds/kernelizer.hpp"
#include "eds/matching.hpp"
#include "eds/oracle.hpp"
#include "eds/pipeline.hpp"
#include "eds/reductions.hpp"
#include "eds/solver.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace eds;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f)
        throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Graph load_graph(const std::string& path, const std::string& format) {
    std::string text = read_input(path);
    std::istringstream in(text);
    if (format == "dimacs")
        return parse_dimacs(in);
    if (format == "edgelist")
        return parse_edge_list(in);
    // auto: DIMACS files start with a p/c line
    for (char c : text) {
        if (isspace(static_cast<unsigned char>(c)))
            continue;
        if (c == 'p' || c == 'c')
            return parse_dimacs(in);
        break;
    }
    return parse_edge_list(in);
}

json edges_json(const EdgeList& edges) {
    json arr = json::array();
    for (auto [u, v] : edges)
        arr.push_back(json::array({u, v}));
    return arr;
}

json stats_json(const BranchStats& st, bool trace) {
    json rules = json::object();
    for (const auto& [rule, count] : st.rule_counts)
        rules[rule_name(rule)] = count;
    json p0 = json::object();
    for (const auto& [value, count] : st.p0_histogram)
        p0[std::to_string(value)] = count;
    json out{{"nodes", st.nodes},
             {"leaves", st.leaves},
             {"enumeration_nodes", st.enumeration_nodes},
             {"enumerated_subsets", st.leaves},
             {"guarantee_violations", st.guarantee_violations},
             {"rule_counts", rules},
             {"p0_histogram", p0}};
    if (trace) {
        json recs = json::array();
        for (const auto& r : st.node_records)
            recs.push_back(json{{"rule", rule_name(r.rule)},
                                {"vertex", r.vertex},
                                {"drops", r.drops}});
        out["node_records"] = recs;
    }
    return out;
}

json report_json(const std::string& instance, const std::string& algorithm, int k,
                 const Report& rep, double wall_ms, bool trace) {
    json out{{"schema", 1},
             {"instance", instance},
             {"algorithm", algorithm},
             {"k", k},
             {"decision", rep.decision ? "yes" : "no"}};
    if (rep.decision) {
        out["size"] = *rep.best_size;
        out["witness"] = edges_json(rep.witness->edges);
        out["y_used"] = rep.y_used;
        out["z_used"] = rep.z_used;
    }
    out["stats"] = stats_json(rep.stats, trace);
    out["wall_time_ms"] = wall_ms;
    return out;
}

unsigned bench_seed() {
    if (const char* env = std::getenv("EDSOLVE_SEED"))
        return static_cast<unsigned>(std::strtoul(env, nullptr, 10));
    return 12345;
}

int cmd_solve(const std::string& path, const std::string& format, const std::string& alg, int k,
              bool kernelize_first, bool trace) {
    Graph g = load_graph(path, format);
    SolveOptions opts;
    opts.record_nodes = trace;
    Timer timer;
    Report rep;
    json kernel_info = json::object();
    std::string algorithm = alg;
    if (alg == "auto" || kernelize_first) {
        PipelineResult piped = solve_with_kernelization(g, k, opts, alg != "eds");
        rep = std::move(piped.report);
        kernel_info["status"] = piped.kernel.status == KernelStatus::Kernelized
                                    ? "kernelized"
                                    : piped.kernel.status == KernelStatus::SolvedByMatching
                                          ? "solved_by_matching"
                                          : "rejected";
        algorithm = alg == "auto" ? "auto" : alg + "+kernel";
    } else if (alg == "eds") {
        rep = solve_eds(g, k, opts);
    } else {
        rep = solve_eds1(g, k, opts);
    }
    json out = report_json(path.empty() ? "-" : path, algorithm, k, rep, timer.ms(), trace);
    if (!kernel_info.empty())
        out["kernel"] = kernel_info;
    std::cout << out.dump(2) << '\n';
    return rep.decision ? kExitYes : kExitNo;
}

int cmd_kernelize(const std::string& path, const std::string& format, int k) {
    Graph g = load_graph(path, format);
    Timer timer;
    KernelResult kr = kernelize(g, k);
    json out{{"schema", 1}, {"instance", path.empty() ? "-" : path}, {"k", k}};
    switch (kr.status) {
    case KernelStatus::SolvedByMatching:
        out["status"] = "solved_by_matching";
        out["witness"] = edges_json(kr.m0.edges);
        out["size"] = kr.m0.size();
        break;
    case KernelStatus::TooManyMatchingEdges:
        out["status"] = "rejected";
        out["matching_size"] = kr.m0.size();
        break;
    case KernelStatus::Kernelized: {
        out["status"] = "kernelized";
        out["kernel_dimacs"] = write_dimacs(kr.kernel);
        json roles = json::array();
        for (std::size_t v = 0; v < kr.roles.size(); ++v) {
            const char* role = kr.roles[v] == VertexRole::Original  ? "original"
                               : kr.roles[v] == VertexRole::Pendant ? "pendant"
                                                                    : "deleted";
            roles.push_back(json{{"id", v}, {"role", role}});
        }
        out["vertex_roles"] = roles;
        json pendants = json::object();
        for (auto [w, wp] : kr.pendant_of)
            pendants[std::to_string(w)] = wp;
        out["pendant_of"] = pendants;
        out["labeled"] = kr.labeled;
        out["overloaded"] = kr.overloaded;
        out["deleted"] = kr.deleted;
        KernelBoundsLedger led = kernel_stats(kr);
        out["ledger"] = json{{"m", led.m},
                             {"active_vertices", led.active_vertices},
                             {"B", led.b_set.size()},
                             {"q", led.q},
                             {"vstar1", led.vstar1.size()},
                             {"vstar2", led.vstar2.size()},
                             {"E1", led.e1},
                             {"E2", led.e2},
                             {"E3", led.e3},
                             {"vertex_bound_applies", led.vertex_bound_applies},
                             {"vertex_bound_ok", led.vertex_bound_ok},
                             {"invariants_ok", led.invariants_ok}};
        break;
    }
    }
    out["wall_time_ms"] = timer.ms();
    std::cout << out.dump(2) << '\n';
    return kr.status == KernelStatus::TooManyMatchingEdges ? kExitNo : kExitYes;
}

int cmd_mmm(const std::string& path, const std::string& format, int k) {
    Graph g = load_graph(path, format);
    Timer timer;
    auto result = solve_maximal_matching(g, k);
    json out{{"schema", 1},
             {"instance", path.empty() ? "-" : path},
             {"k", k},
             {"decision", result ? "yes" : "no"}};
    if (result) {
        out["size"] = result->size();
        out["matching"] = edges_json(result->edges);
    }
    out["wall_time_ms"] = timer.ms();
    std::cout << out.dump(2) << '\n';
    return result ? kExitYes : kExitNo;
}

int cmd_matrix(const std::string& path, int k) {
    std::string text = read_input(path);
    std::istringstream in(text);
    BinaryMatrix m = parse_matrix(in);
    Timer timer;
    auto result = solve_matrix_domination(m, k);
    json out{{"schema", 1},
             {"instance", path.empty() ? "-" : path},
             {"k", k},
             {"decision", result ? "yes" : "no"}};
    if (result) {
        out["size"] = result->selected.size();
        json sel = json::array();
        for (auto [r, c] : result->selected)
            sel.push_back(json::array({r, c}));
        out["selected"] = sel;
    }
    out["wall_time_ms"] = timer.ms();
    std::cout << out.dump(2) << '\n';
    return result ? kExitYes : kExitNo;
}

int cmd_oracle(const std::string& mode, const std::string& path, const std::string& format) {
    json out{{"schema", 1}, {"instance", path.empty() ? "-" : path}, {"oracle", mode}};
    if (mode == "matrix") {
        std::string text = read_input(path);
        std::istringstream in(text);
        auto [size, sel] = oracle::brute_matrix_domination(parse_matrix(in));
        out["size"] = size;
        json arr = json::array();
        for (auto [r, c] : sel)
            arr.push_back(json::array({r, c}));
        out["selected"] = arr;
    } else {
        Graph g = load_graph(path, format);
        if (mode == "eds") {
            auto [size, sol] = oracle::brute_min_eds(g);
            out["size"] = size;
            out["witness"] = edges_json(sol.edges);
        } else { // mmm
            auto [size, sol] = oracle::brute_min_maximal_matching(g);
            out["size"] = size;
            out["witness"] = edges_json(sol.edges);
        }
    }
    std::cout << out.dump(2) << '\n';
    return kExitYes;
}

int cmd_bench(const std::string& family, int kmax, int count, double density) {
    std::mt19937 rng(bench_seed());
    json runs = json::array();
    std::vector<std::pair<int, double>> fit_points; // (k, log leaves)
    for (int i = 0; i < count; ++i) {
        for (int k = 1; k <= kmax; ++k) {
            Graph g;
            std::string name;
            if (family == "paths") {
                g = path_graph(3 * (k + 1));
                name = "path_" + std::to_string(3 * (k + 1));
            } else if (family == "cycles") {
                g = cycle_graph(3 * (k + 1) + 1);
                name = "cycle_" + std::to_string(3 * (k + 1) + 1);
            } else if (family == "cubic") {
                int n = std::max(4, 2 * (k + 2));
                g = random_cubic(n, rng);
                name = "cubic_" + std::to_string(n);
            } else { // gnp
                int n = 8 + static_cast<int>(rng() % 9);
                g = random_gnp(n, density, rng);
                name = "gnp_" + std::to_string(n);
            }
            // forced-no run: largest k' <= k with no solution
            Report probe = solve_eds1(g, k);
            int run_k = k;
            if (probe.decision) {
                int opt = *probe.best_size;
                if (opt == 0)
                    continue;
                run_k = opt - 1;
            }
            Timer timer;
            Report r_eds = solve_eds(g, run_k);
            Report r_eds1 = solve_eds1(g, run_k);
            runs.push_back(json{{"instance", name},
                                {"k", run_k},
                                {"decision", r_eds1.decision ? "yes" : "no"},
                                {"leaves_eds", r_eds.stats.leaves},
                                {"leaves_eds1", r_eds1.stats.leaves},
                                {"nodes_eds", r_eds.stats.nodes},
                                {"nodes_eds1", r_eds1.stats.nodes},
                                {"wall_time_ms", timer.ms()}});
            if (r_eds1.stats.leaves > 0)
                fit_points.emplace_back(run_k, std::log(double(r_eds1.stats.leaves)));
        }
    }
    json out{{"schema", 1}, {"family", family}, {"kmax", kmax}, {"runs", runs}};
    if (fit_points.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (auto [x, y] : fit_points) {
            sx += x;
            sy += y;
            sxx += double(x) * x;
            sxy += x * y;
        }
        double n = static_cast<double>(fit_points.size());
        double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        out["log_leaves_slope_eds1"] = slope;
        out["slope_bound"] = std::log(2.3147);
    }
    std::cout << out.dump(2) << '\n';
    return kExitYes;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"parameterized edge dominating set toolkit"};
    app.require_subcommand(1);

    std::string path, format = "auto", alg = "eds1";
    int k = 0;
    bool kernelize_first = false, trace = false;

    auto add_io = [&](CLI::App* cmd, bool with_format = true) {
        cmd->add_option("input", path, "input file (default: stdin)");
        if (with_format)
            cmd->add_option("--format", format, "dimacs | edgelist | auto")
                ->check(CLI::IsMember({"dimacs", "edgelist", "auto"}));
    };

    auto* solve = app.add_subcommand("solve", "decide whether an eds of size <= k exists");
    solve->add_option("--alg", alg, "eds | eds1 | auto")
        ->check(CLI::IsMember({"eds", "eds1", "auto"}));
    solve->add_option("--k", k, "parameter")->required();
    solve->add_flag("--kernelize-first", kernelize_first, "run the kernelization first");
    solve->add_flag("--trace", trace, "dump per-node branching records");
    add_io(solve);

    auto* kern = app.add_subcommand("kernelize", "emit the kernel and its ledger");
    kern->add_option("--k", k, "parameter")->required();
    add_io(kern);

    auto* mmm = app.add_subcommand("mmm", "maximal matching of size <= k");
    mmm->add_option("--k", k, "parameter")->required();
    add_io(mmm);

    auto* matrix = app.add_subcommand("matrix", "matrix domination with <= k selected 1-entries");
    matrix->add_option("--k", k, "parameter")->required();
    add_io(matrix, false);

    std::string oracle_mode;
    auto* orc = app.add_subcommand("oracle", "brute-force reference answers");
    orc->add_option("mode", oracle_mode, "eds | mmm | matrix")
        ->required()
        ->check(CLI::IsMember({"eds", "mmm", "matrix"}));
    add_io(orc);

    std::string family = "paths";
    int kmax = 4, count = 1;
    double density = 0.3;
    auto* bench = app.add_subcommand("bench", "search-tree growth instrumentation");
    bench->add_option("--family", family, "paths | cycles | cubic | gnp")
        ->check(CLI::IsMember({"paths", "cycles", "cubic", "gnp"}));
    bench->add_option("--kmax", kmax, "largest parameter to probe");
    bench->add_option("--count", count, "instances per parameter value");
    bench->add_option("--density", density, "edge probability for gnp");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (solve->parsed())
            return cmd_solve(path, format, alg, k, kernelize_first, trace);
        if (kern->parsed())
            return cmd_kernelize(path, format, k);
        if (mmm->parsed())
            return cmd_mmm(path, format, k);
        if (matrix->parsed())
            return cmd_matrix(path, k);
        if (orc->parsed())
            return cmd_oracle(oracle_mode, path, format);
        if (bench->parsed())
            return cmd_bench(family, kmax, count, density);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
