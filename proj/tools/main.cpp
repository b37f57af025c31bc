// Command line front end: generate instances, run the solvers, re-score and
// render designs, and sweep benchmark matrices. Every file it writes it can
// read back.
#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "netdesign/audit.hpp"
#include "netdesign/generate.hpp"
#include "netdesign/io.hpp"
#include "netdesign/runner.hpp"
#include "netdesign/version.hpp"

namespace {

using netdesign::Algorithm;
using netdesign::SolverConfig;

std::string round_trip(double x) { return nlohmann::ordered_json(x).dump(); }

// Replaces a trailing ".json" (or appends) to derive sibling artifact names.
std::string sibling_path(const std::string& report_path, const std::string& suffix) {
    const std::string ext = ".json";
    if (report_path.size() > ext.size() &&
        report_path.compare(report_path.size() - ext.size(), ext.size(), ext) == 0)
        return report_path.substr(0, report_path.size() - ext.size()) + suffix;
    return report_path + suffix;
}

std::vector<Algorithm> parse_algorithms(const std::vector<std::string>& names) {
    std::vector<Algorithm> out;
    for (const std::string& name : names) {
        const auto a = netdesign::algorithm_from_name(name);
        if (!a) throw CLI::ValidationError("--algorithm", "unknown algorithm: " + name);
        out.push_back(*a);
    }
    return out;
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty())
        std::cout << content;
    else
        netdesign::write_file(out_path, content);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tree network designer"};
    app.set_version_flag("--version", std::string(netdesign::kVersion));
    app.require_subcommand(1);

    // gen ------------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate a random instance");
    netdesign::GeneratorOptions gopt;
    std::string gen_out;
    gen->add_option("--n", gopt.n, "number of nodes")->capture_default_str();
    gen->add_option("--area-m", gopt.area_m, "square side length in meters")
        ->capture_default_str();
    gen->add_option("--seed", gopt.seed, "placement seed")->capture_default_str();
    gen->add_option("--max-attempts", gopt.max_attempts_per_node,
                    "placement attempts per node")
        ->capture_default_str();
    gen->add_option("--out", gen_out, "instance file (stdout when omitted)");

    // shared solver flags ----------------------------------------------------
    struct SolveFlags {
        std::string algorithm = "tabu2";
        double time_limit_s = 0.0;
        std::uint64_t iterations = 0;
        int lambda = 0;
        int kappa = 0;
        std::uint64_t seed = 0;
        bool no_aspiration = false;
        std::string mode;
        bool audit = false;
        CLI::Option* o_algorithm = nullptr;
        CLI::Option* o_time = nullptr;
        CLI::Option* o_iterations = nullptr;
        CLI::Option* o_lambda = nullptr;
        CLI::Option* o_kappa = nullptr;
        CLI::Option* o_seed = nullptr;
        CLI::Option* o_mode = nullptr;

        void attach(CLI::App* cmd) {
            o_algorithm = cmd->add_option("--algorithm", algorithm,
                                          "tabu1, tabu2 or tbs (default tabu2)");
            o_time = cmd->add_option("--time-limit-s", time_limit_s,
                                     "wall clock budget in seconds");
            o_iterations = cmd->add_option("--iterations", iterations,
                                           "iteration budget (deterministic runs)");
            o_lambda = cmd->add_option("--lambda", lambda,
                                       "tabu2 restart period (default: n)");
            o_kappa = cmd->add_option("--kappa", kappa, "tbs pool width (default 8)");
            o_seed = cmd->add_option("--seed", seed, "solver seed recorded in reports");
            cmd->add_flag("--no-aspiration", no_aspiration,
                          "never override tabu status on improving moves");
            o_mode = cmd->add_option("--frequency-mode", mode,
                                     "grouped (default) or per_edge decisions");
            cmd->add_flag("--audit", audit, "validate every incumbent design");
        }

        // File-level solver defaults were applied while parsing the
        // instance; explicit flags win on top of them.
        void apply(SolverConfig& cfg) const {
            if (o_algorithm->count()) {
                const auto a = netdesign::algorithm_from_name(algorithm);
                if (!a)
                    throw CLI::ValidationError("--algorithm",
                                               "unknown algorithm: " + algorithm);
                cfg.algorithm = *a;
            }
            if (o_time->count()) cfg.time_limit_s = time_limit_s;
            if (o_iterations->count()) cfg.iteration_budget = iterations;
            if (o_lambda->count()) {
                cfg.lambda = lambda;
                cfg.lambda_is_default = false;
            }
            if (o_kappa->count()) {
                cfg.kappa = kappa;
                cfg.kappa_is_default = false;
            }
            if (o_seed->count()) cfg.seed = seed;
            if (no_aspiration) cfg.aspiration = false;
            if (o_mode->count()) {
                if (mode == "grouped")
                    cfg.mode = netdesign::FrequencyMode::grouped;
                else if (mode == "per_edge")
                    cfg.mode = netdesign::FrequencyMode::per_edge;
                else
                    throw CLI::ValidationError("--frequency-mode",
                                               "use grouped or per_edge");
            }
            if (audit) cfg.audit = true;
        }
    };

    // solve ------------------------------------------------------------------
    auto* solve_cmd = app.add_subcommand("solve", "design a network for an instance");
    std::string solve_instance, solve_out, solve_design_out, solve_trace_out;
    SolveFlags sflags;
    solve_cmd->add_option("instance", solve_instance, "instance file")->required();
    sflags.attach(solve_cmd);
    solve_cmd->add_option("--out", solve_out,
                          "report file; design/trace siblings derive from it");
    solve_cmd->add_option("--design-out", solve_design_out, "design file override");
    solve_cmd->add_option("--trace-out", solve_trace_out, "trace CSV override");

    // eval -------------------------------------------------------------------
    auto* eval_cmd = app.add_subcommand("eval", "re-score a design file");
    std::string eval_instance, eval_design, eval_out;
    eval_cmd->add_option("instance", eval_instance, "instance file")->required();
    eval_cmd->add_option("design", eval_design, "design file")->required();
    eval_cmd->add_option("--out", eval_out, "annotated design file (stdout when omitted)");

    // dot --------------------------------------------------------------------
    auto* dot_cmd = app.add_subcommand("dot", "render a design as Graphviz");
    std::string dot_instance, dot_design, dot_out;
    dot_cmd->add_option("instance", dot_instance, "instance file")->required();
    dot_cmd->add_option("design", dot_design, "design file")->required();
    dot_cmd->add_option("--out", dot_out, "DOT file (stdout when omitted)");

    // bench ------------------------------------------------------------------
    auto* bench_cmd = app.add_subcommand("bench", "instances x algorithms x seeds sweep");
    std::vector<std::string> bench_instances, bench_algorithms;
    std::string bench_out, bench_json_out;
    int repeats = 3;
    SolveFlags bflags;
    bench_cmd->add_option("instances", bench_instances, "instance files")->required();
    bench_cmd->add_option("--algorithms", bench_algorithms,
                          "algorithms to sweep (default: all three)")
        ->delimiter(',');
    bench_cmd->add_option("--repeats", repeats, "runs per cell, seeds seed..seed+r-1")
        ->capture_default_str();
    bflags.attach(bench_cmd);
    bench_cmd->add_option("--out", bench_out, "summary CSV (stdout when omitted)");
    bench_cmd->add_option("--json-out", bench_json_out, "summary JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            const netdesign::Instance inst = netdesign::generate_instance(gopt);
            emit(netdesign::instance_to_json(inst), gen_out);
            if (!gen_out.empty())
                std::cout << "wrote " << gen_out << " (" << inst.size() << " nodes)\n";
            return 0;
        }

        if (solve_cmd->parsed()) {
            SolverConfig cfg;
            const netdesign::Instance inst =
                netdesign::instance_from_json(netdesign::read_file(solve_instance), &cfg);
            sflags.apply(cfg);
            const netdesign::SolveArtifacts art =
                netdesign::run_and_render(inst, solve_instance, cfg);
            if (solve_out.empty()) {
                std::cout << art.report_json;
            } else {
                netdesign::write_file(solve_out, art.report_json);
                const std::string design_path = solve_design_out.empty()
                                                    ? sibling_path(solve_out, ".design.json")
                                                    : solve_design_out;
                const std::string trace_path = solve_trace_out.empty()
                                                   ? sibling_path(solve_out, ".trace.csv")
                                                   : solve_trace_out;
                netdesign::write_file(design_path, art.design_json);
                netdesign::write_file(trace_path, art.trace_csv);
                std::cout << "best objective " << round_trip(art.report.result.best_value)
                          << " after " << art.report.result.iterations << " iterations\n"
                          << "wrote " << solve_out << ", " << design_path << ", "
                          << trace_path << "\n";
            }
            return 0;
        }

        if (eval_cmd->parsed()) {
            const netdesign::Instance inst =
                netdesign::instance_from_json(netdesign::read_file(eval_instance));
            const netdesign::ParsedDesign parsed =
                netdesign::design_from_json(netdesign::read_file(eval_design), inst);
            const auto violations = netdesign::audit_design(inst, parsed.design);
            if (!violations.empty()) {
                for (const std::string& v : violations) std::cerr << "invalid: " << v << "\n";
                return 2;
            }
            const netdesign::EvaluationResult ev =
                netdesign::evaluate_design(inst, parsed.design);
            const double objective = ev.breakdown.total;
            emit(netdesign::design_to_json(inst, parsed.design, &ev, &objective), eval_out);
            std::cerr << "objective " << round_trip(objective) << "\n";
            return 0;
        }

        if (dot_cmd->parsed()) {
            const netdesign::Instance inst =
                netdesign::instance_from_json(netdesign::read_file(dot_instance));
            const netdesign::ParsedDesign parsed =
                netdesign::design_from_json(netdesign::read_file(dot_design), inst);
            const netdesign::EvaluationResult* metrics =
                parsed.metrics ? &*parsed.metrics : nullptr;
            netdesign::EvaluationResult computed;
            if (!metrics) {
                computed = netdesign::evaluate_design(inst, parsed.design);
                metrics = &computed;
            }
            emit(netdesign::export_dot(inst, parsed.design, metrics), dot_out);
            return 0;
        }

        if (bench_cmd->parsed()) {
            SolverConfig base;
            bflags.apply(base);
            std::vector<Algorithm> algos;
            if (bench_algorithms.empty())
                algos = {Algorithm::tabu1, Algorithm::tabu2, Algorithm::tbs};
            else
                algos = parse_algorithms(bench_algorithms);
            const auto rows =
                netdesign::run_benchmark(bench_instances, algos, base, repeats);
            emit(netdesign::bench_to_csv(rows), bench_out);
            if (!bench_json_out.empty())
                netdesign::write_file(bench_json_out, netdesign::bench_to_json(rows));
            return 0;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
