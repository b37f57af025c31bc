#include <cmath>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "netdesign/audit.hpp"
#include "netdesign/generate.hpp"
#include "netdesign/io.hpp"
#include "netdesign/runner.hpp"

using namespace netdesign;

namespace {

Instance sample_instance(int n = 8, std::uint64_t seed = 21) {
    GeneratorOptions opt;
    opt.n = n;
    opt.area_m = 25000.0;
    opt.seed = seed;
    return generate_instance(opt);
}

std::filesystem::path scratch_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "netdesign_io_tests";
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("instances round trip byte for byte") {
    const Instance inst = sample_instance();
    const std::string text = instance_to_json(inst);
    const Instance back = instance_from_json(text);
    REQUIRE(back.size() == inst.size());
    for (int v = 0; v < inst.size(); ++v) {
        CHECK(back.nodes[v].id == inst.nodes[v].id);
        CHECK(back.nodes[v].x == inst.nodes[v].x);
        CHECK(back.nodes[v].y == inst.nodes[v].y);
    }
    CHECK(back.seed == inst.seed);
    CHECK(back.weight_a == inst.weight_a);
    CHECK(back.mean_weight == inst.mean_weight);
    CHECK(back.physics.beams_per_antenna == inst.physics.beams_per_antenna);
    CHECK(back.physics.fade_margin_db == inst.physics.fade_margin_db);
    for (int c = 0; c < 2; ++c) {
        CHECK(back.physics.bands[c].label == inst.physics.bands[c].label);
        CHECK(back.physics.bands[c].freq_lo_mhz == inst.physics.bands[c].freq_lo_mhz);
        CHECK(back.physics.bands[c].freq_hi_mhz == inst.physics.bands[c].freq_hi_mhz);
    }
    CHECK(instance_to_json(back) == text);
    CHECK_THROWS(instance_from_json("{\"weights\": {}}"));
    CHECK_THROWS(instance_from_json("not json"));
}

TEST_CASE("the embedded solver block becomes the config baseline") {
    const std::string text = R"({
      "nodes": [{"id":0,"x":0,"y":0},{"id":1,"x":900,"y":0}],
      "solver": {"algorithm":"tbs","iteration_budget":12,"lambda":5,
                 "kappa":3,"aspiration":false,"seed":77,
                 "frequency_mode":"per_edge"}
    })";
    SolverConfig cfg;
    const Instance inst = instance_from_json(text, &cfg);
    CHECK(inst.size() == 2);
    CHECK(cfg.algorithm == Algorithm::tbs);
    REQUIRE(cfg.iteration_budget.has_value());
    CHECK(*cfg.iteration_budget == 12);
    CHECK(!cfg.time_limit_s.has_value());
    CHECK(cfg.lambda == 5);
    CHECK(!cfg.lambda_is_default);
    CHECK(cfg.kappa == 3);
    CHECK(!cfg.kappa_is_default);
    CHECK(!cfg.aspiration);
    CHECK(cfg.seed == 77);
    CHECK(cfg.mode == FrequencyMode::per_edge);
    // absent block leaves the defaults alone
    SolverConfig untouched;
    instance_from_json(instance_to_json(sample_instance()), &untouched);
    CHECK(untouched.algorithm == Algorithm::tabu2);
    CHECK(untouched.lambda_is_default);
}

TEST_CASE("designs round trip through JSON") {
    const Instance inst = sample_instance(7, 5);
    SolverConfig cfg;
    cfg.iteration_budget = 8;
    const SolveResult res = solve(inst, cfg);
    const EvaluationResult metrics = evaluate_design(inst, res.best);
    const std::string text =
        design_to_json(inst, res.best, &metrics, &res.best_value);

    const ParsedDesign parsed = design_from_json(text, inst);
    CHECK(audit_design(inst, parsed.design, &res.best_value).empty());
    const EvaluationResult again = evaluate_design(inst, parsed.design);
    CHECK(again.breakdown.total == metrics.breakdown.total);
    REQUIRE(parsed.metrics.has_value());
    CHECK(parsed.metrics->breakdown.total == metrics.breakdown.total);
    REQUIRE(parsed.metrics->links.size() == metrics.links.size());
    for (std::size_t i = 0; i < metrics.links.size(); ++i) {
        CHECK(parsed.metrics->links[i].freq_mhz == metrics.links[i].freq_mhz);
        CHECK(parsed.metrics->links[i].sinr_db == metrics.links[i].sinr_db);
    }
    // serializing the parsed copy reproduces the bytes
    CHECK(design_to_json(inst, parsed.design, &*parsed.metrics, &res.best_value) ==
          text);
    // malformed inputs are rejected
    CHECK_THROWS(design_from_json("{}", inst));
    std::string wrong = text;
    const auto pos = wrong.find("\"hub\"");
    REQUIRE(pos != std::string::npos);
    CHECK_THROWS(design_from_json(wrong.replace(pos, 5, "\"hub_\""), inst));
}

TEST_CASE("reports are reproducible and suppress wall fields") {
    const Instance inst = sample_instance(6, 3);
    SolverConfig cfg;
    cfg.algorithm = Algorithm::tabu1;
    cfg.iteration_budget = 10;
    cfg.seed = 4;
    const SolveArtifacts a = run_and_render(inst, "mem://instance", cfg);
    const SolveArtifacts b = run_and_render(inst, "mem://instance", cfg);
    CHECK(a.report_json == b.report_json);
    CHECK(a.trace_csv == b.trace_csv);
    CHECK(a.design_json == b.design_json);
    CHECK(a.report.iteration_mode);
    CHECK(a.report_json.find("wall_seconds") == std::string::npos);
    CHECK(a.report_json.find("elapsed_s") == std::string::npos);
    CHECK(a.trace_csv.rfind("iteration,best_objective\n", 0) == 0);
    // provenance fields are embedded
    CHECK(a.report_json.find("\"version\"") != std::string::npos);
    CHECK(a.report_json.find("\"prng\"") != std::string::npos);
    CHECK(a.report_json.find("\"lambda\"") != std::string::npos);
    CHECK(a.report_json.find("\"kappa\"") != std::string::npos);
    CHECK(a.report_json.find("\"seed\"") != std::string::npos);

    // a wall-clock run reports its timing instead
    SolverConfig timed;
    timed.time_limit_s = 0.05;
    const SolveArtifacts c = run_and_render(inst, "mem://instance", timed);
    CHECK(!c.report.iteration_mode);
    CHECK(c.report_json.find("wall_seconds") != std::string::npos);
    CHECK(c.trace_csv.rfind("elapsed_s,best_objective\n", 0) == 0);
}

TEST_CASE("trace rendering") {
    std::vector<TracePoint> trace{{0, 0.0, 1.5}, {3, 0.25, 2.0}, {7, 1.5, 2.25}};
    CHECK(trace_to_csv(trace, true) ==
          "iteration,best_objective\n0,1.5\n3,2.0\n7,2.25\n");
    CHECK(trace_to_csv(trace, false) ==
          "elapsed_s,best_objective\n0.0,1.5\n0.25,2.0\n1.5,2.25\n");
}

TEST_CASE("graphviz rendering marks the hub and multipoint links") {
    // hub 0 at the center of three leaves: one block holds two children,
    // so their edges run point-to-multipoint
    const Instance inst = testutil::ring_instance(4, 8000.0);
    Topology t = topology_from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    const auto [design, obj] = testutil::assemble_design(inst, t, 0);
    (void)obj;
    const EvaluationResult metrics = evaluate_design(inst, design);
    const std::string dot = export_dot(inst, design, &metrics);
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(dot.find("shape=box") != std::string::npos);
    CHECK(dot.find("style=dashed") != std::string::npos);
    CHECK(dot.find("Mbps") != std::string::npos);
    std::size_t arrows = 0;
    for (std::size_t pos = dot.find("->"); pos != std::string::npos;
         pos = dot.find("->", pos + 1))
        ++arrows;
    CHECK(arrows == t.edges.size());
    // all edges leave the hub here
    CHECK(dot.find("  0 -> 1") != std::string::npos);
    CHECK(dot.find("  0 -> 2") != std::string::npos);
    CHECK(dot.find("  0 -> 3") != std::string::npos);
}

TEST_CASE("benchmark sweeps the full matrix and counts failures") {
    const auto dir = scratch_dir();
    const auto path_a = (dir / "bench_a.json").string();
    const auto path_b = (dir / "bench_b.json").string();
    write_file(path_a, instance_to_json(sample_instance(5, 31)));
    write_file(path_b, instance_to_json(sample_instance(6, 32)));

    SolverConfig base;
    base.iteration_budget = 3;
    base.seed = 100;
    const std::vector<Algorithm> algos{Algorithm::tabu1, Algorithm::tabu2};
    const auto rows = run_benchmark({path_a, path_b}, algos, base, 2);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].instance_path == path_a);
    CHECK(rows[0].algorithm == "tabu1");
    CHECK(rows[1].algorithm == "tabu2");
    CHECK(rows[2].instance_path == path_b);
    for (const BenchRow& r : rows) {
        CHECK(r.runs == 2);
        CHECK(r.failures == 0);
        CHECK(r.best >= r.avg);
        CHECK(r.avg >= r.worst);
        CHECK(r.iter_min <= r.iter_max);
    }
    const std::string csv = bench_to_csv(rows);
    CHECK(csv.rfind("instance,algorithm,runs,failures,best,avg,worst,"
                    "iter_min,iter_avg,iter_max\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
    CHECK(bench_to_json(rows).find("\"iter_avg\"") != std::string::npos);

    // an unbridgeable instance fails every run but keeps the row
    Instance split = testutil::instance_at(
        {{0, 0}, {1000, 0}, {300000000.0, 0}, {300001000.0, 0}});
    const auto path_c = (dir / "bench_c.json").string();
    write_file(path_c, instance_to_json(split));
    const auto bad = run_benchmark({path_c}, {Algorithm::tabu1}, base, 2);
    REQUIRE(bad.size() == 1);
    CHECK(bad[0].runs == 0);
    CHECK(bad[0].failures == 2);
}

TEST_CASE("file io errors are loud") {
    CHECK_THROWS_AS(read_file("/nonexistent/definitely/missing.json"),
                    std::runtime_error);
    const auto dir = scratch_dir();
    const auto p = (dir / "roundtrip.txt").string();
    write_file(p, "payload\n");
    CHECK(read_file(p) == "payload\n");
}
