#include "netdesign/runner.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace netdesign {

namespace {

std::string fmt(double x) { return nlohmann::ordered_json(x).dump(); }

}  // namespace

SolveArtifacts run_and_render(const Instance& inst, const std::string& instance_path,
                              const SolverConfig& cfg) {
    SolveArtifacts art;
    art.report.instance_path = instance_path;
    art.report.config = cfg;
    // Without a wall clock limit every decision is iteration-counted, so the
    // whole artifact set is reproducible byte for byte.
    art.report.iteration_mode = !cfg.time_limit_s.has_value();
    art.report.result = solve(inst, cfg);

    art.report_json = report_to_json(inst, art.report);
    art.trace_csv = trace_to_csv(art.report.result.trace, art.report.iteration_mode);
    const EvaluationResult metrics = evaluate_design(inst, art.report.result.best);
    art.design_json = design_to_json(inst, art.report.result.best, &metrics,
                                     &art.report.result.best_value);
    return art;
}

std::vector<BenchRow> run_benchmark(const std::vector<std::string>& instance_paths,
                                    const std::vector<Algorithm>& algorithms,
                                    const SolverConfig& base, int repeats) {
    if (repeats < 1) throw std::invalid_argument("repeats must be at least 1");
    std::vector<BenchRow> rows;
    for (const std::string& path : instance_paths) {
        const Instance inst = instance_from_json(read_file(path));
        for (Algorithm algo : algorithms) {
            BenchRow row;
            row.instance_path = path;
            row.algorithm = algorithm_name(algo);
            double sum = 0.0;
            double iter_sum = 0.0;
            for (int k = 0; k < repeats; ++k) {
                SolverConfig cfg = base;
                cfg.algorithm = algo;
                cfg.seed = base.seed + static_cast<std::uint64_t>(k);
                try {
                    const SolveResult res = solve(inst, cfg);
                    if (row.runs == 0) {
                        row.best = row.worst = res.best_value;
                        row.iter_min = row.iter_max = res.iterations;
                    } else {
                        row.best = std::max(row.best, res.best_value);
                        row.worst = std::min(row.worst, res.best_value);
                        row.iter_min = std::min(row.iter_min, res.iterations);
                        row.iter_max = std::max(row.iter_max, res.iterations);
                    }
                    sum += res.best_value;
                    iter_sum += static_cast<double>(res.iterations);
                    ++row.runs;
                } catch (const std::exception&) {
                    ++row.failures;
                }
            }
            if (row.runs > 0) {
                row.avg = sum / row.runs;
                row.iter_avg = iter_sum / row.runs;
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string bench_to_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream csv;
    csv << "instance,algorithm,runs,failures,best,avg,worst,"
           "iter_min,iter_avg,iter_max\n";
    for (const BenchRow& r : rows) {
        csv << r.instance_path << ',' << r.algorithm << ',' << r.runs << ','
            << r.failures << ',' << fmt(r.best) << ',' << fmt(r.avg) << ','
            << fmt(r.worst) << ',' << r.iter_min << ',' << fmt(r.iter_avg) << ','
            << r.iter_max << '\n';
    }
    return csv.str();
}

std::string bench_to_json(const std::vector<BenchRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const BenchRow& r : rows) {
        nlohmann::ordered_json j;
        j["instance"] = r.instance_path;
        j["algorithm"] = r.algorithm;
        j["runs"] = r.runs;
        j["failures"] = r.failures;
        j["best"] = r.best;
        j["avg"] = r.avg;
        j["worst"] = r.worst;
        j["iter_min"] = r.iter_min;
        j["iter_avg"] = r.iter_avg;
        j["iter_max"] = r.iter_max;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

}  // namespace netdesign
