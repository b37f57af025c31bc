#pragma once

#include "netdesign/io.hpp"

namespace netdesign {

struct SolveArtifacts {
    RunReport report;
    std::string report_json;
    std::string trace_csv;
    std::string design_json;
};

SolveArtifacts run_and_render(const Instance& inst,
                              const std::string& instance_path,
                              const SolverConfig& cfg);

struct BenchRow {
    std::string instance_path;
    std::string algorithm;
    int runs = 0;
    int failures = 0;
    double best = 0.0;
    double avg = 0.0;
    double worst = 0.0;
    std::uint64_t iter_min = 0;
    double iter_avg = 0.0;
    std::uint64_t iter_max = 0;
};

// Full matrix instances x algorithms x repeats with seeds base..base+r-1.
// A failed run is counted and the row keeps the survivors' statistics.
std::vector<BenchRow> run_benchmark(const std::vector<std::string>& instance_paths,
                                    const std::vector<Algorithm>& algorithms,
                                    const SolverConfig& base, int repeats);

std::string bench_to_csv(const std::vector<BenchRow>& rows);
std::string bench_to_json(const std::vector<BenchRow>& rows);

}  // namespace netdesign
