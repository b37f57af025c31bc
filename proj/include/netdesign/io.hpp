#pragma once

#include <optional>
#include <string>

#include "netdesign/objective.hpp"
#include "netdesign/search.hpp"

namespace netdesign {

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

std::string instance_to_json(const Instance& inst);

// Parses and validates. A "solver" block, when present, lands in
// *solver_defaults (CLI flags override it afterwards).
Instance instance_from_json(const std::string& text,
                            SolverConfig* solver_defaults = nullptr);

struct ParsedDesign {
    Design design;
    std::optional<EvaluationResult> metrics;
};

// metrics, when given, are embedded so a design file is self-describing
// enough for rendering.
std::string design_to_json(const Instance& inst, const Design& design,
                           const EvaluationResult* metrics = nullptr,
                           const double* objective = nullptr);

ParsedDesign design_from_json(const std::string& text, const Instance& inst);

// Graphviz rendering: edges directed away from the hub, labeled with
// channel, frequency and throughput; point-to-multipoint edges (two or more
// same-channel siblings) drawn dashed, the hub boxed.
std::string export_dot(const Instance& inst, const Design& design,
                       const EvaluationResult* metrics);

struct RunReport {
    std::string instance_path;
    SolverConfig config;
    bool iteration_mode = false;  // true: wall fields suppressed, trace
                                  // elapsed column counts iterations
    SolveResult result;
};

std::string report_to_json(const Instance& inst, const RunReport& report);

std::string trace_to_csv(const std::vector<TracePoint>& trace,
                         bool iteration_mode);

}  // namespace netdesign
