#include "netdesign/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "netdesign/version.hpp"

namespace netdesign {

namespace {

using json = nlohmann::ordered_json;

// Shortest round-trip decimal form; identical doubles always print the same
// bytes, which is what keeps seeded reports reproducible.
std::string fmt(double x) { return json(x).dump(); }

json breakdown_to_json(const ObjectiveBreakdown& b) {
    json j;
    j["min_tp"] = b.min_tp;
    j["mean_tp"] = b.mean_tp;
    j["total"] = b.total;
    return j;
}

ObjectiveBreakdown breakdown_from_json(const json& j) {
    ObjectiveBreakdown b;
    for (int i = 0; i < 3; ++i) {
        b.min_tp[i] = j.at("min_tp").at(i).get<double>();
        b.mean_tp[i] = j.at("mean_tp").at(i).get<double>();
    }
    b.total = j.at("total").get<double>();
    return b;
}

int channel_index_from_label(const PhysicsParams& ph, const std::string& label) {
    for (std::size_t c = 0; c < ph.bands.size(); ++c)
        if (ph.bands[c].label == label) return static_cast<int>(c);
    throw std::invalid_argument("unknown channel label: " + label);
}

json design_to_json_obj(const Instance& inst, const Design& design,
                        const EvaluationResult* metrics, const double* objective) {
    const RootedTopology& rooted = design.rooted;
    const int n = rooted.topology.n;
    json j;
    j["version"] = kVersion;
    j["n"] = n;
    j["hub"] = rooted.hub;
    j["partition"] = {{"block_a", design.partition.block_a},
                      {"block_b", design.partition.block_b}};

    json edges = json::array();
    for (std::size_t i = 0; i < rooted.topology.edges.size(); ++i) {
        const Edge& e = rooted.topology.edges[i];
        const int c = design.channels.edge_channel(rooted, static_cast<int>(i));
        json je;
        je["u"] = e.first;
        je["v"] = e.second;
        je["channel"] = inst.physics.bands[c].label;
        je["freq_mhz"] = design.freq_mhz[i];
        edges.push_back(std::move(je));
    }
    j["edges"] = std::move(edges);

    json antennas = json::array();
    for (int node = 0; node < n; ++node) {
        for (int c = 0; c < 2; ++c) {
            const auto& slot = design.antennas[antenna_slot(node, c)];
            if (!slot) continue;
            json ja;
            ja["node"] = node;
            ja["channel"] = inst.physics.bands[c].label;
            ja["rotation_rad"] = slot->rotation_rad;
            ja["beams"] = slot->beams;
            antennas.push_back(std::move(ja));
        }
    }
    j["antennas"] = std::move(antennas);

    if (objective) j["objective"] = *objective;
    if (metrics) {
        json jm;
        jm["breakdown"] = breakdown_to_json(metrics->breakdown);
        json links = json::array();
        for (const LinkMetrics& lm : metrics->links) {
            const Edge& e = rooted.topology.edges[lm.edge];
            json jl;
            jl["edge"] = lm.edge;
            jl["u"] = e.first;
            jl["v"] = e.second;
            jl["freq_mhz"] = lm.freq_mhz;
            jl["gain_fwd_db"] = lm.gain_fwd_db;
            jl["gain_rev_db"] = lm.gain_rev_db;
            jl["path_loss_db"] = lm.path_loss_db;
            jl["signal_dbm"] = lm.signal_dbm;
            jl["interference_mw"] = lm.interference_mw;
            jl["sinr_db"] = lm.sinr_db;
            jl["throughput_mbps"] = lm.throughput_mbps;
            links.push_back(std::move(jl));
        }
        jm["links"] = std::move(links);
        j["metrics"] = std::move(jm);
    }
    return j;
}

json config_to_json(const SolverConfig& cfg, int n) {
    json j;
    j["algorithm"] = algorithm_name(cfg.algorithm);
    j["seed"] = cfg.seed;
    if (cfg.time_limit_s)
        j["time_limit_s"] = *cfg.time_limit_s;
    else
        j["time_limit_s"] = nullptr;
    if (cfg.iteration_budget)
        j["iteration_budget"] = *cfg.iteration_budget;
    else
        j["iteration_budget"] = nullptr;
    j["lambda"] = cfg.lambda > 0 ? cfg.lambda : n;
    j["lambda_is_default"] = cfg.lambda_is_default;
    j["kappa"] = cfg.kappa;
    j["kappa_is_default"] = cfg.kappa_is_default;
    j["aspiration"] = cfg.aspiration;
    j["frequency_mode"] = cfg.mode == FrequencyMode::grouped ? "grouped" : "per_edge";
    j["audit"] = cfg.audit;
    return j;
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw std::runtime_error("read failed: " + path);
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string instance_to_json(const Instance& inst) {
    json j;
    j["version"] = kVersion;
    j["seed"] = inst.seed;
    j["prng"] = kPrngId;
    j["weights"] = {{"a", inst.weight_a},
                    {"b", inst.weight_b},
                    {"c", inst.weight_c},
                    {"mean", inst.mean_weight}};
    json ph;
    ph["beams_per_antenna"] = inst.physics.beams_per_antenna;
    ph["fade_margin_db"] = inst.physics.fade_margin_db;
    ph["path_loss"] = "free_space";
    json bands = json::array();
    for (const ChannelBand& b : inst.physics.bands)
        bands.push_back({{"label", b.label},
                         {"freq_lo_mhz", b.freq_lo_mhz},
                         {"freq_hi_mhz", b.freq_hi_mhz}});
    ph["bands"] = std::move(bands);
    j["physics"] = std::move(ph);
    json nodes = json::array();
    for (const Node& nd : inst.nodes)
        nodes.push_back({{"id", nd.id}, {"x", nd.x}, {"y", nd.y}});
    j["nodes"] = std::move(nodes);
    return j.dump(2) + "\n";
}

Instance instance_from_json(const std::string& text, SolverConfig* solver_defaults) {
    const json j = json::parse(text);
    Instance inst;
    if (!j.contains("nodes") || !j.at("nodes").is_array())
        throw std::invalid_argument("instance needs a \"nodes\" array");
    for (const json& jn : j.at("nodes")) {
        Node nd;
        nd.id = jn.at("id").get<int>();
        nd.x = jn.at("x").get<double>();
        nd.y = jn.at("y").get<double>();
        inst.nodes.push_back(nd);
    }
    if (j.contains("seed")) inst.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("weights")) {
        const json& w = j.at("weights");
        if (w.contains("a")) inst.weight_a = w.at("a").get<double>();
        if (w.contains("b")) inst.weight_b = w.at("b").get<double>();
        if (w.contains("c")) inst.weight_c = w.at("c").get<double>();
        if (w.contains("mean")) inst.mean_weight = w.at("mean").get<double>();
    }
    if (j.contains("physics")) {
        const json& ph = j.at("physics");
        if (ph.contains("beams_per_antenna"))
            inst.physics.beams_per_antenna = ph.at("beams_per_antenna").get<int>();
        if (ph.contains("fade_margin_db"))
            inst.physics.fade_margin_db = ph.at("fade_margin_db").get<double>();
        if (ph.contains("path_loss") && ph.at("path_loss").get<std::string>() != "free_space")
            throw std::invalid_argument("unknown path loss model");
        if (ph.contains("bands")) {
            const json& bands = ph.at("bands");
            if (bands.size() != 2)
                throw std::invalid_argument("physics needs exactly two bands");
            for (int c = 0; c < 2; ++c) {
                ChannelBand& b = inst.physics.bands[c];
                b.label = bands.at(c).at("label").get<std::string>();
                b.freq_lo_mhz = bands.at(c).at("freq_lo_mhz").get<double>();
                b.freq_hi_mhz = bands.at(c).at("freq_hi_mhz").get<double>();
            }
        }
    }
    inst.validate();

    if (solver_defaults && j.contains("solver")) {
        const json& s = j.at("solver");
        SolverConfig& cfg = *solver_defaults;
        if (s.contains("algorithm")) {
            const auto a = algorithm_from_name(s.at("algorithm").get<std::string>());
            if (!a) throw std::invalid_argument("unknown algorithm in solver block");
            cfg.algorithm = *a;
        }
        if (s.contains("time_limit_s") && !s.at("time_limit_s").is_null())
            cfg.time_limit_s = s.at("time_limit_s").get<double>();
        if (s.contains("iteration_budget") && !s.at("iteration_budget").is_null())
            cfg.iteration_budget = s.at("iteration_budget").get<std::uint64_t>();
        if (s.contains("lambda")) {
            cfg.lambda = s.at("lambda").get<int>();
            cfg.lambda_is_default = false;
        }
        if (s.contains("kappa")) {
            cfg.kappa = s.at("kappa").get<int>();
            cfg.kappa_is_default = false;
        }
        if (s.contains("aspiration")) cfg.aspiration = s.at("aspiration").get<bool>();
        if (s.contains("seed")) cfg.seed = s.at("seed").get<std::uint64_t>();
        if (s.contains("frequency_mode")) {
            const std::string m = s.at("frequency_mode").get<std::string>();
            if (m == "grouped")
                cfg.mode = FrequencyMode::grouped;
            else if (m == "per_edge")
                cfg.mode = FrequencyMode::per_edge;
            else
                throw std::invalid_argument("unknown frequency mode: " + m);
        }
    }
    return inst;
}

std::string design_to_json(const Instance& inst, const Design& design,
                           const EvaluationResult* metrics, const double* objective) {
    return design_to_json_obj(inst, design, metrics, objective).dump(2) + "\n";
}

ParsedDesign design_from_json(const std::string& text, const Instance& inst) {
    const json j = json::parse(text);
    const int n = inst.size();
    if (j.contains("n") && j.at("n").get<int>() != n)
        throw std::invalid_argument("design node count does not match the instance");

    std::vector<Edge> edges;
    std::map<Edge, std::pair<int, double>> edge_info;  // channel, freq
    for (const json& je : j.at("edges")) {
        const Edge e = make_edge(je.at("u").get<int>(), je.at("v").get<int>());
        if (e.first < 0 || e.second >= n)
            throw std::invalid_argument("design edge endpoint out of range");
        const int c = channel_index_from_label(inst.physics, je.at("channel").get<std::string>());
        const double f = je.at("freq_mhz").get<double>();
        if (f != 0.0 && inst.physics.channel_of(f) != c)
            throw std::invalid_argument("edge frequency does not belong to its channel");
        edges.push_back(e);
        if (!edge_info.emplace(e, std::make_pair(c, f)).second)
            throw std::invalid_argument("duplicate design edge");
    }

    ParsedDesign out;
    Design& d = out.design;
    const Topology t = topology_from_edges(n, std::move(edges));
    d.rooted = root_at(t, j.at("hub").get<int>());

    const json& part = j.at("partition");
    d.partition.block_a = part.at("block_a").get<std::vector<int>>();
    d.partition.block_b = part.at("block_b").get<std::vector<int>>();

    d.channels.uplink_channel.assign(n, -1);
    d.freq_mhz.assign(t.edges.size(), 0.0);
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
        const auto& info = edge_info.at(t.edges[i]);
        d.channels.uplink_channel[d.rooted.edge_child[i]] = info.first;
        d.freq_mhz[i] = info.second;
    }
    if (!d.partition.block_a.empty()) {
        d.channels.block_channel_a = d.channels.uplink_channel[d.partition.block_a[0]];
        d.channels.block_channel_b = 1 - d.channels.block_channel_a;
    } else if (!d.partition.block_b.empty()) {
        d.channels.block_channel_b = d.channels.uplink_channel[d.partition.block_b[0]];
        d.channels.block_channel_a = 1 - d.channels.block_channel_b;
    }

    d.antennas.assign(static_cast<std::size_t>(2) * n, std::nullopt);
    for (const json& ja : j.at("antennas")) {
        const int node = ja.at("node").get<int>();
        if (node < 0 || node >= n)
            throw std::invalid_argument("antenna node out of range");
        const int c = channel_index_from_label(inst.physics, ja.at("channel").get<std::string>());
        AntennaConfig cfg;
        cfg.rotation_rad = ja.at("rotation_rad").get<double>();
        cfg.beams = ja.at("beams").get<std::vector<int>>();
        auto& slot = d.antennas[antenna_slot(node, c)];
        if (slot) throw std::invalid_argument("duplicate antenna slot");
        slot = std::move(cfg);
    }

    if (j.contains("metrics")) {
        const json& jm = j.at("metrics");
        EvaluationResult ev;
        ev.breakdown = breakdown_from_json(jm.at("breakdown"));
        for (const json& jl : jm.at("links")) {
            LinkMetrics lm;
            lm.edge = jl.at("edge").get<int>();
            lm.freq_mhz = jl.at("freq_mhz").get<double>();
            lm.gain_fwd_db = jl.at("gain_fwd_db").get<double>();
            lm.gain_rev_db = jl.at("gain_rev_db").get<double>();
            lm.path_loss_db = jl.at("path_loss_db").get<double>();
            lm.signal_dbm = jl.at("signal_dbm").get<double>();
            lm.interference_mw = jl.at("interference_mw").get<double>();
            lm.sinr_db = jl.at("sinr_db").get<double>();
            lm.throughput_mbps = jl.at("throughput_mbps").get<double>();
            ev.links.push_back(lm);
        }
        out.metrics = std::move(ev);
    }
    return out;
}

std::string export_dot(const Instance& inst, const Design& design,
                       const EvaluationResult* metrics) {
    const RootedTopology& rooted = design.rooted;
    const int n = rooted.topology.n;
    const std::size_t m = rooted.topology.edges.size();

    // A serving antenna with two or more same-channel links runs
    // point-to-multipoint; those edges are drawn dashed.
    std::map<std::pair<int, int>, int> served;  // (parent, channel) -> count
    std::vector<int> edge_parent(m, -1);
    for (std::size_t i = 0; i < m; ++i) {
        const int child = rooted.edge_child[i];
        const int parent = rooted.parent[child];
        edge_parent[i] = parent;
        const int c = design.channels.edge_channel(rooted, static_cast<int>(i));
        ++served[{parent, c}];
    }

    std::vector<double> tp(m, -1.0);
    if (metrics)
        for (const LinkMetrics& lm : metrics->links)
            if (lm.edge >= 0 && lm.edge < static_cast<int>(m)) tp[lm.edge] = lm.throughput_mbps;

    char buf[160];
    std::ostringstream dot;
    dot << "digraph design {\n";
    dot << "  node [shape=circle fontsize=10];\n";
    for (int v = 0; v < n; ++v) {
        std::snprintf(buf, sizeof buf, "  %d [pos=\"%.6g,%.6g!\"%s];\n", v,
                      inst.nodes[v].x / 1000.0, inst.nodes[v].y / 1000.0,
                      v == rooted.hub ? " shape=box style=bold" : "");
        dot << buf;
    }
    for (std::size_t i = 0; i < m; ++i) {
        const int child = rooted.edge_child[i];
        const int parent = edge_parent[i];
        const int c = design.channels.edge_channel(rooted, static_cast<int>(i));
        std::string label = inst.physics.bands[c].label;
        if (design.freq_mhz[i] > 0.0) {
            std::snprintf(buf, sizeof buf, " @%.6g MHz", design.freq_mhz[i]);
            label += buf;
        }
        if (tp[i] >= 0.0) {
            std::snprintf(buf, sizeof buf, "\\n%.6g Mbps", tp[i]);
            label += buf;
        }
        const bool pmp = served[{parent, c}] >= 2;
        dot << "  " << parent << " -> " << child << " [label=\"" << label << "\""
            << (pmp ? " style=dashed" : "") << "];\n";
    }
    dot << "}\n";
    return dot.str();
}

std::string report_to_json(const Instance& inst, const RunReport& report) {
    json j;
    j["version"] = kVersion;
    j["prng"] = kPrngId;
    j["instance"] = {{"path", report.instance_path},
                     {"nodes", inst.size()},
                     {"seed", inst.seed}};
    j["config"] = config_to_json(report.config, inst.size());
    j["iteration_mode"] = report.iteration_mode;

    const SolveResult& r = report.result;
    json jr;
    jr["best_objective"] = r.best_value;
    jr["iterations"] = r.iterations;
    if (!report.iteration_mode) jr["wall_seconds"] = r.wall_seconds;
    jr["breakdown"] = breakdown_to_json(r.breakdown);
    json trace = json::array();
    for (const TracePoint& tp : r.trace) {
        json jt;
        jt["iteration"] = tp.iteration;
        if (!report.iteration_mode) jt["elapsed_s"] = tp.elapsed_s;
        jt["best_objective"] = tp.best_objective;
        trace.push_back(std::move(jt));
    }
    jr["trace"] = std::move(trace);
    if (!r.audit_log.empty()) jr["audit_log"] = r.audit_log;
    j["result"] = std::move(jr);

    const EvaluationResult metrics = evaluate_design(inst, r.best);
    j["design"] = design_to_json_obj(inst, r.best, &metrics, &r.best_value);
    return j.dump(2) + "\n";
}

std::string trace_to_csv(const std::vector<TracePoint>& trace, bool iteration_mode) {
    std::ostringstream csv;
    csv << (iteration_mode ? "iteration" : "elapsed_s") << ",best_objective\n";
    for (const TracePoint& tp : trace) {
        if (iteration_mode)
            csv << tp.iteration;
        else
            csv << fmt(tp.elapsed_s);
        csv << ',' << fmt(tp.best_objective) << '\n';
    }
    return csv.str();
}

}  // namespace netdesign
