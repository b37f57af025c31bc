#include "netdesign/objective.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

#include "netdesign/geometry.hpp"

namespace netdesign {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Running min/mean accumulator over effective throughputs, one lane per
// traffic scenario.
struct Agg {
    double mins[3] = {std::numeric_limits<double>::infinity(),
                      std::numeric_limits<double>::infinity(),
                      std::numeric_limits<double>::infinity()};
    double sums[3] = {0.0, 0.0, 0.0};
    int count = 0;

    void add(double tp, const ScenarioStreams& s) {
        const double eff[3] = {tp / s.n_a, tp / s.n_b, tp / s.n_c};
        for (int x = 0; x < 3; ++x) {
            mins[x] = std::min(mins[x], eff[x]);
            sums[x] += eff[x];
        }
        ++count;
    }

    ObjectiveBreakdown finish(const Instance& inst) const {
        ObjectiveBreakdown b;
        if (count == 0) return b;
        const double w[3] = {inst.weight_a, inst.weight_b, inst.weight_c};
        for (int x = 0; x < 3; ++x) {
            b.min_tp[x] = mins[x];
            b.mean_tp[x] = sums[x] / count;
            b.total += w[x] * (b.min_tp[x] + inst.mean_weight * b.mean_tp[x]);
        }
        return b;
    }
};

}  // namespace

std::vector<ScenarioStreams> scenario_streams(const RootedTopology& rooted) {
    const int n = rooted.topology.n;
    std::vector<ScenarioStreams> out(rooted.topology.edges.size());
    for (std::size_t e = 0; e < out.size(); ++e) {
        const double dv = rooted.subtree_size[rooted.edge_child[e]];
        out[e].n_a = 1.0;
        out[e].n_b = dv;
        out[e].n_c = 2.0 * dv * (n - dv);
    }
    return out;
}

double interference_mw(const Instance& inst, const Design& design, int edge_idx,
                       double freq_mhz) {
    const PhysicsParams& ph = inst.physics;
    const int c = ph.channel_of(freq_mhz);
    const RootedTopology& rooted = design.rooted;
    const Edge& edge = rooted.topology.edges[edge_idx];
    const int n = rooted.topology.n;

    std::vector<char> uses(n, 0);
    for (std::size_t e2 = 0; e2 < rooted.topology.edges.size(); ++e2) {
        if (design.freq_mhz[e2] != freq_mhz) continue;
        uses[rooted.topology.edges[e2].first] = 1;
        uses[rooted.topology.edges[e2].second] = 1;
    }

    auto gain = [&](int owner, int toward) {
        const auto& cfg = design.antennas[antenna_slot(owner, c)];
        if (!cfg) return -std::numeric_limits<double>::infinity();
        return beam_gain_db(*cfg, inst.bearing(owner, toward), freq_mhz, ph);
    };

    const int u = edge.first, v = edge.second;
    double total = 0.0;
    for (int w = 0; w < n; ++w) {
        if (w == u || w == v || !uses[w]) continue;
        double s_uw = signal_strength_dbm(gain(u, w), gain(w, u),
                                          path_loss_db(inst.distance_m(u, w), freq_mhz, ph));
        double s_wv = signal_strength_dbm(gain(w, v), gain(v, w),
                                          path_loss_db(inst.distance_m(w, v), freq_mhz, ph));
        total += db_to_linear(s_uw) + db_to_linear(s_wv);
    }
    return total;
}

EvaluationResult evaluate_design(const Instance& inst, const Design& design) {
    const PhysicsParams& ph = inst.physics;
    const RootedTopology& rooted = design.rooted;
    const auto streams = scenario_streams(rooted);
    EvaluationResult res;
    Agg agg;
    for (std::size_t e = 0; e < rooted.topology.edges.size(); ++e) {
        const double f = design.freq_mhz[e];
        if (f <= 0.0) throw std::invalid_argument("evaluate_design: unassigned edge");
        const int c = ph.channel_of(f);
        const int child = rooted.edge_child[e];
        const Edge& edge = rooted.topology.edges[e];
        const int par = edge.first == child ? edge.second : edge.first;

        const auto& cfg_p = design.antennas[antenna_slot(par, c)];
        const auto& cfg_c = design.antennas[antenna_slot(child, c)];
        if (!cfg_p || !cfg_c)
            throw std::invalid_argument("evaluate_design: missing serving antenna");

        LinkMetrics lm;
        lm.edge = static_cast<int>(e);
        lm.freq_mhz = f;
        lm.gain_fwd_db = beam_gain_db(*cfg_p, inst.bearing(par, child), f, ph);
        lm.gain_rev_db = beam_gain_db(*cfg_c, inst.bearing(child, par), f, ph);
        lm.path_loss_db = path_loss_db(inst.distance_m(par, child), f, ph);
        lm.signal_dbm = signal_strength_dbm(lm.gain_fwd_db, lm.gain_rev_db, lm.path_loss_db);
        lm.interference_mw = interference_mw(inst, design, static_cast<int>(e), f);
        lm.sinr_db = sinr_db(lm.signal_dbm, lm.interference_mw, ph.fade_margin_db);
        lm.throughput_mbps = throughput_mbps(lm.sinr_db);
        agg.add(lm.throughput_mbps, streams[e]);
        res.links.push_back(lm);
    }
    res.breakdown = agg.finish(inst);
    return res;
}

double estimate_objective(const Instance& inst, const RootedTopology& rooted,
                          const ChannelAssignment& channels,
                          const std::vector<std::optional<AntennaConfig>>& antennas,
                          ObjectiveBreakdown* breakdown) {
    const PhysicsParams& ph = inst.physics;
    const auto streams = scenario_streams(rooted);
    Agg agg;
    for (std::size_t e = 0; e < rooted.topology.edges.size(); ++e) {
        const int c = channels.edge_channel(rooted, static_cast<int>(e));
        const int child = rooted.edge_child[e];
        const Edge& edge = rooted.topology.edges[e];
        const int par = edge.first == child ? edge.second : edge.first;
        const auto& cfg_p = antennas[antenna_slot(par, c)];
        const auto& cfg_c = antennas[antenna_slot(child, c)];
        if (!cfg_p || !cfg_c)
            throw std::invalid_argument("estimate_objective: missing serving antenna");
        double tp_sum = 0.0;
        for (int hi = 0; hi < 2; ++hi) {
            const double f = ph.band_freq(c, hi);
            double s = signal_strength_dbm(
                beam_gain_db(*cfg_p, inst.bearing(par, child), f, ph),
                beam_gain_db(*cfg_c, inst.bearing(child, par), f, ph),
                path_loss_db(inst.distance_m(par, child), f, ph));
            tp_sum += throughput_mbps(sinr_db(s, 0.0, ph.fade_margin_db));
        }
        agg.add(tp_sum / 2.0, streams[e]);
    }
    ObjectiveBreakdown b = agg.finish(inst);
    if (breakdown) *breakdown = b;
    return b.total;
}

// ---------------------------------------------------------------------------
// Evaluator

Evaluator::Evaluator(const Instance& inst) : inst_(&inst) {
    const int n = inst.size();
    log10_d_km_.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v)
                log10_d_km_[static_cast<std::size_t>(u) * n + v] =
                    std::log10(inst.distance_m(u, v) / 1000.0);
    for (int c = 0; c < 2; ++c)
        for (int hi = 0; hi < 2; ++hi) {
            freq_mhz_[2 * c + hi] = inst.physics.band_freq(c, hi);
            log10_f_[2 * c + hi] = std::log10(freq_mhz_[2 * c + hi]);
        }
    noise_lin_ = db_to_linear(noise_power_dbm());
    fid_edges_.resize(4);
    fid_users_.resize(4);
}

void Evaluator::bind(const RootedTopology& rooted, const ChannelAssignment& channels,
                     const std::vector<std::optional<AntennaConfig>>& antennas) {
    rooted_ = &rooted;
    chan_ = &channels;
    antennas_ = &antennas;
    const int n = rooted.topology.n;
    const int m = static_cast<int>(rooted.topology.edges.size());

    edge_child_.resize(m);
    edge_parent_.resize(m);
    edge_channel_.resize(m);
    std::vector<int> edge_of_child(n, -1);
    for (int e = 0; e < m; ++e) {
        edge_child_[e] = rooted.edge_child[e];
        const Edge& ed = rooted.topology.edges[e];
        edge_parent_[e] = ed.first == edge_child_[e] ? ed.second : ed.first;
        edge_channel_[e] = channels.uplink_channel[edge_child_[e]];
        edge_of_child[edge_child_[e]] = e;
    }
    streams_ = scenario_streams(rooted);

    groups_.clear();
    std::queue<int> q;
    q.push(rooted.hub);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        const auto& kids = rooted.children[u];
        for (int k : kids) q.push(k);
        if (kids.empty()) continue;
        if (u == rooted.hub) {
            int lead = channels.uplink_channel[kids[0]];
            for (int pass = 0; pass < 2; ++pass) {
                int want = pass == 0 ? lead : 1 - lead;
                Group g;
                g.channel = want;
                for (int k : kids)
                    if (channels.uplink_channel[k] == want)
                        g.edges.push_back(edge_of_child[k]);
                if (!g.edges.empty()) groups_.push_back(std::move(g));
            }
        } else {
            Group g;
            g.channel = channels.uplink_channel[kids[0]];
            for (int k : kids) g.edges.push_back(edge_of_child[k]);
            groups_.push_back(std::move(g));
        }
    }

    gain_cache_.assign(static_cast<std::size_t>(2 * n) * n, kNaN);
    freq_bit_.assign(m, -1);
    s_dbm_.assign(m, 0.0);
    i_lin_.assign(m, 0.0);
    for (auto& v : fid_edges_) v.clear();
    for (auto& v : fid_users_) v.clear();
    usage_.assign(static_cast<std::size_t>(2 * n), {0, 0});
    assigned_ = 0;
}

double Evaluator::gain(int slot, int target) {
    const int n = inst_->size();
    double& g = gain_cache_[static_cast<std::size_t>(slot) * n + target];
    if (std::isnan(g)) {
        const auto& cfg = (*antennas_)[slot];
        if (!cfg) {
            g = -std::numeric_limits<double>::infinity();
        } else {
            const int c = slot & 1;
            g = beam_gain_db(*cfg, inst_->bearing(slot >> 1, target),
                             freq_mhz_[2 * c], inst_->physics);
        }
    }
    return g;
}

double Evaluator::pl_db(int u, int v, int fid) const {
    return 20.0 * (log10_d_km_[static_cast<std::size_t>(u) * inst_->size() + v] +
                   log10_f_[fid]) +
           32.44;
}

double Evaluator::desired_signal_dbm(int e, int fid) {
    const int c = fid >> 1;
    const int u = edge_parent_[e], v = edge_child_[e];
    return 30.0 + gain(antenna_slot(u, c), v) + gain(antenna_slot(v, c), u) -
           pl_db(u, v, fid);
}

double Evaluator::pair_term(int from, int from_slot, int to, int to_slot, int fid) {
    return db_to_linear(30.0 + gain(from_slot, to) + gain(to_slot, from) -
                        pl_db(from, to, fid));
}

void Evaluator::do_assign_edge(int e, int hi, int fid, Undo* undo) {
    const int c = fid >> 1;
    const int u = edge_parent_[e], v = edge_child_[e];
    const int su = antenna_slot(u, c), sv = antenna_slot(v, c);

    freq_bit_[e] = static_cast<signed char>(hi);
    undo->edges.push_back(e);
    s_dbm_[e] = desired_signal_dbm(e, fid);

    double acc = 0.0;
    for (int ws : fid_users_[fid]) {
        const int w = ws >> 1;
        if (w == u || w == v) continue;
        acc += pair_term(u, su, w, ws, fid) + pair_term(w, ws, v, sv, fid);
    }
    i_lin_[e] = acc;

    for (int side = 0; side < 2; ++side) {
        const int x = side == 0 ? u : v;
        const int sx = side == 0 ? su : sv;
        if (usage_[sx][hi]++ == 0) {
            for (int e0 : fid_edges_[fid]) {
                const int a = edge_parent_[e0], b = edge_child_[e0];
                if (x == a || x == b) continue;
                undo->i_touched.emplace_back(e0, i_lin_[e0]);
                i_lin_[e0] += pair_term(a, antenna_slot(a, c), x, sx, fid) +
                              pair_term(x, sx, b, antenna_slot(b, c), fid);
            }
            fid_users_[fid].push_back(sx);
            undo->user_slots.push_back(sx);
        }
    }
    fid_edges_[fid].push_back(e);
    ++assigned_;
}

void Evaluator::assign_group(int group_idx, int hi, Undo* undo) {
    const Group& g = groups_[group_idx];
    const int fid = 2 * g.channel + hi;
    undo->fid = fid;
    for (int e : g.edges) do_assign_edge(e, hi, fid, undo);
}

void Evaluator::assign_edge(int edge_idx, int hi, Undo* undo) {
    const int fid = 2 * edge_channel_[edge_idx] + hi;
    undo->fid = fid;
    do_assign_edge(edge_idx, hi, fid, undo);
}

void Evaluator::unassign(const Undo& undo) {
    const int fid = undo.fid;
    const int hi = fid & 1;
    for (auto it = undo.i_touched.rbegin(); it != undo.i_touched.rend(); ++it)
        i_lin_[it->first] = it->second;
    for (std::size_t k = 0; k < undo.user_slots.size(); ++k) fid_users_[fid].pop_back();
    for (auto it = undo.edges.rbegin(); it != undo.edges.rend(); ++it) {
        const int e = *it;
        fid_edges_[fid].pop_back();
        freq_bit_[e] = -1;
        const int c = fid >> 1;
        --usage_[antenna_slot(edge_parent_[e], c)][hi];
        --usage_[antenna_slot(edge_child_[e], c)][hi];
        --assigned_;
    }
}

void Evaluator::reset_assignment() {
    std::fill(freq_bit_.begin(), freq_bit_.end(), static_cast<signed char>(-1));
    for (auto& v : fid_edges_) v.clear();
    for (auto& v : fid_users_) v.clear();
    std::fill(usage_.begin(), usage_.end(), std::array<int, 2>{0, 0});
    assigned_ = 0;
}

double Evaluator::objective() const { return breakdown().total; }

ObjectiveBreakdown Evaluator::breakdown() const {
    Agg agg;
    const int m = edge_count();
    for (int e = 0; e < m; ++e) {
        if (freq_bit_[e] < 0) continue;
        const double tp = throughput_mbps(
            s_dbm_[e] - inst_->physics.fade_margin_db -
            10.0 * std::log10(i_lin_[e] + noise_lin_));
        agg.add(tp, streams_[e]);
    }
    return agg.finish(*inst_);
}

void Evaluator::link_metrics(std::vector<LinkMetrics>* out) {
    out->clear();
    const int m = edge_count();
    for (int e = 0; e < m; ++e) {
        if (freq_bit_[e] < 0) continue;
        LinkMetrics lm;
        lm.edge = e;
        const int c = edge_channel_[e];
        const int fid = 2 * c + freq_bit_[e];
        lm.freq_mhz = freq_mhz_[fid];
        lm.path_loss_db = pl_db(edge_parent_[e], edge_child_[e], fid);
        lm.gain_fwd_db = gain(antenna_slot(edge_parent_[e], c), edge_child_[e]);
        lm.gain_rev_db = gain(antenna_slot(edge_child_[e], c), edge_parent_[e]);
        lm.signal_dbm = s_dbm_[e];
        lm.interference_mw = i_lin_[e];
        lm.sinr_db = s_dbm_[e] - inst_->physics.fade_margin_db -
                     10.0 * std::log10(i_lin_[e] + noise_lin_);
        lm.throughput_mbps = throughput_mbps(lm.sinr_db);
        out->push_back(lm);
    }
}

double Evaluator::edge_freq_mhz(int edge_idx) const {
    if (freq_bit_[edge_idx] < 0) return 0.0;
    return freq_mhz_[2 * edge_channel_[edge_idx] + freq_bit_[edge_idx]];
}

double Evaluator::estimate(ObjectiveBreakdown* breakdown) {
    Agg agg;
    const int m = edge_count();
    for (int e = 0; e < m; ++e) {
        const int c = edge_channel_[e];
        double tp_sum = 0.0;
        for (int hi = 0; hi < 2; ++hi) {
            const double s = desired_signal_dbm(e, 2 * c + hi);
            tp_sum += throughput_mbps(s - inst_->physics.fade_margin_db -
                                      10.0 * std::log10(noise_lin_));
        }
        agg.add(tp_sum / 2.0, streams_[e]);
    }
    ObjectiveBreakdown b = agg.finish(*inst_);
    if (breakdown) *breakdown = b;
    return b.total;
}

}  // namespace netdesign
