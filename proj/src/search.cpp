#include "netdesign/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "netdesign/audit.hpp"

namespace netdesign {

// ---------------------------------------------------------------------------
// Tabu lists

TabuLists TabuLists::for_size(int n) {
    TabuLists lists;
    lists.removal_capacity =
        static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n - 1)) / 2.0));
    lists.addition_capacity = static_cast<std::size_t>(
        std::ceil(std::sqrt(n * (n - 1) / 2.0)));
    return lists;
}

bool TabuLists::removal_forbidden(const Edge& e) const {
    return std::find(removal.begin(), removal.end(), e) != removal.end();
}

bool TabuLists::addition_forbidden(const Edge& e) const {
    return std::find(addition.begin(), addition.end(), e) != addition.end();
}

void TabuLists::push_removed(const Edge& e) {
    addition.push_back(e);
    while (addition.size() > addition_capacity) addition.pop_front();
}

void TabuLists::push_added(const Edge& e) {
    removal.push_back(e);
    while (removal.size() > removal_capacity) removal.pop_front();
}

bool TabuLists::evict_oldest_addition() {
    if (addition.empty()) return false;
    addition.pop_front();
    return true;
}

bool TabuLists::evict_oldest_removal() {
    if (removal.empty()) return false;
    removal.pop_front();
    return true;
}

// ---------------------------------------------------------------------------
// Initial topology

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

}  // namespace

Topology initial_topology(const Instance& inst, const std::vector<char>& e_not) {
    const int n = inst.size();
    const PhysicsParams& ph = inst.physics;

    struct Cand {
        double cost;
        Edge e;
    };
    std::vector<Cand> cands;
    cands.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (e_not_contains(e_not, n, u, v)) continue;
            const double d = inst.distance_m(u, v);
            double mean = 0.0;
            for (int c = 0; c < 2; ++c)
                for (int hi = 0; hi < 2; ++hi)
                    mean += path_loss_db(d, ph.band_freq(c, hi), ph);
            cands.push_back({mean / 4.0, make_edge(u, v)});
        }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        if (a.cost != b.cost) return a.cost < b.cost;
        return a.e < b.e;
    });

    Dsu dsu(n);
    std::vector<int> deg(n, 0);
    int over_eleven = -1;
    std::vector<Edge> edges;
    for (const Cand& c : cands) {
        if (static_cast<int>(edges.size()) == n - 1) break;
        const auto [u, v] = c.e;
        if (dsu.find(u) == dsu.find(v)) continue;
        const int du = deg[u] + 1, dv = deg[v] + 1;
        if (du > kMaxHubDegree || dv > kMaxHubDegree) continue;
        int over = (over_eleven != -1 && over_eleven != u && over_eleven != v) ? 1 : 0;
        if (du > kMaxOrdinaryDegree) ++over;
        if (dv > kMaxOrdinaryDegree) ++over;
        if (over > 1) continue;
        dsu.unite(u, v);
        deg[u] = du;
        deg[v] = dv;
        if (du > kMaxOrdinaryDegree) over_eleven = u;
        if (dv > kMaxOrdinaryDegree) over_eleven = v;
        edges.push_back(c.e);
    }

    if (static_cast<int>(edges.size()) != n - 1) {
        std::vector<std::vector<int>> comps(n);
        for (int v = 0; v < n; ++v) comps[dsu.find(v)].push_back(v);
        std::ostringstream msg;
        msg << "initial topology infeasible: disconnected components";
        for (const auto& comp : comps) {
            if (comp.empty()) continue;
            msg << " {";
            for (std::size_t i = 0; i < comp.size(); ++i)
                msg << (i ? "," : "") << comp[i];
            msg << "}";
        }
        throw std::runtime_error(msg.str());
    }
    return topology_from_edges(n, std::move(edges));
}

// ---------------------------------------------------------------------------
// Neighborhood

std::vector<Move> neighborhood(const Topology& t, const TabuLists& tabu,
                               const std::vector<char>& e_not) {
    const int n = t.n;
    const std::vector<int> deg = degrees(t);
    int over_eleven = -1;
    for (int v = 0; v < n; ++v)
        if (deg[v] > kMaxOrdinaryDegree) over_eleven = v;

    const auto adj = adjacency(t);
    std::vector<Move> out;
    std::vector<char> side(n);
    std::vector<int> stack;

    for (const Edge& e : t.edges) {
        if (tabu.removal_forbidden(e)) continue;

        // Component labels of t - e.
        std::fill(side.begin(), side.end(), char(0));
        side[e.first] = 1;
        stack.assign(1, e.first);
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (int y : adj[x]) {
                if ((x == e.first && y == e.second) || (x == e.second && y == e.first))
                    continue;
                if (!side[y]) {
                    side[y] = 1;
                    stack.push_back(y);
                }
            }
        }

        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (side[u] == side[v]) continue;
                const Edge add{u, v};
                if (add == e) continue;
                if (e_not_contains(e_not, n, u, v)) continue;
                if (tabu.addition_forbidden(add)) continue;

                const auto post = [&](int x) {
                    return deg[x] - (x == e.first || x == e.second) + (x == u || x == v);
                };
                if (post(u) > kMaxHubDegree || post(v) > kMaxHubDegree) continue;
                // Degrees change only at the four touched vertices; any
                // untouched over-11 vertex stays over 11.
                int over = (over_eleven != -1 && over_eleven != u && over_eleven != v &&
                            over_eleven != e.first && over_eleven != e.second)
                               ? 1
                               : 0;
                const int affected[4] = {e.first, e.second, u, v};
                for (int i = 0; i < 4; ++i) {
                    bool seen = false;
                    for (int j = 0; j < i; ++j) seen |= affected[j] == affected[i];
                    if (!seen && post(affected[i]) > kMaxOrdinaryDegree) ++over;
                }
                if (over > 1) continue;
                out.push_back({e, add});
            }
    }
    return out;
}

Topology apply_move(const Topology& t, const Move& m) {
    std::vector<Edge> edges;
    edges.reserve(t.edges.size());
    for (const Edge& e : t.edges)
        if (e != m.removed) edges.push_back(e);
    edges.push_back(m.added);
    return topology_from_edges(t.n, std::move(edges));
}

// ---------------------------------------------------------------------------
// Algorithm names

std::string algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::tabu1: return "tabu1";
        case Algorithm::tabu2: return "tabu2";
        case Algorithm::tbs: return "tbs";
    }
    return "?";
}

std::optional<Algorithm> algorithm_from_name(const std::string& name) {
    if (name == "tabu1") return Algorithm::tabu1;
    if (name == "tabu2") return Algorithm::tabu2;
    if (name == "tbs") return Algorithm::tbs;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Solver internals

namespace {

using SteadyClock = std::chrono::steady_clock;

struct Budget {
    std::optional<SteadyClock::time_point> deadline;
    std::optional<std::uint64_t> max_iterations;
    SteadyClock::time_point start = SteadyClock::now();

    // Deterministic runs use iteration budgets only; then the clock is never
    // consulted during the search.
    bool iteration_mode() const { return max_iterations && !deadline; }

    bool expired() const { return deadline && SteadyClock::now() >= *deadline; }

    bool done(std::uint64_t completed) const {
        if (max_iterations && completed >= *max_iterations) return true;
        return expired();
    }

    double elapsed_s() const {
        return std::chrono::duration<double>(SteadyClock::now() - start).count();
    }
};

Budget make_budget(const SolverConfig& cfg) {
    Budget b;
    if (cfg.time_limit_s)
        b.deadline = b.start + std::chrono::duration_cast<SteadyClock::duration>(
                                   std::chrono::duration<double>(*cfg.time_limit_s));
    b.max_iterations = cfg.iteration_budget;
    if (!cfg.time_limit_s && !cfg.iteration_budget) b.max_iterations = 0;
    return b;
}

struct Incumbent {
    SolveResult* res;
    const Instance* inst;
    const Budget* budget;
    bool audit;

    void trace(std::uint64_t it) {
        res->trace.push_back({it,
                              budget->iteration_mode() ? static_cast<double>(it)
                                                       : budget->elapsed_s(),
                              res->best_value});
    }

    void offer(const BoundResult& cand, std::uint64_t it) {
        if (!res->trace.empty() && cand.value <= res->best_value) return;
        res->best = cand.design;
        res->best_value = cand.value;
        res->breakdown = cand.breakdown;
        trace(it);
    }

    void check(const BoundResult& cand, std::uint64_t it) {
        if (!audit) return;
        double claimed = cand.value;
        for (const std::string& v : audit_design(*inst, cand.design, &claimed)) {
            std::ostringstream line;
            line << "it=" << it << ": " << v;
            res->audit_log.push_back(line.str());
        }
    }
};

// Serialized edge set; the memo key for pure per-topology values.
std::string topology_key(const Topology& t) {
    std::string key;
    key.reserve(t.edges.size() * 4);
    for (const Edge& e : t.edges) {
        key.push_back(static_cast<char>(e.first & 0xff));
        key.push_back(static_cast<char>((e.first >> 8) & 0xff));
        key.push_back(static_cast<char>(e.second & 0xff));
        key.push_back(static_cast<char>((e.second >> 8) & 0xff));
    }
    return key;
}

struct EstEntry {
    double value = 0.0;
    int hub = -1;
    Partition partition;
};

// Pure per-topology results are memoized: the beam search revisits the same
// edge sets constantly on small instances. Bounded, cleared wholesale.
struct TbsMemo {
    std::unordered_map<std::string, EstEntry> est;
    std::unordered_map<std::string, BoundResult> lb;
};

// Interference-free score of a topology: best estimate over every candidate
// hub, consecutive partition, and polarity, with the maximizing hub and
// partition recorded for the later bound pass.
EstEntry tbs_estimate(BoundContext& ctx, TbsMemo& memo, const Topology& t,
                      const std::string& key) {
    if (auto it = memo.est.find(key); it != memo.est.end()) return it->second;
    const Instance& inst = *ctx.instance;
    EstEntry entry;
    bool have = false;
    for (int hub : master_hub_candidates(t)) {
        RootedTopology rooted = root_at(t, hub);
        for (const Partition& part : enumerate_partitions(inst, rooted))
            for (int flip = 0; flip < 2; ++flip) {
                ChannelAssignment channels = assign_channels(rooted, part, flip != 0);
                auto antennas = build_antennas(inst, rooted, part, channels, ctx.cache);
                ctx.eval.bind(rooted, channels, antennas);
                const double est = ctx.eval.estimate();
                if (!have || est > entry.value) {
                    have = true;
                    entry.value = est;
                    entry.hub = hub;
                    entry.partition = part;
                }
            }
    }
    if (memo.est.size() >= (1u << 19)) memo.est.clear();
    memo.est.emplace(key, entry);
    return entry;
}

// Every valid partition one block-switch away (a single hub neighbor moved
// to the other block).
std::vector<Partition> single_move_variants(const Partition& base) {
    std::vector<Partition> out;
    const auto move_one = [&out](const std::vector<int>& from,
                                 const std::vector<int>& to, bool from_is_a) {
        if (static_cast<int>(to.size()) >= kMaxBlockSize) return;
        for (int x : from) {
            std::vector<int> rest;
            for (int y : from)
                if (y != x) rest.push_back(y);
            std::vector<int> grown = to;
            grown.insert(std::upper_bound(grown.begin(), grown.end(), x), x);
            Partition p;
            if (from_is_a) {
                p.block_a = std::move(rest);
                p.block_b = std::move(grown);
            } else {
                p.block_a = std::move(grown);
                p.block_b = std::move(rest);
            }
            out.push_back(std::move(p));
        }
    };
    move_one(base.block_a, base.block_b, true);
    move_one(base.block_b, base.block_a, false);
    return out;
}

// Greedy-frequency bound at the estimate's (hub, partition); hubs with at
// most 7 neighbors get their whole partition family instead, larger hubs
// the single-move variants.
BoundResult tbs_lower_bound(BoundContext& ctx, TbsMemo& memo, const Topology& t,
                            const EstEntry& est, const std::string& key) {
    if (auto it = memo.lb.find(key); it != memo.lb.end()) return it->second;
    RootedTopology rooted = root_at(t, est.hub);
    const int hub_degree = static_cast<int>(rooted.children[est.hub].size());

    BoundResult best = lb2(ctx, t, est.hub, est.partition);
    if (hub_degree <= 7) {
        for (const Partition& part : enumerate_partitions(*ctx.instance, rooted)) {
            BoundResult cand = lb2(ctx, t, est.hub, part);
            if (cand.value > best.value) best = std::move(cand);
        }
    } else {
        for (const Partition& part : single_move_variants(est.partition)) {
            BoundResult cand = lb2(ctx, t, est.hub, part);
            if (cand.value > best.value) best = std::move(cand);
        }
    }
    if (memo.lb.size() >= (1u << 14)) memo.lb.clear();
    memo.lb.emplace(key, best);
    return best;
}

struct Chosen {
    Move move;
    Topology topology;
    BoundResult bound;
};

// One best-improvement scan. Tabu moves are skipped outright without
// aspiration; with it they are evaluated and admitted only above the
// incumbent. Returns nothing when no admissible move exists.
std::optional<Chosen> scan_moves(BoundContext& ctx, const Instance& inst,
                                 const SolverConfig& cfg, const Topology& t,
                                 const TabuLists& tabu, const std::vector<char>& e_not,
                                 bool use_lb2, int hub, const Partition& part,
                                 double incumbent_value, const Budget& budget,
                                 bool* aborted) {
    static const TabuLists kNoTabu;
    std::optional<Chosen> best;
    for (const Move& m : neighborhood(t, kNoTabu, e_not)) {
        if (budget.expired()) {
            *aborted = true;
            return std::nullopt;
        }
        const bool is_tabu =
            tabu.removal_forbidden(m.removed) || tabu.addition_forbidden(m.added);
        if (is_tabu && !cfg.aspiration) continue;

        Topology t2 = apply_move(t, m);
        BoundResult bound;
        if (use_lb2) {
            const std::vector<int> deg = degrees(t2);
            bool rootable = true;
            for (int v = 0; v < t2.n && rootable; ++v)
                if (deg[v] > kMaxOrdinaryDegree && v != hub) rootable = false;
            if (!rootable) continue;
            auto repaired = repair_partition(inst, hub, part, m.removed, m.added);
            if (!repaired) continue;
            bound = lb2(ctx, t2, hub, *repaired);
        } else {
            bound = lb1(ctx, t2);
        }

        if (is_tabu && !(bound.value > incumbent_value)) continue;
        if (!best || bound.value > best->bound.value)
            best = Chosen{m, std::move(t2), std::move(bound)};
    }
    return best;
}

SolveResult run_tabu(const Instance& inst, const SolverConfig& cfg, BoundContext& ctx,
                     const std::vector<char>& e_not, Topology t,
                     const BoundResult& bootstrap, Budget& budget) {
    const bool use_lb2 =
        cfg.algorithm == Algorithm::tabu2 && !cfg.tabu2_eval_with_lb1;
    const bool restarts =
        cfg.algorithm == Algorithm::tabu2 && !cfg.tabu2_disable_restarts;
    const int lambda = cfg.lambda > 0 ? cfg.lambda : inst.size();

    SolveResult res;
    Incumbent inc{&res, &inst, &budget, cfg.audit};
    inc.offer(bootstrap, 0);
    inc.check(bootstrap, 0);

    int hub = bootstrap.design.rooted.hub;
    Partition part = bootstrap.design.partition;

    TabuLists tabu = TabuLists::for_size(inst.size());
    // Last five move-reached topologies with the bound that selected them.
    // Re-derivations are not moves and stay out: pushing a restart's lb1
    // value would anchor every later restart to the same topology (lb1
    // dominates lb2), turning the diversification step into a fixed point.
    std::deque<std::pair<Topology, double>> ring;
    const auto ring_push = [&](const Topology& rt, double rv) {
        ring.emplace_back(rt, rv);
        if (ring.size() > 5) ring.pop_front();
    };

    bool stuck_rederived = false;
    std::uint64_t it = 0;
    while (!budget.done(it)) {
        const std::uint64_t this_it = it + 1;

        if (restarts && this_it % static_cast<std::uint64_t>(lambda) == 0) {
            // Restart from the best of the recent ring and re-derive the hub
            // and partition from scratch. No move, no tabu update.
            Topology from = t;
            double best_v = 0.0;
            bool found = false;
            for (const auto& [rt, rv] : ring)
                if (!found || rv > best_v) {
                    found = true;
                    best_v = rv;
                    from = rt;
                }
            BoundResult re = lb1(ctx, from);
            t = std::move(from);
            hub = re.design.rooted.hub;
            part = re.design.partition;
            ++it;
            inc.offer(re, this_it);
            inc.check(re, this_it);
            continue;
        }

        std::optional<Chosen> chosen;
        bool aborted = false;
        for (;;) {
            chosen = scan_moves(ctx, inst, cfg, t, tabu, e_not, use_lb2, hub, part,
                                res.best_value, budget, &aborted);
            if (aborted || chosen) break;
            if (tabu.evict_oldest_addition()) continue;
            if (tabu.evict_oldest_removal()) continue;
            break;
        }
        if (aborted) break;
        if (!chosen) {
            // Nothing admissible even with the lists drained. The fixed hub
            // and partition may be the blocker; one fresh derivation can
            // unstick that. Otherwise the incumbent stands.
            if (use_lb2 && !stuck_rederived) {
                BoundResult re = lb1(ctx, t);
                hub = re.design.rooted.hub;
                part = re.design.partition;
                stuck_rederived = true;
                ++it;
                inc.offer(re, this_it);
                inc.check(re, this_it);
                continue;
            }
            break;
        }
        stuck_rederived = false;

        tabu.push_removed(chosen->move.removed);
        tabu.push_added(chosen->move.added);
        t = std::move(chosen->topology);
        hub = chosen->bound.design.rooted.hub;
        part = chosen->bound.design.partition;
        ++it;
        ring_push(t, chosen->bound.value);
        if (cfg.collect_moves) res.moves.push_back(chosen->move);
        inc.offer(chosen->bound, this_it);
        inc.check(chosen->bound, this_it);
    }

    res.iterations = it;
    res.wall_seconds = budget.elapsed_s();
    return res;
}

SolveResult run_tbs(const Instance& inst, const SolverConfig& cfg, BoundContext& ctx,
                    const std::vector<char>& e_not, const Topology& t0,
                    const BoundResult& bootstrap, Budget& budget) {
    const int kappa = std::max(1, cfg.kappa);

    SolveResult res;
    Incumbent inc{&res, &inst, &budget, cfg.audit};
    inc.offer(bootstrap, 0);
    inc.check(bootstrap, 0);

    TabuLists tabu = TabuLists::for_size(inst.size());
    TbsMemo memo;

    struct PoolEntry {
        Topology t;
        std::string key;
        EstEntry est;
        Move from;
    };
    std::vector<PoolEntry> pool;

    std::uint64_t it = 0;
    while (!budget.done(it)) {
        // Expand: each pool member contributes its kappa best-estimate
        // neighbors; the first iteration expands the initial tree itself.
        std::vector<PoolEntry> candidates;
        bool aborted = false;
        const std::size_t sources = pool.empty() ? 1 : pool.size();
        for (std::size_t s = 0; s < sources && !aborted; ++s) {
            const Topology& src = pool.empty() ? t0 : pool[s].t;
            std::vector<PoolEntry> scored;
            for (const Move& m : neighborhood(src, tabu, e_not)) {
                if (budget.expired()) {
                    aborted = true;
                    break;
                }
                PoolEntry entry;
                entry.t = apply_move(src, m);
                entry.key = topology_key(entry.t);
                entry.est = tbs_estimate(ctx, memo, entry.t, entry.key);
                entry.from = m;
                scored.push_back(std::move(entry));
            }
            std::stable_sort(scored.begin(), scored.end(),
                             [](const PoolEntry& a, const PoolEntry& b) {
                                 return a.est.value > b.est.value;
                             });
            if (static_cast<int>(scored.size()) > kappa) scored.resize(kappa);
            for (auto& e : scored) candidates.push_back(std::move(e));
        }
        if (aborted) break;

        if (candidates.empty()) {
            if (tabu.evict_oldest_addition()) continue;
            if (tabu.evict_oldest_removal()) continue;
            break;
        }

        // Keep the kappa best distinct topologies overall.
        std::stable_sort(candidates.begin(), candidates.end(),
                         [](const PoolEntry& a, const PoolEntry& b) {
                             return a.est.value > b.est.value;
                         });
        std::vector<PoolEntry> selected;
        for (auto& cand : candidates) {
            if (static_cast<int>(selected.size()) == kappa) break;
            bool dup = false;
            for (const auto& s : selected) dup |= s.key == cand.key;
            if (!dup) selected.push_back(std::move(cand));
        }

        for (const auto& s : selected) {
            tabu.push_removed(s.from.removed);
            tabu.push_added(s.from.added);
        }
        ++it;
        if (cfg.collect_moves)
            for (const auto& s : selected) res.moves.push_back(s.from);

        for (const auto& s : selected) {
            BoundResult bound = tbs_lower_bound(ctx, memo, s.t, s.est, s.key);
            if (bound.value > res.best_value) {
                inc.offer(bound, it);
                inc.check(bound, it);
            }
            if (budget.expired()) break;
        }
        pool = std::move(selected);
    }

    res.iterations = it;
    res.wall_seconds = budget.elapsed_s();
    return res;
}

}  // namespace

SolveResult solve(const Instance& inst, const SolverConfig& cfg) {
    inst.validate();
    Budget budget = make_budget(cfg);
    const std::vector<char> e_not = compute_e_not(inst);
    Topology t0 = initial_topology(inst, e_not);

    BoundContext ctx(inst);
    ctx.mode = cfg.mode;
    BoundResult bootstrap = lb1(ctx, t0);

    switch (cfg.algorithm) {
        case Algorithm::tabu1:
        case Algorithm::tabu2:
            return run_tabu(inst, cfg, ctx, e_not, std::move(t0), bootstrap, budget);
        case Algorithm::tbs:
            return run_tbs(inst, cfg, ctx, e_not, t0, bootstrap, budget);
    }
    throw std::logic_error("solve: unknown algorithm");
}

// ---------------------------------------------------------------------------
// Exhaustive reference

namespace {

BoundResult best_for_topology_impl(BoundContext& ctx, const Topology& t,
                                   bool* have_any, BoundResult* running) {
    const Instance& inst = *ctx.instance;
    const std::vector<int> deg = degrees(t);
    int over_eleven = -1;
    for (int v = 0; v < t.n; ++v)
        if (deg[v] > kMaxOrdinaryDegree) over_eleven = v;

    for (int hub = 0; hub < t.n; ++hub) {
        if (over_eleven != -1 && hub != over_eleven) continue;
        RootedTopology rooted = root_at(t, hub);
        const std::vector<int>& nbrs = rooted.children[hub];
        const int d = static_cast<int>(nbrs.size());

        // Every unordered 2-block split; the first neighbor is pinned to
        // block A, both polarities cover the channel swap.
        for (std::uint32_t mask = 0; mask < (1u << (d - 1)); ++mask) {
            Partition part;
            part.block_a.push_back(nbrs[0]);
            for (int j = 1; j < d; ++j) {
                if (mask & (1u << (j - 1)))
                    part.block_a.push_back(nbrs[j]);
                else
                    part.block_b.push_back(nbrs[j]);
            }
            if (!partition_valid(part)) continue;
            for (int flip = 0; flip < 2; ++flip) {
                ChannelAssignment channels = assign_channels(rooted, part, flip != 0);
                auto antennas = build_antennas(inst, rooted, part, channels, ctx.cache);
                ctx.eval.bind(rooted, channels, antennas);
                FrequencyResult fr = exhaustive_frequency_oracle(ctx.eval, ctx.mode);
                if (!*have_any || fr.objective > running->value) {
                    *have_any = true;
                    running->value = fr.objective;
                    running->breakdown = fr.breakdown;
                    running->design.rooted = rooted;
                    running->design.partition = part;
                    running->design.channels = std::move(channels);
                    running->design.freq_mhz = std::move(fr.freq_mhz);
                    running->design.antennas = std::move(antennas);
                }
            }
        }
    }
    return *running;
}

Topology tree_from_pruefer(int n, const std::vector<int>& seq) {
    std::vector<int> deg(n, 1);
    for (int s : seq) ++deg[s];
    std::vector<char> used(n, 0);
    std::vector<Edge> edges;
    for (int s : seq) {
        int leaf = -1;
        for (int v = 0; v < n && leaf < 0; ++v)
            if (deg[v] == 1 && !used[v]) leaf = v;
        edges.push_back(make_edge(leaf, s));
        used[leaf] = 1;
        --deg[s];
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v) {
        if (used[v] || deg[v] != 1) continue;
        (a < 0 ? a : b) = v;
    }
    edges.push_back(make_edge(a, b));
    return topology_from_edges(n, std::move(edges));
}

}  // namespace

BoundResult exhaustive_best_for_topology(const Instance& inst, const Topology& t,
                                         FrequencyMode mode) {
    if (inst.size() > 6)
        throw std::invalid_argument("exhaustive_best_for_topology: n > 6");
    BoundContext ctx(inst);
    ctx.mode = mode;
    BoundResult best;
    bool have = false;
    best_for_topology_impl(ctx, t, &have, &best);
    return best;
}

BoundResult exhaustive_solver(const Instance& inst, FrequencyMode mode) {
    const int n = inst.size();
    if (n < 2 || n > 6) throw std::invalid_argument("exhaustive_solver: need 2 <= n <= 6");
    BoundContext ctx(inst);
    ctx.mode = mode;

    BoundResult best;
    bool have = false;
    std::vector<int> seq(std::max(0, n - 2), 0);
    for (;;) {
        Topology t = tree_from_pruefer(n, seq);
        best_for_topology_impl(ctx, t, &have, &best);

        int pos = static_cast<int>(seq.size()) - 1;
        while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
        if (pos < 0) break;
        ++seq[pos];
    }
    return best;
}

}  // namespace netdesign
