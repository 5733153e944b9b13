#include "turan/containers.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "turan/random_model.hpp"

namespace turan {

namespace {

std::vector<EdgeId> all_ids(int count) {
    std::vector<EdgeId> ids(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) ids[static_cast<std::size_t>(i)] = i;
    return ids;
}

}  // namespace

ContainerSet build_containers(const CycleHypergraph& S, double tau, double eps,
                              double vertex_eps) {
    if (!(tau > 0.0 && tau < 0.5))
        throw std::invalid_argument("build_containers: tau must lie in (0, 1/2)");
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument("build_containers: eps must lie in (0, 1)");
    int nv = S.n();

    ContainerSet cs;
    cs.epsilon_used = eps;
    cs.log_size_bound = tau * nv * std::log(1.0 / tau) / eps;

    if (S.num_edges() == 0) {
        cs.degenerate = true;
        cs.containers.push_back(all_ids(nv));
        cs.container_edge_counts.push_back(0);
        return cs;
    }
    cs.codegree_ok = S.codegree_function(tau) <= eps;

    double edge_target = (1.0 - eps) * S.num_edges() + 1e-9;
    double vertex_target = (1.0 - vertex_eps) * nv + 1e-9;

    std::set<std::vector<int>> visited;
    std::set<std::vector<int>> leaves;
    std::vector<std::vector<int>> stack{all_ids(nv)};
    visited.insert(stack.back());
    std::vector<char> in_a(static_cast<std::size_t>(nv));
    std::vector<int> deg(static_cast<std::size_t>(nv));

    while (!stack.empty()) {
        std::vector<int> a = std::move(stack.back());
        stack.pop_back();
        ++cs.trace_nodes;

        std::fill(in_a.begin(), in_a.end(), 0);
        for (int v : a) in_a[static_cast<std::size_t>(v)] = 1;

        std::fill(deg.begin(), deg.end(), 0);
        int inside = 0;
        EdgeId branch_edge = -1;
        for (EdgeId id = 0; id < S.num_edges(); ++id) {
            const Edge& e = S.edge(id);
            bool in = true;
            for (int v : e)
                if (!in_a[static_cast<std::size_t>(v)]) { in = false; break; }
            if (!in) continue;
            ++inside;
            for (int v : e) ++deg[static_cast<std::size_t>(v)];
        }

        bool dense_ok = inside <= edge_target;
        bool size_ok = static_cast<double>(a.size()) <= vertex_target;
        if ((dense_ok && size_ok) || inside == 0) {
            if (!size_ok) cs.density_met = false;
            leaves.insert(std::move(a));
            continue;
        }

        int vstar = -1;
        for (int v : a)
            if (vstar < 0 || deg[static_cast<std::size_t>(v)] > deg[static_cast<std::size_t>(vstar)])
                vstar = v;
        for (EdgeId id = 0; id < S.num_edges(); ++id) {
            const Edge& e = S.edge(id);
            if (!std::binary_search(e.begin(), e.end(), vstar)) continue;
            bool in = true;
            for (int v : e)
                if (!in_a[static_cast<std::size_t>(v)]) { in = false; break; }
            if (in) { branch_edge = id; break; }
        }

        for (int u : S.edge(branch_edge)) {
            std::vector<int> child;
            child.reserve(a.size() - 1);
            for (int v : a)
                if (v != u) child.push_back(v);
            if (visited.insert(child).second) stack.push_back(std::move(child));
        }
    }

    for (const auto& c : leaves) {
        int count = 0;
        std::fill(in_a.begin(), in_a.end(), 0);
        for (int v : c) in_a[static_cast<std::size_t>(v)] = 1;
        for (const Edge& e : S.edges()) {
            bool in = true;
            for (int v : e)
                if (!in_a[static_cast<std::size_t>(v)]) { in = false; break; }
            if (in) ++count;
        }
        cs.containers.push_back(c);
        cs.container_edge_counts.push_back(count);
    }
    return cs;
}

ContainerSet one_step(const Hypergraph& g, const SupersatConfig& cfg, std::uint64_t seed) {
    if (g.num_edges() == 0) throw std::invalid_argument("one_step: edgeless graph");
    double epsp = cfg.use_polylog_epsilon
                      ? cfg.epsilon() / std::pow(std::log(static_cast<double>(g.n())),
                                                 static_cast<double>(cfg.r) * cfg.r * (cfg.ell + 1))
                      : cfg.container_epsilon;

    PipelineResult pr = supersaturation_pipeline(g, cfg, seed);
    bool fallback = false;
    if (pr.S.num_edges() == 0) {
        // The partite pipeline can die at desk scale (too few pendant
        // vertices per part); fall back to the exact cycle family, which is
        // affordable here. no_progress is reserved for genuinely cycle-free g.
        CycleFamily all = enumerate_linear_cycles(g, 2 * cfg.ell, cfg.shadow_cycle_cap);
        if (all.members.empty()) {
            ContainerSet cs;
            cs.epsilon_used = epsp;
            cs.no_progress = true;
            cs.containers.push_back(all_ids(g.num_edges()));
            cs.container_edge_counts.push_back(0);
            return cs;
        }
        pr.S = to_cycle_hypergraph(all);
        fallback = true;
    }

    double tau = pr.report.tau.tau;
    bool clamped = false;
    if (!(tau > 0.0 && tau < 0.5)) {
        tau = 0.49;
        clamped = true;
    }
    ContainerSet cs = build_containers(pr.S, tau, epsp, epsp);
    cs.tau_clamped = clamped;
    cs.pipeline_fallback = fallback;
    return cs;
}

double IterationConfig::schedule_K(int i, int n) const {
    double logn = std::log(static_cast<double>(n));
    double d = decrement > 0.0 ? decrement
                               : eps / std::pow(logn, static_cast<double>(r) * r * (ell + 1));
    double floor_val = K0 * std::pow(logn, 2.0 * r * (r - 1));
    return std::max(std::pow(1.0 - d, i) * n, floor_val);
}

void IterationConfig::validate() const {
    if (r < 2 || ell < 2) throw std::invalid_argument("IterationConfig: r < 2 or ell < 2");
    if (decrement > 0.0 && decrement >= 1.0)
        throw std::invalid_argument("IterationConfig: decrement must lie in (0,1)");
    if (decrement <= 0.0 && !(eps > 0.0))
        throw std::invalid_argument("IterationConfig: need eps > 0 or an explicit decrement");
    if (K_target < 0.0) throw std::invalid_argument("IterationConfig: negative K_target");
}

IterateResult iterate(const Hypergraph& g, const IterationConfig& icfg, const SupersatConfig& cfg,
                      std::uint64_t seed) {
    icfg.validate();
    if (g.r() != icfg.r) throw std::invalid_argument("iterate: config r mismatch");
    int n = g.n();
    double scale = std::pow(n, g.r() - 1);

    IterateResult res;
    res.set.epsilon_used = cfg.use_polylog_epsilon
                               ? cfg.epsilon() / std::pow(std::log(static_cast<double>(n)),
                                                          static_cast<double>(cfg.r) * cfg.r * (cfg.ell + 1))
                               : cfg.container_epsilon;
    res.K_schedule.push_back(icfg.schedule_K(0, n));

    std::set<std::vector<EdgeId>> current{all_ids(g.num_edges())};

    auto target_met = [&] {
        for (const auto& c : current)
            if (static_cast<double>(c.size()) > icfg.K_target * scale + 1e-9) return false;
        return true;
    };

    if (target_met()) {
        res.reached_target = true;
        for (const auto& c : current) {
            res.set.containers.push_back(c);
            res.set.container_edge_counts.push_back(static_cast<int>(c.size()));
        }
        return res;
    }

    for (int i = 1; i <= icfg.max_iterations; ++i) {
        double K_i = icfg.schedule_K(i, n);
        res.K_schedule.push_back(K_i);
        double threshold = std::max(K_i, icfg.K_target) * scale;

        std::set<std::vector<EdgeId>> next;
        int idx = 0;
        bool refined_any = false;
        for (const auto& c : current) {
            ++idx;
            if (static_cast<double>(c.size()) <= threshold + 1e-9) {
                next.insert(c);
                continue;
            }
            Hypergraph sub = g.subgraph(c);
            std::uint64_t s = mix64(seed ^ mix64((static_cast<std::uint64_t>(i) << 32) |
                                                 static_cast<std::uint64_t>(idx)));
            ContainerSet step = one_step(sub, cfg, s);
            if (step.no_progress) {
                res.aborted = true;
                res.diagnostic = "no progress on a container of " + std::to_string(c.size()) +
                                 " edges at iteration " + std::to_string(i);
                for (const auto& cc : current) {
                    res.set.containers.push_back(cc);
                    res.set.container_edge_counts.push_back(static_cast<int>(cc.size()));
                }
                res.iterations = i - 1;
                return res;
            }
            if (!step.density_met) res.set.density_met = false;
            refined_any = true;
            for (const auto& sc : step.containers) {
                std::vector<EdgeId> mapped;
                mapped.reserve(sc.size());
                for (EdgeId sid : sc) mapped.push_back(*g.edge_id(sub.edge(sid)));
                std::sort(mapped.begin(), mapped.end());
                next.insert(std::move(mapped));
            }
        }
        current = std::move(next);
        res.iterations = i;
        (void)refined_any;
        if (target_met()) {
            res.reached_target = true;
            break;
        }
    }

    for (const auto& c : current) {
        res.set.containers.push_back(c);
        res.set.container_edge_counts.push_back(static_cast<int>(c.size()));
    }
    return res;
}

namespace {

struct HittingSearch {
    const std::vector<std::vector<EdgeId>>& cycles;
    int num_edges;
    long long node_budget;
    std::vector<int> coverage;  // global member count per edge
    std::vector<char> chosen, forbidden;
    std::vector<char> best_set;
    int best;
    long long nodes = 0;
    bool aborted = false;

    HittingSearch(const std::vector<std::vector<EdgeId>>& cyc, int m, long long budget)
        : cycles(cyc), num_edges(m), node_budget(budget),
          coverage(static_cast<std::size_t>(m), 0),
          chosen(static_cast<std::size_t>(m), 0), forbidden(static_cast<std::size_t>(m), 0),
          best(m + 1) {
        for (const auto& c : cycles)
            for (EdgeId e : c) ++coverage[static_cast<std::size_t>(e)];
    }

    bool hit(const std::vector<EdgeId>& c) const {
        for (EdgeId e : c)
            if (chosen[static_cast<std::size_t>(e)]) return true;
        return false;
    }

    int packing_bound(const std::vector<const std::vector<EdgeId>*>& unhit) const {
        std::vector<char> used(static_cast<std::size_t>(num_edges), 0);
        int packed = 0;
        for (const auto* c : unhit) {
            bool free = true;
            for (EdgeId e : *c)
                if (used[static_cast<std::size_t>(e)]) { free = false; break; }
            if (!free) continue;
            for (EdgeId e : *c) used[static_cast<std::size_t>(e)] = 1;
            ++packed;
        }
        return packed;
    }

    void rec(int count) {
        if (aborted) return;
        if (++nodes > node_budget) { aborted = true; return; }

        std::vector<const std::vector<EdgeId>*> unhit;
        for (const auto& c : cycles)
            if (!hit(c)) unhit.push_back(&c);
        if (unhit.empty()) {
            if (count < best) {
                best = count;
                best_set = chosen;
            }
            return;
        }
        if (count + packing_bound(unhit) >= best) return;

        // branch on the unhit cycle with the fewest selectable edges
        const std::vector<EdgeId>* pick = nullptr;
        int pick_avail = num_edges + 1;
        for (const auto* c : unhit) {
            int avail = 0;
            for (EdgeId e : *c)
                if (!forbidden[static_cast<std::size_t>(e)]) ++avail;
            if (avail < pick_avail) {
                pick_avail = avail;
                pick = c;
            }
        }
        if (pick_avail == 0) return;

        std::vector<EdgeId> branch;
        for (EdgeId e : *pick)
            if (!forbidden[static_cast<std::size_t>(e)]) branch.push_back(e);
        std::sort(branch.begin(), branch.end(), [&](EdgeId a, EdgeId b) {
            int ca = coverage[static_cast<std::size_t>(a)], cb = coverage[static_cast<std::size_t>(b)];
            return ca != cb ? ca > cb : a < b;
        });

        for (EdgeId e : branch) {
            chosen[static_cast<std::size_t>(e)] = 1;
            rec(count + 1);
            chosen[static_cast<std::size_t>(e)] = 0;
            forbidden[static_cast<std::size_t>(e)] = 1;
            if (aborted) break;
        }
        for (EdgeId e : branch) forbidden[static_cast<std::size_t>(e)] = 0;
    }
};

std::vector<char> greedy_hitting(const std::vector<std::vector<EdgeId>>& cycles, int num_edges) {
    std::vector<char> chosen(static_cast<std::size_t>(num_edges), 0);
    std::vector<char> alive(cycles.size(), 1);
    std::size_t remaining = cycles.size();
    while (remaining > 0) {
        std::vector<int> cov(static_cast<std::size_t>(num_edges), 0);
        for (std::size_t i = 0; i < cycles.size(); ++i)
            if (alive[i])
                for (EdgeId e : cycles[i]) ++cov[static_cast<std::size_t>(e)];
        int bestE = 0;
        for (int e = 1; e < num_edges; ++e)
            if (cov[static_cast<std::size_t>(e)] > cov[static_cast<std::size_t>(bestE)]) bestE = e;
        chosen[static_cast<std::size_t>(bestE)] = 1;
        for (std::size_t i = 0; i < cycles.size(); ++i)
            if (alive[i])
                for (EdgeId e : cycles[i])
                    if (e == bestE) {
                        alive[i] = 0;
                        --remaining;
                        break;
                    }
    }
    return chosen;
}

ExactResult result_from_hitting(const Hypergraph& g, const std::vector<char>& chosen) {
    ExactResult res;
    for (EdgeId id = 0; id < g.num_edges(); ++id)
        if (!chosen[static_cast<std::size_t>(id)]) res.witness.push_back(id);
    res.value = static_cast<long long>(res.witness.size());
    return res;
}

}  // namespace

ExactResult exact_ex(const Hypergraph& g, int ell, long long cycle_cap, long long node_budget) {
    CycleFamily fam = enumerate_linear_cycles(g, 2 * ell, cycle_cap);
    if (fam.truncated) {
        ExactResult res = greedy_ex(g, ell, cycle_cap);
        res.feasible = false;
        return res;
    }
    if (fam.members.empty()) {
        ExactResult res;
        res.witness = all_ids(g.num_edges());
        res.value = g.num_edges();
        res.feasible = true;
        return res;
    }

    HittingSearch search(fam.members, g.num_edges(), node_budget);
    std::vector<char> greedy = greedy_hitting(fam.members, g.num_edges());
    search.best_set = greedy;
    search.best = static_cast<int>(std::count(greedy.begin(), greedy.end(), 1));
    search.rec(0);

    ExactResult res = result_from_hitting(g, search.best_set);
    res.feasible = !search.aborted;
    res.cycles_found = static_cast<long long>(fam.members.size());
    res.nodes = search.nodes;
    return res;
}

ExactResult greedy_ex(const Hypergraph& g, int ell, long long cycle_cap) {
    CycleFamily fam = enumerate_linear_cycles(g, 2 * ell, cycle_cap);
    if (!fam.truncated) {
        std::vector<char> chosen = fam.members.empty()
                                       ? std::vector<char>(static_cast<std::size_t>(g.num_edges()), 0)
                                       : greedy_hitting(fam.members, g.num_edges());
        ExactResult res = result_from_hitting(g, chosen);
        res.feasible = true;
        res.cycles_found = static_cast<long long>(fam.members.size());
        return res;
    }

    // family too large to hold: detect-and-delete one cycle at a time
    Hypergraph cur = g;
    std::vector<char> removed(static_cast<std::size_t>(g.num_edges()), 0);
    while (true) {
        CycleFamily one = enumerate_linear_cycles(cur, 2 * ell, 1);
        if (one.members.empty()) break;
        EdgeId victim_cur = one.members.front().front();
        EdgeId victim_host = *g.edge_id(cur.edge(victim_cur));
        removed[static_cast<std::size_t>(victim_host)] = 1;
        cur = cur.remove_edge_ids({victim_cur});
    }
    ExactResult res = result_from_hitting(g, removed);
    res.feasible = true;
    res.cycles_found = -1;
    return res;
}

double union_bound_check(double container_log_size, double K, long long m_edges, double p, int n,
                         int r) {
    if (container_log_size < 0.0 || K <= 0.0 || m_edges < 0 || p < 0.0 || p > 1.0 || n < 1 || r < 2)
        throw std::invalid_argument("union_bound_check: inputs out of range");
    double N = K * std::pow(n, r - 1);
    double inf = std::numeric_limits<double>::infinity();
    if (static_cast<double>(m_edges) > N) return -inf;
    if (m_edges > 0 && p == 0.0) return -inf;
    double m = static_cast<double>(m_edges);
    double log_binom = std::lgamma(N + 1.0) - std::lgamma(m + 1.0) - std::lgamma(N - m + 1.0);
    double log_p_term = m_edges == 0 ? 0.0 : m * std::log(p);
    return container_log_size + log_binom + log_p_term;
}

void write_containers(std::ostream& os, const ContainerSet& cs, const std::string& host_name,
                      int iteration) {
    os << "containers " << cs.containers.size() << " host " << host_name << " epsilon "
       << cs.epsilon_used << " iteration " << iteration << '\n';
    for (const auto& c : cs.containers) {
        if (c.empty()) {
            os << "-\n";
            continue;
        }
        for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
        os << '\n';
    }
}

ContainerSet read_containers(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("read_containers: missing header");
    std::istringstream hs(line);
    std::string tag, host_tag, host, eps_tag, it_tag;
    std::size_t count = 0;
    int iteration = 0;
    double eps = 0.0;
    if (!(hs >> tag >> count >> host_tag >> host >> eps_tag >> eps >> it_tag >> iteration) ||
        tag != "containers")
        throw std::runtime_error("read_containers: malformed header");
    ContainerSet cs;
    cs.epsilon_used = eps;
    for (std::size_t i = 0; i < count; ++i) {
        if (!std::getline(is, line)) throw std::runtime_error("read_containers: truncated file");
        std::vector<EdgeId> c;
        if (line != "-") {
            std::istringstream ls(line);
            EdgeId id;
            while (ls >> id) c.push_back(id);
        }
        cs.containers.push_back(std::move(c));
        cs.container_edge_counts.push_back(0);
    }
    return cs;
}

}  // namespace turan
