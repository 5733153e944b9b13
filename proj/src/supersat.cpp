#include "turan/supersat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <tuple>

#include "turan/random_model.hpp"

namespace turan {

double SupersatConfig::alpha() const {
    double fact = 1.0;
    for (int i = 2; i <= r; ++i) fact *= i;
    return fact / (2.0 * std::pow(r, pair_count() + r));
}

double SupersatConfig::beta() const {
    return alpha() / (4.0 * pair_count() * std::pow(r, pair_count()));
}

double SupersatConfig::K0() const { return 8.0 * k0 * k0 / (beta() * beta()); }

double SupersatConfig::epsilon() const { return std::pow(delta, 4); }

double SupersatConfig::default_prune_factor(int n) const {
    double R = pair_count();
    return 1.0 / (2.0 * R * std::pow(r * std::log(static_cast<double>(n)), R));
}

void SupersatConfig::validate() const {
    if (r < 2) throw std::invalid_argument("SupersatConfig: r < 2");
    if (ell < 2) throw std::invalid_argument("SupersatConfig: ell < 2");
    if (!(delta > 0.0 && delta < 1.0 / (2.0 * ell)))
        throw std::invalid_argument("SupersatConfig: need 0 < delta < 1/(2 ell)");
    if (Q <= 0.0 || k0 <= 0.0)
        throw std::invalid_argument("SupersatConfig: constants must be positive");
}

int pair_index(int i, int j, int r) {
    if (i < 1 || j <= i || j > r) throw std::invalid_argument("pair_index: need 1 <= i < j <= r");
    // pairs (1,2),(1,3),...,(1,r),(2,3),...
    int idx = 0;
    for (int a = 1; a < i; ++a) idx += r - a;
    return idx + (j - i - 1);
}

int DyadicProfile::delta_ij(int i, int j) const {
    return 1 << s[static_cast<std::size_t>(pair_index(i, j, r))];
}

namespace {

int floor_log2(int d) {
    int s = 0;
    while (d >= 2) { d >>= 1; ++s; }
    return s;
}

struct PartiteAssignment {
    const Hypergraph& g;
    std::vector<int> part;  // part of each vertex, 0-based

    bool transversal(const Edge& e) const {
        // r distinct parts among r vertices
        unsigned mask = 0;
        for (VertexId v : e) {
            unsigned bit = 1u << part[static_cast<std::size_t>(v)];
            if (mask & bit) return false;
            mask |= bit;
        }
        return true;
    }

    int kept_edges() const {
        int count = 0;
        for (const Edge& e : g.edges())
            if (transversal(e)) ++count;
        return count;
    }
};

}  // namespace

PartiteHypergraph partite_reduce(const Hypergraph& g, const SupersatConfig& cfg, std::uint64_t seed) {
    if (g.num_edges() == 0) throw std::invalid_argument("partite_reduce: edgeless graph");
    int r = g.r();
    int n = g.n();
    double fact = 1.0;
    for (int i = 2; i <= r; ++i) fact *= i;
    double bound = fact * g.num_edges() / std::pow(r, r);

    for (int restart = 0; restart < cfg.partite_restarts; ++restart) {
        std::uint64_t rseed = mix64(seed + static_cast<std::uint64_t>(restart) * 0x9e3779b97f4a7c15ull);
        PartiteAssignment asg{g, std::vector<int>(static_cast<std::size_t>(n))};
        for (VertexId v = 0; v < n; ++v) {
            double u = edge_uniform(rseed, static_cast<std::uint64_t>(v));
            int q = static_cast<int>(u * r);
            asg.part[static_cast<std::size_t>(v)] = std::min(q, r - 1);
        }

        // Single-vertex local moves, best improving move per vertex, until fixpoint.
        bool improved = true;
        while (improved) {
            improved = false;
            for (VertexId v = 0; v < n; ++v) {
                int cur = asg.part[static_cast<std::size_t>(v)];
                int base_kept = 0;
                for (EdgeId id : g.incident(v))
                    if (asg.transversal(g.edge(id))) ++base_kept;
                int best_gain = 0, best_q = cur;
                for (int q = 0; q < r; ++q) {
                    if (q == cur) continue;
                    asg.part[static_cast<std::size_t>(v)] = q;
                    int kept = 0;
                    for (EdgeId id : g.incident(v))
                        if (asg.transversal(g.edge(id))) ++kept;
                    if (kept - base_kept > best_gain) {
                        best_gain = kept - base_kept;
                        best_q = q;
                    }
                }
                asg.part[static_cast<std::size_t>(v)] = best_q;
                if (best_gain > 0) improved = true;
            }
        }

        if (asg.kept_edges() + 1e-9 >= bound) {
            std::vector<std::vector<VertexId>> parts(static_cast<std::size_t>(r));
            for (VertexId v = 0; v < n; ++v)
                parts[static_cast<std::size_t>(asg.part[static_cast<std::size_t>(v)])].push_back(v);
            std::vector<EdgeId> kept;
            for (EdgeId id = 0; id < g.num_edges(); ++id)
                if (asg.transversal(g.edge(id))) kept.push_back(id);
            return PartiteHypergraph(g.subgraph(kept), std::move(parts));
        }
    }
    throw std::runtime_error("partite_reduce: Erdos-Kleitman bound not met within restart budget");
}

std::pair<DyadicProfile, PartiteHypergraph> dyadic_classify(const PartiteHypergraph& h,
                                                            int* class_count) {
    const Hypergraph& base = h.base();
    if (base.num_edges() == 0) throw std::invalid_argument("dyadic_classify: edgeless graph");
    int r = h.r();
    int R = r * (r - 1) / 2;

    std::map<std::vector<int>, std::vector<EdgeId>> classes;
    for (EdgeId id = 0; id < base.num_edges(); ++id) {
        const Edge& e = base.edge(id);
        std::vector<VertexId> by_part(static_cast<std::size_t>(r), -1);
        for (VertexId v : e) by_part[static_cast<std::size_t>(h.part_of(v))] = v;
        std::vector<int> prof(static_cast<std::size_t>(R));
        for (int i = 1; i <= r; ++i)
            for (int j = i + 1; j <= r; ++j) {
                int d = base.degree({by_part[static_cast<std::size_t>(i - 1)],
                                     by_part[static_cast<std::size_t>(j - 1)]});
                prof[static_cast<std::size_t>(pair_index(i, j, r))] = floor_log2(d);
            }
        classes[prof].push_back(id);
    }
    if (class_count) *class_count = static_cast<int>(classes.size());

    const std::vector<int>* best_prof = nullptr;
    const std::vector<EdgeId>* best_ids = nullptr;
    for (const auto& [prof, ids] : classes) {
        if (!best_ids || ids.size() > best_ids->size()) {
            best_prof = &prof;
            best_ids = &ids;
        }
    }

    Hypergraph h0 = base.subgraph(*best_ids);
    std::vector<std::vector<VertexId>> parts(static_cast<std::size_t>(r));
    for (const Edge& e : h0.edges())
        for (VertexId v : e) parts[static_cast<std::size_t>(h.part_of(v))].push_back(v);
    for (auto& p : parts) {
        std::sort(p.begin(), p.end());
        p.erase(std::unique(p.begin(), p.end()), p.end());
    }
    return {DyadicProfile{r, *best_prof}, PartiteHypergraph(std::move(h0), std::move(parts))};
}

RegularizedSubgraph prune_regularize(const PartiteHypergraph& h0, const DyadicProfile& profile,
                                     double prune_factor) {
    const Hypergraph& base = h0.base();
    if (base.num_edges() == 0) throw std::invalid_argument("prune_regularize: edgeless graph");
    if (prune_factor < 0.0) throw std::invalid_argument("prune_regularize: negative prune factor");
    int r = h0.r();

    // (pair index, v_i, v_j) -> edges through that pair; lexicographic scan order.
    std::map<std::tuple<int, VertexId, VertexId>, std::vector<EdgeId>> postings;
    for (EdgeId id = 0; id < base.num_edges(); ++id) {
        const Edge& e = base.edge(id);
        std::vector<VertexId> by_part(static_cast<std::size_t>(r), -1);
        for (VertexId v : e) by_part[static_cast<std::size_t>(h0.part_of(v))] = v;
        for (int i = 1; i <= r; ++i)
            for (int j = i + 1; j <= r; ++j)
                postings[{pair_index(i, j, r), by_part[static_cast<std::size_t>(i - 1)],
                          by_part[static_cast<std::size_t>(j - 1)]}]
                    .push_back(id);
    }

    RegularizedSubgraph out;
    out.profile = profile;
    out.prune_factor = prune_factor;
    out.e_H0 = base.num_edges();
    for (const auto& [key, ids] : postings) {
        (void)ids;
        out.deletion_budget += prune_factor * (1 << profile.s[static_cast<std::size_t>(std::get<0>(key))]);
    }
    out.budget_certificate = out.deletion_budget <= base.num_edges() / 2.0;

    std::vector<char> alive(static_cast<std::size_t>(base.num_edges()), 1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [key, ids] : postings) {
            double threshold = prune_factor * (1 << profile.s[static_cast<std::size_t>(std::get<0>(key))]);
            int count = 0;
            for (EdgeId id : ids)
                if (alive[static_cast<std::size_t>(id)]) ++count;
            if (count > 0 && count < threshold) {
                for (EdgeId id : ids) alive[static_cast<std::size_t>(id)] = 0;
                changed = true;
            }
        }
    }

    std::vector<EdgeId> kept;
    for (EdgeId id = 0; id < base.num_edges(); ++id)
        if (alive[static_cast<std::size_t>(id)]) kept.push_back(id);
    out.e_Hprime = static_cast<int>(kept.size());
    if (kept.empty()) {
        out.empty = true;
        out.h_prime = PartiteHypergraph(base.subgraph({}),
                                        std::vector<std::vector<VertexId>>(static_cast<std::size_t>(r)));
        return out;
    }

    Hypergraph pruned = base.subgraph(kept);
    std::vector<std::vector<VertexId>> parts(static_cast<std::size_t>(r));
    for (const Edge& e : pruned.edges())
        for (VertexId v : e) parts[static_cast<std::size_t>(h0.part_of(v))].push_back(v);
    for (auto& p : parts) {
        std::sort(p.begin(), p.end());
        p.erase(std::unique(p.begin(), p.end()), p.end());
    }
    out.h_prime = PartiteHypergraph(std::move(pruned), std::move(parts));
    return out;
}

std::pair<int, int> select_shadow_pair(const RegularizedSubgraph& hp) {
    if (hp.empty || hp.h_prime.base().num_edges() == 0)
        throw std::invalid_argument("select_shadow_pair: empty H'");
    int r = hp.h_prime.r();
    int best_i = 1, best_j = 2;
    std::size_t best_size = 0;
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) {
            std::size_t size = shadow(hp.h_prime, i, j).pairs.size();
            if (size > best_size) {
                best_size = size;
                best_i = i;
                best_j = j;
            }
        }
    return {best_i, best_j};
}

Hypergraph shadow_graph(const PairShadow& sh, int n) {
    std::vector<Edge> edges;
    edges.reserve(sh.pairs.size());
    for (auto [a, b] : sh.pairs) {
        Edge e{a, b};
        std::sort(e.begin(), e.end());
        edges.push_back(std::move(e));
    }
    return Hypergraph(n, 2, std::move(edges));
}

ShadowFamilyResult build_shadow_family(const Hypergraph& shadow2, int ell,
                                       std::vector<double> caps, const SupersatConfig& cfg,
                                       double k_value, int m_value) {
    int twoL = 2 * ell;
    ShadowFamilyResult res;
    if (caps.empty()) {
        caps.resize(static_cast<std::size_t>(twoL - 1));
        for (int j = 1; j <= twoL - 1; ++j) {
            double cap = cfg.Q * std::pow(k_value, twoL - j - (j - 1) / static_cast<double>(ell - 1)) *
                         std::pow(m_value, 1.0 - 1.0 / ell);
            caps[static_cast<std::size_t>(j - 1)] = std::max(1.0, cap);
        }
    }
    if (static_cast<int>(caps.size()) != twoL - 1)
        throw std::invalid_argument("build_shadow_family: need 2l-1 caps");
    res.caps = caps;

    CycleFamily all = enumerate_linear_cycles(shadow2, twoL, cfg.shadow_cycle_cap);
    res.family.k = twoL;
    res.family.host_edge_count = shadow2.num_edges();
    res.family.truncated = all.truncated;
    res.achieved.assign(static_cast<std::size_t>(twoL - 1), 0);

    // one subset-count table per tuple size j
    std::vector<std::unordered_map<std::vector<int>, int, VecHash>> counts(
        static_cast<std::size_t>(twoL));
    std::vector<int> subset;
    for (const auto& mem : all.members) {
        bool ok = true;
        // check every j-subset against its cap before committing
        for (int j = 1; j <= twoL - 1 && ok; ++j) {
            double cap = caps[static_cast<std::size_t>(j - 1)];
            std::vector<int> idx(static_cast<std::size_t>(j));
            for (int i = 0; i < j; ++i) idx[static_cast<std::size_t>(i)] = i;
            while (true) {
                subset.assign(static_cast<std::size_t>(j), 0);
                for (int i = 0; i < j; ++i)
                    subset[static_cast<std::size_t>(i)] = mem[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
                auto it = counts[static_cast<std::size_t>(j)].find(subset);
                int cur = (it == counts[static_cast<std::size_t>(j)].end()) ? 0 : it->second;
                if (cur + 1 > cap) { ok = false; break; }
                int i = j - 1;
                while (i >= 0 && idx[static_cast<std::size_t>(i)] == twoL - j + i) --i;
                if (i < 0) break;
                ++idx[static_cast<std::size_t>(i)];
                for (int t = i + 1; t < j; ++t)
                    idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
            }
        }
        if (!ok) continue;
        for (int j = 1; j <= twoL - 1; ++j) {
            std::vector<int> idx(static_cast<std::size_t>(j));
            for (int i = 0; i < j; ++i) idx[static_cast<std::size_t>(i)] = i;
            while (true) {
                subset.assign(static_cast<std::size_t>(j), 0);
                for (int i = 0; i < j; ++i)
                    subset[static_cast<std::size_t>(i)] = mem[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
                int c = ++counts[static_cast<std::size_t>(j)][subset];
                res.achieved[static_cast<std::size_t>(j - 1)] =
                    std::max(res.achieved[static_cast<std::size_t>(j - 1)], c);
                int i = j - 1;
                while (i >= 0 && idx[static_cast<std::size_t>(i)] == twoL - j + i) --i;
                if (i < 0) break;
                ++idx[static_cast<std::size_t>(i)];
                for (int t = i + 1; t < j; ++t)
                    idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
            }
        }
        res.family.members.push_back(mem);
    }

    res.size_target = cfg.effective_delta0() * std::pow(k_value, twoL) * static_cast<double>(m_value) * m_value;
    res.size_target_met = static_cast<double>(res.family.members.size()) >= res.size_target;
    return res;
}

ExtendResult extend_family(const CycleFamily& shadow_family, const Hypergraph& shadow2,
                           const RegularizedSubgraph& hp, const Hypergraph& host,
                           long long cap) {
    const Hypergraph& hpg = hp.h_prime.base();
    ExtendResult res;
    res.family.k = shadow_family.k;
    res.family.host_edge_count = host.num_edges();

    std::set<std::vector<EdgeId>> members;
    for (const auto& mem : shadow_family.members) {
        std::vector<EdgeId> order = cyclic_edge_order(shadow2, mem);
        int len = static_cast<int>(order.size());

        std::vector<char> used(static_cast<std::size_t>(host.n()), 0);
        for (EdgeId pe : order)
            for (VertexId v : shadow2.edge(pe)) used[static_cast<std::size_t>(v)] = 1;

        // candidate H'-edges per position
        std::vector<std::vector<EdgeId>> cands(static_cast<std::size_t>(len));
        for (int t = 0; t < len; ++t) {
            const Edge& pr = shadow2.edge(order[static_cast<std::size_t>(t)]);
            for (EdgeId id : hpg.incident(pr[0])) {
                const Edge& e = hpg.edge(id);
                if (std::binary_search(e.begin(), e.end(), pr[1]))
                    cands[static_cast<std::size_t>(t)].push_back(id);
            }
        }

        long long ext_count = 0;
        std::vector<EdgeId> chosen(static_cast<std::size_t>(len));
        bool capped = false;

        auto dfs = [&](auto&& self, int t) -> void {
            if (capped) return;
            if (t == len) {
                ++ext_count;
                std::vector<EdgeId> member;
                member.reserve(static_cast<std::size_t>(len));
                for (EdgeId id : chosen) {
                    auto hid = host.edge_id(hpg.edge(id));
                    if (!hid) throw std::logic_error("extend_family: H' edge not in host");
                    member.push_back(*hid);
                }
                std::sort(member.begin(), member.end());
                members.insert(std::move(member));
                if (cap >= 0 && static_cast<long long>(members.size()) >= cap) {
                    capped = true;
                    res.family.truncated = true;
                }
                return;
            }
            const Edge& pr = shadow2.edge(order[static_cast<std::size_t>(t)]);
            for (EdgeId id : cands[static_cast<std::size_t>(t)]) {
                const Edge& e = hpg.edge(id);
                bool ok = true;
                for (VertexId v : e)
                    if (v != pr[0] && v != pr[1] && used[static_cast<std::size_t>(v)]) { ok = false; break; }
                if (!ok) continue;
                for (VertexId v : e)
                    if (v != pr[0] && v != pr[1]) used[static_cast<std::size_t>(v)] = 1;
                chosen[static_cast<std::size_t>(t)] = id;
                self(self, t + 1);
                for (VertexId v : e)
                    if (v != pr[0] && v != pr[1]) used[static_cast<std::size_t>(v)] = 0;
                if (capped) return;
            }
        };
        dfs(dfs, 0);
        res.extensions_per_member.push_back(ext_count);
        if (capped) break;
    }

    res.family.members.assign(members.begin(), members.end());
    return res;
}

TauChoice choose_tau(double K, int n, int r, int ell, double delta) {
    if (K <= 0.0) throw std::invalid_argument("choose_tau: K must be positive");
    double logn = std::log(static_cast<double>(n));
    double r2 = static_cast<double>(r) * r;
    TauChoice t;
    t.branch1 = std::pow(delta, -3.0) * std::pow(logn, r2 * (ell + 2)) *
                std::pow(K, -(2.0 * ell - 1) / (2.0 * ell - 2)) *
                std::pow(n, -(r - 2) + 1.0 / (2.0 * ell - 2));
    t.branch2 = std::pow(delta, -3.0) * std::pow(logn, 2.0 * r2) * (1.0 / K) *
                std::pow(n, -(r - 2) + 1.0 / (2.0 * ell - 1));
    t.tau = std::max(t.branch1, t.branch2);
    t.below_half = t.tau < 0.5;
    return t;
}

namespace {

void add_check(SupersatReport& rep, const std::string& name, double measured, double target,
               bool geq, bool informational) {
    PropertyCheck c;
    c.name = name;
    c.measured = measured;
    c.target = target;
    c.pass = geq ? (measured >= target) : (measured <= target);
    c.informational = informational;
    rep.checks.push_back(std::move(c));
}

}  // namespace

PipelineResult supersaturation_pipeline(const Hypergraph& g, const SupersatConfig& cfg,
                                        std::uint64_t seed) {
    cfg.validate();
    if (g.r() != cfg.r) throw std::invalid_argument("supersaturation_pipeline: config r mismatch");
    int n = g.n();
    int r = g.r();
    int ell = cfg.ell;
    int twoL = 2 * ell;
    double logn = std::log(static_cast<double>(n));
    double R = cfg.pair_count();

    SupersatReport rep;
    rep.n = n;
    rep.r = r;
    rep.ell = ell;
    rep.seed = seed;
    rep.e_G = g.num_edges();
    rep.delta_S_tau = std::nan("");

    auto empty_result = [&](const std::string& stage) {
        rep.empty_stage = stage;
        return PipelineResult{Hypergraph(g.num_edges(), twoL, {}), rep};
    };

    if (g.num_edges() == 0) return empty_result("input");

    rep.K = g.num_edges() / std::pow(n, r - 1);
    rep.K_hypothesis_met = rep.K >= cfg.K0() * std::pow(logn, 2.0 * r * (r - 1));

    PartiteHypergraph h = partite_reduce(g, cfg, seed);
    rep.e_H = h.base().num_edges();
    double fact = 1.0;
    for (int i = 2; i <= r; ++i) fact *= i;
    add_check(rep, "erdos_kleitman", rep.e_H, fact * rep.e_G / std::pow(r, r), true, false);

    auto [profile, h0] = dyadic_classify(h, &rep.dyadic_classes);
    rep.e_H0 = h0.base().num_edges();

    double pf = cfg.prune_factor > 0.0 ? cfg.prune_factor : cfg.default_prune_factor(n);
    RegularizedSubgraph hp = prune_regularize(h0, profile, pf);
    rep.e_Hprime = hp.e_Hprime;
    if (hp.budget_certificate)
        add_check(rep, "eHprime_half_of_eH0", hp.e_Hprime, hp.e_H0 / 2.0, true, false);
    if (hp.empty) return empty_result("prune_regularize");
    rep.n_covered = hp.h_prime.base().num_covered_vertices();

    // P1 / P2 on the pruned graph
    {
        const Hypergraph& b = hp.h_prime.base();
        int min_deg = b.num_edges() > 0 ? b.num_edges() : 0;
        for (int i = 0; i < hp.h_prime.r(); ++i)
            for (VertexId v : hp.h_prime.part(i))
                min_deg = std::min(min_deg, static_cast<int>(b.incident(v).size()));
        add_check(rep, "P1_no_isolated", min_deg, 1.0, true, false);

        double worst_lo = 1e300, worst_hi = 0.0;
        for (int i = 1; i <= r; ++i)
            for (int j = i + 1; j <= r; ++j) {
                int dij = profile.delta_ij(i, j);
                for (auto [a, bb] : shadow(hp.h_prime, i, j).pairs) {
                    int d = b.degree({a, bb});
                    worst_lo = std::min(worst_lo, d / (pf * dij));
                    worst_hi = std::max(worst_hi, d / (2.0 * dij));
                }
            }
        add_check(rep, "P2_lower", worst_lo, 1.0, true, false);
        add_check(rep, "P2_upper", worst_hi, 1.0, false, false);
    }

    auto [si, sj] = select_shadow_pair(hp);
    rep.shadow_i = si;
    rep.shadow_j = sj;
    PairShadow sh = shadow(hp.h_prime, si, sj);
    rep.shadow_size = static_cast<int>(sh.pairs.size());
    rep.m = static_cast<int>(hp.h_prime.part(si - 1).size() + hp.h_prime.part(sj - 1).size());
    rep.k = rep.shadow_size / std::pow(rep.m, 1.0 + 1.0 / ell);
    int delta12 = hp.profile.delta_ij(si, sj);

    // Claims 5.4 / 5.5 (instance checks, informational)
    add_check(rep, "claim_delta12", delta12,
              8.0 * ell * std::pow(r, R + 1) * std::pow(logn, R) * std::pow(n, r - 3), true, true);
    add_check(rep, "claim_shadow_delta12", static_cast<double>(rep.shadow_size) * delta12,
              cfg.alpha() * rep.K * std::pow(n, r - 1) / (2.0 * std::pow(logn, R)), true, true);

    Hypergraph sh2 = shadow_graph(sh, g.n());
    ShadowFamilyResult sfr = build_shadow_family(sh2, ell, {}, cfg, rep.k, rep.m);
    rep.shadow_family_size = static_cast<long long>(sfr.family.members.size());
    add_check(rep, "P3_family_size", static_cast<double>(rep.shadow_family_size), sfr.size_target,
              true, true);
    {
        double worst = 0.0;
        for (int j = 1; j <= twoL - 1; ++j)
            worst = std::max(worst, sfr.achieved[static_cast<std::size_t>(j - 1)] /
                                        sfr.caps[static_cast<std::size_t>(j - 1)]);
        add_check(rep, "P4_degree_caps", worst, 1.0, false, false);
    }
    if (sfr.family.members.empty()) return empty_result("build_shadow_family");

    ExtendResult ext = extend_family(sfr.family, sh2, hp, g, cfg.extension_cap);
    if (ext.family.members.empty()) return empty_result("extend_family");
    rep.family_size = static_cast<long long>(ext.family.members.size());

    CycleHypergraph S = to_cycle_hypergraph(ext.family);
    rep.delta_j_S.clear();
    for (int j = 1; j <= twoL - 1; ++j) rep.delta_j_S.push_back(S.max_degree(j));

    double ext_factor = std::pow(delta12 / (4.0 * R * std::pow(r * logn, R)), twoL);
    add_check(rep, "P7_eS", static_cast<double>(rep.family_size),
              cfg.effective_delta0() * std::pow(rep.k, twoL) * rep.m * static_cast<double>(rep.m) * ext_factor,
              true, true);
    {
        double worst = 0.0;
        for (int j = 1; j <= twoL - 1; ++j) {
            double bound = cfg.Q * std::pow(rep.k, twoL - j - (j - 1) / static_cast<double>(ell - 1)) *
                           std::pow(rep.m, 1.0 - 1.0 / ell) * std::pow(2.0 * delta12, twoL - j);
            worst = std::max(worst, rep.delta_j_S[static_cast<std::size_t>(j - 1)] / bound);
        }
        add_check(rep, "P8_delta_j_S", worst, 1.0, false, true);
    }

    rep.tau = choose_tau(rep.K, n, r, ell, cfg.delta);
    if (rep.tau.tau > 0.0 && rep.tau.tau < 1.0) {
        rep.delta_S_tau = S.codegree_function(rep.tau.tau);
        rep.delta_condition = rep.delta_S_tau < cfg.delta;
    }
    add_check(rep, "delta_S_tau_lt_delta", std::isnan(rep.delta_S_tau) ? 1e300 : rep.delta_S_tau,
              cfg.delta, false, true);

    return PipelineResult{std::move(S), std::move(rep)};
}

namespace {
std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}
}  // namespace

void SupersatReport::write(std::ostream& os) const {
    os << "n " << n << '\n'
       << "r " << r << '\n'
       << "ell " << ell << '\n'
       << "seed " << seed << '\n'
       << "e_G " << e_G << '\n'
       << "e_H " << e_H << '\n'
       << "e_H0 " << e_H0 << '\n'
       << "e_Hprime " << e_Hprime << '\n'
       << "n_covered " << n_covered << '\n'
       << "dyadic_classes " << dyadic_classes << '\n'
       << "shadow_pair " << shadow_i << ',' << shadow_j << '\n'
       << "shadow_size " << shadow_size << '\n'
       << "m " << m << '\n'
       << "k " << fmt(k) << '\n'
       << "K " << fmt(K) << '\n'
       << "K_hypothesis_met " << (K_hypothesis_met ? 1 : 0) << '\n'
       << "shadow_family_size " << shadow_family_size << '\n'
       << "family_size " << family_size << '\n';
    os << "delta_j_S";
    if (delta_j_S.empty()) os << " -";
    for (int d : delta_j_S) os << ' ' << d;
    os << '\n';
    os << "tau " << fmt(tau.tau) << '\n'
       << "tau_branch1 " << fmt(tau.branch1) << '\n'
       << "tau_branch2 " << fmt(tau.branch2) << '\n'
       << "tau_below_half " << (tau.below_half ? 1 : 0) << '\n'
       << "delta_S_tau " << fmt(delta_S_tau) << '\n'
       << "delta_condition " << (delta_condition ? 1 : 0) << '\n'
       << "empty_stage " << (empty_stage.empty() ? "-" : empty_stage) << '\n';
    for (const auto& c : checks)
        os << "check." << c.name << ' ' << (c.pass ? "pass" : "fail") << ' ' << fmt(c.measured)
           << ' ' << fmt(c.target) << (c.informational ? " info" : " hard") << '\n';
}

}  // namespace turan
