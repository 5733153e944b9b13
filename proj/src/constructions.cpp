#include "turan/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "turan/cycles.hpp"
#include "turan/random_model.hpp"

namespace turan {

bool is_linear(const SteinerSystem& s) {
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const Edge& b : s.blocks)
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j)
                if (!seen.insert({b[i], b[j]}).second) return false;
    return true;
}

Hypergraph steiner_to_hypergraph(const SteinerSystem& s) {
    return Hypergraph(s.n, s.t, s.blocks);
}

namespace {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

}  // namespace

std::optional<int> bertrand_prime(double lo, double hi) {
    if (!(hi > lo) || lo < 1.0) throw std::invalid_argument("bertrand_prime: need hi > lo >= 1");
    for (int q = static_cast<int>(std::floor(lo)) + 1; static_cast<double>(q) < hi; ++q)
        if (static_cast<double>(q) > lo && is_prime(q)) return q;
    return std::nullopt;
}

SteinerSystem steiner_lines(int n, int t) {
    if (t <= 1 || static_cast<double>(t) > std::sqrt(n / 2.0))
        throw std::invalid_argument("steiner_lines: need 1 < t <= sqrt(n/2)");

    double lo = n / (2.0 * t), hi = static_cast<double>(n) / t;
    int q = 0;
    for (int cand = std::max(static_cast<int>(std::floor(lo)) + 1, t);
         static_cast<double>(cand) < hi; ++cand)
        if (static_cast<double>(cand) > lo && is_prime(cand)) { q = cand; break; }
    if (q == 0)
        throw std::runtime_error("steiner_lines: no prime q with n/2t < q < n/t and q >= t for n=" +
                                 std::to_string(n) + ", t=" + std::to_string(t));

    SteinerSystem s;
    s.n = n;
    s.t = t;
    s.q = q;
    // point (x, y) -> x*q + y; the n - qt padding points are isolated
    for (int m = 0; m < q; ++m)
        for (int c = 0; c < q; ++c) {
            Edge block;
            block.reserve(static_cast<std::size_t>(t));
            for (int x = 0; x < t; ++x) {
                int y = static_cast<int>((static_cast<long long>(m) * x + c) % q);
                block.push_back(x * q + y);
            }
            std::sort(block.begin(), block.end());
            s.blocks.push_back(std::move(block));
        }
    return s;
}

double steiner_blowup_default_p(int n, int t) {
    return std::pow(n, -2.0 / 3.0) / (t * std::log(static_cast<double>(n)));
}

Hypergraph steiner_blowup(int n, int t, double p, std::uint64_t seed, BlowupStats* stats) {
    if (t < 3) throw std::invalid_argument("steiner_blowup: need t >= 3");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("steiner_blowup: p not in [0,1]");
    SteinerSystem s = steiner_lines(n, t);

    std::set<Edge> triples;
    for (const Edge& b : s.blocks)
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j)
                for (std::size_t l = j + 1; l < b.size(); ++l)
                    triples.insert({b[i], b[j], b[l]});

    std::vector<Edge> sampled;
    for (const Edge& e : triples)
        if (edge_uniform(seed, colex_rank(e)) < p) sampled.push_back(e);

    if (stats) {
        stats->blocks = static_cast<int>(s.blocks.size());
        stats->candidate_triples = static_cast<long long>(triples.size());
        stats->sampled = static_cast<long long>(sampled.size());
        stats->deleted = 0;
    }

    Hypergraph cur(n, 3, std::move(sampled));
    while (true) {
        auto cyc = find_short_berge_cycle(cur, 4);
        if (!cyc) break;
        cur = cur.remove_edge_ids({cyc->front()});
        if (stats) ++stats->deleted;
    }
    return cur;
}

Hypergraph star_subgraph(const Hypergraph& g, VertexId v) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("star_subgraph: vertex out of range");
    return g.subgraph(g.incident(v));
}

DeletionResult deletion_subgraph(const Hypergraph& g, int k, long long cap) {
    CycleFamily fam = enumerate_linear_cycles(g, k, cap);
    if (!fam.truncated) {
        std::vector<char> alive(fam.members.size(), 1);
        std::size_t remaining = fam.members.size();
        std::vector<EdgeId> removed;
        while (remaining > 0) {
            std::vector<int> cov(static_cast<std::size_t>(g.num_edges()), 0);
            for (std::size_t i = 0; i < fam.members.size(); ++i)
                if (alive[i])
                    for (EdgeId e : fam.members[i]) ++cov[static_cast<std::size_t>(e)];
            int best = 0;
            for (int e = 1; e < g.num_edges(); ++e)
                if (cov[static_cast<std::size_t>(e)] > cov[static_cast<std::size_t>(best)]) best = e;
            removed.push_back(best);
            for (std::size_t i = 0; i < fam.members.size(); ++i)
                if (alive[i] &&
                    std::binary_search(fam.members[i].begin(), fam.members[i].end(), best)) {
                    alive[i] = 0;
                    --remaining;
                }
        }
        DeletionResult res{g.remove_edge_ids(removed), static_cast<int>(removed.size()),
                           static_cast<long long>(fam.members.size()), false};
        return res;
    }

    Hypergraph cur = g;
    int removed = 0;
    while (true) {
        CycleFamily one = enumerate_linear_cycles(cur, k, 1);
        if (one.members.empty()) break;
        cur = cur.remove_edge_ids({one.members.front().front()});
        ++removed;
    }
    return DeletionResult{std::move(cur), removed, -1, true};
}

namespace {

// Does adding `cand` to the edge set create a Berge cycle of length <= 4?
// Searches edge paths of length <= 3 from cand back to cand.
struct ShortCycleProbe {
    const std::vector<Edge>& edges;
    const std::vector<std::vector<int>>& inc;  // vertex -> indices into edges
    const Edge& cand;
    std::vector<char> used_v;
    std::vector<char> used_e;

    bool closes(int f) const {
        for (VertexId w : edges[static_cast<std::size_t>(f)])
            if (!used_v[static_cast<std::size_t>(w)] &&
                std::binary_search(cand.begin(), cand.end(), w))
                return true;
        return false;
    }

    bool dfs(int f, int depth) {
        if (closes(f)) return true;
        if (depth == 3) return false;
        for (VertexId w : edges[static_cast<std::size_t>(f)]) {
            if (used_v[static_cast<std::size_t>(w)]) continue;
            used_v[static_cast<std::size_t>(w)] = 1;
            for (int g : inc[static_cast<std::size_t>(w)]) {
                if (used_e[static_cast<std::size_t>(g)]) continue;
                used_e[static_cast<std::size_t>(g)] = 1;
                if (dfs(g, depth + 1)) return true;
                used_e[static_cast<std::size_t>(g)] = 0;
            }
            used_v[static_cast<std::size_t>(w)] = 0;
        }
        return false;
    }

    bool run() {
        for (VertexId v : cand) {
            used_v[static_cast<std::size_t>(v)] = 1;
            for (int f : inc[static_cast<std::size_t>(v)]) {
                used_e[static_cast<std::size_t>(f)] = 1;
                if (dfs(f, 1)) return true;
                used_e[static_cast<std::size_t>(f)] = 0;
            }
            used_v[static_cast<std::size_t>(v)] = 0;
        }
        return false;
    }
};

}  // namespace

Hypergraph girth5_base(int m, std::uint64_t seed, int budget) {
    if (m < 3) throw std::invalid_argument("girth5_base: need m >= 3");
    long long target = static_cast<long long>(std::ceil(std::pow(m, 1.5) / 6.0));

    std::vector<Edge> edges;
    std::vector<std::vector<int>> inc(static_cast<std::size_t>(m));
    std::set<Edge> present;
    int rejections = 0;
    std::uint64_t attempt = 0;
    while (rejections < budget && static_cast<long long>(edges.size()) < target) {
        std::uint64_t h = mix64(seed ^ mix64(attempt++));
        Edge cand{static_cast<VertexId>(h % static_cast<std::uint64_t>(m)),
                  static_cast<VertexId>(mix64(h + 1) % static_cast<std::uint64_t>(m)),
                  static_cast<VertexId>(mix64(h + 2) % static_cast<std::uint64_t>(m))};
        std::sort(cand.begin(), cand.end());
        if (cand[0] == cand[1] || cand[1] == cand[2] || present.count(cand)) {
            ++rejections;
            continue;
        }
        ShortCycleProbe probe{edges, inc, cand,
                              std::vector<char>(static_cast<std::size_t>(m), 0),
                              std::vector<char>(edges.size(), 0)};
        if (probe.run()) {
            ++rejections;
            continue;
        }
        rejections = 0;
        int id = static_cast<int>(edges.size());
        for (VertexId v : cand) inc[static_cast<std::size_t>(v)].push_back(id);
        present.insert(cand);
        edges.push_back(std::move(cand));
    }
    return Hypergraph(m, 3, std::move(edges));
}

Hypergraph high_girth_blowup(int n, double p, std::uint64_t seed, HighGirthStats* stats) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("high_girth_blowup: p not in [0,1]");
    if (p == 0.0) return Hypergraph(n, 3, {});

    int a = std::max(1, static_cast<int>(std::llround(1.0 / (6.0 * std::sqrt(p)))));
    double root = std::sqrt(static_cast<double>(n) / a);
    auto qopt = bertrand_prime(root / 2.0, root);
    if (!qopt)
        throw std::runtime_error("high_girth_blowup: no prime in (sqrt(n/a)/2, sqrt(n/a)) for n=" +
                                 std::to_string(n) + ", a=" + std::to_string(a));
    int q = *qopt;
    int m = q * q;
    if (static_cast<long long>(m) * a > n)
        throw std::runtime_error("high_girth_blowup: blowup exceeds n");

    Hypergraph base = girth5_base(m, mix64(seed ^ 0x715ea5e1b10c0123ull));
    if (stats) {
        stats->a = a;
        stats->q = q;
        stats->m = m;
        stats->base_edges = base.num_edges();
        stats->sampled = 0;
        stats->isolated_per_block.clear();
    }

    std::vector<Edge> kept;
    for (const Edge& be : base.edges()) {
        std::vector<Edge> sampled;
        for (int x = 0; x < a; ++x)
            for (int y = 0; y < a; ++y)
                for (int z = 0; z < a; ++z) {
                    Edge e{be[0] * a + x, be[1] * a + y, be[2] * a + z};
                    std::sort(e.begin(), e.end());
                    if (edge_uniform(seed, colex_rank(e)) < p) sampled.push_back(std::move(e));
                }
        std::sort(sampled.begin(), sampled.end());
        if (stats) stats->sampled += static_cast<long long>(sampled.size());

        if (stats) {
            int isolated = 0;
            for (std::size_t i = 0; i < sampled.size(); ++i) {
                bool alone = true;
                for (std::size_t j = 0; j < sampled.size() && alone; ++j) {
                    if (i == j) continue;
                    for (VertexId v : sampled[i])
                        if (std::binary_search(sampled[j].begin(), sampled[j].end(), v)) {
                            alone = false;
                            break;
                        }
                }
                if (alone) ++isolated;
            }
            stats->isolated_per_block.push_back(isolated);
        }

        std::vector<char> used(static_cast<std::size_t>(static_cast<long long>(m) * a), 0);
        for (const Edge& e : sampled) {
            bool free = true;
            for (VertexId v : e)
                if (used[static_cast<std::size_t>(v)]) { free = false; break; }
            if (!free) continue;
            for (VertexId v : e) used[static_cast<std::size_t>(v)] = 1;
            kept.push_back(e);
        }
    }
    return Hypergraph(n, 3, std::move(kept));
}

bool girth5_certify(const Hypergraph& g) { return berge_girth(g) >= 5; }

void write_steiner(std::ostream& os, const SteinerSystem& s) {
    os << s.n << ' ' << s.t << '\n';
    for (const Edge& b : s.blocks) {
        for (std::size_t i = 0; i < b.size(); ++i) os << (i ? " " : "") << b[i];
        os << '\n';
    }
}

SteinerSystem read_steiner(std::istream& is) {
    SteinerSystem s;
    std::string line;
    bool header = false;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (!header) {
            if (ls >> s.n >> s.t) header = true;
            continue;
        }
        Edge b;
        VertexId v;
        while (ls >> v) b.push_back(v);
        if (b.empty()) continue;
        if (static_cast<int>(b.size()) != s.t)
            throw std::runtime_error("read_steiner: block size mismatch");
        std::sort(b.begin(), b.end());
        s.blocks.push_back(std::move(b));
    }
    if (!header) throw std::runtime_error("read_steiner: missing header");
    return s;
}

}  // namespace turan
