#include "turan/cycles.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace turan {

static int intersection_size(const Edge& a, const Edge& b) {
    int count = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++count; ++i; ++j; }
    }
    return count;
}

static void validate_length(const Hypergraph& g, int k) {
    if (g.r() == 2) {
        if (k < 3) throw std::invalid_argument("linear cycles: need k >= 3 for r = 2");
    } else if (k < 2) {
        throw std::invalid_argument("linear cycles: need k >= 2");
    }
}

namespace {

// DFS enumeration over edge sequences anchored at the least edge id, with the
// second edge id smaller than the last to kill the reflection.
struct CycleSearch {
    const Hypergraph& g;
    int k;
    long long cap;
    std::vector<std::vector<EdgeId>> adj;  // edges sharing exactly one vertex
    std::vector<EdgeId> path;
    std::vector<std::vector<EdgeId>>& out;
    bool& truncated;
    bool done = false;

    bool compatible(EdgeId f, bool closing) const {
        const Edge& ef = g.edge(f);
        // consecutive with the previous edge is guaranteed by adj;
        // non-consecutive path edges must be disjoint from f.
        std::size_t lo = closing ? 1 : 0;
        for (std::size_t i = lo; i + 1 < path.size(); ++i)
            if (intersection_size(ef, g.edge(path[i])) != 0) return false;
        return true;
    }

    void emit(EdgeId closing_edge) {
        std::vector<EdgeId> member = path;
        member.push_back(closing_edge);
        // total vertex count k(r-1) rules out degenerate shared joints (k = 3)
        std::vector<VertexId> verts;
        for (EdgeId e : member)
            for (VertexId v : g.edge(e)) verts.push_back(v);
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        if (static_cast<int>(verts.size()) != k * (g.r() - 1)) return;
        std::sort(member.begin(), member.end());
        out.push_back(std::move(member));
        if (cap >= 0 && static_cast<long long>(out.size()) >= cap) {
            truncated = true;
            done = true;
        }
    }

    void extend() {
        if (done) return;
        EdgeId start = path.front();
        EdgeId last = path.back();
        if (static_cast<int>(path.size()) == k - 1) {
            for (EdgeId f : adj[static_cast<std::size_t>(last)]) {
                if (done) return;
                if (f <= start) continue;
                if (f <= path[1]) continue;  // reflection canonicalization
                if (std::find(path.begin(), path.end(), f) != path.end()) continue;
                if (intersection_size(g.edge(f), g.edge(start)) != 1) continue;
                if (!compatible(f, /*closing=*/true)) continue;
                emit(f);
            }
            return;
        }
        for (EdgeId f : adj[static_cast<std::size_t>(last)]) {
            if (done) return;
            if (f <= start) continue;
            if (std::find(path.begin(), path.end(), f) != path.end()) continue;
            if (!compatible(f, /*closing=*/false)) continue;
            path.push_back(f);
            extend();
            path.pop_back();
        }
    }
};

}  // namespace

CycleFamily enumerate_linear_cycles(const Hypergraph& g, int k, long long cap) {
    validate_length(g, k);
    CycleFamily fam;
    fam.k = k;
    fam.host_edge_count = g.num_edges();
    int m = g.num_edges();

    if (k == 2) {
        // C_2^(r): two edges sharing exactly two vertices.
        for (EdgeId i = 0; i < m && !fam.truncated; ++i) {
            for (EdgeId j = i + 1; j < m; ++j) {
                if (intersection_size(g.edge(i), g.edge(j)) == 2) {
                    fam.members.push_back({i, j});
                    if (cap >= 0 && static_cast<long long>(fam.members.size()) >= cap) {
                        fam.truncated = true;
                        break;
                    }
                }
            }
        }
        std::sort(fam.members.begin(), fam.members.end());
        return fam;
    }

    std::vector<std::vector<EdgeId>> adj(static_cast<std::size_t>(m));
    for (EdgeId i = 0; i < m; ++i)
        for (EdgeId j = i + 1; j < m; ++j)
            if (intersection_size(g.edge(i), g.edge(j)) == 1) {
                adj[static_cast<std::size_t>(i)].push_back(j);
                adj[static_cast<std::size_t>(j)].push_back(i);
            }

    CycleSearch search{g, k, cap, std::move(adj), {}, fam.members, fam.truncated};
    for (EdgeId s = 0; s < m && !search.done; ++s) {
        search.path.assign(1, s);
        search.extend();
    }
    std::sort(fam.members.begin(), fam.members.end());
    return fam;
}

bool is_cycle_free(const Hypergraph& g, int k) {
    return enumerate_linear_cycles(g, k, 1).members.empty();
}

bool validate_linear_cycle(const Hypergraph& g, const std::vector<EdgeId>& member) {
    int k = static_cast<int>(member.size());
    if (k < 2) return false;
    for (EdgeId e : member)
        if (e < 0 || e >= g.num_edges()) return false;
    std::vector<EdgeId> sorted = member;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;

    std::vector<VertexId> verts;
    for (EdgeId e : member)
        for (VertexId v : g.edge(e)) verts.push_back(v);
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (static_cast<int>(verts.size()) != k * (g.r() - 1)) return false;

    if (k == 2)
        return intersection_size(g.edge(member[0]), g.edge(member[1])) == 2;

    // Intersection pattern must be exactly a k-cycle: every edge meets exactly
    // two others in one vertex each, all in one connected cycle.
    std::vector<std::vector<int>> nbr(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            int s = intersection_size(g.edge(sorted[static_cast<std::size_t>(i)]),
                                      g.edge(sorted[static_cast<std::size_t>(j)]));
            if (s > 1) return false;
            if (s == 1) {
                nbr[static_cast<std::size_t>(i)].push_back(j);
                nbr[static_cast<std::size_t>(j)].push_back(i);
            }
        }
    for (int i = 0; i < k; ++i)
        if (nbr[static_cast<std::size_t>(i)].size() != 2) return false;
    // walk the cycle
    int seen = 1, prev = 0, cur = nbr[0][0];
    while (cur != 0) {
        ++seen;
        int nxt = (nbr[static_cast<std::size_t>(cur)][0] == prev)
                      ? nbr[static_cast<std::size_t>(cur)][1]
                      : nbr[static_cast<std::size_t>(cur)][0];
        prev = cur;
        cur = nxt;
    }
    return seen == k;
}

std::vector<EdgeId> cyclic_edge_order(const Hypergraph& g, const std::vector<EdgeId>& member) {
    if (!validate_linear_cycle(g, member))
        throw std::invalid_argument("cyclic_edge_order: not a linear cycle");
    std::vector<EdgeId> sorted = member;
    std::sort(sorted.begin(), sorted.end());
    int k = static_cast<int>(sorted.size());
    if (k == 2) return sorted;
    std::vector<std::vector<int>> nbr(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (intersection_size(g.edge(sorted[static_cast<std::size_t>(i)]),
                                  g.edge(sorted[static_cast<std::size_t>(j)])) == 1) {
                nbr[static_cast<std::size_t>(i)].push_back(j);
                nbr[static_cast<std::size_t>(j)].push_back(i);
            }
    std::vector<EdgeId> order;
    order.reserve(static_cast<std::size_t>(k));
    int prev = 0;
    int cur = std::min(nbr[0][0], nbr[0][1]);
    order.push_back(sorted[0]);
    while (cur != 0) {
        order.push_back(sorted[static_cast<std::size_t>(cur)]);
        int nxt = (nbr[static_cast<std::size_t>(cur)][0] == prev)
                      ? nbr[static_cast<std::size_t>(cur)][1]
                      : nbr[static_cast<std::size_t>(cur)][0];
        prev = cur;
        cur = nxt;
    }
    return order;
}

int berge_girth(const Hypergraph& g) {
    // Berge cycles are exactly cycles of the vertex-edge incidence graph,
    // at twice the length.
    int n = g.n(), m = g.num_edges();
    int total = n + m;
    if (m == 0) return infinite_girth;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(total));
    for (EdgeId e = 0; e < m; ++e)
        for (VertexId v : g.edge(e)) {
            adj[static_cast<std::size_t>(v)].push_back(n + e);
            adj[static_cast<std::size_t>(n + e)].push_back(v);
        }
    int best = infinite_girth;
    std::vector<int> dist(static_cast<std::size_t>(total));
    std::vector<int> parent(static_cast<std::size_t>(total));
    for (int root = 0; root < total; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<int> queue{root};
        dist[static_cast<std::size_t>(root)] = 0;
        parent[static_cast<std::size_t>(root)] = -1;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            if (best != infinite_girth && 2 * dist[static_cast<std::size_t>(x)] >= best) break;
            for (int w : adj[static_cast<std::size_t>(x)]) {
                if (w == parent[static_cast<std::size_t>(x)]) continue;
                if (dist[static_cast<std::size_t>(w)] == -1) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(x)] + 1;
                    parent[static_cast<std::size_t>(w)] = x;
                    queue.push_back(w);
                } else {
                    best = std::min(best, dist[static_cast<std::size_t>(x)] + dist[static_cast<std::size_t>(w)] + 1);
                }
            }
        }
    }
    return best == infinite_girth ? infinite_girth : best / 2;
}

namespace {

// Depth-first search for a Berge cycle of exactly the target length.
struct BergeSearch {
    const Hypergraph& g;
    int target;
    std::vector<VertexId> vs;
    std::vector<EdgeId> es;
    std::vector<char> v_used;
    std::vector<char> e_used;

    bool extend_edge() {
        VertexId vt = vs.back();
        for (EdgeId e : g.incident(vt)) {
            if (e_used[static_cast<std::size_t>(e)]) continue;
            if (static_cast<int>(es.size()) == target - 1) {
                // closing edge: must also contain the first vertex
                const Edge& ed = g.edge(e);
                if (!std::binary_search(ed.begin(), ed.end(), vs.front())) continue;
                es.push_back(e);
                return true;
            }
            e_used[static_cast<std::size_t>(e)] = 1;
            es.push_back(e);
            for (VertexId w : g.edge(e)) {
                if (v_used[static_cast<std::size_t>(w)]) continue;
                v_used[static_cast<std::size_t>(w)] = 1;
                vs.push_back(w);
                if (extend_edge()) return true;
                vs.pop_back();
                v_used[static_cast<std::size_t>(w)] = 0;
            }
            es.pop_back();
            e_used[static_cast<std::size_t>(e)] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<EdgeId>> find_short_berge_cycle(const Hypergraph& g, int maxlen) {
    for (int len = 2; len <= maxlen; ++len) {
        BergeSearch search{g, len, {}, {},
                           std::vector<char>(static_cast<std::size_t>(g.n()), 0),
                           std::vector<char>(static_cast<std::size_t>(g.num_edges()), 0)};
        for (VertexId v = 0; v < g.n(); ++v) {
            search.vs.assign(1, v);
            search.v_used[static_cast<std::size_t>(v)] = 1;
            if (search.extend_edge()) return search.es;
            search.v_used[static_cast<std::size_t>(v)] = 0;
        }
    }
    return std::nullopt;
}

CycleHypergraph to_cycle_hypergraph(const CycleFamily& f) {
    if (f.k < 2) throw std::invalid_argument("to_cycle_hypergraph: member size < 2");
    for (const auto& mem : f.members)
        if (static_cast<int>(mem.size()) != f.k)
            throw std::invalid_argument("to_cycle_hypergraph: mixed member sizes");
    std::vector<Edge> edges(f.members.begin(), f.members.end());
    return Hypergraph(f.host_edge_count, f.k, std::move(edges));
}

int family_max_degree(const CycleFamily& f, int j) {
    if (j < 1 || j >= f.k) throw std::invalid_argument("family_max_degree: j out of range");
    std::unordered_map<std::vector<int>, int, VecHash> counts;
    int best = 0;
    std::vector<int> subset(static_cast<std::size_t>(j));
    for (const auto& mem : f.members) {
        int k = static_cast<int>(mem.size());
        std::vector<int> idx(static_cast<std::size_t>(j));
        for (int i = 0; i < j; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            for (int i = 0; i < j; ++i)
                subset[static_cast<std::size_t>(i)] = mem[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            best = std::max(best, ++counts[subset]);
            int i = j - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == k - j + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int t = i + 1; t < j; ++t)
                idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
        }
    }
    return best;
}

void write_cycle_family(std::ostream& os, const CycleFamily& f, const std::string& host_name) {
    os << "k " << f.k << " host_edges " << f.host_edge_count << " host " << host_name;
    if (f.truncated) os << " truncated";
    os << '\n';
    for (const auto& mem : f.members) {
        for (std::size_t i = 0; i < mem.size(); ++i)
            os << (i ? " " : "") << mem[i];
        os << '\n';
    }
}

CycleFamily read_cycle_family(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("cycle family: missing header");
    std::istringstream hs(line);
    std::string kw1, kw2, kw3, host;
    CycleFamily f;
    if (!(hs >> kw1 >> f.k >> kw2 >> f.host_edge_count >> kw3 >> host) ||
        kw1 != "k" || kw2 != "host_edges" || kw3 != "host")
        throw std::invalid_argument("cycle family: bad header");
    std::string trunc;
    if (hs >> trunc && trunc == "truncated") f.truncated = true;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::vector<EdgeId> mem;
        int x;
        while (ls >> x) mem.push_back(x);
        if (!mem.empty()) f.members.push_back(std::move(mem));
    }
    return f;
}

}  // namespace turan
