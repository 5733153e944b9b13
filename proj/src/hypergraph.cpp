#include "turan/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace turan {

Hypergraph::Hypergraph(int n, int r, std::vector<Edge> edges)
    : n_(n), r_(r), edges_(std::move(edges)) {
    if (n < 0) throw std::invalid_argument("Hypergraph: negative vertex count");
    if (r < 2) throw std::invalid_argument("Hypergraph: uniformity must be >= 2");
    for (auto& e : edges_) {
        std::sort(e.begin(), e.end());
        if (static_cast<int>(e.size()) != r)
            throw std::invalid_argument("Hypergraph: edge of wrong size");
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw std::invalid_argument("Hypergraph: repeated vertex in edge");
        if (e.front() < 0 || e.back() >= n)
            throw std::invalid_argument("Hypergraph: vertex out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("Hypergraph: duplicate edge");

    incidence_.assign(static_cast<std::size_t>(n_), {});
    edge_index_.reserve(edges_.size());
    for (EdgeId id = 0; id < num_edges(); ++id) {
        for (VertexId v : edges_[static_cast<std::size_t>(id)])
            incidence_[static_cast<std::size_t>(v)].push_back(id);
        edge_index_.emplace(edges_[static_cast<std::size_t>(id)], id);
    }
}

std::optional<EdgeId> Hypergraph::edge_id(const Edge& sorted_vertices) const {
    auto it = edge_index_.find(sorted_vertices);
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
}

int Hypergraph::degree(const std::vector<VertexId>& sigma) const {
    if (sigma.empty() || static_cast<int>(sigma.size()) > r_)
        throw std::invalid_argument("degree: |sigma| must be in [1, r]");
    for (VertexId v : sigma)
        if (v < 0 || v >= n_) throw std::invalid_argument("degree: vertex out of range");

    // Scan the shortest incidence list.
    VertexId pivot = sigma.front();
    for (VertexId v : sigma)
        if (incident(v).size() < incident(pivot).size()) pivot = v;

    int count = 0;
    for (EdgeId id : incident(pivot)) {
        const Edge& e = edge(id);
        bool all = true;
        for (VertexId v : sigma) {
            if (!std::binary_search(e.begin(), e.end(), v)) { all = false; break; }
        }
        if (all) ++count;
    }
    return count;
}

int Hypergraph::max_degree(int j) const {
    if (j < 1 || j > r_) throw std::invalid_argument("max_degree: j out of range");
    // Only j-subsets of edges have positive degree.
    std::unordered_map<std::vector<int>, int, VecHash> counts;
    std::vector<int> subset(static_cast<std::size_t>(j));
    int best = 0;
    for (const Edge& e : edges_) {
        // enumerate j-subsets of e via index combinations
        std::vector<int> idx(static_cast<std::size_t>(j));
        for (int i = 0; i < j; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            for (int i = 0; i < j; ++i)
                subset[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            best = std::max(best, ++counts[subset]);
            int i = j - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == r_ - j + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int t = i + 1; t < j; ++t)
                idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
        }
    }
    return best;
}

double Hypergraph::average_degree() const {
    if (n_ == 0) throw std::invalid_argument("average_degree: empty vertex set");
    return static_cast<double>(r_) * num_edges() / n_;
}

int Hypergraph::num_covered_vertices() const {
    int count = 0;
    for (const auto& inc : incidence_)
        if (!inc.empty()) ++count;
    return count;
}

double Hypergraph::codegree_function(double tau) const {
    if (num_edges() == 0) throw std::domain_error("codegree_function: edgeless graph");
    if (!(tau > 0.0 && tau < 1.0)) throw std::invalid_argument("codegree_function: tau must be in (0,1)");
    double d = average_degree();
    double sum = 0.0;
    double tpow = tau;
    for (int j = 2; j <= r_; ++j) {
        sum += max_degree(j) / tpow;
        tpow *= tau;
    }
    return sum / d;
}

bool Hypergraph::is_independent(const std::vector<VertexId>& I) const {
    std::vector<char> in_set(static_cast<std::size_t>(n_), 0);
    for (VertexId v : I) {
        if (v < 0 || v >= n_) throw std::invalid_argument("is_independent: vertex out of range");
        in_set[static_cast<std::size_t>(v)] = 1;
    }
    for (const Edge& e : edges_) {
        bool inside = true;
        for (VertexId v : e)
            if (!in_set[static_cast<std::size_t>(v)]) { inside = false; break; }
        if (inside) return false;
    }
    return true;
}

Hypergraph Hypergraph::induced(const std::vector<VertexId>& A) const {
    std::vector<char> in_set(static_cast<std::size_t>(n_), 0);
    for (VertexId v : A) {
        if (v < 0 || v >= n_) throw std::invalid_argument("induced: vertex out of range");
        in_set[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<Edge> kept;
    for (const Edge& e : edges_) {
        bool inside = true;
        for (VertexId v : e)
            if (!in_set[static_cast<std::size_t>(v)]) { inside = false; break; }
        if (inside) kept.push_back(e);
    }
    return Hypergraph(n_, r_, std::move(kept));
}

Hypergraph Hypergraph::remove_edges(const std::vector<Edge>& F) const {
    std::vector<EdgeId> ids;
    ids.reserve(F.size());
    for (Edge e : F) {
        std::sort(e.begin(), e.end());
        auto id = edge_id(e);
        if (!id) throw std::invalid_argument("remove_edges: not an edge of G");
        ids.push_back(*id);
    }
    return remove_edge_ids(ids);
}

Hypergraph Hypergraph::remove_edge_ids(const std::vector<EdgeId>& ids) const {
    std::vector<char> drop(edges_.size(), 0);
    for (EdgeId id : ids) {
        if (id < 0 || id >= num_edges()) throw std::invalid_argument("remove_edge_ids: bad edge id");
        drop[static_cast<std::size_t>(id)] = 1;
    }
    std::vector<Edge> kept;
    for (EdgeId id = 0; id < num_edges(); ++id)
        if (!drop[static_cast<std::size_t>(id)]) kept.push_back(edges_[static_cast<std::size_t>(id)]);
    return Hypergraph(n_, r_, std::move(kept));
}

Hypergraph Hypergraph::subgraph(const std::vector<EdgeId>& ids) const {
    std::vector<Edge> kept;
    kept.reserve(ids.size());
    for (EdgeId id : ids) {
        if (id < 0 || id >= num_edges()) throw std::invalid_argument("subgraph: bad edge id");
        kept.push_back(edges_[static_cast<std::size_t>(id)]);
    }
    return Hypergraph(n_, r_, std::move(kept));
}

PartiteHypergraph::PartiteHypergraph(Hypergraph base, std::vector<std::vector<VertexId>> parts)
    : base_(std::move(base)), parts_(std::move(parts)) {
    if (static_cast<int>(parts_.size()) != base_.r())
        throw std::invalid_argument("PartiteHypergraph: need exactly r parts");
    part_of_.assign(static_cast<std::size_t>(base_.n()), -1);
    for (int i = 0; i < base_.r(); ++i) {
        auto& p = parts_[static_cast<std::size_t>(i)];
        std::sort(p.begin(), p.end());
        for (VertexId v : p) {
            if (v < 0 || v >= base_.n())
                throw std::invalid_argument("PartiteHypergraph: vertex out of range");
            if (part_of_[static_cast<std::size_t>(v)] != -1)
                throw std::invalid_argument("PartiteHypergraph: parts not disjoint");
            part_of_[static_cast<std::size_t>(v)] = i;
        }
    }
    for (const Edge& e : base_.edges()) {
        std::vector<char> seen(parts_.size(), 0);
        for (VertexId v : e) {
            int i = part_of_[static_cast<std::size_t>(v)];
            if (i < 0 || seen[static_cast<std::size_t>(i)])
                throw std::invalid_argument("PartiteHypergraph: edge not transversal to parts");
            seen[static_cast<std::size_t>(i)] = 1;
        }
    }
}

int PartiteHypergraph::part_of(VertexId v) const {
    if (v < 0 || v >= base_.n()) throw std::invalid_argument("part_of: vertex out of range");
    return part_of_[static_cast<std::size_t>(v)];
}

PairShadow shadow(const PartiteHypergraph& pg, int i, int j) {
    int r = pg.r();
    if (i < 1 || j < 1 || i > r || j > r || i >= j)
        throw std::invalid_argument("shadow: need 1 <= i < j <= r");
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (const Edge& e : pg.base().edges()) {
        VertexId vi = -1, vj = -1;
        for (VertexId v : e) {
            int p = pg.part_of(v) + 1;
            if (p == i) vi = v;
            if (p == j) vj = v;
        }
        pairs.emplace_back(vi, vj);
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return PairShadow{i, j, std::move(pairs)};
}

void write_edge_list(std::ostream& os, const Hypergraph& g) {
    os << g.n() << ' ' << g.r() << '\n';
    for (const Edge& e : g.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i)
            os << (i ? " " : "") << e[i];
        os << '\n';
    }
}

Hypergraph read_edge_list(std::istream& is) {
    std::string line;
    int n = -1, r = -1;
    std::vector<Edge> edges;
    bool header_seen = false;
    while (std::getline(is, line)) {
        auto pos = line.find('#');
        if (pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::vector<int> vals;
        int x;
        while (ls >> x) vals.push_back(x);
        if (vals.empty()) continue;
        if (!header_seen) {
            if (vals.size() != 2) throw std::invalid_argument("edge list: bad header");
            n = vals[0];
            r = vals[1];
            header_seen = true;
        } else {
            edges.push_back(std::move(vals));
        }
    }
    if (!header_seen) throw std::invalid_argument("edge list: missing header");
    return Hypergraph(n, r, std::move(edges));
}

void save_edge_list(const std::string& path, const Hypergraph& g) {
    std::ofstream os(path);
    if (!os) throw std::invalid_argument("cannot open for writing: " + path);
    write_edge_list(os, g);
}

Hypergraph load_edge_list(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("cannot open for reading: " + path);
    return read_edge_list(is);
}

std::vector<Edge> all_r_subsets(int n, int r) {
    std::vector<Edge> out;
    if (r > n) return out;
    Edge cur(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) cur[static_cast<std::size_t>(i)] = i;
    while (true) {
        out.push_back(cur);
        int i = r - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - r + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int t = i + 1; t < r; ++t)
            cur[static_cast<std::size_t>(t)] = cur[static_cast<std::size_t>(t - 1)] + 1;
    }
    return out;
}

Hypergraph complete_hypergraph(int n, int r) {
    return Hypergraph(n, r, all_r_subsets(n, r));
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    // Exact multiplicative scheme: C(n,k) = prod (n-k+i)/i with running gcd reduction.
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
        std::uint64_t den = static_cast<std::uint64_t>(i);
        std::uint64_t g1 = std::gcd(num, den);
        num /= g1;
        den /= g1;
        std::uint64_t g2 = std::gcd(result, den);
        result /= g2;
        den /= g2;
        // den == 1 now since C(n,i) is integral
        if (num != 0 && result > UINT64_MAX / num)
            throw std::overflow_error("binomial: overflow");
        result *= num;
    }
    return result;
}

}  // namespace turan
