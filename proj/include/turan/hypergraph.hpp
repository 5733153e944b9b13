#ifndef TURAN_HYPERGRAPH_HPP
#define TURAN_HYPERGRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace turan {

using VertexId = int;
using EdgeId = int;
using Edge = std::vector<VertexId>;  // always sorted ascending

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

/**
 * Immutable r-uniform hypergraph on vertex set {0,...,n-1}.
 * Edges are duplicate-free sorted r-subsets, kept in lexicographic order,
 * so edge ids are stable and iteration is deterministic.
 */
class Hypergraph {
public:
    Hypergraph(int n, int r, std::vector<Edge> edges);

    int n() const { return n_; }
    int r() const { return r_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }

    // Edge ids of all edges containing v.
    const std::vector<EdgeId>& incident(VertexId v) const { return incidence_[static_cast<std::size_t>(v)]; }

    // Id of the edge with this (sorted) vertex set, if present.
    std::optional<EdgeId> edge_id(const Edge& sorted_vertices) const;

    // d_G(sigma): number of edges containing every vertex of sigma, 1 <= |sigma| <= r.
    int degree(const std::vector<VertexId>& sigma) const;

    // Delta_j(G): maximum degree over j-subsets; 0 for an edgeless graph.
    int max_degree(int j) const;

    // d(G) = r*e(G)/n, with n the declared vertex count (isolated vertices included).
    double average_degree() const;

    // Number of vertices lying in at least one edge.
    int num_covered_vertices() const;

    // delta(G,tau) = (1/d(G)) * sum_{j=2}^{r} Delta_j / tau^{j-1}.
    double codegree_function(double tau) const;

    // No edge is fully contained in the vertex set I.
    bool is_independent(const std::vector<VertexId>& I) const;

    // Subgraph on the edges contained in A; vertex labels are kept (no compaction).
    Hypergraph induced(const std::vector<VertexId>& A) const;

    // Removes the given edges; every entry must be an existing edge.
    Hypergraph remove_edges(const std::vector<Edge>& F) const;
    Hypergraph remove_edge_ids(const std::vector<EdgeId>& ids) const;

    // Subgraph spanned by a subset of edge ids (vertex set unchanged).
    Hypergraph subgraph(const std::vector<EdgeId>& ids) const;

    bool operator==(const Hypergraph& other) const {
        return n_ == other.n_ && r_ == other.r_ && edges_ == other.edges_;
    }

private:
    int n_;
    int r_;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incidence_;
    std::unordered_map<Edge, EdgeId, VecHash> edge_index_;
};

/// r-partite view: every edge meets each part exactly once.
class PartiteHypergraph {
public:
    PartiteHypergraph() : base_(0, 2, {}) {}
    PartiteHypergraph(Hypergraph base, std::vector<std::vector<VertexId>> parts);

    const Hypergraph& base() const { return base_; }
    int r() const { return base_.r(); }
    const std::vector<std::vector<VertexId>>& parts() const { return parts_; }
    const std::vector<VertexId>& part(int i) const { return parts_[static_cast<std::size_t>(i)]; }

    // 0-based part index of v, or -1 if v is in no part.
    int part_of(VertexId v) const;

private:
    Hypergraph base_;
    std::vector<std::vector<VertexId>> parts_;
    std::vector<int> part_of_;
};

/// The pairs (v_i, v_j) covered by at least one edge, for parts i < j (1-based indices).
struct PairShadow {
    int i = 0;
    int j = 0;
    std::vector<std::pair<VertexId, VertexId>> pairs;  // sorted
};

PairShadow shadow(const PartiteHypergraph& pg, int i, int j);

// Edge-list text format: "n r" header, one sorted edge per line, '#' comments.
void write_edge_list(std::ostream& os, const Hypergraph& g);
Hypergraph read_edge_list(std::istream& is);
void save_edge_list(const std::string& path, const Hypergraph& g);
Hypergraph load_edge_list(const std::string& path);

// Complete r-graph on n vertices.
Hypergraph complete_hypergraph(int n, int r);

// All r-subsets of {0,...,n-1} in lexicographic order.
std::vector<Edge> all_r_subsets(int n, int r);

// Binomial coefficient as uint64; throws on overflow.
std::uint64_t binomial(int n, int k);

}  // namespace turan

#endif
