#ifndef TURAN_CONSTRUCTIONS_HPP
#define TURAN_CONSTRUCTIONS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "turan/hypergraph.hpp"

namespace turan {

/// Partial (n,t,2)-Steiner system: every pair of points lies in at most one block.
struct SteinerSystem {
    int n = 0;
    int t = 0;
    std::vector<Edge> blocks;  // sorted t-subsets of [n]
    int q = 0;                 // the prime behind the line construction, 0 otherwise
};

// Exhaustive pair scan of the linearity invariant.
bool is_linear(const SteinerSystem& s);

Hypergraph steiner_to_hypergraph(const SteinerSystem& s);

// Smallest prime q with lo < q < hi, if any. A prime is guaranteed when
// hi >= 2*lo by Bertrand's postulate; otherwise the window may be empty.
std::optional<int> bertrand_prime(double lo, double hi);

// Affine-line system: points {(x,y) : x in [t], y in Z_q} for the smallest
// prime q with n/2t < q < n/t and q >= t, one block L(m,c) = {(x, mx+c mod q)}
// per (m,c) in Z_q^2, padded with n - qt isolated points. Exactly q^2 blocks,
// which is at least n^2/(4t^2).
SteinerSystem steiner_lines(int n, int t);

struct BlowupStats {
    int blocks = 0;
    long long candidate_triples = 0;  // after dedup, before sampling
    long long sampled = 0;
    int deleted = 0;  // short-Berge-cycle deletions
};

// Default sampling probability n^{-2/3} t^{-1} (log n)^{-1}.
double steiner_blowup_default_p(int n, int t);

// Replaces every block of steiner_lines(n,t) by all C(t,3) triples, keeps a
// Bernoulli(p) sample, then deletes one edge from every Berge cycle of length
// 2, 3 or 4; the output has Berge girth >= 5. Sampling is keyed exactly like
// sample_gnp(n,3,p,seed), so the output is a subgraph of that sample.
Hypergraph steiner_blowup(int n, int t, double p, std::uint64_t seed,
                          BlowupStats* stats = nullptr);

// All edges of g containing v; C_{2l}-free for every 2l >= 4 since
// non-consecutive cycle edges would have to be disjoint yet share v.
Hypergraph star_subgraph(const Hypergraph& g, VertexId v);

struct DeletionResult {
    Hypergraph g;
    int removed = 0;
    long long cycles_seen = 0;  // -1 when enumeration was capped
    bool incremental = false;   // fell back to detect-and-delete
};

// Destroys every copy of C_k by repeatedly removing the edge lying in the
// most surviving copies (ties: least id). When the copy family overflows the
// cap, falls back to removing one edge per detected copy.
DeletionResult deletion_subgraph(const Hypergraph& g, int k, long long cap = 2000000);

// Greedy girth-5 base generator: seeded random candidate triples on m
// vertices, accepted iff the Berge girth stays >= 5, until `budget`
// consecutive rejections or ceil(m^{3/2}/6) edges. The m^{3/2}/6 count is a
// target, not a guarantee.
Hypergraph girth5_base(int m, std::uint64_t seed, int budget = 2000);

struct HighGirthStats {
    int a = 0;  // blowup set size, round(p^{-1/2}/6) floored at 1
    int q = 0;
    int m = 0;  // base vertices, q^2
    int base_edges = 0;
    long long sampled = 0;
    std::vector<int> isolated_per_block;  // sampled edges disjoint from all others in their block
};

// Girth-5 base on m = q^2 vertices, each vertex blown into a set of size a,
// each base edge into K_{a,a,a}^{(3)}; Bernoulli(p) inside blocks (keyed like
// sample_gnp(n,3,p,seed)) with a maximal matching kept per block; padded to n
// vertices. Fails when no admissible prime exists or the blowup overflows n.
Hypergraph high_girth_blowup(int n, double p, std::uint64_t seed,
                             HighGirthStats* stats = nullptr);

// berge_girth(g) >= 5.
bool girth5_certify(const Hypergraph& g);

// Block-list text format: "n t" header, one sorted block per line, '#' comments.
void write_steiner(std::ostream& os, const SteinerSystem& s);
SteinerSystem read_steiner(std::istream& is);

}  // namespace turan

#endif
