#ifndef TURAN_CONTAINERS_HPP
#define TURAN_CONTAINERS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "turan/cycles.hpp"
#include "turan/hypergraph.hpp"
#include "turan/supersat.hpp"

namespace turan {

struct ContainerSet {
    std::vector<std::vector<EdgeId>> containers;  // sorted id sets over V(S) = E(host)
    double epsilon_used = 0.0;
    std::vector<int> container_edge_counts;  // e(S[C]) per container
    long long trace_nodes = 0;               // branching-tree size
    double log_size_bound = 0.0;  // tau |V(S)| log(1/tau) / eps, informational
    bool degenerate = false;      // e(S) = 0: single all-of-V(S) container
    bool codegree_ok = true;      // delta(S,tau) <= eps held at entry
    bool density_met = true;      // every container met its density target
    bool no_progress = false;       // one_step: host is cycle-free, nothing to exclude
    bool tau_clamped = false;       // one_step: pipeline tau fell outside (0,1/2)
    bool pipeline_fallback = false; // one_step: exact cycle family replaced an empty S
};

// Containers of the 2l-graph S: every independent set of S lies inside some
// container C with e(S[C]) <= (1-eps) e(S). Branching: take the
// maximum-degree vertex of the current restriction, pick the least S-edge
// through it, and recurse once per vertex of that edge removed. When
// vertex_eps > 0 a container must additionally satisfy |C| <= (1-vertex_eps)|V(S)|;
// a restriction that runs out of S-edges before reaching that size becomes a
// container with density_met cleared.
ContainerSet build_containers(const CycleHypergraph& S, double tau, double eps,
                              double vertex_eps = 0.0);

// Supersaturation pipeline + build_containers; containers are edge-id subsets
// of g (V(S) = E(g)). Every C_{2l}^{(r)}-free subgraph of g lies in some
// container; on a successful run every container has e(C) <= (1-eps') e(g)
// with eps' = cfg.container_epsilon (or the eps/(log n)^{r^2(l+1)} decrement
// when cfg.use_polylog_epsilon). An empty pipeline yields {E(g)} with
// no_progress set.
ContainerSet one_step(const Hypergraph& g, const SupersatConfig& cfg, std::uint64_t seed);

struct IterationConfig {
    int r = 3;
    int ell = 2;
    double K_target = 0.0;
    double K0 = 0.0;         // floor constant of the schedule
    double eps = 0.0;        // schedule decrement numerator
    double decrement = 0.0;  // <= 0 means the eps/(log n)^{r^2(l+1)} rule
    int max_iterations = 50;

    double schedule_K(int i, int n) const;  // K_i = max{(1-d)^i n, K0 (log n)^{2r(r-1)}}
    void validate() const;
};

struct IterateResult {
    ContainerSet set;  // containers as edge-id subsets of g
    int iterations = 0;
    std::vector<double> K_schedule;  // K_i for i = 0..iterations
    bool reached_target = false;
    bool aborted = false;
    std::string diagnostic;
};

// Iterated refinement: containers above K_{i+1} n^{r-1} edges are replaced by
// their one_step refinement, smaller ones pass through, until every container
// is at or below K_target n^{r-1} or the iteration bound hits.
IterateResult iterate(const Hypergraph& g, const IterationConfig& icfg,
                      const SupersatConfig& cfg, std::uint64_t seed);

struct ExactResult {
    long long value = 0;          // ex(g, C_{2l}^{(r)})
    std::vector<EdgeId> witness;  // a cycle-free subgraph of that size
    bool feasible = false;        // caps respected and optimum certified
    long long cycles_found = 0;
    long long nodes = 0;  // branch-and-bound tree size
};

// Exact Turan number as e(g) minus a minimum hitting set of the C_{2l} family,
// by branch and bound (greedy upper bound, disjoint-packing lower bound).
// cycle_cap bounds the enumerated family, node_budget the search tree; either
// overrun yields feasible = false.
ExactResult exact_ex(const Hypergraph& g, int ell, long long cycle_cap = 2000000,
                     long long node_budget = 50000000);

// Greedy lower bound: deletion-style witness, always feasible.
ExactResult greedy_ex(const Hypergraph& g, int ell, long long cycle_cap = 2000000);

// log of |containers| * C(K n^{r-1}, m) * p^m; -inf when m > K n^{r-1} or
// p = 0 with m > 0. Negative exponent means the union bound closes at these
// finite numbers.
double union_bound_check(double container_log_size, double K, long long m_edges, double p,
                         int n, int r);

// One container per line ("-" for empty); header names host, epsilon, iteration.
void write_containers(std::ostream& os, const ContainerSet& cs, const std::string& host_name,
                      int iteration);
ContainerSet read_containers(std::istream& is);

}  // namespace turan

#endif
