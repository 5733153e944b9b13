#ifndef TURAN_SUPERSAT_HPP
#define TURAN_SUPERSAT_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "turan/cycles.hpp"
#include "turan/hypergraph.hpp"

namespace turan {

/// Constants of the supersaturation pipeline. The derived values follow the
/// analysis constants; Q, delta0, k0 have no canonical values and default to
/// 1, delta, 1.
struct SupersatConfig {
    int r = 3;
    int ell = 2;
    double delta = 0.01;        // must satisfy 0 < delta < 1/(2*ell)
    double Q = 1.0;
    double k0 = 1.0;
    double delta0 = 0.0;        // <= 0 means "use delta"
    double prune_factor = 0.0;  // <= 0 means the default 1/(2R (r ln n)^R)
    double container_epsilon = 0.05;  // desk-scale density decrement
    bool use_polylog_epsilon = false;   // eps / (ln n)^{r^2 (ell+1)} instead
    long long shadow_cycle_cap = 500000;
    long long extension_cap = 500000;
    int partite_restarts = 1000;

    int pair_count() const { return r * (r - 1) / 2; }  // R
    double alpha() const;                               // r! / (2 r^{R+r})
    double beta() const;                                // alpha / (4 R r^R)
    double K0() const;                                  // 8 k0^2 / beta^2
    double epsilon() const;                             // delta^4
    double effective_delta0() const { return delta0 > 0 ? delta0 : delta; }
    double default_prune_factor(int n) const;           // 1 / (2R (r ln n)^R)
    void validate() const;
};

// Index of the part pair (i,j), 1 <= i < j <= r, in lexicographic order.
int pair_index(int i, int j, int r);

/// Dyadic codegree profile: s_{i,j} per part pair, with codegree d mapping to
/// s = floor(log2 d). Indexing starts at s = 0 so codegree-1 pairs belong to
/// the class s = 0.
struct DyadicProfile {
    int r = 0;
    std::vector<int> s;  // size r(r-1)/2, pair_index order

    int delta_ij(int i, int j) const;  // 2^{s_{i,j}}
};

struct RegularizedSubgraph {
    PartiteHypergraph h_prime;
    DyadicProfile profile;
    double prune_factor = 0.0;
    // provenance
    int e_H0 = 0;
    int e_Hprime = 0;
    double deletion_budget = 0.0;   // sum of prune_factor * Delta_ij over covered pairs of H_0
    bool budget_certificate = false;  // deletion_budget <= e(H_0)/2
    bool empty = false;               // everything pruned
};

struct PropertyCheck {
    std::string name;
    bool pass = false;
    double measured = 0.0;
    double target = 0.0;
    bool informational = false;  // asymptotic targets: logged, not asserted
};

struct TauChoice {
    double tau = 0.0;
    double branch1 = 0.0;
    double branch2 = 0.0;
    bool below_half = false;
};

struct SupersatReport {
    int n = 0, r = 0, ell = 0;
    std::uint64_t seed = 0;
    int e_G = 0, e_H = 0, e_H0 = 0, e_Hprime = 0;
    int n_covered = 0;             // non-isolated vertices of H'
    int dyadic_classes = 0;
    int shadow_i = 0, shadow_j = 0;
    int shadow_size = 0;
    int m = 0;                     // |U_i| + |U_j|
    double k = 0.0;                // |shadow| / m^{1+1/ell}
    double K = 0.0;                // e(G) / n^{r-1}
    bool K_hypothesis_met = false; // K >= K0 (ln n)^{2r(r-1)}
    long long shadow_family_size = 0;
    long long family_size = 0;     // e(S)
    std::vector<int> delta_j_S;    // Delta_j(S), j = 1..2ell-1
    TauChoice tau;
    double delta_S_tau = 0.0;      // NaN when undefined
    bool delta_condition = false;  // delta(S,tau) < delta
    std::string empty_stage;       // which stage produced nothing, if any
    std::vector<PropertyCheck> checks;

    // Flat key-value record, one metric per line.
    void write(std::ostream& os) const;
};

// Erdos-Kleitman reduction: r-partite subgraph with e(H) >= r! e(G) / r^r,
// via seeded random assignment plus single-vertex local moves; restarts until
// the bound is met.
PartiteHypergraph partite_reduce(const Hypergraph& g, const SupersatConfig& cfg, std::uint64_t seed);

// Partitions E(H) by dyadic codegree profile, returns the largest class
// (ties: lexicographically least profile) and H_0 restricted to its covered
// vertices. class_count, when given, receives the number of nonempty classes.
std::pair<DyadicProfile, PartiteHypergraph> dyadic_classify(const PartiteHypergraph& h,
                                                            int* class_count = nullptr);

// Deletes all edges through pairs whose codegree fell below
// prune_factor * Delta_ij, to a fixpoint, then drops isolated vertices.
RegularizedSubgraph prune_regularize(const PartiteHypergraph& h0, const DyadicProfile& profile,
                                     double prune_factor);

// The part pair with the largest shadow (ties: least (i,j)); 1-based.
std::pair<int, int> select_shadow_pair(const RegularizedSubgraph& hp);

// The shadow as a 2-graph on the host vertex labels.
Hypergraph shadow_graph(const PairShadow& sh, int n);

struct ShadowFamilyResult {
    CycleFamily family;            // C_{2ell} copies in the shadow graph
    std::vector<double> caps;      // per-j degree caps, j = 1..2ell-1
    std::vector<int> achieved;     // Delta_j of the selected family
    double size_target = 0.0;      // delta0 * k^{2ell} * m^2
    bool size_target_met = false;
};

// Greedy degree-capped selection from all C_{2ell} copies of the shadow graph.
// Caps default (empty vector) to max(1, Q k^{2l-j-(j-1)/(l-1)} m^{1-1/l}).
ShadowFamilyResult build_shadow_family(const Hypergraph& shadow2, int ell,
                                       std::vector<double> caps, const SupersatConfig& cfg,
                                       double k_value, int m_value);

struct ExtendResult {
    CycleFamily family;  // linear C_{2ell}^{(r)} members, as edge ids of `host`
    std::vector<long long> extensions_per_member;
};

// Replaces every pair edge of every shadow cycle by a full H'-edge containing
// it, all pendant vertices distinct. Members are reported as edge ids of
// `host` (H' edges are a subset of the host's edges).
ExtendResult extend_family(const CycleFamily& shadow_family, const Hypergraph& shadow2,
                           const RegularizedSubgraph& hp, const Hypergraph& host,
                           long long cap = -1);

// tau = max of the two branches of the container analysis; natural logs.
TauChoice choose_tau(double K, int n, int r, int ell, double delta);

struct PipelineResult {
    CycleHypergraph S;
    SupersatReport report;
};

PipelineResult supersaturation_pipeline(const Hypergraph& g, const SupersatConfig& cfg,
                                        std::uint64_t seed);

}  // namespace turan

#endif
