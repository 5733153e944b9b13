#ifndef TURAN_RANDOM_MODEL_HPP
#define TURAN_RANDOM_MODEL_HPP

#include <cstdint>
#include <utility>

#include "turan/hypergraph.hpp"

namespace turan {

struct SampleSpec {
    int n = 0;
    int r = 2;
    double p = 0.0;
    std::uint64_t seed = 0;
};

// SplitMix64 finalizer; the whole random model is built from this mix.
std::uint64_t mix64(std::uint64_t x);

// Colex rank of a sorted r-set: sum_i C(v_i, i+1).
std::uint64_t colex_rank(const Edge& sorted_vertices);

// Deterministic uniform in [0,1) keyed by (seed, edge rank). Order-independent,
// so a single sample can be evaluated edge-by-edge in any order, and thresholding
// the same key at two probabilities yields a monotone coupling.
double edge_uniform(std::uint64_t seed, std::uint64_t rank);

// G(n,r,p): every r-set kept iff edge_uniform(seed, rank) < p.
Hypergraph sample_gnp(const SampleSpec& spec);

// Threshold coupling: same uniforms, two thresholds. E(lo) is always a subset of E(hi).
std::pair<Hypergraph, Hypergraph> coupled_sample(const SampleSpec& spec_lo, double p_hi);

struct ConcentrationReport {
    double mean = 0.0;
    double variance = 0.0;
    double max_abs_dev = 0.0;
    // Chernoff-style flag: max relative deviation exceeded the level a with
    // 2*exp(-a^2 E/3) < 0.01, where E = p*C(n,r).
    bool flagged = false;
    double threshold = 0.0;
    int trials = 0;
};

// Sample statistics of e(G) across seeds seed..seed+trials-1.
ConcentrationReport empirical_concentration(const SampleSpec& spec, int trials);

}  // namespace turan

#endif
