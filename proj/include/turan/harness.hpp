#ifndef TURAN_HARNESS_HPP
#define TURAN_HARNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "turan/hypergraph.hpp"

namespace turan {

/// Reference overlays with every o(1) exponent set to 0 and every Theta
/// constant set to 1. conj71_value is NaN unless r = 3, ell = 2.
struct TheoryCurves {
    double thm12_upper = 0.0;
    double cor13_value = 0.0;
    double conj71_value = 0.0;
};

TheoryCurves theory_curves(int n, int r, int ell, double p);

struct ExperimentConfig {
    int n = 30;
    int r = 3;
    int ell = 2;
    std::vector<double> p_grid;
    int seeds = 1;
    std::uint64_t seed0 = 1;
    bool use_exact = true;
    bool use_greedy = true;
    bool use_star = true;
    bool use_steiner = false;
    bool use_high_girth = false;
    bool use_containers = false;
    int steiner_t = 4;
    long long cycle_cap = 2000000;
    long long node_budget = 20000000;
    long long timeout_ms = 0;  // advisory: flags the result, never changes it
    double container_decrement = 0.05;
    double k_target = 0.1;
    std::string out;

    void validate() const;
};

// Flat key=value text; '#' comments. Keys: n, r, ell, p_list (comma-separated),
// p_exponents (comma-separated e with p = n^e), seeds, seed0, exact, greedy,
// star, steiner, high_girth, containers, steiner_t, cycle_cap, node_budget,
// timeout_ms, container_decrement, k_target, out.
ExperimentConfig parse_experiment_config(std::istream& is);

struct EstimatorResult {
    long long value = -1;  // -1: disabled or failed
    bool ok = false;
    double runtime_ms = 0.0;  // never serialized (nondeterministic)
    std::string note;
};

struct ExperimentRecord {
    int n = 0, r = 0, ell = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    long long e_G = 0;
    EstimatorResult exact, greedy, star, steiner, high_girth, containers_upper;
    long long best_lower = 0;  // max certificate, incl. the coupled carry
    double upper = 0.0;
    bool upper_is_exact = false;
    TheoryCurves curves;
    bool caps_hit = false;
    bool hypotheses_unmet = false;  // K below the container-theorem floor
    bool timed_out = false;
};

// One grid point. Every lower-bound estimator re-verifies its witness as
// cycle-free before counting. carry_lower is the previous (smaller-p) point's
// best lower bound of the same seed; threshold coupling keeps its witness
// valid, so best_lower = max(own certificates, carry_lower).
ExperimentRecord run_point(const ExperimentConfig& cfg, double p, std::uint64_t seed,
                           long long carry_lower = 0);

struct GridResult {
    std::string csv;  // complete file, trailing checksum row included
    std::vector<ExperimentRecord> records;
    bool caps_hit = false;
    bool timed_out = false;
    int reused_rows = 0;
};

// Runs the full grid (points x seeds, ascending p per seed with the coupled
// carry), one raw CSV row per record plus one aggregate (median) row per
// point. Rows whose (p, seed) key already exists in existing_csv are reused
// verbatim when its trailing checksum verifies; output bytes are identical to
// a fresh run either way.
GridResult run_grid(const ExperimentConfig& cfg, const std::string& existing_csv = "");

// True iff the text ends with a "# checksum" row matching the preceding bytes.
bool verify_grid_checksum(const std::string& csv);

std::string record_to_jsonl(const ExperimentRecord& rec);

}  // namespace turan

#endif
