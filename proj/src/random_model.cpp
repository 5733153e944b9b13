#include "turan/random_model.hpp"

#include <cmath>
#include <stdexcept>

namespace turan {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t colex_rank(const Edge& sorted_vertices) {
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < sorted_vertices.size(); ++i)
        rank += binomial(sorted_vertices[i], static_cast<int>(i) + 1);
    return rank;
}

double edge_uniform(std::uint64_t seed, std::uint64_t rank) {
    std::uint64_t h = mix64(mix64(seed) ^ mix64(rank ^ 0x5851f42d4c957f2dull));
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

static void validate_spec(const SampleSpec& spec) {
    if (spec.n < spec.r) throw std::invalid_argument("sample_gnp: n < r");
    if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw std::invalid_argument("sample_gnp: p not in [0,1]");
}

Hypergraph sample_gnp(const SampleSpec& spec) {
    validate_spec(spec);
    std::vector<Edge> kept;
    for (Edge& e : all_r_subsets(spec.n, spec.r)) {
        if (edge_uniform(spec.seed, colex_rank(e)) < spec.p)
            kept.push_back(std::move(e));
    }
    return Hypergraph(spec.n, spec.r, std::move(kept));
}

std::pair<Hypergraph, Hypergraph> coupled_sample(const SampleSpec& spec_lo, double p_hi) {
    validate_spec(spec_lo);
    if (p_hi < spec_lo.p) throw std::invalid_argument("coupled_sample: p_hi < p_lo");
    if (p_hi > 1.0) throw std::invalid_argument("coupled_sample: p_hi > 1");
    std::vector<Edge> lo, hi;
    for (Edge& e : all_r_subsets(spec_lo.n, spec_lo.r)) {
        double u = edge_uniform(spec_lo.seed, colex_rank(e));
        if (u < p_hi) {
            if (u < spec_lo.p) lo.push_back(e);
            hi.push_back(std::move(e));
        }
    }
    return {Hypergraph(spec_lo.n, spec_lo.r, std::move(lo)),
            Hypergraph(spec_lo.n, spec_lo.r, std::move(hi))};
}

ConcentrationReport empirical_concentration(const SampleSpec& spec, int trials) {
    validate_spec(spec);
    if (trials < 2) throw std::invalid_argument("empirical_concentration: trials < 2");
    ConcentrationReport rep;
    rep.trials = trials;
    double expected = spec.p * static_cast<double>(binomial(spec.n, spec.r));
    std::vector<double> counts;
    counts.reserve(static_cast<std::size_t>(trials));
    for (int t = 0; t < trials; ++t) {
        SampleSpec s = spec;
        s.seed = spec.seed + static_cast<std::uint64_t>(t);
        counts.push_back(static_cast<double>(sample_gnp(s).num_edges()));
    }
    double sum = 0.0;
    for (double c : counts) sum += c;
    rep.mean = sum / trials;
    double ss = 0.0;
    for (double c : counts) ss += (c - rep.mean) * (c - rep.mean);
    rep.variance = ss / (trials - 1);
    for (double c : counts)
        rep.max_abs_dev = std::max(rep.max_abs_dev, std::abs(c - expected));

    // Smallest a with 2*exp(-a^2 E / 3) < 0.01; flag if any trial deviates beyond a*E.
    if (expected > 0.0) {
        double a = std::sqrt(3.0 * std::log(2.0 / 0.01) / expected);
        rep.threshold = a;
        rep.flagged = rep.max_abs_dev > a * expected;
    }
    return rep;
}

}  // namespace turan
