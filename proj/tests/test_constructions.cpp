#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <set>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "turan/constructions.hpp"
#include "turan/cycles.hpp"
#include "turan/hypergraph.hpp"
#include "turan/random_model.hpp"

using namespace turan;

TEST_CASE("bertrand_prime") {
    CHECK(bertrand_prime(10, 20) == 11);
    CHECK(bertrand_prime(2, 4) == 3);
    CHECK(bertrand_prime(1, 2.5) == 2);
    CHECK_FALSE(bertrand_prime(13, 16).has_value());  // 14, 15 composite
    CHECK_THROWS(bertrand_prime(5, 5));
    CHECK_THROWS(bertrand_prime(0, 10));
    // Bertrand window always succeeds
    for (int lo = 1; lo <= 2000; lo += 37) {
        auto p = bertrand_prime(lo, 2.0 * lo + 1);
        REQUIRE(p.has_value());
        CHECK(*p > lo);
        CHECK(*p < 2 * lo + 1);
    }
    // the window used by steiner_lines at n=10^4, t=10
    auto q = bertrand_prime(10000.0 / 20, 10000.0 / 10);
    REQUIRE(q.has_value());
    CHECK(*q == 503);
}

TEST_CASE("steiner_lines examples and linearity") {
    SteinerSystem s = steiner_lines(100, 5);
    CHECK(s.q == 11);  // smallest prime in (10, 20)
    CHECK(static_cast<int>(s.blocks.size()) == 121);
    CHECK(is_linear(s));
    for (const Edge& b : s.blocks) {
        CHECK(b.size() == 5);
        CHECK(std::is_sorted(b.begin(), b.end()));
    }
    CHECK(static_cast<long long>(s.blocks.size()) >= 100ll * 100 / (4 * 5 * 5));

    SteinerSystem t3 = steiner_lines(60, 3);
    CHECK(t3.q * t3.q == static_cast<int>(t3.blocks.size()));
    CHECK(is_linear(t3));
    CHECK_THROWS(steiner_lines(10, 1));
    CHECK_THROWS(steiner_lines(10, 5));  // t > sqrt(n/2)
}

TEST_CASE("is_linear detects a repeated pair") {
    SteinerSystem bad{6, 3, {{0, 1, 2}, {0, 1, 3}}, 0};
    CHECK_FALSE(is_linear(bad));
    SteinerSystem good{7, 3, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}}, 0};
    CHECK(is_linear(good));
}

TEST_CASE("steiner_to_hypergraph keeps blocks as edges") {
    SteinerSystem s = steiner_lines(60, 4);
    Hypergraph g = steiner_to_hypergraph(s);
    CHECK(g.n() == 60);
    CHECK(g.r() == 4);
    CHECK(g.num_edges() == static_cast<int>(s.blocks.size()));
}

TEST_CASE("steiner_blowup sampling and girth") {
    CHECK(steiner_blowup(60, 4, 0.0, 1).num_edges() == 0);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        BlowupStats st;
        Hypergraph g = steiner_blowup(60, 4, 0.3, seed, &st);
        CHECK(girth5_certify(g));
        CHECK(is_cycle_free(g, 4));
        CHECK(st.blocks > 0);
        CHECK(st.sampled >= g.num_edges());
        CHECK(st.deleted == st.sampled - g.num_edges());
        // genuine subgraph of the coupled random hypergraph
        Hypergraph host = sample_gnp({60, 3, 0.3, seed});
        for (const Edge& e : g.edges()) CHECK(host.edge_id(e).has_value());
    }
}

TEST_CASE("steiner_blowup with t=3 samples one triple per block") {
    BlowupStats st;
    steiner_blowup(60, 3, 1.0, 4, &st);
    CHECK(st.candidate_triples == st.blocks);
}

TEST_CASE("steiner_blowup default p") {
    double p = steiner_blowup_default_p(1000, 4);
    CHECK(p == doctest::Approx(std::pow(1000.0, -2.0 / 3.0) / (4.0 * std::log(1000.0))));
}

TEST_CASE("star_subgraph is cycle-free") {
    Hypergraph g = sample_gnp({10, 3, 0.4, 7});
    for (VertexId v = 0; v < 10; ++v) {
        Hypergraph s = star_subgraph(g, v);
        CHECK(s.num_edges() == g.degree({v}));
        CHECK(is_cycle_free(s, 4));
        CHECK(is_cycle_free(s, 6));
        for (const Edge& e : s.edges())
            CHECK(std::find(e.begin(), e.end(), v) != e.end());
    }
}

TEST_CASE("deletion_subgraph examples") {
    Hypergraph star(9, 3, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {0, 7, 8}});
    auto kept = deletion_subgraph(star, 4);
    CHECK(kept.removed == 0);
    CHECK(kept.g == star);

    Hypergraph planted(8, 3, {{0, 1, 4}, {1, 2, 5}, {2, 3, 6}, {0, 3, 7}});
    auto res = deletion_subgraph(planted, 4);
    CHECK(res.removed == 1);
    CHECK(res.cycles_seen == 1);
    CHECK(is_cycle_free(res.g, 4));

    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        Hypergraph g = sample_gnp({10, 3, 0.25, seed});
        auto r = deletion_subgraph(g, 4);
        CHECK(is_cycle_free(r.g, 4));
        if (r.cycles_seen >= 0) CHECK(r.removed <= r.cycles_seen);
        CHECK(r.g.num_edges() + r.removed == g.num_edges());
    }
}

TEST_CASE("deletion_subgraph incremental fallback under a tiny cap") {
    Hypergraph g = complete_hypergraph(8, 3);
    auto r = deletion_subgraph(g, 4, 10);
    CHECK(r.incremental);
    CHECK(r.cycles_seen == -1);
    CHECK(is_cycle_free(r.g, 4));
}

TEST_CASE("girth5_base has girth at least 5") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Hypergraph g = girth5_base(25, seed);
        CHECK(girth5_certify(g));
        CHECK(berge_girth(g) >= 5);
        CHECK(g.num_edges() > 0);
    }
}

TEST_CASE("girth5_base respects the edge target") {
    Hypergraph g = girth5_base(36, 1);
    int target = static_cast<int>(std::ceil(std::pow(36.0, 1.5) / 6.0));
    CHECK(g.num_edges() <= target);
}

TEST_CASE("high_girth_blowup") {
    CHECK(high_girth_blowup(50, 0.0, 1).num_edges() == 0);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        HighGirthStats st;
        Hypergraph g = high_girth_blowup(200, 0.02, seed, &st);
        CHECK(g.n() == 200);
        CHECK(girth5_certify(g));
        CHECK(is_cycle_free(g, 4));
        CHECK(st.a >= 1);
        CHECK(st.m == st.q * st.q);
        // genuine subgraph of the coupled random hypergraph
        Hypergraph host = sample_gnp({200, 3, 0.02, seed});
        for (const Edge& e : g.edges()) CHECK(host.edge_id(e).has_value());
    }
}

TEST_CASE("high_girth_blowup keeps one matching edge per nonempty block") {
    HighGirthStats st;
    Hypergraph g = high_girth_blowup(200, 0.05, 3, &st);
    // matching maximality: kept edges per block >= 1 whenever sampling hit it
    long long isolated_total = 0;
    for (int c : st.isolated_per_block) isolated_total += c;
    if (st.sampled > 0) CHECK(g.num_edges() >= 1);
    CHECK(isolated_total <= st.sampled);
}

TEST_CASE("girth5_certify examples") {
    CHECK(girth5_certify(Hypergraph(5, 3, {})));
    CHECK(girth5_certify(Hypergraph(5, 3, {{0, 1, 2}})));
    CHECK_FALSE(girth5_certify(Hypergraph(4, 3, {{0, 1, 2}, {0, 1, 3}})));
    CHECK_FALSE(girth5_certify(Hypergraph(8, 3, {{0, 1, 4}, {1, 2, 5}, {2, 3, 6}, {0, 3, 7}})));
}

TEST_CASE("steiner serialization round trip") {
    SteinerSystem s = steiner_lines(60, 4);
    std::stringstream ss;
    write_steiner(ss, s);
    SteinerSystem back = read_steiner(ss);
    CHECK(back.n == s.n);
    CHECK(back.t == s.t);
    CHECK(back.blocks == s.blocks);
    CHECK(is_linear(back));
}
