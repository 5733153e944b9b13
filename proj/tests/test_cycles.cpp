#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "turan/cycles.hpp"
#include "turan/hypergraph.hpp"
#include "turan/random_model.hpp"

using namespace turan;

namespace {

// one explicit linear C_4^{(3)} on 8 vertices: core 0,1,2,3 + pendants 4..7
Hypergraph planted_c4() {
    return Hypergraph(8, 3, {{0, 1, 4}, {1, 2, 5}, {2, 3, 6}, {0, 3, 7}});
}

long long closed_form(int n, int k) {
    long long v = 1;
    for (int i = 0; i < k; ++i) v *= n - i;
    return v / (2 * k);
}

}  // namespace

TEST_CASE("enumeration examples") {
    CHECK(enumerate_linear_cycles(complete_hypergraph(6, 3), 4).members.empty());
    CHECK(enumerate_linear_cycles(complete_hypergraph(4, 2), 4).members.size() == 3);
    CHECK(enumerate_linear_cycles(complete_hypergraph(8, 3), 4).members.size() == 5040);
}

TEST_CASE("closed form on K_n, r=2") {
    for (int n = 4; n <= 8; ++n)
        for (int k : {4, 6})
            if (n >= k)
                CHECK(enumerate_linear_cycles(complete_hypergraph(n, 2), k).members.size() ==
                      static_cast<std::size_t>(closed_form(n, k)));
}

TEST_CASE("enumeration matches brute force on random instances") {
    for (std::uint64_t s = 0; s < 12; ++s) {
        Hypergraph g = sample_gnp({8, 3, 0.25, s});
        auto fast = enumerate_linear_cycles(g, 4).members;
        auto slow = oracle::enumerate_cycles(g, 4);
        CHECK(fast == slow);
    }
    for (std::uint64_t s = 0; s < 8; ++s) {
        Hypergraph g = sample_gnp({7, 2, 0.5, s});
        CHECK(enumerate_linear_cycles(g, 4).members == oracle::enumerate_cycles(g, 4));
        CHECK(enumerate_linear_cycles(g, 6).members == oracle::enumerate_cycles(g, 6));
    }
}

TEST_CASE("every reported member validates") {
    Hypergraph g = sample_gnp({9, 3, 0.3, 3});
    auto fam = enumerate_linear_cycles(g, 4);
    for (const auto& mem : fam.members) {
        CHECK(validate_linear_cycle(g, mem));
        CHECK(oracle::is_linear_cycle(g, mem));
    }
}

TEST_CASE("relabeling invariance") {
    Hypergraph g = sample_gnp({8, 3, 0.3, 11});
    // relabel v -> 7 - v
    std::vector<Edge> edges;
    for (Edge e : g.edges()) {
        for (VertexId& v : e) v = 7 - v;
        std::sort(e.begin(), e.end());
        edges.push_back(e);
    }
    Hypergraph h(8, 3, edges);
    CHECK(enumerate_linear_cycles(g, 4).members.size() ==
          enumerate_linear_cycles(h, 4).members.size());
}

TEST_CASE("cap sets the truncation flag") {
    auto fam = enumerate_linear_cycles(complete_hypergraph(8, 3), 4, 10);
    CHECK(fam.truncated);
    CHECK(fam.members.size() == 10);
    CHECK_FALSE(enumerate_linear_cycles(complete_hypergraph(8, 3), 4).truncated);
}

TEST_CASE("is_cycle_free") {
    Hypergraph star(9, 3, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {0, 7, 8}});
    CHECK(is_cycle_free(star, 4));
    CHECK(is_cycle_free(star, 6));
    CHECK_FALSE(is_cycle_free(planted_c4(), 4));
    CHECK(is_cycle_free(Hypergraph(5, 3, {}), 4));
}

TEST_CASE("berge girth examples") {
    CHECK(berge_girth(Hypergraph(4, 3, {{0, 1, 2}, {0, 1, 3}})) == 2);
    // loose triangle
    CHECK(berge_girth(Hypergraph(6, 3, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}})) == 3);
    CHECK(berge_girth(Hypergraph(3, 3, {{0, 1, 2}})) == infinite_girth);
    CHECK(berge_girth(planted_c4()) == 4);
}

TEST_CASE("berge girth agrees with exhaustive oracle") {
    for (std::uint64_t s = 0; s < 15; ++s) {
        Hypergraph g = sample_gnp({7, 3, 0.15, s});
        CHECK(berge_girth(g) == oracle::berge_girth(g));
    }
    for (std::uint64_t s = 0; s < 10; ++s) {
        Hypergraph g = sample_gnp({8, 2, 0.3, s});
        CHECK(berge_girth(g) == oracle::berge_girth(g));
    }
}

TEST_CASE("find_short_berge_cycle consistency") {
    for (std::uint64_t s = 0; s < 15; ++s) {
        Hypergraph g = sample_gnp({7, 3, 0.2, s});
        int girth = berge_girth(g);
        auto found = find_short_berge_cycle(g, 4);
        CHECK(found.has_value() == (girth <= 4));
        if (found) CHECK(static_cast<int>(found->size()) == girth);
    }
}

TEST_CASE("to_cycle_hypergraph") {
    CycleFamily empty{4, 10, {}, false};
    Hypergraph s0 = to_cycle_hypergraph(empty);
    CHECK(s0.n() == 10);
    CHECK(s0.num_edges() == 0);

    Hypergraph k4 = complete_hypergraph(4, 2);
    auto fam = enumerate_linear_cycles(k4, 4);
    Hypergraph s = to_cycle_hypergraph(fam);
    CHECK(s.n() == 6);
    CHECK(s.num_edges() == 3);
    CHECK(s.r() == 4);
    for (int j = 1; j <= 3; ++j) CHECK(s.max_degree(j) == family_max_degree(fam, j));
}

TEST_CASE("family_max_degree examples") {
    Hypergraph k4 = complete_hypergraph(4, 2);
    auto fam = enumerate_linear_cycles(k4, 4);
    CHECK(family_max_degree(fam, 1) == 2);  // each K_4 edge lies in 2 of the 3 cycles
    CHECK(family_max_degree(CycleFamily{4, 5, {}, false}, 1) == 0);
    CycleFamily disjoint{4, 8, {{0, 1, 2, 3}, {4, 5, 6, 7}}, false};
    CHECK(family_max_degree(disjoint, 1) == 1);
}

TEST_CASE("cyclic_edge_order recovers a valid traversal") {
    Hypergraph g = planted_c4();
    auto fam = enumerate_linear_cycles(g, 4);
    REQUIRE(fam.members.size() == 1);
    auto order = cyclic_edge_order(g, fam.members[0]);
    REQUIRE(order.size() == 4);
    for (int i = 0; i < 4; ++i) {
        const Edge& a = g.edge(order[static_cast<std::size_t>(i)]);
        const Edge& b = g.edge(order[static_cast<std::size_t>((i + 1) % 4)]);
        CHECK(oracle::intersection_count(a, b) == 1);
    }
}

TEST_CASE("family serialization round trip") {
    auto fam = enumerate_linear_cycles(complete_hypergraph(5, 2), 4);
    std::stringstream ss;
    write_cycle_family(ss, fam, "k5");
    CycleFamily back = read_cycle_family(ss);
    CHECK(back.k == fam.k);
    CHECK(back.host_edge_count == fam.host_edge_count);
    CHECK(back.members == fam.members);
    CHECK(back.truncated == fam.truncated);
}

TEST_CASE("k=2 cycles are pairs sharing exactly two vertices") {
    Hypergraph g(5, 3, {{0, 1, 2}, {0, 1, 3}, {2, 3, 4}});
    auto fam = enumerate_linear_cycles(g, 2);
    CHECK(fam.members == std::vector<std::vector<EdgeId>>{{0, 1}});
}
