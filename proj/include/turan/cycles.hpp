#ifndef TURAN_CYCLES_HPP
#define TURAN_CYCLES_HPP

#include <limits>
#include <optional>
#include <vector>

#include "turan/hypergraph.hpp"

namespace turan {

// A family of linear cycles of a common length k, each member stored as a
// sorted k-set of host edge ids. The edge set of a linear cycle determines its
// cyclic order, so members dedupe as sets.
struct CycleFamily {
    int k = 0;
    int host_edge_count = 0;
    std::vector<std::vector<EdgeId>> members;  // each sorted; list sorted; duplicate-free
    bool truncated = false;                    // enumeration cap was hit
};

// The 2l-graph S: vertices are host edge ids, edges are family members.
// Host edges in no member are isolated vertices of S.
using CycleHypergraph = Hypergraph;

// All copies of the linear cycle C_k^(r) in g, as edge-id sets, up to an
// optional cap on the number of members (cap hit => truncated flag).
CycleFamily enumerate_linear_cycles(const Hypergraph& g, int k, long long cap = -1);

bool is_cycle_free(const Hypergraph& g, int k);

// True iff the given edge ids form a linear cycle in g: consecutive edges
// (in the induced cyclic order) share exactly one vertex, non-consecutive
// edges are disjoint, and the union has k(r-1) vertices.
bool validate_linear_cycle(const Hypergraph& g, const std::vector<EdgeId>& member);

// The member's edges in cyclic order (least id first, smaller-id neighbor next).
std::vector<EdgeId> cyclic_edge_order(const Hypergraph& g, const std::vector<EdgeId>& member);

inline constexpr int infinite_girth = std::numeric_limits<int>::max();

// Length of the shortest Berge cycle (>= 2), or infinite_girth if acyclic.
int berge_girth(const Hypergraph& g);

// Some Berge cycle of length <= maxlen, shortest length first; edges of the cycle.
std::optional<std::vector<EdgeId>> find_short_berge_cycle(const Hypergraph& g, int maxlen);

CycleHypergraph to_cycle_hypergraph(const CycleFamily& f);

// Delta_j of the family: max number of members containing a fixed j-set of edge ids.
int family_max_degree(const CycleFamily& f, int j);

// Family serialization: header "k <k> host_edges <m> host <name>", one member per line.
void write_cycle_family(std::ostream& os, const CycleFamily& f, const std::string& host_name);
CycleFamily read_cycle_family(std::istream& is);

}  // namespace turan

#endif
