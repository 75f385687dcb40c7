#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wedge/hurwitz.hpp"
#include "wedge/rational.hpp"

namespace wedge {

// Finite multigraph; loops allowed, stored as (v, v). Edges are normalized
// (a <= b) and sorted.
struct MultiGraph {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;
};

MultiGraph make_graph(int vertices, std::vector<std::pair<int, int>> edges);

int edge_count(const MultiGraph& g);
int loop_count(const MultiGraph& g);
int degree(const MultiGraph& g, int v);  // a loop contributes 2
int component_count(const MultiGraph& g);
int first_betti(const MultiGraph& g);  // E - V + components; a loop adds 1

// Dual graph of the stable degeneration attached to a class from
// (A5; 3,2,2,2): vertices are the A5-left cosets of <g1,g2>, edges the
// A5-left cosets of <g3,g4>, an edge joining the one or two vertex cosets
// it meets. Throws for any other signature.
MultiGraph intersection_graph(const Signature& sig, const CoverClass& c);

// Exact isomorphism test by backtracking with degree pruning (small graphs).
bool is_isomorphic(const MultiGraph& a, const MultiGraph& b);

MultiGraph petersen_reference();  // Kneser graph on 2-subsets of {1..5}
MultiGraph complete_reference(int n);
MultiGraph bouquet_reference(int loops);

// b1 + sum of component genera; genera empty means all zero, otherwise one
// entry per vertex (throws on size mismatch).
int stable_genus(const MultiGraph& g, const std::vector<int>& genera = {});

// Genus-zero base orbifold with cone points of the given orders.
struct OrbifoldSig {
    std::vector<int> cone_orders;
};

OrbifoldSig make_orbifold(std::vector<int> cone_orders);

// 2 - sum(1 - 1/p_i), exact.
Rat orbifold_euler(const OrbifoldSig& sig);

// Genus of a smooth degree-d cover resolving all cone points:
// g = 1 - d * euler / 2. Throws unless every order divides the degree and
// the result is a nonnegative integer.
int cover_genus(long long degree, const OrbifoldSig& sig);

// Edge list, one "u-v" per line, after a "vertices edges" header line.
std::string dump_graph(const MultiGraph& g);

}  // namespace wedge
