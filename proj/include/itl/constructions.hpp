#pragma once

#include <vector>

#include "itl/graph.hpp"
#include "itl/pattern.hpp"
#include "itl/rational.hpp"

namespace itl {

// Clique on k core vertices plus one pendant vertex per part of the partition
// (r_1,...,r_s) of the core; pendant i is joined to its r_i core vertices.
MultiHypergraph pendant_graph(int k, const std::vector<int>& parts);

// Extremal host for {P_3, K_3}: K_{k+1} minus ((k+1)/2)K_2 for odd k, minus
// ((k-2)/2 K_2 u P_2) for even k.
MultiHypergraph gk_graph(int k);

// Extremal host forcing P_1 u P_2 with k-1 free edges: 2K_k for odd k, a
// circulant on Z_{2k-1} plus a fixed matching for even k. Requires k >= 7.
MultiHypergraph p1p2_host(int k);

// Multigraph dumbbell host: t parallel edges on every pair of n vertices and
// s loops per vertex, with t,s chosen from the golden-ratio constants.
MultiHypergraph dumbbell_multihost(int k, int n);
// Closed-form ex(G, dumbbell) of that host.
long long dumbbell_multihost_ex(int k, int n);
// The (t, s) parameters used by dumbbell_multihost.
std::pair<long long, long long> dumbbell_multihost_params(int k, int n);

// Disjoint dumbbells (plus one isolated 2-edge when k is even); e = floor(3(k-1)/2).
MultiHypergraph dumbbell_simplehost(int k);

// Overlaid cliques K_{r_1} >= ... >= K_{r_l} on nested vertex prefixes.
MultiHypergraph nested_cliques(const std::vector<int>& rs);

MultiHypergraph two_cliques(int k);  // 2K_k

}  // namespace itl
