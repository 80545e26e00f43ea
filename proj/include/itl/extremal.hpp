#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "itl/graph.hpp"
#include "itl/pattern.hpp"
#include "itl/rational.hpp"

namespace itl {

struct Budget {
  long long max_nodes = -1;  // -1: unlimited
  double max_seconds = -1;   // -1: unlimited
};

struct ExtremalResult {
  long long value = 0;
  std::vector<std::pair<Edge, int>> witness;  // edge classes kept, with counts
  std::string method;  // generic | cycles-forest | p1p2-formula |
                       // oneuniform-formula | p3-packing | dumbbell-closed-form
  long long nodes_explored = 0;
  bool complete = true;  // false: budget exhausted, value is a lower bound
};

struct ExOptions {
  Budget budget;
  long long stop_at = -1;    // stop once a witness of this size is known
  long long seed_lower = 0;  // known achievable lower bound (no witness kept)
  bool force_generic = false;
  bool need_witness = true;
};

// ex(G, P): maximum edge count of a P-free subgraph.
ExtremalResult ex_exact(const MultiHypergraph& g, const Pattern& p, const ExOptions& opt = {});

// Closed-form paths, exposed for direct use and oracle tests.
ExtremalResult ex_cycles(const MultiHypergraph& g);       // max-weight spanning forest
ExtremalResult ex_p1p2(const MultiHypergraph& g);         // max(degree, matching) if >= 6
ExtremalResult ex_oneuniform(std::vector<int> x, std::vector<int> d);

long long turan_graph_size(int n, int t);
MultiHypergraph turan_graph(int n, int t);

// Certified lower bound ceil(ex(K_n,P)/C(n,2) * e(G)); ex_table[m] must hold
// ex(K_m, P) for m up to g.n.
long long averaging_bound(const MultiHypergraph& g, const std::vector<long long>& ex_table);

// Exact minimum fractional edge cover weight, by enumeration of LP basic
// solutions over the rationals.
Rational fractional_cover_number(const MultiHypergraph& h);

// (s-1)/(s-rho*) with s = e(H); nullopt when rho* >= s (bound inapplicable).
std::optional<Rational> genupper_exponent(const MultiHypergraph& h);

}  // namespace itl
