#pragma once

#include <optional>
#include <vector>

#include "itl/graph.hpp"
#include "itl/pattern.hpp"
#include "itl/rational.hpp"

namespace itl {

struct CHResult {
  Rational c;  // optimum of max xj over the constraint polygon
  Rational x, j;
  std::vector<int> active;  // 1-based constraint indices tight at the optimum
};

// Exact optimum of: maximize x*j subject to (t'-1)x + (d_{t'}-1)j <= 1 for
// all t' in [t], x,j >= 0. Requires t >= 2 and d_1 >= 2.
CHResult c_constant(const std::vector<int>& d);

// Exact inverse value for the multigraph problem over 1-uniform hosts, by
// exhausting nonincreasing integer degree sequences. Guarded to k <= 12.
long long estar_bruteforce(const std::vector<int>& d, int k);

// 1-uniform host with the given loop counts.
MultiHypergraph one_uniform_host(const std::vector<int>& x);
// Star on t+1 vertices with edge multiplicities d_1..d_t.
MultiHypergraph multistar(const std::vector<int>& d);

struct ChainReport {
  int k = 0;
  long long f1 = 0;
  std::optional<long long> f2;  // absent when the restricted program is empty
  long long f3 = 0;
  Rational f4;
  std::optional<long long> estar;  // absent above the brute-force guard
};

// Evaluates the chain of reduced programs at a fixed k. Guaranteed relations
// (f2 <= f1, f3 <= f4, f1 <= estar when present) are enforced here; the O(k)
// slack terms are only reported.
ChainReport reduction_chain_check(const std::vector<int>& d, int k);

}  // namespace itl
