#pragma once

#include <functional>
#include <string>
#include <vector>

#include "itl/extremal.hpp"
#include "itl/graph.hpp"
#include "itl/pattern.hpp"
#include "itl/rational.hpp"

namespace itl {

struct SearchSpace {
  enum class Compression { None, ComponentClosure, UnderlyingSimple };

  bool simple_only = true;  // hosts simple (multiplicity 1, no loops)
  int n_max = 8;
  long long m_max = 16;
  int mult_max = 1;
  Compression compression = Compression::None;
  bool require_no_isolated = true;
  bool allow_loops1 = false;  // permit 1-uniform loops in hosts
};

struct FinitenessVerdict {
  bool infinite = false;
  int k_threshold = 0;  // infinite for k >= k_threshold
  int core_size = -1;   // sunflower core size when infinite
  // When finite: r > 0 means all-uniform members with max uniformity r and
  // cap r!(k-1)^{r+1}; r == 0 means non-uniform members with cap |U|(k-1).
  int r = 0;
  int u_size = 0;
  BigInt cap(int k) const;
};

struct InverseResult {
  int k = 0;
  std::string status;  // exact-within-caps | infinite | budget-exhausted
  long long best_value = 0;
  std::vector<MultiHypergraph> hosts;  // canonical maximizer representatives
  std::vector<std::string> host_forms;
  long long nodes = 0;
  double seconds = 0;
  int sunflower_core = -1;
};

struct HostReport {
  bool pass = false;  // ex(G,P) < k
  long long edge_count = 0;
  ExtremalResult ex;
};

FinitenessVerdict finiteness_check(const Pattern& p);
InverseResult inverse_search(const Pattern& p, int k, const SearchSpace& space,
                             const Budget& budget = {});
HostReport verify_host(const Pattern& p, int k, const MultiHypergraph& g);

// Runs the same isomorph-free host enumeration and hands every visited host
// to the visitor. k < 0 disables the ex-based pruning entirely (the pattern
// is then ignored), turning this into a plain generator of hosts within caps.
void enumerate_hosts(const Pattern& p, int k, const SearchSpace& space,
                     const std::function<void(const MultiHypergraph&)>& visitor,
                     const Budget& budget = {});

}  // namespace itl
