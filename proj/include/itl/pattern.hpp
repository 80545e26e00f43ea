#pragma once

#include <optional>
#include <string>
#include <vector>

#include "itl/graph.hpp"

namespace itl {

// A forbidden family: either an explicit finite list of graphs or a named
// family with a structural containment test.
struct Pattern {
  enum class Kind {
    Finite,
    AllCycles,   // cycles of length >= 3; parallel pairs are not cycles
    EvenCycles,  // C_4, C_6, ...
    OddCycles,
    Clique,        // K_t, param = t
    Path,          // path with `param` edges
    StarUnionEdge, // P_1 u P_2: disjoint union of an edge and a 2-edge path
    P3K3,          // {3-edge path, triangle}
    Dumbbell,      // one `param`-edge with a 1-uniform loop at each vertex
    OneUniform,    // degree sequence degs (descending)
  };

  Kind kind = Kind::Finite;
  int param = 0;
  std::vector<int> degs;                  // OneUniform only
  std::vector<MultiHypergraph> members_;  // Finite only

  static Pattern finite(std::vector<MultiHypergraph> members);
  static Pattern named(Kind kind, int param = 0);
  static Pattern one_uniform(std::vector<int> degs);
  // CLI literal: cycles | even-cycles | odd-cycles | K<t> | P<t> | P1uP2 |
  // P3K3 | dumbbell<r> | oneuniform:<d1,...,dt>
  static std::optional<Pattern> parse(const std::string& literal);

  std::string name() const;
  bool is_finite_family() const;
  // Explicit member graphs; only valid for finite kinds (throws otherwise).
  std::vector<MultiHypergraph> members() const;
};

// True iff F contains some member of the family.
bool family_contains(const Pattern& p, const MultiHypergraph& f);

// Structural classifications of P-free graphs used by fast solver paths.
enum class FreeShape {
  MatchingStarOrK4,    // P_1 u P_2: matching, star, or subgraph of K_4
  TrianglesAndStars,   // P_3: disjoint union of triangles and stars
  StarsOnly,           // {P_3, K_3}: disjoint union of stars
  Forest,              // all cycles: forests (keeping full multiplicities)
  OneUniformFormula,   // 1-uniform degree-sequence formula
};
std::optional<FreeShape> free_characterization(const Pattern& p);

// Standard small generators shared across modules.
MultiHypergraph clique(int n);
MultiHypergraph complete_bipartite(int a, int b);
MultiHypergraph path_graph(int edge_count);
MultiHypergraph cycle_graph(int len);
MultiHypergraph star(int leaves);
MultiHypergraph matching(int edge_count);

}  // namespace itl
