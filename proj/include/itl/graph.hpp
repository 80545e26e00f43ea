#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace itl {

// An edge is a sorted multiset of vertex indices. Size-1 edges are loops
// ("1-uniform loops"), {v,v} is a 2-uniform loop as produced by contraction.
using Edge = std::vector<int>;

struct VertexSet {
  uint64_t bits = 0;

  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.add(v);
    return s;
  }
  void add(int v) { bits |= (uint64_t{1} << v); }
  void remove(int v) { bits &= ~(uint64_t{1} << v); }
  bool has(int v) const { return (bits >> v) & 1; }
  int count() const { return __builtin_popcountll(bits); }
  bool empty() const { return bits == 0; }
  VertexSet operator|(VertexSet o) const { return {bits | o.bits}; }
  VertexSet operator&(VertexSet o) const { return {bits & o.bits}; }
  bool operator==(const VertexSet&) const = default;
  std::vector<int> to_vector() const;
};

struct CanonicalForm {
  std::string bytes;  // lowercase hex serialization of the canonical code
  bool operator==(const CanonicalForm&) const = default;
  auto operator<=>(const CanonicalForm&) const = default;
};

// Vertices are 0..n-1. Edges are stored as sorted multisets mapped to a
// positive multiplicity; absent edges are never stored.
struct MultiHypergraph {
  int n = 0;
  std::map<Edge, int> edges;

  long long e() const;             // total edge count with multiplicity
  long long e_size(int i) const;   // edges of multiset size i, with multiplicity
  int multiplicity(const Edge& key) const;
  int multiplicity(int u, int v) const;  // 2-edge {u,v}
  void add_edge(Edge key, int mult = 1);
  void remove_unit(const Edge& key);  // decrement multiplicity by one

  bool is_simple() const;  // all multiplicities 1, no repeated vertex in an edge
  bool two_uniform() const;            // every edge has multiset size 2
  bool loopless_two_uniform() const;   // two_uniform and no {v,v} edges
  bool one_uniform() const;            // every edge has multiset size 1
  int max_edge_size() const;
  bool has_isolated_vertex() const;
  VertexSet covered_vertices() const;  // vertices incident to some edge

  // Degree in the 2-uniform part, counting multiplicity; a {v,v} loop adds 2.
  std::vector<int> degrees2() const;
  int loop1_count(int v) const;  // multiplicity of the 1-edge {v}

  // Connected components over shared-edge adjacency; isolated vertices form
  // singleton components.
  std::vector<std::vector<int>> components() const;

  // Relabels vertex v to perm[v]; perm must be a permutation of 0..n-1.
  MultiHypergraph relabeled(const std::vector<int>& perm) const;
  // Keeps only the listed vertices (in the given order), compacting labels.
  MultiHypergraph induced_compact(const std::vector<int>& keep) const;
  // Drops vertices incident to no edge, compacting labels.
  MultiHypergraph without_isolated() const;

  bool operator==(const MultiHypergraph&) const = default;
};

enum class SimplifyKind { UnderlyingSimple, ComponentClosure, DistanceClosure };

MultiHypergraph contract(const MultiHypergraph& g, VertexSet i);
MultiHypergraph simplify(const MultiHypergraph& g, SimplifyKind kind, int t = 1);

// Injective-map subgraph containment: every H-edge key must map onto a G-edge
// key whose multiplicity is at least the H-multiplicity (parallel copies are
// demanded jointly).
bool contains(const MultiHypergraph& g, const MultiHypergraph& h);

// Returns the common pairwise edge intersection (the core) if H is a
// sunflower. Single-edge graphs and pure parallel classes return the edge's
// vertex set; otherwise the core may be empty (e.g. a matching).
std::optional<VertexSet> is_sunflower(const MultiHypergraph& h);

CanonicalForm canonical_form(const MultiHypergraph& g);
// perm[old] = new label; relabeled(perm) of isomorphic graphs coincide.
std::vector<int> canonical_labeling(const MultiHypergraph& g);

// Text format: `n <count>` header, then one edge per line as space-separated
// vertex indices with an optional `x<mult>` suffix; `#` starts a comment.
MultiHypergraph parse_graph(const std::string& text);
std::string format_graph(const MultiHypergraph& g);

// Max independent set size in the underlying simple 2-uniform part.
int independence_number(const MultiHypergraph& g);
// Max matching in the underlying simple loopless 2-uniform part.
int matching_number(const MultiHypergraph& g);

}  // namespace itl
