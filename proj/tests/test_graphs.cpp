#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "itl/constructions.hpp"
#include "itl/graph.hpp"
#include "itl/pattern.hpp"

using namespace itl;

namespace {

// Ground-truth containment by exhausting all injective vertex maps.
bool contains_brute(const MultiHypergraph& g, const MultiHypergraph& h) {
  if (h.n > g.n) return false;
  std::vector<int> perm(g.n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto& [key, m] : h.edges) {
      Edge img;
      for (int v : key) img.push_back(perm[v]);
      std::sort(img.begin(), img.end());
      if (g.multiplicity(img) < m) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

MultiHypergraph random_graph(std::mt19937& rng, int n, int tries, int mult_cap) {
  MultiHypergraph g;
  g.n = n;
  for (int i = 0; i < tries; ++i) {
    int u = (int)(rng() % n), v = (int)(rng() % n);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (g.multiplicity(u, v) < mult_cap) g.add_edge({u, v});
  }
  return g;
}

int count_nonisomorphic(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  std::set<std::string> forms;
  for (uint64_t mask = 0; mask < (uint64_t{1} << pairs.size()); ++mask) {
    MultiHypergraph g;
    g.n = n;
    for (size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1) g.add_edge({pairs[i].first, pairs[i].second});
    forms.insert(canonical_form(g).bytes);
  }
  return (int)forms.size();
}

}  // namespace

TEST_CASE("vertex sets") {
  VertexSet s = VertexSet::of({0, 3, 5});
  CHECK(s.count() == 3);
  CHECK(s.has(3));
  CHECK(!s.has(1));
  s.remove(3);
  CHECK(s.to_vector() == std::vector<int>{0, 5});
}

TEST_CASE("graph text format round-trips") {
  MultiHypergraph g;
  g.n = 4;
  g.add_edge({0, 1}, 2);
  g.add_edge({2});
  g.add_edge({1, 2});
  auto h = parse_graph(format_graph(g));
  CHECK(h == g);

  auto p = parse_graph("# comment\nn 3\n0 1 x3\n2\n");
  CHECK(p.n == 3);
  CHECK(p.multiplicity(0, 1) == 3);
  CHECK(p.loop1_count(2) == 1);
  CHECK(p.e() == 4);

  CHECK_THROWS_WITH(parse_graph("n 2\n0 5\n"),
                    doctest::Contains("line 2"));
  CHECK_THROWS_WITH(parse_graph("0 1\n"), doctest::Contains("line 1"));
}

TEST_CASE("basic counters") {
  auto g = parse_graph("n 3\n0 1 x2\n1 2\n0\n");
  CHECK(g.e() == 4);
  CHECK(g.e_size(2) == 3);
  CHECK(g.e_size(1) == 1);
  CHECK(g.degrees2() == std::vector<int>{2, 3, 1});
  CHECK(!g.is_simple());
  CHECK(!g.two_uniform());
  CHECK(g.covered_vertices().count() == 3);

  MultiHypergraph iso;
  iso.n = 3;
  iso.add_edge({0, 1});
  CHECK(iso.has_isolated_vertex());
  CHECK(iso.without_isolated().n == 2);
}

TEST_CASE("contraction merges an independent set into one vertex") {
  // Path 0-1-2; contracting {0,2} creates a doubled edge to the middle.
  auto g = parse_graph("n 3\n0 1\n1 2\n");
  auto c = contract(g, VertexSet::of({0, 2}));
  CHECK(c.n == 2);
  CHECK(c.e() == 2);
  CHECK(c.multiplicity(0, 1) == 2);

  // Contracting adjacent vertices produces a 2-uniform loop.
  auto tri = clique(3);
  auto c2 = contract(tri, VertexSet::of({0, 1}));
  CHECK(c2.e() == 3);
  CHECK(c2.multiplicity(Edge{1, 1}) == 1);
}

TEST_CASE("simplifications") {
  auto g = parse_graph("n 3\n0 1 x3\n1 2\n");
  auto us = simplify(g, SimplifyKind::UnderlyingSimple);
  CHECK(us.is_simple());
  CHECK(us.e() == 2);

  auto cc = simplify(g, SimplifyKind::ComponentClosure);
  CHECK(canonical_form(cc) == canonical_form(clique(3)));

  // Distance closure at t=2 of the 3-edge path misses only the end pair.
  auto p3 = path_graph(3);
  auto dc = simplify(p3, SimplifyKind::DistanceClosure, 2);
  CHECK(dc.e() == 5);
  CHECK(dc.multiplicity(0, 3) == 0);

  CHECK_THROWS_AS(simplify(g, SimplifyKind::DistanceClosure, 0), std::invalid_argument);
}

TEST_CASE("containment on known pairs") {
  CHECK(contains(clique(3), path_graph(2)));
  CHECK(!contains(cycle_graph(4), clique(3)));
  CHECK(contains(clique(4), cycle_graph(4)));

  MultiHypergraph dbl;
  dbl.n = 2;
  dbl.add_edge({0, 1}, 2);
  CHECK(!contains(path_graph(1), dbl));  // demands both parallel copies
  CHECK(contains(dbl, path_graph(1)));
}

TEST_CASE("containment matches the permutation oracle") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = random_graph(rng, 3 + (int)(rng() % 3), 8, 2);
    auto h = random_graph(rng, 2 + (int)(rng() % 3), 4, 2);
    CHECK(contains(g, h) == contains_brute(g, h));
  }
}

TEST_CASE("sunflower recognition") {
  auto core = is_sunflower(star(3));
  REQUIRE(core.has_value());
  CHECK(core->to_vector() == std::vector<int>{0});

  auto mcore = is_sunflower(matching(3));
  REQUIRE(mcore.has_value());
  CHECK(mcore->empty());

  MultiHypergraph dbl;
  dbl.n = 2;
  dbl.add_edge({0, 1}, 2);
  CHECK(is_sunflower(dbl).has_value());

  CHECK(!is_sunflower(cycle_graph(4)).has_value());
  CHECK(!is_sunflower(path_graph(3)).has_value());
  CHECK(!is_sunflower(clique(3)).has_value());
}

TEST_CASE("canonical form counts isomorphism classes") {
  CHECK(count_nonisomorphic(4) == 11);
  CHECK(count_nonisomorphic(5) == 34);
  CHECK(count_nonisomorphic(6) == 156);
}

TEST_CASE("canonical labeling is isomorphism-invariant") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + (int)(rng() % 5);
    auto g = random_graph(rng, n, 10, 3);
    if (rng() % 2) g.add_edge({(int)(rng() % n)});  // sprinkle loops
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto h = g.relabeled(perm);
    CHECK(canonical_form(g) == canonical_form(h));
    CHECK(g.relabeled(canonical_labeling(g)) == h.relabeled(canonical_labeling(h)));
  }
}

TEST_CASE("canonical form separates close non-isomorphic pairs") {
  CHECK(canonical_form(path_graph(3)) != canonical_form(star(3)));
  CHECK(canonical_form(cycle_graph(6)) != canonical_form(two_cliques(3)));
  MultiHypergraph a, b;
  a.n = b.n = 3;
  a.add_edge({0, 1}, 2);
  a.add_edge({1, 2});
  b.add_edge({0, 1});
  b.add_edge({1, 2}, 2);
  CHECK(canonical_form(a) == canonical_form(b));
}

TEST_CASE("independence and matching numbers") {
  CHECK(independence_number(cycle_graph(5)) == 2);
  CHECK(independence_number(complete_bipartite(3, 3)) == 3);
  CHECK(independence_number(clique(4)) == 1);
  CHECK(matching_number(cycle_graph(5)) == 2);
  CHECK(matching_number(path_graph(3)) == 2);
  CHECK(matching_number(complete_bipartite(2, 4)) == 2);
  CHECK(matching_number(clique(7)) == 3);
}
