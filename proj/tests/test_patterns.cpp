#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "itl/graph.hpp"
#include "itl/pattern.hpp"

using namespace itl;

TEST_CASE("literal parsing") {
  CHECK(Pattern::parse("cycles")->kind == Pattern::Kind::AllCycles);
  CHECK(Pattern::parse("even-cycles")->kind == Pattern::Kind::EvenCycles);
  CHECK(Pattern::parse("odd-cycles")->kind == Pattern::Kind::OddCycles);
  auto k4 = Pattern::parse("K4");
  REQUIRE(k4);
  CHECK(k4->kind == Pattern::Kind::Clique);
  CHECK(k4->param == 4);
  auto p3 = Pattern::parse("P3");
  REQUIRE(p3);
  CHECK(p3->kind == Pattern::Kind::Path);
  CHECK(p3->param == 3);
  CHECK(Pattern::parse("P1uP2")->kind == Pattern::Kind::StarUnionEdge);
  CHECK(Pattern::parse("P3K3")->kind == Pattern::Kind::P3K3);
  auto d = Pattern::parse("dumbbell2");
  REQUIRE(d);
  CHECK(d->kind == Pattern::Kind::Dumbbell);
  CHECK(d->param == 2);
  auto ou = Pattern::parse("oneuniform:3,2,1");
  REQUIRE(ou);
  CHECK(ou->degs == std::vector<int>{3, 2, 1});
  CHECK(!Pattern::parse("frobnicate"));
  CHECK(!Pattern::parse("K0"));
}

TEST_CASE("finite members") {
  CHECK(Pattern::named(Pattern::Kind::Clique, 4).members().size() == 1);
  CHECK(Pattern::named(Pattern::Kind::P3K3).members().size() == 2);
  auto p1p2 = Pattern::named(Pattern::Kind::StarUnionEdge).members();
  REQUIRE(p1p2.size() == 1);
  CHECK(p1p2[0].n == 5);
  CHECK(p1p2[0].e() == 3);
  auto db = Pattern::named(Pattern::Kind::Dumbbell, 2).members();
  REQUIRE(db.size() == 1);
  CHECK(db[0].e() == 3);
  CHECK(db[0].e_size(1) == 2);
  CHECK(!Pattern::named(Pattern::Kind::AllCycles).is_finite_family());
  CHECK_THROWS(Pattern::named(Pattern::Kind::AllCycles).members());
}

TEST_CASE("cycle detection") {
  auto cyc = Pattern::named(Pattern::Kind::AllCycles);
  CHECK(family_contains(cyc, clique(3)));
  CHECK(family_contains(cyc, cycle_graph(7)));
  CHECK(!family_contains(cyc, path_graph(5)));
  CHECK(!family_contains(cyc, star(6)));
  MultiHypergraph dbl;
  dbl.n = 2;
  dbl.add_edge({0, 1}, 2);
  CHECK(!family_contains(cyc, dbl));  // a parallel pair is not a cycle
}

TEST_CASE("even cycle detection") {
  auto even = Pattern::named(Pattern::Kind::EvenCycles);
  CHECK(family_contains(even, cycle_graph(4)));
  CHECK(family_contains(even, cycle_graph(6)));
  CHECK(!family_contains(even, cycle_graph(5)));
  CHECK(!family_contains(even, clique(3)));
  CHECK(family_contains(even, clique(4)));
  // Two triangles sharing one vertex: still no even cycle.
  auto bowtie = parse_graph("n 5\n0 1\n1 2\n0 2\n2 3\n3 4\n2 4\n");
  CHECK(!family_contains(even, bowtie));
  // A chord on a 5-cycle creates a 4-cycle.
  auto chorded = parse_graph("n 5\n0 1\n1 2\n2 3\n3 4\n0 4\n0 2\n");
  CHECK(family_contains(even, chorded));
  MultiHypergraph dbl;
  dbl.n = 2;
  dbl.add_edge({0, 1}, 2);
  CHECK(!family_contains(even, dbl));
}

TEST_CASE("odd cycle detection") {
  auto odd = Pattern::named(Pattern::Kind::OddCycles);
  CHECK(family_contains(odd, clique(3)));
  CHECK(!family_contains(odd, complete_bipartite(3, 3)));
  CHECK(!family_contains(odd, cycle_graph(6)));
  CHECK(family_contains(odd, cycle_graph(7)));
}

TEST_CASE("dumbbell containment") {
  auto d = Pattern::named(Pattern::Kind::Dumbbell, 2);
  auto yes = parse_graph("n 2\n0 1\n0\n1\n");
  CHECK(family_contains(d, yes));
  auto missing = parse_graph("n 2\n0 1\n0\n");
  CHECK(!family_contains(d, missing));
  auto wrong_vertex = parse_graph("n 3\n0 1\n0\n2\n");
  CHECK(!family_contains(d, wrong_vertex));
  auto bigger = parse_graph("n 4\n0 1\n1 2\n2 3\n1\n2\n0\n");
  CHECK(family_contains(d, bigger));
}

TEST_CASE("one-uniform containment") {
  auto p = Pattern::one_uniform({2, 2});
  auto host = parse_graph("n 3\n0 x3\n1 x1\n2 x2\n");
  CHECK(family_contains(p, host));
  auto small = parse_graph("n 3\n0 x3\n1 x1\n2 x1\n");
  CHECK(!family_contains(p, small));
}

TEST_CASE("shape characterizations for fast paths") {
  CHECK(free_characterization(Pattern::named(Pattern::Kind::StarUnionEdge)) ==
        FreeShape::MatchingStarOrK4);
  CHECK(free_characterization(Pattern::named(Pattern::Kind::Path, 3)) ==
        FreeShape::TrianglesAndStars);
  CHECK(free_characterization(Pattern::named(Pattern::Kind::P3K3)) == FreeShape::StarsOnly);
  CHECK(free_characterization(Pattern::named(Pattern::Kind::AllCycles)) == FreeShape::Forest);
  CHECK(free_characterization(Pattern::one_uniform({2, 2})) == FreeShape::OneUniformFormula);
  CHECK(!free_characterization(Pattern::named(Pattern::Kind::Clique, 3)).has_value());
}

TEST_CASE("generator sizes") {
  CHECK(clique(5).e() == 10);
  CHECK(complete_bipartite(3, 3).e() == 9);
  CHECK(path_graph(4).n == 5);
  CHECK(cycle_graph(6).e() == 6);
  CHECK(star(4).e() == 4);
  CHECK(matching(3).n == 6);
}
