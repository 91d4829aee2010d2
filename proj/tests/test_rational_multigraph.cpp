#include <stdexcept>

#include "avgconn/graph_io.hpp"
#include "avgconn/multigraph.hpp"
#include "avgconn/rational.hpp"
#include "avgconn/verify.hpp"
#include "doctest.h"

using namespace avgconn;

TEST_CASE("rational normalizes to reduced positive-denominator form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(2, 4).num() == 1);
  CHECK(Rational(2, 4).den() == 2);
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 7).den() == 1);
  CHECK(Rational(21, 10).str() == "21/10");
  CHECK(Rational(2).str() == "2/1");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational arithmetic and order") {
  CHECK(Rational(2) + Rational(28, 124) == Rational(69, 31));
  CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
  CHECK(Rational(7, 3) - Rational(1, 3) == Rational(2));
  CHECK(Rational(3, 4) / Rational(3, 2) == Rational(1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
  CHECK(Rational(9, 4) > Rational(69, 31));
  CHECK(Rational(15, 7) < Rational(9, 4));
  CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("multigraph stores multiplicities per unordered pair") {
  MultiGraph g(4);
  g.add_edge(2, 0);
  g.add_edge(0, 2);
  g.add_edge(1, 3, 2);
  CHECK(g.order() == 4);
  CHECK(g.size() == 4);
  CHECK(g.distinct_pair_count() == 2);
  CHECK(g.multiplicity(0, 2) == 2);
  CHECK(g.multiplicity(2, 0) == 2);
  CHECK(g.multiplicity(0, 1) == 0);
  CHECK(g.degree(3) == 2);
  CHECK(g.degree_sequence() == std::vector<int>{2, 2, 2, 2});
  CHECK_FALSE(g.is_simple());
  CHECK(g.max_multiplicity() == 2);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.check_vertex(4, "test"), std::invalid_argument);
}

TEST_CASE("neighbors come back in ascending order with multiplicities") {
  MultiGraph g(5);
  g.add_edge(2, 4);
  g.add_edge(2, 0, 3);
  g.add_edge(2, 1);
  std::vector<std::pair<int, int>> want{{0, 3}, {1, 1}, {4, 1}};
  CHECK(g.neighbors(2) == want);
  CHECK(g.edge_copies().size() == 5);
}

TEST_CASE("families have the advertised shapes") {
  CHECK(cycle(5).degree_sequence() == std::vector<int>(5, 2));
  CHECK(complete_bipartite(2, 3).size() == 6);
  CHECK(complete_bipartite(2, 3).degree(0) == 3);
  CHECK(complete_bipartite(2, 3).degree(2) == 2);
  MultiGraph cp = cycle_power(8, 3);
  CHECK(cp.is_simple());
  CHECK(cp.degree_sequence() == std::vector<int>(8, 6));
  CHECK(cp.size() == 24);
  MultiGraph cb = cycle_bundle(8, 3);
  CHECK(cb.max_multiplicity() == 3);
  CHECK(cb.degree_sequence() == std::vector<int>(8, 6));
  CHECK(cb.size() == 24);
  CHECK_THROWS_AS(cycle_bundle(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(cycle_power(7, 3), std::invalid_argument);
}

TEST_CASE("subdivision splits one copy through a fresh vertex") {
  MultiGraph g(2);
  g.add_edge(0, 1, 2);
  MultiGraph s = subdivide_edge(g, EdgeRef(0, 1));
  CHECK(s.order() == 3);
  CHECK(s.multiplicity(0, 1) == 1);
  CHECK(s.multiplicity(0, 2) == 1);
  CHECK(s.multiplicity(1, 2) == 1);

  MultiGraph all = subdivide_all(g);
  CHECK(all.order() == 4);
  CHECK(all.size() == 4);
  CHECK(all.is_simple());
  CHECK(canonical_key(all) == canonical_key(cycle(4)));
}

TEST_CASE("contraction merges endpoints and compacts indices") {
  CHECK(canonical_key(contract_edge(cycle(4), EdgeRef(1, 2))) ==
        canonical_key(cycle(3)));

  // A parallel copy of the contracted pair becomes a loop and vanishes.
  MultiGraph two(2);
  two.add_edge(0, 1, 2);
  MultiGraph point = contract_edge(two, EdgeRef(0, 1));
  CHECK(point.order() == 1);
  CHECK(point.size() == 0);

  // Distinct residual neighborhoods merge without creating multiplicities.
  MultiGraph c = contract_edge(complete_bipartite(2, 3), EdgeRef(0, 2));
  CHECK(c.order() == 4);
  CHECK(c.size() == 5);
  CHECK(c.is_simple());

  // Shared neighbours stack into one doubled pair instead.
  MultiGraph c4 = cycle(4);
  c4.add_edge(0, 2);
  MultiGraph merged = contract_edge(c4, EdgeRef(0, 2));
  CHECK(merged.order() == 3);
  CHECK(merged.max_multiplicity() == 2);
}

TEST_CASE("subdivide then contract the new edge restores the graph") {
  MultiGraph g = complete_bipartite(2, 3);
  MultiGraph s = subdivide_edge(g, EdgeRef(1, 4));
  MultiGraph back = contract_edge(s, EdgeRef(1, 5));
  CHECK(canonical_key(back) == canonical_key(g));
}

TEST_CASE("extend and remove_edge_copy adjust single copies") {
  MultiGraph g = cycle(4);
  MultiGraph e = extend(g, 0, 2);
  CHECK(e.order() == 5);
  CHECK(e.degree(4) == 2);
  CHECK(e.multiplicity(0, 4) == 1);

  MultiGraph r = remove_edge_copy(cycle_bundle(3, 2), EdgeRef(0, 1));
  CHECK(r.multiplicity(0, 1) == 1);
  CHECK(r.size() == 5);
}

TEST_CASE("connected_components labels by smallest vertex") {
  MultiGraph g(5);
  g.add_edge(0, 3);
  g.add_edge(1, 2);
  int count = 0;
  std::vector<int> comp = connected_components(g, &count);
  CHECK(count == 3);
  CHECK(comp == std::vector<int>{0, 1, 1, 0, 2});
  CHECK_FALSE(is_connected(g));
  CHECK(is_connected(cycle(3)));
}

TEST_CASE("graph6 round trip is bit exact") {
  for (const MultiGraph& g :
       {cycle(5), complete_bipartite(2, 3), cycle_power(8, 3)}) {
    MultiGraph back = from_graph6(to_graph6(g));
    CHECK(back == g);
  }
  CHECK(to_graph6(complete_bipartite(2, 3)) == "D]o");
  MultiGraph f = from_graph6("F?Ffo");
  CHECK(f.order() == 7);
  CHECK(f.size() == 9);
  CHECK_THROWS_AS(from_graph6(""), std::invalid_argument);
  CHECK_THROWS_AS(to_graph6(cycle_bundle(3, 2)), std::invalid_argument);
}

TEST_CASE("edge list format carries multiplicities") {
  MultiGraph g = cycle_bundle(3, 2);
  CHECK(to_edge_list(g) == "3 3\n0 1 2\n0 2 2\n1 2 2\n");
  CHECK(from_edge_list(to_edge_list(g)) == g);
  MultiGraph k = complete_bipartite(2, 3);
  CHECK(from_edge_list(to_edge_list(k)) == k);
}
