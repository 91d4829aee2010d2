#include <algorithm>
#include <sstream>
#include <vector>

#include "avgconn/connectivity.hpp"
#include "avgconn/graph_io.hpp"
#include "avgconn/minimality.hpp"
#include "avgconn/multigraph.hpp"
#include "avgconn/verify.hpp"
#include "doctest.h"

using namespace avgconn;

TEST_CASE("canonical keys are permutation invariants") {
  MultiGraph g = complete_bipartite(2, 3);
  std::string key = canonical_key(g);
  CHECK(key == "DFw");

  // Relabel by an arbitrary permutation and compare.
  std::vector<int> perm = {3, 1, 4, 0, 2};
  MultiGraph h(5);
  for (const auto& [e, mult] : g.edges())
    h.add_edge(perm[e.first], perm[e.second], mult);
  CHECK(canonical_key(h) == key);
  CHECK(canonical_graph(h) == canonical_graph(g));

  CHECK(canonical_key(cycle(5)) != key);
  CHECK(canonical_key(cycle_bundle(8, 3)) ==
        "M8;0-6x3;0-7x3;1-5x3;1-7x3;2-4x3;2-6x3;3-4x3;3-5x3");
  // Multiplicities discriminate too.
  CHECK(canonical_key(cycle_bundle(3, 2)) != canonical_key(cycle(3)));
}

TEST_CASE("degree-class bipartiteness") {
  CHECK(bipartite_by_degree_class(complete_bipartite(2, 3), 2));
  CHECK(bipartite_by_degree_class(complete_bipartite(2, 6), 2));
  CHECK_FALSE(bipartite_by_degree_class(cycle(4), 2));  // no high side
  MultiGraph k4(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) k4.add_edge(i, j);
  CHECK_FALSE(bipartite_by_degree_class(k4, 2));
  CHECK(bipartite_by_degree_class(subdivide_all(k4), 2));
}

TEST_CASE("exhaustive catalogs match the published counts") {
  const int simple_counts[] = {1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 1; n <= 8; ++n)
    CHECK(enumerate_simple(n).size() == size_t(simple_counts[n - 1]));
  CHECK(enumerate_connected_simple(8).size() == 11117);
}

TEST_CASE("minimality filters keep the right graphs") {
  const int vertex_counts[] = {1, 1, 2, 3, 6, 12};
  const int edge_counts[] = {2, 4, 10, 27, 81, 265};
  EnumerationJob job;
  for (int n = 3; n <= 8; ++n) {
    job.n = n;
    job.mode = Mode::vertex;
    auto mv = enumerate_minimal(job);
    CHECK(mv.size() == size_t(vertex_counts[n - 3]));
    for (const MultiGraph& g : mv) CHECK(is_minimally_2_connected(g));

    job.mode = Mode::edge;
    auto me = enumerate_minimal(job);
    CHECK(me.size() == size_t(edge_counts[n - 3]));
    for (const MultiGraph& g : me) CHECK(is_minimally_2_edge_connected(g));
  }
}

TEST_CASE("both oracles agree with the flow solver") {
  for (const MultiGraph& g : enumerate_connected_simple(5)) {
    for (int u = 0; u < 5; ++u)
      for (int v = u + 1; v < 5; ++v) {
        CHECK(oracle_vertex_connectivity(g, u, v) ==
              local_vertex_connectivity(g, u, v));
        CHECK(oracle_edge_connectivity(g, u, v) ==
              local_edge_connectivity(g, u, v));
      }
  }
  MultiGraph m = cycle_bundle(4, 2);
  m.add_edge(0, 2);
  CHECK(oracle_edge_connectivity(m, 0, 2) == local_edge_connectivity(m, 0, 2));
  CHECK(oracle_vertex_connectivity(m, 0, 2) ==
        local_vertex_connectivity(m, 0, 2));
}

TEST_CASE("exhaustive argmax of the vertex average") {
  OptimalCertificate c4 = find_optimal(4, Mode::vertex);
  CHECK(c4.candidate_count == 1);
  CHECK(c4.best_average == Rational(2));
  CHECK(c4.witnesses == std::vector<std::string>{"C]"});
  CHECK(c4.bound == Rational(2));
  CHECK(c4.gap == Rational(0));
  CHECK_FALSE(c4.winners_bipartite_by_degree_class);
  CHECK(c4.winners_2_connected);
  CHECK(c4.winners_simple);

  OptimalCertificate c5 = find_optimal(5, Mode::vertex);
  CHECK(c5.candidate_count == 2);
  CHECK(c5.best_average == Rational(21, 10));
  CHECK(c5.witnesses == std::vector<std::string>{"DFw"});
  CHECK(c5.winners_bipartite_by_degree_class);

  OptimalCertificate c6 = find_optimal(6, Mode::vertex);
  CHECK(c6.candidate_count == 3);
  CHECK(c6.best_average == Rational(32, 15));
  CHECK(c6.witnesses == std::vector<std::string>{"E?~o"});

  OptimalCertificate c7 = find_optimal(7, Mode::vertex);
  CHECK(c7.candidate_count == 6);
  CHECK(c7.best_average == Rational(15, 7));
  CHECK(c7.witnesses == std::vector<std::string>{"F?B~o"});
}

TEST_CASE("exhaustive argmax of the edge average") {
  OptimalCertificate c5 = find_optimal(5, Mode::edge);
  CHECK(c5.candidate_count == 10);
  CHECK(c5.best_average == Rational(21, 10));
  CHECK(c5.witnesses == std::vector<std::string>{"DFw"});
  CHECK(c5.winners_simple);

  OptimalCertificate c6 = find_optimal(6, Mode::edge);
  CHECK(c6.candidate_count == 27);
  CHECK(c6.best_average == Rational(32, 15));
  CHECK(c6.witnesses == std::vector<std::string>{"E?~o"});

  OptimalCertificate c7 = find_optimal(7, Mode::edge);
  CHECK(c7.candidate_count == 81);
  CHECK(c7.best_average == Rational(15, 7));
  CHECK(c7.witnesses == std::vector<std::string>{"F?B~o"});
}

TEST_CASE("argmax accepts a graph6 stream and removes duplicates") {
  // C_5, K_{2,3}, a relabeled K_{2,3}, and a non-minimal chorded cycle: only
  // the two distinct minimal classes survive.
  MultiGraph k23 = complete_bipartite(2, 3);
  std::vector<int> perm = {4, 2, 0, 3, 1};
  MultiGraph shuffled(5);
  for (const auto& [e, mult] : k23.edges())
    shuffled.add_edge(perm[e.first], perm[e.second], mult);
  MultiGraph chorded = cycle(5);
  chorded.add_edge(0, 2);

  std::istringstream in(to_graph6(cycle(5)) + "\n" + to_graph6(k23) + "\n" +
                        to_graph6(shuffled) + "\n" + to_graph6(chorded) + "\n");
  OptimalCertificate c = find_optimal(5, Mode::vertex, &in);
  CHECK(c.candidate_count == 2);
  CHECK(c.best_average == Rational(21, 10));
  CHECK(c.witnesses == std::vector<std::string>{"DFw"});
}

TEST_CASE("higher-k probe stays below the conjectured ceiling") {
  ConjectureReport r = check_conjecture(3, 7, Mode::vertex);
  CHECK(r.candidate_count == 5);
  CHECK(r.best_average == Rational(22, 7));
  CHECK(r.probe == Rational(27, 8));
  CHECK(r.best_average < r.probe);
  CHECK(r.witnesses == std::vector<std::string>{"F?~v_"});
  CHECK(r.winners_bipartite_by_degree_class);
}
