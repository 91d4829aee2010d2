#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "avgconn/multigraph.hpp"
#include "avgconn/rational.hpp"

namespace avgconn {

// Brute-force reference values, deliberately independent of the flow solver.
// Vertex form: direct copies plus the smallest separating vertex set, found
// by trying every subset.  Edge form: the cheapest vertex bipartition with
// u and v on opposite sides.
int oracle_vertex_connectivity(const MultiGraph& g, int u, int v);  // n <= 10
int oracle_edge_connectivity(const MultiGraph& g, int u, int v);    // n <= 16

// Canonical relabeling computed by degree partitioning plus pruned
// permutation search; equal keys iff isomorphic.
MultiGraph canonical_graph(const MultiGraph& g);
std::string canonical_key(const MultiGraph& g);

// Every edge joins the two classes {degree == k} and {degree > k}.
bool bipartite_by_degree_class(const MultiGraph& g, int k);

// All simple graphs of order n up to isomorphism (n <= 8), sorted by
// canonical form; connected variant filters accordingly.
const std::vector<MultiGraph>& enumerate_simple(int n);
std::vector<MultiGraph> enumerate_connected_simple(int n);

struct EnumerationJob {
  int n = 0;
  Mode mode = Mode::vertex;
  int k = 2;
  enum class Source { internal, graph6_stream } source = Source::internal;
  std::istream* stream = nullptr;
  bool dedup = true;
};

// Graphs passing the minimality filter for the job's mode and k.  Internal
// source: exhaustive over isomorphism classes, n <= 8; in edge mode with
// k = 2 this includes the multigraphs obtained by doubling support bridges.
// Stream source: graph6 lines of order n, filtered the same way.
std::vector<MultiGraph> enumerate_minimal(const EnumerationJob& job);

struct OptimalCertificate {
  int n = 0;
  Mode mode = Mode::vertex;
  int candidate_count = 0;
  Rational best_average;
  std::vector<MultiGraph> winners;
  std::vector<std::string> witnesses;  // canonical forms of the winners
  Rational bound;                      // order-n upper bound for the mode
  Rational gap;                        // bound - best, always >= 0
  bool winners_bipartite_by_degree_class = false;
  bool winners_2_connected = false;
  bool winners_simple = false;
};

// Exhaustive argmax of the average over minimally 2-(edge-)connected graphs
// of order n (internal enumeration, n <= 8, or a graph6 stream).
OptimalCertificate find_optimal(int n, Mode mode, std::istream* graph6 = nullptr);

struct ConjectureReport {
  int k = 0;
  int n = 0;
  Mode mode = Mode::vertex;
  int candidate_count = 0;
  Rational best_average;
  Rational probe;  // (9/8) k, the conjectured asymptotic ceiling
  std::vector<std::string> witnesses;
  bool winners_bipartite_by_degree_class = false;
};

// Optimal minimally k-(edge-)connected graphs of order n and whether every
// winner is bipartite by degree class.  Candidates come from the internal
// enumeration (n <= 8) or from a graph6 stream.
ConjectureReport check_conjecture(int k, int n, Mode mode,
                                  std::istream* graph6 = nullptr);

}  // namespace avgconn
