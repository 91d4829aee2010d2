#pragma once

#include <vector>

#include "avgconn/multigraph.hpp"
#include "avgconn/rational.hpp"

namespace avgconn {

// Largest number of internally disjoint u-v paths: the direct u-v copies
// plus a unit-vertex-capacity max flow in the graph with those copies
// removed.  0 when u and v are in different components.
int local_vertex_connectivity(const MultiGraph& g, int u, int v);

// Largest number of edge-disjoint u-v paths: max flow with edge capacities
// equal to multiplicities.
int local_edge_connectivity(const MultiGraph& g, int u, int v);

int local_connectivity(const MultiGraph& g, int u, int v, Mode mode);

// Whole-graph connectivity in the classical sense: the minimum pair value,
// capped at n-1 in vertex mode (parallel edges never raise it past n-1).
// Order must be at least 2.
int global_vertex_connectivity(const MultiGraph& g);
int global_edge_connectivity(const MultiGraph& g);
int global_connectivity(const MultiGraph& g, Mode mode);

// Sum of the pair values over all unordered pairs.
long long total_connectivity(const MultiGraph& g, Mode mode);

struct ConnectivityReport {
  Mode mode = Mode::vertex;
  int n = 0;
  std::vector<std::vector<int>> pair_values;  // symmetric, zero diagonal
  long long total = 0;
  Rational average;
  int global = 0;  // minimum pair value
  bool ideal = false;
};

// Every pair value, their sum and average; order must be at least 2.
ConnectivityReport report(const MultiGraph& g, Mode mode);

// A graph is ideal when every pair value equals the smaller endpoint degree.
bool is_ideally_connected(const MultiGraph& g);
bool is_ideally_edge_connected(const MultiGraph& g);

// First pair (by lexicographic order) whose value falls short of the smaller
// endpoint degree; {-1, -1} when the graph is ideal.
std::pair<int, int> find_non_ideal_pair(const MultiGraph& g, Mode mode);

}  // namespace avgconn
