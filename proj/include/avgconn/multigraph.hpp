#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace avgconn {

// Which flavour of connectivity an operation works with.
enum class Mode { vertex, edge };

inline const char* mode_name(Mode mode) {
  return mode == Mode::vertex ? "vertex" : "edge";
}

// One specific copy of a (possibly parallel) edge: endpoints u < v plus a
// copy index in [0, multiplicity).
struct EdgeRef {
  int u = 0;
  int v = 0;
  int copy = 0;

  EdgeRef() = default;
  EdgeRef(int a, int b, int c = 0);
  bool operator==(const EdgeRef& o) const {
    return u == o.u && v == o.v && copy == o.copy;
  }
};

// Loopless undirected multigraph on dense vertex indices 0..n-1.  Parallel
// edges are stored as a multiplicity per unordered vertex pair.
class MultiGraph {
 public:
  using EdgeMap = std::map<std::pair<int, int>, int>;

  explicit MultiGraph(int n = 0);
  MultiGraph(int n, const std::vector<std::tuple<int, int, int>>& edges);

  int order() const { return n_; }
  // Number of edges counted with multiplicity.
  int size() const;
  int distinct_pair_count() const { return static_cast<int>(edges_.size()); }

  int multiplicity(int u, int v) const;
  int degree(int v) const;
  std::vector<int> degree_sequence() const;

  // (neighbour, multiplicity) pairs in ascending neighbour order.
  std::vector<std::pair<int, int>> neighbors(int v) const;
  // Adjacency lists for all vertices at once.
  std::vector<std::vector<std::pair<int, int>>> adjacency() const;

  const EdgeMap& edges() const { return edges_; }
  std::vector<EdgeRef> edge_copies() const;

  void add_edge(int u, int v, int mult = 1);

  bool is_simple() const;
  int max_multiplicity() const;
  bool operator==(const MultiGraph& o) const {
    return n_ == o.n_ && edges_ == o.edges_;
  }

  void check_vertex(int v, const char* what) const;

 private:
  int n_;
  EdgeMap edges_;
};

// --- structural helpers ---

// Component index per vertex, components numbered from 0 in order of their
// smallest vertex.
std::vector<int> connected_components(const MultiGraph& g, int* count = nullptr);
bool is_connected(const MultiGraph& g);

// --- graph families ---

MultiGraph cycle(int n);                       // n >= 3
MultiGraph complete_bipartite(int a, int b);   // a, b >= 1
// Circulant with connection set {1..p}; n >= 2p+2 keeps distance classes
// distinct.
MultiGraph cycle_power(int n, int p);
// Cycle with every edge repeated t times.
MultiGraph cycle_bundle(int n, int t);

// --- rewrites (all return fresh graphs) ---

// Replace one copy of e by a path of length 2 through a new vertex (index n).
MultiGraph subdivide_edge(const MultiGraph& g, const EdgeRef& e);
// Subdivide every copy of every edge once; result is simple and bipartite,
// order n + size(g), size 2 * size(g).  New vertices are appended in
// ascending (u, v, copy) order.
MultiGraph subdivide_all(const MultiGraph& g);
// Contract e: endpoints merge into min(u, v), parallel copies of e vanish,
// parallel edges created by the merge stack into multiplicities, indices
// are compacted.
MultiGraph contract_edge(const MultiGraph& g, const EdgeRef& e);
// Add a new vertex (index n) adjacent to x and y.
MultiGraph extend(const MultiGraph& g, int x, int y);
// Delete one copy of e (multiplicity drops by one).
MultiGraph remove_edge_copy(const MultiGraph& g, const EdgeRef& e);

}  // namespace avgconn
