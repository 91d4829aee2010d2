#include "avgconn/multigraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace avgconn {

EdgeRef::EdgeRef(int a, int b, int c) : u(std::min(a, b)), v(std::max(a, b)), copy(c) {}

MultiGraph::MultiGraph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("MultiGraph: negative order");
}

MultiGraph::MultiGraph(int n, const std::vector<std::tuple<int, int, int>>& edges)
    : MultiGraph(n) {
  for (const auto& [u, v, m] : edges) add_edge(u, v, m);
}

void MultiGraph::check_vertex(int v, const char* what) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument(std::string(what) + ": vertex " +
                                std::to_string(v) + " out of range");
}

int MultiGraph::size() const {
  int m = 0;
  for (const auto& [pair, mult] : edges_) m += mult;
  return m;
}

int MultiGraph::multiplicity(int u, int v) const {
  check_vertex(u, "multiplicity");
  check_vertex(v, "multiplicity");
  auto it = edges_.find({std::min(u, v), std::max(u, v)});
  return it == edges_.end() ? 0 : it->second;
}

int MultiGraph::degree(int v) const {
  check_vertex(v, "degree");
  int d = 0;
  for (const auto& [pair, mult] : edges_)
    if (pair.first == v || pair.second == v) d += mult;
  return d;
}

std::vector<int> MultiGraph::degree_sequence() const {
  std::vector<int> deg(n_, 0);
  for (const auto& [pair, mult] : edges_) {
    deg[pair.first] += mult;
    deg[pair.second] += mult;
  }
  return deg;
}

std::vector<std::pair<int, int>> MultiGraph::neighbors(int v) const {
  check_vertex(v, "neighbors");
  std::vector<std::pair<int, int>> out;
  for (const auto& [pair, mult] : edges_) {
    if (pair.first == v) out.emplace_back(pair.second, mult);
    else if (pair.second == v) out.emplace_back(pair.first, mult);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::pair<int, int>>> MultiGraph::adjacency() const {
  std::vector<std::vector<std::pair<int, int>>> adj(n_);
  for (const auto& [pair, mult] : edges_) {
    adj[pair.first].emplace_back(pair.second, mult);
    adj[pair.second].emplace_back(pair.first, mult);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

std::vector<EdgeRef> MultiGraph::edge_copies() const {
  std::vector<EdgeRef> out;
  for (const auto& [pair, mult] : edges_)
    for (int c = 0; c < mult; ++c) out.emplace_back(pair.first, pair.second, c);
  return out;
}

void MultiGraph::add_edge(int u, int v, int mult) {
  check_vertex(u, "add_edge");
  check_vertex(v, "add_edge");
  if (u == v) throw std::invalid_argument("add_edge: loops not allowed");
  if (mult < 1) throw std::invalid_argument("add_edge: multiplicity must be >= 1");
  edges_[{std::min(u, v), std::max(u, v)}] += mult;
}

bool MultiGraph::is_simple() const { return max_multiplicity() <= 1; }

int MultiGraph::max_multiplicity() const {
  int mx = 0;
  for (const auto& [pair, mult] : edges_) mx = std::max(mx, mult);
  return mx;
}

std::vector<int> connected_components(const MultiGraph& g, int* count) {
  int n = g.order();
  std::vector<int> comp(n, -1);
  auto adj = g.adjacency();
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [w, mult] : adj[v]) {
        if (comp[w] == -1) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

bool is_connected(const MultiGraph& g) {
  if (g.order() == 0) return false;
  int count = 0;
  connected_components(g, &count);
  return count == 1;
}

MultiGraph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: order must be >= 3");
  MultiGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

MultiGraph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1)
    throw std::invalid_argument("complete_bipartite: both parts must be >= 1");
  MultiGraph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

MultiGraph cycle_power(int n, int p) {
  if (p < 1) throw std::invalid_argument("cycle_power: power must be >= 1");
  if (n < 2 * p + 2)
    throw std::invalid_argument("cycle_power: order must be >= 2p+2");
  MultiGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int d = 1; d <= p; ++d) g.add_edge(i, (i + d) % n);
  return g;
}

MultiGraph cycle_bundle(int n, int t) {
  if (n < 3) throw std::invalid_argument("cycle_bundle: order must be >= 3");
  if (t < 1) throw std::invalid_argument("cycle_bundle: thickness must be >= 1");
  MultiGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n, t);
  return g;
}

static void check_edge_ref(const MultiGraph& g, const EdgeRef& e, const char* what) {
  g.check_vertex(e.u, what);
  g.check_vertex(e.v, what);
  int mult = g.multiplicity(e.u, e.v);
  if (e.copy < 0 || e.copy >= mult)
    throw std::invalid_argument(std::string(what) + ": edge copy (" +
                                std::to_string(e.u) + "," + std::to_string(e.v) +
                                ")#" + std::to_string(e.copy) + " does not exist");
}

MultiGraph subdivide_edge(const MultiGraph& g, const EdgeRef& e) {
  check_edge_ref(g, e, "subdivide_edge");
  MultiGraph out(g.order() + 1);
  for (const auto& [pair, mult] : g.edges()) {
    int m = mult;
    if (pair.first == e.u && pair.second == e.v) --m;
    if (m > 0) out.add_edge(pair.first, pair.second, m);
  }
  int w = g.order();
  out.add_edge(e.u, w);
  out.add_edge(e.v, w);
  return out;
}

MultiGraph subdivide_all(const MultiGraph& g) {
  MultiGraph out(g.order() + g.size());
  int next = g.order();
  for (const auto& [pair, mult] : g.edges()) {
    for (int c = 0; c < mult; ++c) {
      out.add_edge(pair.first, next);
      out.add_edge(pair.second, next);
      ++next;
    }
  }
  return out;
}

MultiGraph contract_edge(const MultiGraph& g, const EdgeRef& e) {
  check_edge_ref(g, e, "contract_edge");
  int keep = e.u, drop = e.v;  // e.u < e.v by construction
  MultiGraph out(g.order() - 1);
  auto remap = [&](int v) {
    if (v == drop) return keep;
    return v > drop ? v - 1 : v;
  };
  for (const auto& [pair, mult] : g.edges()) {
    int a = remap(pair.first), b = remap(pair.second);
    if (a == b) continue;  // copies parallel to e become loops
    out.add_edge(a, b, mult);
  }
  return out;
}

MultiGraph remove_edge_copy(const MultiGraph& g, const EdgeRef& e) {
  check_edge_ref(g, e, "remove_edge_copy");
  MultiGraph out(g.order());
  for (const auto& [pair, mult] : g.edges()) {
    int m = mult;
    if (pair.first == e.u && pair.second == e.v) --m;
    if (m > 0) out.add_edge(pair.first, pair.second, m);
  }
  return out;
}

MultiGraph extend(const MultiGraph& g, int x, int y) {
  g.check_vertex(x, "extend");
  g.check_vertex(y, "extend");
  if (x == y) throw std::invalid_argument("extend: anchors must be distinct");
  MultiGraph out(g.order() + 1);
  for (const auto& [pair, mult] : g.edges())
    out.add_edge(pair.first, pair.second, mult);
  int z = g.order();
  out.add_edge(x, z);
  out.add_edge(y, z);
  return out;
}

}  // namespace avgconn
