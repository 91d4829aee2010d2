#include "avgconn/minimality.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "avgconn/connectivity.hpp"

namespace avgconn {

namespace {

struct EdgeEntry {
  int u, v;
};

BlockDecomposition blocks_impl(const MultiGraph& g) {
  int n = g.order();
  std::vector<EdgeEntry> edge_list;
  std::vector<std::vector<int>> adj(n);
  for (const auto& [pair, mult] : g.edges()) {
    for (int c = 0; c < mult; ++c) {
      int id = static_cast<int>(edge_list.size());
      edge_list.push_back({pair.first, pair.second});
      adj[pair.first].push_back(id);
      adj[pair.second].push_back(id);
    }
  }

  std::vector<int> disc(n, 0), low(n, 0);
  std::vector<bool> cut(n, false);
  std::vector<int> edge_stack;
  BlockDecomposition out;
  int timer = 0;

  auto pop_block = [&](int until_edge) {
    std::set<int> verts;
    int edge_count = 0;
    while (true) {
      int id = edge_stack.back();
      edge_stack.pop_back();
      verts.insert(edge_list[id].u);
      verts.insert(edge_list[id].v);
      ++edge_count;
      if (id == until_edge) break;
    }
    std::vector<int> block(verts.begin(), verts.end());
    if (edge_count == 1)
      out.bridges.emplace_back(block[0], block[1], 0);
    out.blocks.push_back(std::move(block));
  };

  std::function<void(int, int)> dfs = [&](int v, int parent_edge) {
    disc[v] = low[v] = ++timer;
    int children = 0;
    for (int id : adj[v]) {
      if (id == parent_edge) continue;
      int w = edge_list[id].u == v ? edge_list[id].v : edge_list[id].u;
      if (disc[w] == 0) {
        ++children;
        edge_stack.push_back(id);
        dfs(w, id);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          if (parent_edge != -1) cut[v] = true;
          pop_block(id);
        }
      } else if (disc[w] < disc[v]) {
        edge_stack.push_back(id);
        low[v] = std::min(low[v], disc[w]);
      }
    }
    if (parent_edge == -1 && children >= 2) cut[v] = true;
  };

  for (int v = 0; v < n; ++v)
    if (disc[v] == 0) dfs(v, -1);

  for (int v = 0; v < n; ++v)
    if (cut[v]) out.cut_vertices.push_back(v);
  std::sort(out.blocks.begin(), out.blocks.end());
  std::sort(out.bridges.begin(), out.bridges.end(),
            [](const EdgeRef& a, const EdgeRef& b) {
              return std::pair(a.u, a.v) < std::pair(b.u, b.v);
            });
  return out;
}

}  // namespace

BlockDecomposition decompose(const MultiGraph& g) {
  if (g.order() < 2) throw std::invalid_argument("decompose: order must be >= 2");
  if (!is_connected(g))
    throw std::invalid_argument("decompose: input must be connected");
  return blocks_impl(g);
}

BlockDecomposition decompose_components(const MultiGraph& g) {
  return blocks_impl(g);
}

bool is_2_connected(const MultiGraph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  return blocks_impl(g).cut_vertices.empty();
}

std::optional<std::pair<int, int>> find_chord(const MultiGraph& g) {
  if (!g.is_simple())
    throw std::invalid_argument("find_chord: graph must be simple");
  for (const auto& [pair, mult] : g.edges()) {
    auto [u, v] = pair;
    MultiGraph rest = remove_edge_copy(g, EdgeRef(u, v, 0));
    for (const auto& block : blocks_impl(rest).blocks) {
      if (block.size() < 3) continue;
      if (std::binary_search(block.begin(), block.end(), u) &&
          std::binary_search(block.begin(), block.end(), v))
        return pair;  // u and v share a cycle avoiding this edge
    }
  }
  return std::nullopt;
}

bool has_chorded_cycle(const MultiGraph& g) { return find_chord(g).has_value(); }

bool is_minimally_2_connected(const MultiGraph& g) {
  if (!g.is_simple()) return false;
  if (!is_2_connected(g)) return false;
  return !has_chorded_cycle(g);
}

bool is_minimally_2_edge_connected(const MultiGraph& g) {
  if (g.order() < 2 || !is_connected(g)) return false;
  if (!blocks_impl(g).bridges.empty()) return false;
  for (const auto& [pair, mult] : g.edges()) {
    MultiGraph rest = remove_edge_copy(g, EdgeRef(pair.first, pair.second, 0));
    if (local_edge_connectivity(rest, pair.first, pair.second) != 1)
      return false;
  }
  return true;
}

bool is_necklace(const MultiGraph& g) {
  return g.is_simple() && is_2_connected(g) && is_minimally_2_edge_connected(g);
}

bool is_minimally_k_connected(const MultiGraph& g, int k, Mode mode) {
  if (k < 1) throw std::invalid_argument("is_minimally_k_connected: k must be >= 1");
  if (g.order() < 2) return false;
  if (global_connectivity(g, mode) != k) return false;
  for (const auto& [pair, mult] : g.edges()) {
    MultiGraph rest = remove_edge_copy(g, EdgeRef(pair.first, pair.second, 0));
    if (global_connectivity(rest, mode) >= k) return false;
  }
  return true;
}

bool degree_class_forest_check(const MultiGraph& g) {
  if (!is_minimally_2_connected(g))
    throw std::invalid_argument(
        "degree_class_forest_check: input not minimally 2-connected");
  auto deg = g.degree_sequence();
  int n = g.order();
  std::vector<int> keep(n, 0);
  for (int v = 0; v < n; ++v) keep[v] = deg[v] > 2;
  int edges = 0;
  for (const auto& [pair, mult] : g.edges())
    if (keep[pair.first] && keep[pair.second]) edges += mult;
  // count vertices and components of the induced subgraph
  int verts = 0, comps = 0;
  std::vector<bool> seen(n, false);
  auto adj = g.adjacency();
  for (int s = 0; s < n; ++s) {
    if (!keep[s]) continue;
    ++verts;
    if (seen[s]) continue;
    ++comps;
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [w, mult] : adj[v]) {
        if (keep[w] && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return edges == verts - comps;
}

}  // namespace avgconn
