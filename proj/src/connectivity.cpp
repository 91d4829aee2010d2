#include "avgconn/connectivity.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace avgconn {

namespace {

// Dinic max flow on a directed residual network.  Edges are stored in pairs
// so that edge id ^ 1 is the reverse edge.
class FlowNetwork {
 public:
  explicit FlowNetwork(int n) : head_(n, -1) {}

  void add_edge(int from, int to, int cap, int back_cap = 0) {
    to_.push_back(to);
    cap_.push_back(cap);
    next_.push_back(head_[from]);
    head_[from] = static_cast<int>(to_.size()) - 1;
    to_.push_back(from);
    cap_.push_back(back_cap);
    next_.push_back(head_[to]);
    head_[to] = static_cast<int>(to_.size()) - 1;
  }

  int max_flow(int s, int t) {
    int flow = 0;
    while (bfs(s, t)) {
      iter_ = head_;
      int f;
      while ((f = dfs(s, t, 1 << 30)) > 0) flow += f;
    }
    return flow;
  }

 private:
  bool bfs(int s, int t) {
    level_.assign(head_.size(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int id = head_[v]; id != -1; id = next_[id]) {
        if (cap_[id] > 0 && level_[to_[id]] == -1) {
          level_[to_[id]] = level_[v] + 1;
          q.push(to_[id]);
        }
      }
    }
    return level_[t] != -1;
  }

  int dfs(int v, int t, int budget) {
    if (v == t) return budget;
    for (int& id = iter_[v]; id != -1; id = next_[id]) {
      int w = to_[id];
      if (cap_[id] > 0 && level_[w] == level_[v] + 1) {
        int f = dfs(w, t, std::min(budget, cap_[id]));
        if (f > 0) {
          cap_[id] -= f;
          cap_[id ^ 1] += f;
          return f;
        }
      }
    }
    return 0;
  }

  std::vector<int> head_, to_, cap_, next_, level_, iter_;
};

void check_pair(const MultiGraph& g, int u, int v, const char* what) {
  g.check_vertex(u, what);
  g.check_vertex(v, what);
  if (u == v)
    throw std::invalid_argument(std::string(what) + ": vertices must differ");
}

}  // namespace

int local_vertex_connectivity(const MultiGraph& g, int u, int v) {
  check_pair(g, u, v, "local_vertex_connectivity");
  // Nodes 2w/2w+1 are the in/out halves of w; u and v stay whole.
  FlowNetwork net(2 * g.order());
  for (int w = 0; w < g.order(); ++w)
    if (w != u && w != v) net.add_edge(2 * w, 2 * w + 1, 1);
  auto side = [&](int w, bool out) {
    if (w == u || w == v) return 2 * w;
    return 2 * w + (out ? 1 : 0);
  };
  for (const auto& [pair, mult] : g.edges()) {
    auto [a, b] = pair;
    if ((a == u && b == v) || (a == v && b == u)) continue;
    net.add_edge(side(a, true), side(b, false), mult);
    net.add_edge(side(b, true), side(a, false), mult);
  }
  return g.multiplicity(u, v) + net.max_flow(2 * u, 2 * v);
}

int local_edge_connectivity(const MultiGraph& g, int u, int v) {
  check_pair(g, u, v, "local_edge_connectivity");
  FlowNetwork net(g.order());
  for (const auto& [pair, mult] : g.edges())
    net.add_edge(pair.first, pair.second, mult, mult);
  return net.max_flow(u, v);
}

int local_connectivity(const MultiGraph& g, int u, int v, Mode mode) {
  return mode == Mode::vertex ? local_vertex_connectivity(g, u, v)
                              : local_edge_connectivity(g, u, v);
}

int global_vertex_connectivity(const MultiGraph& g) {
  int n = g.order();
  if (n < 2)
    throw std::invalid_argument("global_vertex_connectivity: order must be >= 2");
  int best = n - 1;
  for (int u = 0; u < n && best > 0; ++u)
    for (int v = u + 1; v < n && best > 0; ++v)
      best = std::min(best, local_vertex_connectivity(g, u, v));
  return best;
}

int global_edge_connectivity(const MultiGraph& g) {
  int n = g.order();
  if (n < 2)
    throw std::invalid_argument("global_edge_connectivity: order must be >= 2");
  int best = -1;
  for (int v = 1; v < n; ++v) {
    // lambda(G) = min over v of lambda(0, v); every cut separates 0 from
    // some vertex.
    int value = local_edge_connectivity(g, 0, v);
    if (best == -1 || value < best) best = value;
    if (best == 0) break;
  }
  return best;
}

int global_connectivity(const MultiGraph& g, Mode mode) {
  return mode == Mode::vertex ? global_vertex_connectivity(g)
                              : global_edge_connectivity(g);
}

long long total_connectivity(const MultiGraph& g, Mode mode) {
  long long total = 0;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      total += local_connectivity(g, u, v, mode);
  return total;
}

ConnectivityReport report(const MultiGraph& g, Mode mode) {
  int n = g.order();
  if (n < 2) throw std::invalid_argument("report: order must be >= 2");
  ConnectivityReport rep;
  rep.mode = mode;
  rep.n = n;
  rep.pair_values.assign(n, std::vector<int>(n, 0));
  auto deg = g.degree_sequence();
  rep.ideal = true;
  rep.global = -1;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      int value = local_connectivity(g, u, v, mode);
      rep.pair_values[u][v] = rep.pair_values[v][u] = value;
      rep.total += value;
      if (rep.global == -1 || value < rep.global) rep.global = value;
      if (value != std::min(deg[u], deg[v])) rep.ideal = false;
    }
  }
  rep.average = Rational(rep.total, static_cast<long long>(n) * (n - 1) / 2);
  return rep;
}

bool is_ideally_connected(const MultiGraph& g) {
  return find_non_ideal_pair(g, Mode::vertex) == std::pair<int, int>{-1, -1};
}

bool is_ideally_edge_connected(const MultiGraph& g) {
  return find_non_ideal_pair(g, Mode::edge) == std::pair<int, int>{-1, -1};
}

std::pair<int, int> find_non_ideal_pair(const MultiGraph& g, Mode mode) {
  auto deg = g.degree_sequence();
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (local_connectivity(g, u, v, mode) != std::min(deg[u], deg[v]))
        return {u, v};
  return {-1, -1};
}

}  // namespace avgconn
