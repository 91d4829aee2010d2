#include "avgconn/extremal.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "avgconn/connectivity.hpp"
#include "avgconn/minimality.hpp"

namespace avgconn {

std::vector<int> NearlyRegularSpec::sequence() const {
  std::vector<int> seq;
  seq.reserve(n);
  for (int i = 0; i < n - r; ++i) seq.push_back(static_cast<int>(d));
  for (int i = 0; i < r; ++i) seq.push_back(static_cast<int>(d + 1));
  return seq;
}

long long potential(const std::vector<int>& seq) {
  for (int t : seq)
    if (t < 1) throw std::invalid_argument("potential: terms must be positive");
  std::vector<int> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  long long total = 0;
  int n = static_cast<int>(sorted.size());
  for (int i = 0; i < n; ++i)
    total += static_cast<long long>(sorted[i]) * (n - 1 - i);
  return total;
}

NearlyRegularSpec nearly_regular(long long D, int n) {
  if (n < 1) throw std::invalid_argument("nearly_regular: need at least one term");
  if (D < n)
    throw std::invalid_argument("nearly_regular: sum too small for positive terms");
  NearlyRegularSpec spec;
  spec.n = n;
  spec.D = D;
  spec.d = D / n;
  spec.r = D % n;
  return spec;
}

namespace {

long long choose2(long long x) { return x * (x - 1) / 2; }

}  // namespace

long long objective_g(int n, int s) {
  if (s < 1 || 5 * s > 2 * n)
    throw std::invalid_argument("objective_g: s must be in 1..2n/5");
  long long D = 2LL * (n - s);
  long long d = D / s;
  long long r = D % s;
  return (d - 2) * choose2(s) + choose2(r);
}

namespace {

BoundRow bound_row(int n, Mode mode) {
  if (n < 3) throw std::invalid_argument("bound: order must be >= 3");
  BoundRow row;
  row.n = n;
  row.mode = mode;
  long long nn = n;
  row.general = Rational(2) + Rational((nn - 2) * (nn - 2), 4 * nn * (nn - 1));

  long long best = -1;
  for (int s = 1; 5 * s <= 2 * n; ++s) {
    long long g = objective_g(n, s);
    if (g > best) {
      best = g;
      row.optimal_s = {s};
    } else if (g == best) {
      row.optimal_s.push_back(s);
    }
  }
  row.exact = Rational(2) + Rational(2 * best, nn * (nn - 1));

  if (n >= minimum_constructive_order) {
    for (int s : row.optimal_s) {
      bool feasible = mode == Mode::vertex ? n - s <= choose2(s) : n - s >= s;
      if (feasible) {
        row.attained = true;
        row.witness = (mode == Mode::vertex ? "S_" : "G_") + std::to_string(n);
        break;
      }
    }
  }
  return row;
}

}  // namespace

BoundRow kappa_bound(int n) { return bound_row(n, Mode::vertex); }
BoundRow lambda_bound(int n) { return bound_row(n, Mode::edge); }

namespace {

int circular_distance(int a, int b, int n) {
  int diff = std::abs(a - b);
  return std::min(diff, n - diff);
}

// Indices receiving the r surplus degrees, spread evenly around the cycle so
// the greedy fill can pair them far apart.
std::vector<int> surplus_targets(int n, long long d, long long r) {
  std::vector<int> target(n, static_cast<int>(d));
  for (long long j = 0; j < r; ++j) target[(j * n) / r] += 1;
  return target;
}

// Add single edge copies until every vertex reaches its target degree,
// pairing deficits at maximum circular distance.  max_mult 1 keeps the graph
// simple.  Returns false if it gets stuck (left for the swap search).
bool greedy_fill(MultiGraph& g, const std::vector<int>& target, int max_mult) {
  int n = g.order();
  while (true) {
    int a = -1;
    for (int i = 0; i < n; ++i)
      if (g.degree(i) < target[i]) {
        a = i;
        break;
      }
    if (a == -1) return true;
    int pick = -1, pick_dist = -1;
    for (int b = 0; b < n; ++b) {
      if (b == a || g.degree(b) >= target[b]) continue;
      if (g.multiplicity(a, b) >= max_mult) continue;
      int dist = circular_distance(a, b, n);
      if (dist > pick_dist) {
        pick_dist = dist;
        pick = b;
      }
    }
    if (pick == -1) return false;
    g.add_edge(a, pick);
  }
}

// Circulant layers at distances 1..p (capped so pairs stay distinct), the
// deterministic seed for both host searches.
MultiGraph circulant_layers(int n, int p) {
  MultiGraph g(n);
  for (int dist = 1; dist <= p; ++dist) {
    if (2 * dist > n) break;
    if (2 * dist == n) {
      for (int i = 0; i < n / 2; ++i) g.add_edge(i, i + n / 2);
      break;
    }
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + dist) % n);
  }
  return g;
}

// Pairs below their degree ceiling, counted with multiplicity; zero exactly
// when every local connectivity meets min(deg).
long long ideal_deficit(const MultiGraph& g, Mode mode) {
  return potential(g.degree_sequence()) - total_connectivity(g, mode);
}

bool random_swap(MultiGraph& g, std::mt19937& rng) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& [pair, mult] : g.edges()) edges.push_back(pair);
  if (edges.size() < 2) return false;
  std::uniform_int_distribution<size_t> pick(0, edges.size() - 1);
  auto [a, b] = edges[pick(rng)];
  auto [c, d] = edges[pick(rng)];
  if (rng() & 1) std::swap(c, d);
  if (a == c || a == d || b == c || b == d) return false;
  if (g.multiplicity(a, c) > 0 || g.multiplicity(b, d) > 0) return false;
  MultiGraph next(g.order());
  for (const auto& [pair, mult] : g.edges()) {
    int m = mult;
    if (pair == std::make_pair(std::min(a, b), std::max(a, b))) --m;
    if (pair == std::make_pair(std::min(c, d), std::max(c, d))) --m;
    if (m > 0) next.add_edge(pair.first, pair.second, m);
  }
  next.add_edge(a, c);
  next.add_edge(b, d);
  g = next;
  return true;
}

std::optional<MultiGraph> swap_search(MultiGraph g, Mode mode, unsigned seed) {
  std::mt19937 rng(seed);
  const int restarts = 6, iterations = 400;
  MultiGraph base = g;
  for (int round = 0; round < restarts; ++round) {
    MultiGraph cur = base;
    for (int i = 0; i < 32 * round; ++i) random_swap(cur, rng);
    long long cur_deficit = ideal_deficit(cur, mode);
    if (cur_deficit == 0 && is_connected(cur)) return cur;
    for (int i = 0; i < iterations; ++i) {
      MultiGraph cand = cur;
      if (!random_swap(cand, rng)) continue;
      long long deficit = ideal_deficit(cand, mode);
      if (deficit < cur_deficit) {
        cur = cand;
        cur_deficit = deficit;
        if (cur_deficit == 0 && is_connected(cur)) return cur;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<MultiGraph> search_ideally_connected(int n, long long m,
                                                   unsigned seed) {
  if (n < 3 || m < n || m > choose2(n))
    throw std::invalid_argument("search_ideally_connected: need 3 <= n <= m <= C(n,2)");
  long long D = 2 * m;
  long long d = D / n, r = D % n;
  std::vector<int> target =
      r > 0 ? surplus_targets(n, d, r) : std::vector<int>(n, static_cast<int>(d));

  MultiGraph g = circulant_layers(n, static_cast<int>(d / 2));
  if (!greedy_fill(g, target, 1)) return std::nullopt;
  if (is_ideally_connected(g)) return g;
  return swap_search(g, Mode::vertex, seed);
}

namespace {

// Argmax host size for the subdivision construction; the smallest optimal s
// whose host is realizable in the given mode.
std::optional<int> witness_host_order(const BoundRow& row) {
  for (int s : row.optimal_s) {
    bool feasible = row.mode == Mode::vertex ? row.n - s <= choose2(s)
                                             : row.n - s >= s;
    if (feasible) return s;
  }
  return std::nullopt;
}

std::optional<MultiGraph> bundle_host(int s, long long m, unsigned seed) {
  long long D = 2 * m;
  long long d = D / s, r = D % s;
  long long top = r > 0 ? d + 1 : d;
  if (top > D - top)
    throw std::domain_error("bundle_host: degree sequence is not multigraphical");
  if (d / 2 > 3) return std::nullopt;
  MultiGraph g = cycle_bundle(s, std::max<int>(1, static_cast<int>(d / 2)));
  std::vector<int> target =
      r > 0 ? surplus_targets(s, d, r) : std::vector<int>(s, static_cast<int>(d));
  if (!greedy_fill(g, target, 3)) return std::nullopt;
  if (is_ideally_edge_connected(g)) return g;
  return swap_search(g, Mode::edge, seed);
}

std::optional<MultiGraph> certified_subdivision(const MultiGraph& host,
                                                const BoundRow& row) {
  MultiGraph out = subdivide_all(host);
  bool minimal = row.mode == Mode::vertex ? is_minimally_2_connected(out)
                                          : is_minimally_2_edge_connected(out);
  if (!minimal || report(out, row.mode).average != row.exact)
    throw std::logic_error("construct_optimal: certification failed");
  return out;
}

}  // namespace

std::optional<MultiGraph> construct_optimal_vertex(int n, unsigned seed) {
  if (n < minimum_constructive_order) return std::nullopt;
  BoundRow row = kappa_bound(n);
  auto s = witness_host_order(row);
  if (!s) return std::nullopt;
  auto host = search_ideally_connected(*s, n - *s, seed);
  if (!host) return std::nullopt;
  return certified_subdivision(*host, row);
}

std::optional<MultiGraph> construct_optimal_edge(int n, unsigned seed) {
  if (n < minimum_constructive_order) return std::nullopt;
  BoundRow row = lambda_bound(n);
  auto s = witness_host_order(row);
  if (!s) return std::nullopt;
  auto host = bundle_host(*s, n - *s, seed);
  if (!host && n - *s <= choose2(*s))
    host = search_ideally_connected(*s, n - *s, seed);
  if (!host) return std::nullopt;
  return certified_subdivision(*host, row);
}

}  // namespace avgconn
