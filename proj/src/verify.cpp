#include "avgconn/verify.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "avgconn/connectivity.hpp"
#include "avgconn/extremal.hpp"
#include "avgconn/graph_io.hpp"
#include "avgconn/minimality.hpp"

namespace avgconn {

namespace {

bool separated(const std::vector<std::vector<std::pair<int, int>>>& adj,
               const std::vector<bool>& removed, int u, int v) {
  std::vector<int> stack{u};
  std::vector<bool> seen(adj.size(), false);
  seen[u] = true;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    if (a == v) return false;
    for (auto [b, mult] : adj[a]) {
      if (!removed[b] && !seen[b]) {
        seen[b] = true;
        stack.push_back(b);
      }
    }
  }
  return true;
}

}  // namespace

int oracle_vertex_connectivity(const MultiGraph& g, int u, int v) {
  int n = g.order();
  if (n > 10)
    throw std::invalid_argument("oracle_vertex_connectivity: order must be <= 10");
  g.check_vertex(u, "oracle_vertex_connectivity");
  g.check_vertex(v, "oracle_vertex_connectivity");
  if (u == v)
    throw std::invalid_argument("oracle_vertex_connectivity: vertices must differ");

  MultiGraph rest(n);
  for (const auto& [pair, mult] : g.edges()) {
    if ((pair.first == std::min(u, v)) && (pair.second == std::max(u, v))) continue;
    rest.add_edge(pair.first, pair.second, mult);
  }
  auto adj = rest.adjacency();

  std::vector<int> others;
  for (int w = 0; w < n; ++w)
    if (w != u && w != v) others.push_back(w);
  int best = static_cast<int>(others.size());
  for (unsigned mask = 0; mask < (1u << others.size()); ++mask) {
    int size = __builtin_popcount(mask);
    if (size >= best) continue;
    std::vector<bool> removed(n, false);
    for (size_t i = 0; i < others.size(); ++i)
      if (mask & (1u << i)) removed[others[i]] = true;
    if (separated(adj, removed, u, v)) best = size;
  }
  return g.multiplicity(u, v) + best;
}

int oracle_edge_connectivity(const MultiGraph& g, int u, int v) {
  int n = g.order();
  if (n > 16)
    throw std::invalid_argument("oracle_edge_connectivity: order must be <= 16");
  g.check_vertex(u, "oracle_edge_connectivity");
  g.check_vertex(v, "oracle_edge_connectivity");
  if (u == v)
    throw std::invalid_argument("oracle_edge_connectivity: vertices must differ");

  // Any minimal disconnecting edge set is the boundary of the side holding
  // u, so scanning bipartitions finds the minimum.
  int best = -1;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (!(mask & (1u << u)) || (mask & (1u << v))) continue;
    int crossing = 0;
    for (const auto& [pair, mult] : g.edges()) {
      bool a = mask & (1u << pair.first);
      bool b = mask & (1u << pair.second);
      if (a != b) crossing += mult;
    }
    if (best == -1 || crossing < best) best = crossing;
  }
  return best;
}

// --- canonical labeling -------------------------------------------------

namespace {

// Multiplicity of the pair at upper-triangle slot (i, j) under a partial
// placement; used to build the canonical string column by column.
struct CanonSearch {
  const std::vector<std::vector<int>>& mat;
  const std::vector<int>& target_degree;  // degree required at each position
  std::vector<int> degree;
  int n;
  std::vector<int> perm, best_perm;
  std::vector<int> current, best;
  bool have_best = false;
  std::vector<bool> used;

  CanonSearch(const std::vector<std::vector<int>>& m,
              const std::vector<int>& layout, const std::vector<int>& deg)
      : mat(m), target_degree(layout), degree(deg), n(static_cast<int>(layout.size())),
        used(layout.size(), false) {}

  void run() { place(0, true); }

  // `anchored` marks prefixes that still equal the best one, the only state
  // in which a larger entry proves the whole subtree larger.  Leaves always
  // compare in full: an unanchored branch may contain values on either side
  // of the best seen so far.
  void place(int pos, bool anchored) {
    if (pos == n) {
      if (!have_best || current < best) {
        best = current;
        best_perm = perm;
      }
      have_best = true;
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || degree[w] != target_degree[pos]) continue;
      size_t base = current.size();
      bool child_anchored = anchored;
      bool prune = false;
      for (int i = 0; i < pos; ++i) {
        int entry = mat[perm[i]][w];
        current.push_back(entry);
        if (child_anchored && have_best) {
          int b = best[base + i];
          if (entry > b) {
            prune = true;
            break;
          }
          if (entry < b) child_anchored = false;
        }
      }
      if (!prune) {
        perm.push_back(w);
        used[w] = true;
        place(pos + 1, child_anchored);
        used[w] = false;
        perm.pop_back();
      }
      current.resize(base);
    }
  }
};

}  // namespace

MultiGraph canonical_graph(const MultiGraph& g) {
  int n = g.order();
  if (n > 11)
    throw std::invalid_argument("canonical_graph: order must be <= 11");
  if (n == 0) return g;
  std::vector<std::vector<int>> mat(n, std::vector<int>(n, 0));
  for (const auto& [pair, mult] : g.edges())
    mat[pair.first][pair.second] = mat[pair.second][pair.first] = mult;
  auto deg = g.degree_sequence();
  std::vector<int> layout = deg;
  std::sort(layout.begin(), layout.end());

  CanonSearch search(mat, layout, deg);
  search.run();

  MultiGraph out(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      int mult = mat[search.best_perm[i]][search.best_perm[j]];
      if (mult > 0) out.add_edge(i, j, mult);
    }
  return out;
}

std::string canonical_key(const MultiGraph& g) {
  MultiGraph c = canonical_graph(g);
  if (c.is_simple()) return to_graph6(c);
  std::ostringstream out;
  out << "M" << c.order();
  for (const auto& [pair, mult] : c.edges())
    out << ';' << pair.first << '-' << pair.second << 'x' << mult;
  return out.str();
}

bool bipartite_by_degree_class(const MultiGraph& g, int k) {
  auto deg = g.degree_sequence();
  for (const auto& [pair, mult] : g.edges()) {
    bool a = deg[pair.first] > k;
    bool b = deg[pair.second] > k;
    if (a == b) return false;
  }
  return true;
}

// --- exhaustive enumeration of small simple graphs ----------------------

namespace {

// Simple graph on at most 8 vertices as adjacency bitmasks.
struct Small {
  int n = 0;
  std::array<uint8_t, 8> adj{};
};

// Canonical upper-triangle bit value (column-major, earlier pairs in higher
// bits) minimized over degree-respecting relabelings.
struct SmallCanon {
  const Small& g;
  int bits_total;
  std::array<int, 8> deg{}, layout{}, perm{};
  uint32_t best = 0;
  std::array<int, 8> best_perm{};
  bool have_best = false;
  uint8_t used = 0;

  explicit SmallCanon(const Small& graph) : g(graph) {
    bits_total = g.n * (g.n - 1) / 2;
    for (int v = 0; v < g.n; ++v) deg[v] = __builtin_popcount(g.adj[v]);
    std::copy(deg.begin(), deg.begin() + g.n, layout.begin());
    std::sort(layout.begin(), layout.begin() + g.n);
  }

  void run() { place(0, 0, 0); }

  // Equal-length packed prefixes compare like the strings they encode, so a
  // prefix exceeding the best's is safe to cut regardless of history; the
  // minimum itself is settled by the full comparison at the leaves.
  void place(int pos, uint32_t value, int bits) {
    if (pos == g.n) {
      if (!have_best || value < best) {
        best = value;
        best_perm = perm;
      }
      have_best = true;
      return;
    }
    for (int w = 0; w < g.n; ++w) {
      if ((used >> w) & 1 || deg[w] != layout[pos]) continue;
      uint32_t col = 0;
      for (int i = 0; i < pos; ++i)
        col = (col << 1) | ((g.adj[w] >> perm[i]) & 1);
      uint32_t child = (value << pos) | col;
      int child_bits = bits + pos;
      if (have_best && child > (best >> (bits_total - child_bits))) continue;
      perm[pos] = w;
      used |= 1u << w;
      place(pos + 1, child, child_bits);
      used &= ~(1u << w);
    }
  }
};

std::pair<uint32_t, Small> small_canonical(const Small& g) {
  SmallCanon search(g);
  search.run();
  Small out;
  out.n = g.n;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if ((g.adj[search.best_perm[i]] >> search.best_perm[j]) & 1) {
        out.adj[i] |= 1u << j;
        out.adj[j] |= 1u << i;
      }
  return {search.best, out};
}

MultiGraph to_multigraph(const Small& g) {
  MultiGraph out(g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if ((g.adj[i] >> j) & 1) out.add_edge(i, j);
  return out;
}

const std::vector<Small>& small_classes(int n) {
  static std::map<int, std::vector<Small>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  if (n == 1) {
    Small base;
    base.n = 1;
    return cache.emplace(1, std::vector<Small>{base}).first->second;
  }
  const std::vector<Small>& prev = small_classes(n - 1);
  std::unordered_set<uint32_t> seen;
  std::vector<std::pair<uint32_t, Small>> found;
  for (const Small& parent : prev) {
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      Small child = parent;
      child.n = n;
      child.adj[n - 1] = static_cast<uint8_t>(mask);
      for (int v = 0; v < n - 1; ++v)
        if ((mask >> v) & 1) child.adj[v] |= 1u << (n - 1);
      auto [value, canon] = small_canonical(child);
      if (seen.insert(value).second) found.emplace_back(value, canon);
    }
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Small> classes;
  classes.reserve(found.size());
  for (auto& [value, graph] : found) classes.push_back(graph);
  return cache.emplace(n, std::move(classes)).first->second;
}

}  // namespace

const std::vector<MultiGraph>& enumerate_simple(int n) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("enumerate_simple: order must be in 1..8");
  static std::map<int, std::vector<MultiGraph>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<MultiGraph> out;
  for (const Small& g : small_classes(n)) out.push_back(to_multigraph(g));
  return cache.emplace(n, std::move(out)).first->second;
}

std::vector<MultiGraph> enumerate_connected_simple(int n) {
  std::vector<MultiGraph> out;
  for (const MultiGraph& g : enumerate_simple(n))
    if (is_connected(g)) out.push_back(g);
  return out;
}

namespace {

// In a bridgeless multigraph with doubled pairs exactly on the support's
// bridges, minimality in the edge sense holds iff it holds per block; this
// build-and-filter over supports reaches every multiplicity-2 multigraph.
MultiGraph double_bridges(const MultiGraph& support) {
  BlockDecomposition dec = decompose_components(support);
  MultiGraph out(support.order());
  std::map<std::pair<int, int>, int> bridge;
  for (const EdgeRef& b : dec.bridges) bridge[{b.u, b.v}] = 1;
  for (const auto& [pair, mult] : support.edges())
    out.add_edge(pair.first, pair.second, bridge.count(pair) ? 2 : mult);
  return out;
}

bool passes_filter(const MultiGraph& g, Mode mode, int k) {
  if (mode == Mode::vertex && k == 2) return is_minimally_2_connected(g);
  if (mode == Mode::edge && k == 2) return is_minimally_2_edge_connected(g);
  return is_minimally_k_connected(g, k, mode);
}

}  // namespace

std::vector<MultiGraph> enumerate_minimal(const EnumerationJob& job) {
  if (job.k < 1) throw std::invalid_argument("enumerate_minimal: k must be >= 1");
  std::vector<MultiGraph> out;
  if (job.source == EnumerationJob::Source::internal) {
    if (job.n < 2 || job.n > 8)
      throw std::invalid_argument("enumerate_minimal: internal source covers n in 2..8");
    for (const MultiGraph& g : enumerate_simple(job.n)) {
      if (!is_connected(g)) continue;
      if (job.mode == Mode::edge && job.k == 2) {
        MultiGraph candidate = double_bridges(g);
        if (passes_filter(candidate, job.mode, job.k)) out.push_back(candidate);
      } else {
        if (passes_filter(g, job.mode, job.k)) out.push_back(g);
      }
    }
    return out;
  }
  if (!job.stream)
    throw std::invalid_argument("enumerate_minimal: stream source needs a stream");
  std::unordered_set<std::string> seen;
  std::string line;
  while (std::getline(*job.stream, line)) {
    if (line.empty()) continue;
    MultiGraph g = from_graph6(line);
    if (g.order() != job.n) continue;
    if (!passes_filter(g, job.mode, job.k)) continue;
    if (job.dedup && !seen.insert(canonical_key(g)).second) continue;
    out.push_back(g);
  }
  return out;
}

OptimalCertificate find_optimal(int n, Mode mode, std::istream* graph6) {
  EnumerationJob job;
  job.n = n;
  job.mode = mode;
  if (graph6) {
    job.source = EnumerationJob::Source::graph6_stream;
    job.stream = graph6;
  }
  OptimalCertificate cert;
  cert.n = n;
  cert.mode = mode;
  std::vector<MultiGraph> candidates = enumerate_minimal(job);
  cert.candidate_count = static_cast<int>(candidates.size());
  if (candidates.empty())
    throw std::invalid_argument("find_optimal: no minimal graphs at this order");

  for (const MultiGraph& g : candidates) {
    Rational avg = report(g, mode).average;
    if (cert.winners.empty() || cert.best_average < avg) {
      cert.best_average = avg;
      cert.winners = {g};
    } else if (avg == cert.best_average) {
      cert.winners.push_back(g);
    }
  }
  for (const MultiGraph& w : cert.winners)
    cert.witnesses.push_back(canonical_key(w));
  std::sort(cert.witnesses.begin(), cert.witnesses.end());

  BoundRow row = mode == Mode::vertex ? kappa_bound(n) : lambda_bound(n);
  cert.bound = row.exact;
  cert.gap = cert.bound - cert.best_average;
  cert.winners_bipartite_by_degree_class = true;
  cert.winners_2_connected = true;
  cert.winners_simple = true;
  for (const MultiGraph& w : cert.winners) {
    if (!bipartite_by_degree_class(w, 2)) cert.winners_bipartite_by_degree_class = false;
    if (!is_2_connected(w)) cert.winners_2_connected = false;
    if (!w.is_simple()) cert.winners_simple = false;
  }
  return cert;
}

ConjectureReport check_conjecture(int k, int n, Mode mode, std::istream* graph6) {
  EnumerationJob job;
  job.n = n;
  job.mode = mode;
  job.k = k;
  if (graph6) {
    job.source = EnumerationJob::Source::graph6_stream;
    job.stream = graph6;
  }
  ConjectureReport rep;
  rep.k = k;
  rep.n = n;
  rep.mode = mode;
  rep.probe = Rational(9 * k, 8);
  std::vector<MultiGraph> candidates = enumerate_minimal(job);
  rep.candidate_count = static_cast<int>(candidates.size());
  if (candidates.empty()) return rep;

  std::vector<MultiGraph> winners;
  for (const MultiGraph& g : candidates) {
    Rational avg = report(g, mode).average;
    if (winners.empty() || rep.best_average < avg) {
      rep.best_average = avg;
      winners = {g};
    } else if (avg == rep.best_average) {
      winners.push_back(g);
    }
  }
  rep.winners_bipartite_by_degree_class = true;
  for (const MultiGraph& w : winners) {
    rep.witnesses.push_back(canonical_key(w));
    if (!bipartite_by_degree_class(w, k)) rep.winners_bipartite_by_degree_class = false;
  }
  std::sort(rep.witnesses.begin(), rep.witnesses.end());
  return rep;
}

}  // namespace avgconn
