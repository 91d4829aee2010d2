#include "avgconn/transforms.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "avgconn/connectivity.hpp"
#include "avgconn/minimality.hpp"

namespace avgconn {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

bool minimal_for(const MultiGraph& g, Mode mode) {
  return mode == Mode::vertex ? is_minimally_2_connected(g)
                              : is_minimally_2_edge_connected(g);
}

// Post-conditions shared by every transform; a violation here means the
// rewrite was applied outside its theory, so abort loudly rather than hand
// back a bogus graph.
MultiGraph validated(const char* name, const MultiGraph& in, MultiGraph out,
                     Mode mode, const std::string& site, TransformTrace* trace,
                     long long exact_delta = -1) {
  const std::string tag = std::string(name) + " at " + site;
  if (out.order() != in.order()) throw std::logic_error(tag + ": order changed");
  long long before = total_connectivity(in, mode);
  long long after = total_connectivity(out, mode);
  if (!minimal_for(out, mode))
    throw std::logic_error(tag + ": output lost minimality");
  if (after <= before)
    throw std::logic_error(tag + ": total failed to increase (" +
                           std::to_string(before) + " -> " +
                           std::to_string(after) + ")");
  if (exact_delta >= 0 && after - before != exact_delta)
    throw std::logic_error(tag + ": expected increase " +
                           std::to_string(exact_delta) + ", got " +
                           std::to_string(after - before));
  if (trace) {
    trace->name = name;
    trace->site = site;
    trace->mode = mode;
    trace->before = in;
    trace->after = out;
    trace->total_before = before;
    trace->total_after = after;
    trace->input_minimal = true;  // enforced by each transform's precondition
    trace->output_minimal = true;
  }
  return out;
}

std::string pair_site(const char* verb, int u, int v) {
  std::ostringstream os;
  os << verb << ' ' << u << '-' << v;
  return os.str();
}

// Component labels of g - x (label of x itself is -1).
std::vector<int> components_without(const MultiGraph& g, int x) {
  int n = g.order();
  std::vector<int> comp(n, -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (s == x || comp[s] >= 0) continue;
    comp[s] = next;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (auto [b, m] : g.neighbors(a)) {
        if (b == x || comp[b] >= 0) continue;
        comp[b] = next;
        stack.push_back(b);
      }
    }
    ++next;
  }
  comp[x] = -1;
  return comp;
}

// Smallest pair of vertices sharing a block with local edge connectivity
// >= 3; {-1, -1} when none exists.  Distinct blocks share at most one
// vertex, so each pair is examined once.
std::pair<int, int> smallest_block_anchor(const MultiGraph& g) {
  std::pair<int, int> best{-1, -1};
  if (g.order() < 2 || !is_connected(g)) return best;
  BlockDecomposition dec = decompose(g);
  for (const auto& blk : dec.blocks) {
    for (size_t i = 0; i < blk.size(); ++i) {
      for (size_t j = i + 1; j < blk.size(); ++j) {
        std::pair<int, int> cand{blk[i], blk[j]};
        if (best.first >= 0 && !(cand < best)) continue;
        if (local_edge_connectivity(g, cand.first, cand.second) >= 3)
          best = cand;
      }
    }
  }
  return best;
}

// Block holding both u and v (they must be adjacent, so it is unique).
const std::vector<int>* block_of_pair(const BlockDecomposition& dec, int u,
                                      int v) {
  for (const auto& blk : dec.blocks) {
    if (std::binary_search(blk.begin(), blk.end(), u) &&
        std::binary_search(blk.begin(), blk.end(), v))
      return &blk;
  }
  return nullptr;
}

int block_degree(const MultiGraph& g, const std::vector<int>& blk, int u) {
  int d = 0;
  for (int w : blk)
    if (w != u) d += g.multiplicity(u, w);
  return d;
}

// A block that collapses to a point: a doubled pair, or a simple cycle
// (every block vertex meets exactly two block edge copies).
bool is_collapsible_block(const MultiGraph& g, const std::vector<int>& blk) {
  if (blk.size() == 2) return g.multiplicity(blk[0], blk[1]) == 2;
  if (blk.size() < 3) return false;
  for (int u : blk) {
    int d = 0;
    for (int w : blk) {
      int m = g.multiplicity(u, w);
      if (m > 1) return false;
      d += m;
    }
    if (d != 2) return false;
  }
  return true;
}

// Smallest bridge of g - uv whose removal then separates u from v.  Bridges
// of g - uv need not all separate the pair once parallel copies exist, so
// each candidate is checked.
std::optional<EdgeRef> separating_bridge(const MultiGraph& g, int u, int v) {
  MultiGraph pruned = remove_edge_copy(g, EdgeRef(u, v));
  BlockDecomposition dec = decompose_components(pruned);
  std::optional<EdgeRef> best;
  for (const EdgeRef& b : dec.bridges) {
    if (best && !(std::make_pair(b.u, b.v) < std::make_pair(best->u, best->v)))
      continue;
    MultiGraph cut = remove_edge_copy(pruned, EdgeRef(b.u, b.v));
    std::vector<int> comp = connected_components(cut);
    if (comp[u] != comp[v]) best = EdgeRef(b.u, b.v);
  }
  return best;
}

// The rewire is only safe where x meets every incident block with at least
// three edge copies; a block hanging on by two copies can otherwise end up
// with a non-essential edge once traffic is rerouted around x.
bool cut_branches_everywhere(const MultiGraph& g, const BlockDecomposition& dec,
                             int x) {
  for (const auto& blk : dec.blocks)
    if (std::binary_search(blk.begin(), blk.end(), x) &&
        block_degree(g, blk, x) < 3)
      return false;
  return true;
}

struct RewireSite {
  int u = -1, v = -1, y = -1, z = -1;
};

// Degree-2 neighbours of the cut vertex x, attached by single copies and
// taken from distinct components of g - x, in smallest (u, v) order; y and z
// are their respective second neighbours.
std::optional<RewireSite> rewire_site(const MultiGraph& g, int x) {
  std::vector<int> comp = components_without(g, x);
  std::vector<std::pair<int, int>> cands;  // (u, second neighbour of u)
  for (auto [u, m] : g.neighbors(x)) {
    if (m != 1 || g.degree(u) != 2) continue;
    int other = -1;
    for (auto [w, mm] : g.neighbors(u))
      if (w != x) other = w;
    if (other >= 0) cands.emplace_back(u, other);
  }
  for (size_t i = 0; i < cands.size(); ++i) {
    for (size_t j = i + 1; j < cands.size(); ++j) {
      if (comp[cands[i].first] == comp[cands[j].first]) continue;
      RewireSite s;
      s.u = cands[i].first;
      s.y = cands[i].second;
      s.v = cands[j].first;
      s.z = cands[j].second;
      return s;
    }
  }
  return std::nullopt;
}

long long choose2(long long n) { return n * (n - 1) / 2; }

}  // namespace

MultiGraph t_fan(const MultiGraph& g, const std::vector<int>& path,
                 TransformTrace* trace) {
  require(is_minimally_2_connected(g), "t_fan: input not minimally 2-connected");
  int k = static_cast<int>(path.size()) - 1;
  require(k >= 3, "t_fan: chain must have length at least 3");
  for (int v : path) g.check_vertex(v, "t_fan");
  std::set<int> uniq(path.begin(), path.end());
  require(static_cast<int>(uniq.size()) == k + 1,
          "t_fan: chain vertices must be distinct");
  int u = path.front(), v = path.back();
  require(g.degree(u) > 2 && g.degree(v) > 2,
          "t_fan: chain endpoints must have degree exceeding 2");
  for (int i = 1; i < k; ++i)
    require(g.degree(path[i]) == 2, "t_fan: chain interior must have degree 2");
  for (int i = 0; i < k; ++i)
    require(g.multiplicity(path[i], path[i + 1]) == 1,
            "t_fan: consecutive chain vertices must be adjacent");

  std::set<std::pair<int, int>> chain;
  for (int i = 0; i < k; ++i)
    chain.insert(std::minmax(path[i], path[i + 1]));
  MultiGraph out(g.order());
  for (const auto& [pr, mult] : g.edges())
    if (!chain.count(pr)) out.add_edge(pr.first, pr.second, mult);
  for (int i = 1; i < k; ++i) {
    out.add_edge(u, path[i]);
    out.add_edge(path[i], v);
  }

  std::ostringstream site;
  site << "chain";
  for (size_t i = 0; i < path.size(); ++i) site << (i ? "-" : " ") << path[i];
  return validated("t_fan", g, std::move(out), Mode::vertex, site.str(), trace,
                   k - 2);
}

MultiGraph t_contract_split(const MultiGraph& g, int u, int v,
                            TransformTrace* trace) {
  require(is_minimally_2_connected(g),
          "t_contract_split: input not minimally 2-connected");
  g.check_vertex(u, "t_contract_split");
  g.check_vertex(v, "t_contract_split");
  require(u != v && g.multiplicity(u, v) >= 1,
          "t_contract_split: u and v must be adjacent");
  require(g.degree(u) >= 3 && g.degree(v) >= 3,
          "t_contract_split: both endpoints need degree at least 3");

  MultiGraph pruned = remove_edge_copy(g, EdgeRef(u, v));
  int x = -1;
  for (int c : decompose(pruned).cut_vertices) {
    if (c != u && c != v) {
      x = c;
      break;
    }
  }
  require(x >= 0, "t_contract_split: g - uv has no cut vertex besides u, v");

  MultiGraph contracted = contract_edge(g, EdgeRef(u, v));
  int drop = std::max(u, v);
  int w = std::min(u, v);
  int xr = x > drop ? x - 1 : x;
  MultiGraph out = extend(contracted, std::min(xr, w), std::max(xr, w));

  std::ostringstream site;
  site << "contract " << u << '-' << v << ", split at " << x;
  return validated("t_contract_split", g, std::move(out), Mode::vertex,
                   site.str(), trace);
}

MultiGraph e_extend_contract(const MultiGraph& g, int u, int v,
                             TransformTrace* trace) {
  require(is_minimally_2_edge_connected(g),
          "e_extend_contract: input not minimally 2-edge-connected");
  g.check_vertex(u, "e_extend_contract");
  g.check_vertex(v, "e_extend_contract");
  require(u != v && g.multiplicity(u, v) >= 1,
          "e_extend_contract: u and v must be adjacent");
  require(g.degree(u) == 2 && g.degree(v) == 2,
          "e_extend_contract: u and v must both have degree 2");
  auto [x, y] = smallest_block_anchor(g);
  require(x >= 0,
          "e_extend_contract: no same-block pair of edge connectivity >= 3");

  MultiGraph out = contract_edge(extend(g, x, y), EdgeRef(u, v));

  std::ostringstream site;
  site << "extend " << x << '-' << y << ", contract " << u << '-' << v;
  return validated("e_extend_contract", g, std::move(out), Mode::edge,
                   site.str(), trace);
}

MultiGraph e_block_collapse(const MultiGraph& g, const std::vector<int>& block,
                            TransformTrace* trace) {
  require(is_minimally_2_edge_connected(g),
          "e_block_collapse: input not minimally 2-edge-connected");
  std::vector<int> blk = block;
  std::sort(blk.begin(), blk.end());
  for (int v : blk) g.check_vertex(v, "e_block_collapse");
  BlockDecomposition dec = decompose(g);
  require(std::find(dec.blocks.begin(), dec.blocks.end(), blk) !=
              dec.blocks.end(),
          "e_block_collapse: vertex set is not a block");
  require(is_collapsible_block(g, blk),
          "e_block_collapse: block is not a cycle or doubled pair");
  auto [x, y] = smallest_block_anchor(g);
  require(x >= 0,
          "e_block_collapse: no same-block pair of edge connectivity >= 3");

  int p = static_cast<int>(blk.size());
  MultiGraph cur = g;
  for (int i = 0; i + 1 < p; ++i) cur = extend(cur, x, y);

  // Collapse blk to its smallest vertex; blk's internal edges become loops
  // and vanish, boundary edges stack on the representative.
  std::vector<int> removed(blk.begin() + 1, blk.end());
  auto mapped = [&](int a) {
    if (std::binary_search(removed.begin(), removed.end(), a)) return blk[0];
    int below = static_cast<int>(
        std::lower_bound(removed.begin(), removed.end(), a) - removed.begin());
    return a - below;
  };
  MultiGraph out(cur.order() - p + 1);
  for (const auto& [pr, mult] : cur.edges()) {
    int a = mapped(pr.first), b = mapped(pr.second);
    if (a != b) out.add_edge(a, b, mult);
  }

  std::ostringstream site;
  site << "collapse {";
  for (size_t i = 0; i < blk.size(); ++i) site << (i ? "," : "") << blk[i];
  site << "}, extend " << x << '-' << y;
  return validated("e_block_collapse", g, std::move(out), Mode::edge,
                   site.str(), trace);
}

MultiGraph e_bridge_swap(const MultiGraph& g, int u, int v,
                         TransformTrace* trace) {
  require(is_minimally_2_edge_connected(g),
          "e_bridge_swap: input not minimally 2-edge-connected");
  g.check_vertex(u, "e_bridge_swap");
  g.check_vertex(v, "e_bridge_swap");
  require(u != v && g.multiplicity(u, v) == 1,
          "e_bridge_swap: u and v must be joined by a single copy");
  require(g.degree(u) >= 3 && g.degree(v) >= 3,
          "e_bridge_swap: both endpoints need degree at least 3");
  // The strict-increase argument needs three block edges at each endpoint
  // inside the block holding uv, not just three edges overall.
  BlockDecomposition dec = decompose(g);
  const std::vector<int>* blk = block_of_pair(dec, u, v);
  require(blk != nullptr, "e_bridge_swap: uv lies in no block");
  require(block_degree(g, *blk, u) >= 3 && block_degree(g, *blk, v) >= 3,
          "e_bridge_swap: endpoints need block degree at least 3");
  std::optional<EdgeRef> bridge = separating_bridge(g, u, v);
  require(bridge.has_value(),
          "e_bridge_swap: g - uv has no bridge separating u from v");

  MultiGraph contracted = contract_edge(g, EdgeRef(u, v));
  int drop = std::max(u, v);
  int w = std::min(u, v);
  auto remap = [&](int a) {
    if (a == u || a == v) return w;
    return a > drop ? a - 1 : a;
  };
  MultiGraph out = subdivide_edge(
      contracted, EdgeRef(remap(bridge->u), remap(bridge->v)));

  std::ostringstream site;
  site << "contract " << u << '-' << v << ", subdivide " << bridge->u << '-'
       << bridge->v;
  return validated("e_bridge_swap", g, std::move(out), Mode::edge, site.str(),
                   trace);
}

MultiGraph e_cut_rewire(const MultiGraph& g, int x, TransformTrace* trace) {
  require(is_minimally_2_edge_connected(g),
          "e_cut_rewire: input not minimally 2-edge-connected");
  g.check_vertex(x, "e_cut_rewire");
  std::vector<int> comp = components_without(g, x);
  int pieces = *std::max_element(comp.begin(), comp.end()) + 1;
  require(pieces >= 2, "e_cut_rewire: x is not a cut vertex");
  require(cut_branches_everywhere(g, decompose(g), x),
          "e_cut_rewire: x needs degree at least 3 in every incident block");
  std::optional<RewireSite> s = rewire_site(g, x);
  require(s.has_value(),
          "e_cut_rewire: no degree-2 neighbours of x in distinct components "
          "with outside second neighbours");

  MultiGraph out =
      remove_edge_copy(remove_edge_copy(g, EdgeRef(s->u, x)), EdgeRef(s->v, x));
  out.add_edge(s->u, s->z);
  out.add_edge(s->v, s->y);

  std::ostringstream site;
  site << "cut " << x << ": " << s->u << "->" << s->z << ", " << s->v << "->"
       << s->y;
  return validated("e_cut_rewire", g, std::move(out), Mode::edge, site.str(),
                   trace);
}

std::vector<std::vector<int>> t_fan_sites(const MultiGraph& g) {
  std::vector<std::vector<int>> sites;
  if (!is_minimally_2_connected(g)) return sites;
  int n = g.order();
  for (int a = 0; a < n; ++a) {
    if (g.degree(a) <= 2) continue;
    for (auto [b, m] : g.neighbors(a)) {
      if (g.degree(b) != 2) continue;
      std::vector<int> path{a, b};
      int prev = a, cur = b;
      while (g.degree(cur) == 2 && static_cast<int>(path.size()) <= n) {
        int nxt = -1;
        for (auto [w, mw] : g.neighbors(cur))
          if (w != prev) nxt = w;
        if (nxt < 0) {
          path.clear();
          break;
        }
        path.push_back(nxt);
        prev = cur;
        cur = nxt;
      }
      if (path.size() < 4) continue;
      int z = path.back();
      if (z == a || g.degree(z) <= 2) continue;
      if (a < z) sites.push_back(path);  // seen once from each end; keep one
    }
  }
  std::sort(sites.begin(), sites.end());
  return sites;
}

std::vector<std::pair<int, int>> t_contract_split_sites(const MultiGraph& g) {
  std::vector<std::pair<int, int>> sites;
  if (!is_minimally_2_connected(g)) return sites;
  for (const auto& [pr, mult] : g.edges()) {
    if (g.degree(pr.first) < 3 || g.degree(pr.second) < 3) continue;
    MultiGraph pruned = remove_edge_copy(g, EdgeRef(pr.first, pr.second));
    bool found = false;
    for (int c : decompose(pruned).cut_vertices)
      if (c != pr.first && c != pr.second) found = true;
    if (found) sites.push_back(pr);
  }
  return sites;  // map order is already ascending
}

std::vector<std::pair<int, int>> e_extend_contract_sites(const MultiGraph& g) {
  std::vector<std::pair<int, int>> sites;
  if (!is_minimally_2_edge_connected(g)) return sites;
  if (smallest_block_anchor(g).first < 0) return sites;
  for (const auto& [pr, mult] : g.edges())
    if (g.degree(pr.first) == 2 && g.degree(pr.second) == 2)
      sites.push_back(pr);
  return sites;
}

std::vector<std::vector<int>> e_block_collapse_sites(const MultiGraph& g) {
  std::vector<std::vector<int>> sites;
  if (!is_minimally_2_edge_connected(g)) return sites;
  if (smallest_block_anchor(g).first < 0) return sites;
  for (const auto& blk : decompose(g).blocks)
    if (is_collapsible_block(g, blk)) sites.push_back(blk);
  std::sort(sites.begin(), sites.end());
  return sites;
}

std::vector<std::pair<int, int>> e_bridge_swap_sites(const MultiGraph& g) {
  std::vector<std::pair<int, int>> sites;
  if (!is_minimally_2_edge_connected(g)) return sites;
  BlockDecomposition dec = decompose(g);
  for (const auto& [pr, mult] : g.edges()) {
    if (mult != 1) continue;
    if (g.degree(pr.first) < 3 || g.degree(pr.second) < 3) continue;
    const std::vector<int>* blk = block_of_pair(dec, pr.first, pr.second);
    if (!blk || block_degree(g, *blk, pr.first) < 3 ||
        block_degree(g, *blk, pr.second) < 3)
      continue;
    if (separating_bridge(g, pr.first, pr.second)) sites.push_back(pr);
  }
  return sites;
}

std::vector<int> e_cut_rewire_sites(const MultiGraph& g) {
  std::vector<int> sites;
  if (!is_minimally_2_edge_connected(g)) return sites;
  BlockDecomposition dec = decompose(g);
  for (int x : dec.cut_vertices)
    if (cut_branches_everywhere(g, dec, x) && rewire_site(g, x))
      sites.push_back(x);
  return sites;
}

bool any_site(const MultiGraph& g, Mode mode) {
  if (mode == Mode::vertex)
    return !t_fan_sites(g).empty() || !t_contract_split_sites(g).empty();
  return !e_extend_contract_sites(g).empty() ||
         !e_block_collapse_sites(g).empty() ||
         !e_bridge_swap_sites(g).empty() || !e_cut_rewire_sites(g).empty();
}

std::pair<MultiGraph, std::vector<TransformTrace>> improve_until_fixed(
    const MultiGraph& g, Mode mode, long long max_steps) {
  require(g.order() >= 5, "improve_until_fixed: order must be at least 5");
  require(minimal_for(g, mode),
          mode == Mode::vertex
              ? "improve_until_fixed: input not minimally 2-connected"
              : "improve_until_fixed: input not minimally 2-edge-connected");

  long long n = g.order();
  // Each step raises the total by >= 1 and no pair value can exceed n - 1.
  long long cap = choose2(n) * (n - 1);
  MultiGraph cur = g;
  std::vector<TransformTrace> traces;
  while (true) {
    if (max_steps >= 0 && static_cast<long long>(traces.size()) >= max_steps)
      break;
    TransformTrace step;
    bool applied = false;
    if (mode == Mode::vertex) {
      if (auto chains = t_fan_sites(cur); !chains.empty()) {
        cur = t_fan(cur, chains.front(), &step);
        applied = true;
      } else if (auto pairs = t_contract_split_sites(cur); !pairs.empty()) {
        cur = t_contract_split(cur, pairs[0].first, pairs[0].second, &step);
        applied = true;
      }
    } else {
      if (auto pairs = e_extend_contract_sites(cur); !pairs.empty()) {
        cur = e_extend_contract(cur, pairs[0].first, pairs[0].second, &step);
        applied = true;
      } else if (auto blocks = e_block_collapse_sites(cur); !blocks.empty()) {
        cur = e_block_collapse(cur, blocks.front(), &step);
        applied = true;
      } else if (auto swaps = e_bridge_swap_sites(cur); !swaps.empty()) {
        cur = e_bridge_swap(cur, swaps[0].first, swaps[0].second, &step);
        applied = true;
      } else if (auto cuts = e_cut_rewire_sites(cur); !cuts.empty()) {
        cur = e_cut_rewire(cur, cuts.front(), &step);
        applied = true;
      }
    }
    if (!applied) break;
    traces.push_back(std::move(step));
    if (static_cast<long long>(traces.size()) > cap)
      throw std::logic_error(
          "improve_until_fixed: exceeded the strict-increase step bound");
  }
  return {std::move(cur), std::move(traces)};
}

}  // namespace avgconn
