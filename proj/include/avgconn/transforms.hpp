#pragma once

#include <string>
#include <utility>
#include <vector>

#include "avgconn/multigraph.hpp"

namespace avgconn {

// Record of one applied rewrite: which one, where, and the verified effect.
// Every transform keeps the order fixed, preserves minimality and strictly
// increases the total connectivity of its mode; violations surface as
// std::logic_error, never as a silently wrong trace.
struct TransformTrace {
  std::string name;
  std::string site;
  Mode mode = Mode::vertex;
  MultiGraph before;
  MultiGraph after;
  long long total_before = 0;
  long long total_after = 0;
  bool input_minimal = false;
  bool output_minimal = false;
};

// ---- rewrites of minimally 2-connected graphs (vertex mode) ----

// Fan out a degree-2 chain: `path` lists u, u_1, ..., u_{k-1}, v along the
// chain (k >= 3, endpoints of degree > 2, interior of degree 2).  The chain
// edges are replaced by u u_i and u_i v for every interior u_i.  The total
// rises by exactly k - 2.
MultiGraph t_fan(const MultiGraph& g, const std::vector<int>& path,
                 TransformTrace* trace = nullptr);

// Contract an edge joining two vertices of degree >= 3, then attach a new
// vertex to the merged vertex and the smallest cut vertex of g - uv.
MultiGraph t_contract_split(const MultiGraph& g, int u, int v,
                            TransformTrace* trace = nullptr);

// ---- rewrites of minimally 2-edge-connected multigraphs (edge mode) ----

// Attach a new vertex across the smallest same-block pair of local edge
// connectivity >= 3, then contract the edge joining the adjacent degree-2
// pair u, v.
MultiGraph e_extend_contract(const MultiGraph& g, int u, int v,
                             TransformTrace* trace = nullptr);

// Collapse a block that is a cycle or a doubled pair (p vertices) to a single
// vertex after attaching p - 1 new vertices across an anchor pair of local
// edge connectivity >= 3 in some other block.
MultiGraph e_block_collapse(const MultiGraph& g, const std::vector<int>& block,
                            TransformTrace* trace = nullptr);

// Contract an edge uv (u, v of block degree >= 3 in the block holding uv),
// then subdivide the smallest bridge of g - uv separating u from v.
MultiGraph e_bridge_swap(const MultiGraph& g, int u, int v,
                         TransformTrace* trace = nullptr);

// At a cut vertex x of degree >= 3 in every incident block, pick degree-2
// neighbours u, v from distinct components of g - x (each joined to x by a
// single copy, with second neighbours y, z); replace ux, vx by uz, vy.
MultiGraph e_cut_rewire(const MultiGraph& g, int x,
                        TransformTrace* trace = nullptr);

// ---- site finders ----
// Each lists every position where the matching transform's preconditions
// hold, in ascending order; empty means inapplicable everywhere.

std::vector<std::vector<int>> t_fan_sites(const MultiGraph& g);
std::vector<std::pair<int, int>> t_contract_split_sites(const MultiGraph& g);
std::vector<std::pair<int, int>> e_extend_contract_sites(const MultiGraph& g);
std::vector<std::vector<int>> e_block_collapse_sites(const MultiGraph& g);
std::vector<std::pair<int, int>> e_bridge_swap_sites(const MultiGraph& g);
std::vector<int> e_cut_rewire_sites(const MultiGraph& g);

// ---- driver ----

// Apply the mode's transforms at their smallest applicable site until none
// applies.  Input must be minimally 2-(edge-)connected of order >= 5; the
// order never changes and the total strictly increases every step, which
// bounds the run.  Returns the fixed point and the per-step traces; a
// non-negative max_steps stops early after that many steps.
std::pair<MultiGraph, std::vector<TransformTrace>> improve_until_fixed(
    const MultiGraph& g, Mode mode, long long max_steps = -1);

// True when some transform of the mode applies somewhere.
bool any_site(const MultiGraph& g, Mode mode);

}  // namespace avgconn
