#pragma once

#include <optional>
#include <vector>

#include "avgconn/multigraph.hpp"

namespace avgconn {

struct BlockDecomposition {
  std::vector<int> cut_vertices;          // ascending
  std::vector<std::vector<int>> blocks;   // vertex sets, each ascending
  std::vector<EdgeRef> bridges;           // single-copy blocks
};

// Blocks, cut vertices and bridges of a connected graph of order >= 2.
BlockDecomposition decompose(const MultiGraph& g);
// Same, but tolerates disconnected input (used by per-edge probes).
BlockDecomposition decompose_components(const MultiGraph& g);

bool is_2_connected(const MultiGraph& g);  // order >= 3, no cut vertex

// Whether some cycle of a simple graph has a chord: an edge joining two
// vertices that already lie on a common cycle avoiding that edge.
bool has_chorded_cycle(const MultiGraph& g);
// The chord itself, when one exists.
std::optional<std::pair<int, int>> find_chord(const MultiGraph& g);

// 2-connected with every edge essential; equivalently 2-connected and
// chord-free.  Multigraphs are never minimally 2-connected.
bool is_minimally_2_connected(const MultiGraph& g);

// No bridge, and deleting any one copy leaves a bridge separating that
// copy's endpoints.
bool is_minimally_2_edge_connected(const MultiGraph& g);

// Nonseparable minimally 2-edge-connected simple graph.
bool is_necklace(const MultiGraph& g);

// Connectivity (per mode) equals k and every edge copy is essential for it.
bool is_minimally_k_connected(const MultiGraph& g, int k, Mode mode);

// In a minimally 2-connected graph the vertices of degree exceeding 2 must
// induce a forest; reports whether they do.
bool degree_class_forest_check(const MultiGraph& g);

}  // namespace avgconn
