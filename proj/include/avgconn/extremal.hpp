#pragma once

#include <optional>
#include <string>
#include <vector>

#include "avgconn/multigraph.hpp"
#include "avgconn/rational.hpp"

namespace avgconn {

// Nearly regular degree sequence: n - r terms equal to d and r terms equal
// to d + 1, summing to D.
struct NearlyRegularSpec {
  int n = 0;
  long long D = 0;
  long long d = 0;
  long long r = 0;

  std::vector<int> sequence() const;
};

// Sum of min(d_i, d_j) over all pairs; 0 for fewer than two terms.
long long potential(const std::vector<int>& seq);

// The degree sequence maximizing the potential among positive n-term
// sequences with sum D.  Requires D >= n.
NearlyRegularSpec nearly_regular(long long D, int n);

// Connectivity surplus available from a host with s branch vertices inside a
// graph of order n: (d - 2) * C(s,2) + C(r,2) where 2(n - s) = d*s + r.
// Defined for 1 <= s <= 2n/5 (host degrees stay >= 3).
long long objective_g(int n, int s);

struct BoundRow {
  int n = 0;
  Mode mode = Mode::vertex;
  Rational general;           // 2 + (n-2)^2 / (4n(n-1))
  Rational exact;             // 2 + max_s objective_g(n, s) / C(n,2)
  std::vector<int> optimal_s; // every argmax site of the scan
  std::string witness;        // construction name, empty when none certified
  bool attained = false;
};

// Smallest order at which the optimal constructions below are produced and
// certified; below it they report absent.
inline constexpr int minimum_constructive_order = 32;

BoundRow kappa_bound(int n);
BoundRow lambda_bound(int n);

// A simple nearly regular graph of order n and size m in which every local
// vertex connectivity equals the smaller endpoint degree.  Circulant seed
// plus greedy extras, then randomized degree-preserving edge swaps; every
// candidate is certified by flow before being returned.  Empty only when the
// swap budget runs out.
std::optional<MultiGraph> search_ideally_connected(int n, long long m,
                                                   unsigned seed = 1);

// Extremal witnesses: subdivisions of ideally (edge-)connected nearly
// regular hosts at the scan argmax.  Empty below minimum_constructive_order
// or if the host search fails.  Edge hosts are cycle bundles with surplus
// copies; infeasible host degree sequences throw.
std::optional<MultiGraph> construct_optimal_vertex(int n, unsigned seed = 1);
std::optional<MultiGraph> construct_optimal_edge(int n, unsigned seed = 1);

}  // namespace avgconn
