// Acceptance gate: one pass/fail line per criterion, exit code = number of
// failures.  Every numeric expectation is exact rational arithmetic; the only
// tolerances are the per-criterion wall-clock budgets pinned below.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "avgconn/connectivity.hpp"
#include "avgconn/extremal.hpp"
#include "avgconn/minimality.hpp"
#include "avgconn/multigraph.hpp"
#include "avgconn/transforms.hpp"
#include "avgconn/verify.hpp"

using namespace avgconn;

namespace {

struct Criterion {
  int id;
  std::string label;
  double budget_seconds;
  std::function<void(std::ostream&)> run;  // stream a reason to fail
};

void check(std::ostream& fail, bool ok, const std::string& what) {
  if (!ok) fail << what << "; ";
}

void cycle_baseline(std::ostream& fail) {
  for (int n = 3; n <= 20; ++n) {
    MultiGraph g = cycle(n);
    check(fail, report(g, Mode::vertex).average == Rational(2),
          "vertex average of C_" + std::to_string(n));
    check(fail, report(g, Mode::edge).average == Rational(2),
          "edge average of C_" + std::to_string(n));
  }
}

void complete_bipartite_family(std::ostream& fail) {
  for (int n = 5; n <= 12; ++n) {
    MultiGraph g = complete_bipartite(2, n - 2);
    Rational expect = Rational(2) + Rational(2 * (n - 4), n * (n - 1));
    ConnectivityReport rep = report(g, Mode::vertex);
    check(fail, rep.average == expect,
          "average of K_{2," + std::to_string(n - 2) + "}");
    if (n <= 8)
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          check(fail,
                rep.pair_values[u][v] == oracle_vertex_connectivity(g, u, v),
                "oracle mismatch in K_{2," + std::to_string(n - 2) + "}");
  }
}

void vertex_sharpness(std::ostream& fail) {
  auto s32 = construct_optimal_vertex(32);
  check(fail, s32.has_value(), "construction absent at order 32");
  if (s32) {
    check(fail, is_minimally_2_connected(*s32), "S_32 not minimal");
    check(fail, bipartite_by_degree_class(*s32, 2),
          "S_32 not bipartite by degree class");
    check(fail,
          report(*s32, Mode::vertex).average == Rational(2) + Rational(28, 124),
          "S_32 average off");
  }
  MultiGraph host = cycle_power(8, 3);
  check(fail, is_ideally_connected(host), "order-8 cubic-power host not ideal");
  for (int u = 0; u < 8; ++u)
    for (int v = u + 1; v < 8; ++v)
      check(fail, local_vertex_connectivity(host, u, v) == 6,
            "host pair below 6");
}

void edge_sharpness(std::ostream& fail) {
  auto g32 = construct_optimal_edge(32);
  check(fail, g32.has_value(), "construction absent at order 32");
  if (g32) {
    check(fail, is_minimally_2_edge_connected(*g32), "G_32 not minimal");
    check(fail,
          report(*g32, Mode::edge).average == Rational(2) + Rational(28, 124),
          "G_32 average off");
  }
  MultiGraph host = cycle_bundle(8, 3);
  check(fail, is_ideally_edge_connected(host), "bundle host not edge-ideal");
  check(fail, !is_ideally_connected(host),
        "bundle host unexpectedly vertex-ideal");
}

void bound_soundness(std::ostream& fail) {
  Rational ceiling(9, 4);
  EnumerationJob job;
  for (int n = 4; n <= 8; ++n) {
    job.n = n;
    job.mode = Mode::vertex;
    Rational bound = kappa_bound(n).exact;
    check(fail, bound < ceiling, "vertex bound above 9/4");
    for (const MultiGraph& g : enumerate_minimal(job))
      check(fail, report(g, Mode::vertex).average <= bound,
            "vertex average above bound at n=" + std::to_string(n));
  }
  for (int n = 4; n <= 7; ++n) {
    job.n = n;
    job.mode = Mode::edge;
    Rational bound = lambda_bound(n).exact;
    check(fail, bound < ceiling, "edge bound above 9/4");
    for (const MultiGraph& g : enumerate_minimal(job))
      check(fail, report(g, Mode::edge).average <= bound,
            "edge average above bound at n=" + std::to_string(n));
  }
}

void winner_structure(std::ostream& fail) {
  for (int n = 5; n <= 8; ++n) {
    OptimalCertificate v = find_optimal(n, Mode::vertex);
    check(fail, v.winners_bipartite_by_degree_class,
          "vertex winner not bipartite by degree class at n=" +
              std::to_string(n));
    OptimalCertificate e = find_optimal(n, Mode::edge);
    check(fail, e.winners_bipartite_by_degree_class,
          "edge winner not bipartite by degree class at n=" +
              std::to_string(n));
    check(fail, e.winners_simple,
          "edge winner not simple at n=" + std::to_string(n));
    check(fail, e.winners_2_connected,
          "edge winner not 2-connected at n=" + std::to_string(n));
  }
}

void transform_monotonicity(std::ostream& fail) {
  long long fan = 0, csplit = 0, econtract = 0, collapse = 0, swap = 0,
            rewire = 0;
  auto apply = [&fail](const char* name, long long& counter, auto&& fn) {
    try {
      TransformTrace tr;
      MultiGraph out = fn(&tr);
      ++counter;
      check(fail, tr.total_after > tr.total_before,
            std::string(name) + " did not increase the total");
      check(fail, tr.output_minimal, std::string(name) + " lost minimality");
    } catch (const std::logic_error& e) {
      fail << name << " self-check: " << e.what() << "; ";
    }
  };
  EnumerationJob job;
  for (int n = 3; n <= 7; ++n) {
    job.n = n;
    job.mode = Mode::vertex;
    for (const MultiGraph& g : enumerate_minimal(job)) {
      for (const auto& chain : t_fan_sites(g))
        apply("t_fan", fan, [&](TransformTrace* tr) {
          MultiGraph out = t_fan(g, chain, tr);
          check(fail, out.order() == g.order(), "t_fan changed the order");
          check(fail,
                tr->total_after - tr->total_before ==
                    static_cast<long long>(chain.size()) - 3,
                "t_fan increase differs from its closed form");
          return out;
        });
      for (auto [a, b] : t_contract_split_sites(g))
        apply("t_contract_split", csplit, [&](TransformTrace* tr) {
          MultiGraph out = t_contract_split(g, a, b, tr);
          check(fail, out.order() == g.order(),
                "t_contract_split changed the order");
          return out;
        });
    }
    job.mode = Mode::edge;
    for (const MultiGraph& g : enumerate_minimal(job)) {
      for (auto [a, b] : e_extend_contract_sites(g))
        apply("e_extend_contract", econtract, [&](TransformTrace* tr) {
          MultiGraph out = e_extend_contract(g, a, b, tr);
          check(fail, out.order() == g.order(),
                "e_extend_contract changed the order");
          return out;
        });
      for (const auto& blk : e_block_collapse_sites(g))
        apply("e_block_collapse", collapse, [&](TransformTrace* tr) {
          MultiGraph out = e_block_collapse(g, blk, tr);
          check(fail, out.order() == g.order(),
                "e_block_collapse changed the order");
          return out;
        });
      for (auto [a, b] : e_bridge_swap_sites(g))
        apply("e_bridge_swap", swap, [&](TransformTrace* tr) {
          MultiGraph out = e_bridge_swap(g, a, b, tr);
          check(fail, out.order() == g.order(),
                "e_bridge_swap changed the order");
          return out;
        });
      for (int x : e_cut_rewire_sites(g))
        apply("e_cut_rewire", rewire, [&](TransformTrace* tr) {
          MultiGraph out = e_cut_rewire(g, x, tr);
          check(fail, out.order() == g.order(),
                "e_cut_rewire changed the order");
          return out;
        });
    }
  }
  check(fail, fan == 5, "t_fan application count " + std::to_string(fan));
  check(fail, csplit == 1,
        "t_contract_split application count " + std::to_string(csplit));
  check(fail, econtract == 10,
        "e_extend_contract application count " + std::to_string(econtract));
  check(fail, collapse == 23,
        "e_block_collapse application count " + std::to_string(collapse));
  check(fail, swap == 0,
        "e_bridge_swap application count " + std::to_string(swap));
  check(fail, rewire == 0,
        "e_cut_rewire application count " + std::to_string(rewire));
}

void oracle_equivalence(std::ostream& fail) {
  auto agree = [&fail](const MultiGraph& g, const std::string& where) {
    for (int u = 0; u < g.order(); ++u)
      for (int v = u + 1; v < g.order(); ++v) {
        check(fail,
              local_vertex_connectivity(g, u, v) ==
                  oracle_vertex_connectivity(g, u, v),
              "vertex disagreement on " + where);
        check(fail,
              local_edge_connectivity(g, u, v) ==
                  oracle_edge_connectivity(g, u, v),
              "edge disagreement on " + where);
      }
  };
  for (int n = 2; n <= 6; ++n)
    for (const MultiGraph& g : enumerate_simple(n))
      agree(g, "simple order " + std::to_string(n));
  const auto& seven = enumerate_simple(7);
  for (size_t i = 0; i < 500 && i < seven.size(); ++i)
    agree(seven[i], "simple order 7 sample");
  // Every labelled multigraph with per-pair multiplicity at most 3.
  for (int n = 2; n <= 5; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<int> mult(pairs.size(), 0);
    while (true) {
      MultiGraph g(n);
      for (size_t i = 0; i < pairs.size(); ++i)
        if (mult[i]) g.add_edge(pairs[i].first, pairs[i].second, mult[i]);
      agree(g, "multigraph order " + std::to_string(n));
      size_t i = 0;
      while (i < mult.size() && mult[i] == 3) mult[i++] = 0;
      if (i == mult.size()) break;
      ++mult[i];
    }
  }
}

void balancing_lemma(std::ostream& fail) {
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> seq(n, 1);
    while (true) {
      long long D = 0;
      for (int d : seq) D += d;
      if (D <= 14)
        check(fail,
              potential(seq) <= potential(nearly_regular(D, n).sequence()),
              "unbalanced sequence beats the nearly regular one");
      int i = n - 1;
      while (i >= 0 && seq[i] == 14) --i;
      if (i < 0) break;
      ++seq[i];
      for (int j = i + 1; j < n; ++j) seq[j] = seq[i];
    }
  }
}

void argmax_uniqueness(std::ostream& fail) {
  for (int k = 8; k <= 200; ++k)
    check(fail, kappa_bound(4 * k).optimal_s == std::vector<int>{k},
          "argmax not the singleton {" + std::to_string(k) + "}");
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "cycle baseline", 1.0, cycle_baseline},
      {2, "complete bipartite family", 5.0, complete_bipartite_family},
      {3, "vertex sharpness at order 32", 30.0, vertex_sharpness},
      {4, "edge sharpness at order 32", 30.0, edge_sharpness},
      {5, "bound soundness sweep", 600.0, bound_soundness},
      {6, "optimal winner structure", 600.0, winner_structure},
      {7, "transform monotonicity", 600.0, transform_monotonicity},
      {8, "oracle equivalence", 600.0, oracle_equivalence},
      {9, "balancing lemma", 60.0, balancing_lemma},
      {10, "argmax uniqueness scan", 60.0, argmax_uniqueness},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::ostringstream reason;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(reason);
    } catch (const std::exception& e) {
      reason << "exception: " << e.what() << "; ";
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed > c.budget_seconds)
      reason << "took " << elapsed << " s, budget " << c.budget_seconds
             << " s; ";
    std::string why = reason.str();
    if (why.empty()) {
      std::printf("PASS %2d %s (%.2f s)\n", c.id, c.label.c_str(), elapsed);
    } else {
      ++failures;
      std::printf("FAIL %2d %s (%.2f s): %s\n", c.id, c.label.c_str(), elapsed,
                  why.c_str());
    }
    std::fflush(stdout);
  }
  return failures;
}
