#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "avgconn/connectivity.hpp"
#include "avgconn/extremal.hpp"
#include "avgconn/graph_io.hpp"
#include "avgconn/minimality.hpp"
#include "avgconn/multigraph.hpp"
#include "avgconn/transforms.hpp"
#include "avgconn/verify.hpp"

namespace {

using namespace avgconn;
using json = nlohmann::ordered_json;

constexpr const char* kSchema = "avgconn/1";
constexpr const char* kVersion = "0.1.0";

constexpr int kOk = 0;
constexpr int kPredicateFalse = 1;
constexpr int kInputError = 2;
constexpr int kBudgetExhausted = 3;
constexpr int kInternalError = 4;

json record(const char* command) {
  json rec;
  rec["schema"] = kSchema;
  rec["version"] = kVersion;
  rec["command"] = command;
  return rec;
}

void emit(const json& rec) { std::cout << rec.dump() << '\n'; }

GraphFormat to_format(const std::string& name) {
  if (name == "graph6") return GraphFormat::graph6;
  if (name == "edgelist") return GraphFormat::edgelist;
  throw std::invalid_argument("unknown format: " + name);
}

Mode to_mode(const std::string& name) {
  if (name == "vertex") return Mode::vertex;
  if (name == "edge") return Mode::edge;
  throw std::invalid_argument("unknown mode: " + name);
}

MultiGraph load_graph(const std::string& path, GraphFormat fmt) {
  if (path == "-") return read_graph(std::cin, fmt);
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return read_graph(in, fmt);
}

std::string graph_text(const MultiGraph& g) {
  return g.is_simple() ? to_graph6(g) : to_edge_list(g);
}

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  long lo = 0, hi = 0;
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stol(text);
    } else {
      lo = std::stol(text.substr(0, dots));
      hi = std::stol(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("bad range: " + text);
  }
  if (lo > hi) throw std::invalid_argument("empty range: " + text);
  return {static_cast<int>(lo), static_cast<int>(hi)};
}

// ---- compute ----

int cmd_compute(const std::string& input, GraphFormat fmt, Mode mode,
                bool machine) {
  MultiGraph g = load_graph(input, fmt);
  ConnectivityReport rep = report(g, mode);
  if (machine) {
    json rec = record("compute");
    rec["input"] = {{"order", g.order()},
                    {"size", g.size()},
                    {"mode", mode_name(mode)}};
    json pairs = json::array();
    for (int u = 0; u < rep.n; ++u)
      for (int v = u + 1; v < rep.n; ++v)
        pairs.push_back({u, v, rep.pair_values[u][v]});
    rec["result"] = {{"total", rep.total},  {"average", rep.average.str()},
                     {"global", rep.global}, {"ideal", rep.ideal},
                     {"pairs", pairs}};
    emit(rec);
  } else {
    std::cout << "n=" << g.order() << " m=" << g.size() << " mode="
              << mode_name(mode) << '\n'
              << "total=" << rep.total << " average=" << rep.average.str()
              << " (" << rep.average.to_double() << ")"
              << " global=" << rep.global
              << " ideal=" << (rep.ideal ? "yes" : "no") << '\n';
  }
  return kOk;
}

// ---- check ----

struct Verdict {
  bool value = false;
  json witness;  // null when the predicate holds
};

json edge_witness(const char* kind, int u, int v) {
  return {{"kind", kind}, {"pair", {u, v}}};
}

std::optional<std::pair<int, int>> first_pair_with_mult(const MultiGraph& g,
                                                        int at_least) {
  for (const auto& [pr, mult] : g.edges())
    if (mult >= at_least) return pr;
  return std::nullopt;
}

// First copy whose removal keeps both endpoints 2-edge-connected.
std::optional<std::pair<int, int>> non_essential_for_edge_mode(
    const MultiGraph& g) {
  for (const auto& [pr, mult] : g.edges()) {
    MultiGraph pruned = remove_edge_copy(g, EdgeRef(pr.first, pr.second));
    if (local_edge_connectivity(pruned, pr.first, pr.second) >= 2) return pr;
  }
  return std::nullopt;
}

Verdict check_min2edge(const MultiGraph& g) {
  Verdict v;
  v.value = g.order() >= 2 && is_minimally_2_edge_connected(g);
  if (v.value) return v;
  if (g.order() < 2 || !is_connected(g)) {
    v.witness = {{"kind", "not_connected"}};
    return v;
  }
  if (auto triple = first_pair_with_mult(g, 3)) {
    v.witness = edge_witness("triple_edge", triple->first, triple->second);
    return v;
  }
  BlockDecomposition dec = decompose(g);
  if (!dec.bridges.empty()) {
    v.witness = edge_witness("bridge", dec.bridges[0].u, dec.bridges[0].v);
    return v;
  }
  if (auto loose = non_essential_for_edge_mode(g)) {
    v.witness = edge_witness("non_essential_edge", loose->first, loose->second);
    return v;
  }
  v.witness = {{"kind", "unknown"}};
  return v;
}

Verdict check_min2conn(const MultiGraph& g) {
  Verdict v;
  v.value = is_minimally_2_connected(g);
  if (v.value) return v;
  if (g.order() < 3 || !is_connected(g)) {
    v.witness = {{"kind", "not_connected"}};
    return v;
  }
  if (!g.is_simple()) {
    auto pr = first_pair_with_mult(g, 2);
    v.witness = edge_witness("multiple_edge", pr->first, pr->second);
    return v;
  }
  BlockDecomposition dec = decompose(g);
  if (!dec.cut_vertices.empty()) {
    v.witness = {{"kind", "cut_vertex"}, {"vertex", dec.cut_vertices[0]}};
    return v;
  }
  if (auto chord = find_chord(g)) {
    v.witness = edge_witness("chord", chord->first, chord->second);
    return v;
  }
  v.witness = {{"kind", "unknown"}};
  return v;
}

Verdict check_necklace(const MultiGraph& g) {
  Verdict v;
  v.value = is_necklace(g);
  if (v.value) return v;
  if (!g.is_simple()) {
    auto pr = first_pair_with_mult(g, 2);
    v.witness = edge_witness("multiple_edge", pr->first, pr->second);
    return v;
  }
  if (g.order() >= 3 && is_connected(g)) {
    BlockDecomposition dec = decompose(g);
    if (!dec.cut_vertices.empty()) {
      v.witness = {{"kind", "cut_vertex"}, {"vertex", dec.cut_vertices[0]}};
      return v;
    }
  }
  return check_min2edge(g);  // remaining reasons are the edge-minimality ones
}

Verdict check_ideal(const MultiGraph& g, Mode mode) {
  Verdict v;
  auto pr = find_non_ideal_pair(g, mode);
  v.value = pr.first < 0;
  if (!v.value) v.witness = edge_witness("non_ideal_pair", pr.first, pr.second);
  return v;
}

Verdict check_mink(const MultiGraph& g, int k, Mode mode) {
  Verdict v;
  v.value = is_minimally_k_connected(g, k, mode);
  if (v.value) return v;
  int global = g.order() >= 2 && is_connected(g) ? global_connectivity(g, mode)
                                                 : 0;
  if (global != k) {
    v.witness = {{"kind", "connectivity"}, {"value", global}};
    return v;
  }
  for (const auto& [pr, mult] : g.edges()) {
    MultiGraph pruned = remove_edge_copy(g, EdgeRef(pr.first, pr.second));
    if (is_connected(pruned) && global_connectivity(pruned, mode) >= k) {
      v.witness = edge_witness("non_essential_edge", pr.first, pr.second);
      return v;
    }
  }
  v.witness = {{"kind", "unknown"}};
  return v;
}

int cmd_check(const std::string& input, GraphFormat fmt, const std::string& which,
              int k, Mode mode, bool machine) {
  MultiGraph g = load_graph(input, fmt);
  Verdict v;
  if (which == "min2conn")
    v = check_min2conn(g);
  else if (which == "min2edge")
    v = check_min2edge(g);
  else if (which == "necklace")
    v = check_necklace(g);
  else if (which == "ideal")
    v = check_ideal(g, Mode::vertex);
  else if (which == "ideal-edge")
    v = check_ideal(g, Mode::edge);
  else if (which == "mink")
    v = check_mink(g, k, mode);
  else
    throw std::invalid_argument("unknown predicate: " + which);

  if (machine) {
    json rec = record("check");
    rec["input"] = {{"order", g.order()}, {"size", g.size()}};
    rec["result"] = {{"predicate", which},
                     {"value", v.value},
                     {"witness", v.value ? json() : v.witness}};
    emit(rec);
  } else {
    std::cout << which << ": " << (v.value ? "true" : "false");
    if (!v.value) std::cout << "  witness: " << v.witness.dump();
    std::cout << '\n';
  }
  return v.value ? kOk : kPredicateFalse;
}

// ---- construct ----

json certify(const std::string& family, const MultiGraph& g, Mode mode) {
  json cert;
  ConnectivityReport rep = report(g, mode);
  cert["average"] = rep.average.str();
  cert["global"] = rep.global;
  if (family == "optimal-vertex") {
    BoundRow row = kappa_bound(g.order());
    cert["minimal"] = is_minimally_2_connected(g);
    cert["matches_bound"] = rep.average == row.exact;
  } else if (family == "optimal-edge") {
    BoundRow row = lambda_bound(g.order());
    cert["minimal"] = is_minimally_2_edge_connected(g);
    cert["matches_bound"] = rep.average == row.exact;
  } else if (family == "bundle") {
    cert["ideal"] = is_ideally_edge_connected(g);
  } else if (family == "cyclepower") {
    cert["ideal"] = is_ideally_connected(g);
  } else {
    cert["ideal"] = rep.ideal;
  }
  return cert;
}

int cmd_construct(const std::string& family, const std::vector<int>& params,
                  std::optional<std::string> format_name, bool self_verify,
                  unsigned seed, bool machine) {
  auto want = [&](size_t count) {
    if (params.size() != count)
      throw std::invalid_argument(family + " expects " +
                                  std::to_string(count) + " parameter(s)");
  };

  std::optional<MultiGraph> g;
  Mode mode = Mode::vertex;
  if (family == "cycle") {
    want(1);
    g = cycle(params[0]);
  } else if (family == "kab") {
    want(2);
    g = complete_bipartite(params[0], params[1]);
  } else if (family == "cyclepower") {
    want(2);
    g = cycle_power(params[0], params[1]);
  } else if (family == "bundle") {
    want(2);
    g = cycle_bundle(params[0], params[1]);
    mode = Mode::edge;
  } else if (family == "optimal-vertex" || family == "optimal-edge") {
    want(1);
    int n = params[0];
    if (n < minimum_constructive_order) {
      if (machine) {
        json rec = record("construct");
        rec["result"] = {{"absent", true}, {"reason", "below proven regime"}};
        emit(rec);
      } else {
        std::cout << "absent: below proven regime (n=" << n << " < "
                  << minimum_constructive_order << ")\n";
      }
      return kPredicateFalse;
    }
    mode = family == "optimal-edge" ? Mode::edge : Mode::vertex;
    g = mode == Mode::edge ? construct_optimal_edge(n, seed)
                           : construct_optimal_vertex(n, seed);
    if (!g) {
      std::cerr << "error: search budget exhausted for " << family << " " << n
                << "\n";
      return kBudgetExhausted;
    }
  } else {
    throw std::invalid_argument("unknown family: " + family);
  }

  GraphFormat fmt = format_name ? to_format(*format_name)
                                : (g->is_simple() ? GraphFormat::graph6
                                                  : GraphFormat::edgelist);
  if (fmt == GraphFormat::graph6 && !g->is_simple())
    throw std::invalid_argument(
        "graph6 cannot express multiplicities; use --format edgelist");

  if (machine) {
    json rec = record("construct");
    rec["input"] = {{"family", family}, {"params", params}};
    std::ostringstream text;
    write_graph(text, *g, fmt);
    rec["result"] = {{"order", g->order()},
                     {"size", g->size()},
                     {"format", fmt == GraphFormat::graph6 ? "graph6"
                                                           : "edgelist"},
                     {"graph", text.str()}};
    if (self_verify) rec["result"]["certificate"] = certify(family, *g, mode);
    emit(rec);
  } else {
    write_graph(std::cout, *g, fmt);
    if (self_verify)
      std::cerr << "self-verify: " << certify(family, *g, mode).dump() << '\n';
  }
  return kOk;
}

// ---- bounds ----

int cmd_bounds(const std::string& range, Mode mode, bool machine) {
  auto [lo, hi] = parse_range(range);
  if (lo < 3) throw std::invalid_argument("bounds need n >= 3");
  if (!machine)
    std::cout << "n,mode,general,exact,optimal_s,witness,attained\n";
  for (int n = lo; n <= hi; ++n) {
    BoundRow row = mode == Mode::vertex ? kappa_bound(n) : lambda_bound(n);
    if (machine) {
      json rec = record("bounds");
      rec["result"] = {{"n", row.n},
                       {"mode", mode_name(row.mode)},
                       {"general", row.general.str()},
                       {"exact", row.exact.str()},
                       {"optimal_s", row.optimal_s},
                       {"witness", row.witness.empty() ? json()
                                                       : json(row.witness)},
                       {"attained", row.attained}};
      emit(rec);
    } else {
      std::ostringstream s_list;
      for (size_t i = 0; i < row.optimal_s.size(); ++i)
        s_list << (i ? ";" : "") << row.optimal_s[i];
      std::cout << row.n << ',' << mode_name(row.mode) << ','
                << row.general.str() << ',' << row.exact.str() << ','
                << s_list.str() << ',' << row.witness << ','
                << (row.attained ? "true" : "false") << '\n';
    }
  }
  return kOk;
}

// ---- improve ----

int cmd_improve(const std::string& input, GraphFormat fmt, Mode mode,
                long long limit, bool machine) {
  MultiGraph g = load_graph(input, fmt);
  auto [result, traces] = improve_until_fixed(g, mode, limit);
  bool fixed = !any_site(result, mode);
  Rational avg = report(result, mode).average;

  if (machine) {
    json rec = record("improve");
    rec["input"] = {{"order", g.order()},
                    {"size", g.size()},
                    {"mode", mode_name(mode)},
                    {"graph", graph_text(g)}};
    json steps = json::array();
    for (const TransformTrace& t : traces)
      steps.push_back({{"name", t.name},
                       {"site", t.site},
                       {"total_before", t.total_before},
                       {"total_after", t.total_after},
                       {"input_minimal", t.input_minimal},
                       {"output_minimal", t.output_minimal},
                       {"graph", graph_text(t.after)}});
    rec["result"] = {{"steps", steps.size()},
                     {"trace", steps},
                     {"fixed_point", fixed},
                     {"graph", graph_text(result)},
                     {"average", avg.str()}};
    emit(rec);
  } else {
    for (size_t i = 0; i < traces.size(); ++i)
      std::cout << (i + 1) << ". " << traces[i].name << " at "
                << traces[i].site << ": total " << traces[i].total_before
                << " -> " << traces[i].total_after << '\n';
    std::cout << "steps=" << traces.size()
              << " fixed_point=" << (fixed ? "yes" : "no")
              << " average=" << avg.str() << '\n'
              << graph_text(result) << '\n';
  }
  return fixed ? kOk : kBudgetExhausted;
}

// ---- verify ----

int cmd_verify(const std::string& range, Mode mode, std::optional<std::string> source,
               std::optional<int> k, bool machine) {
  auto [lo, hi] = parse_range(range);
  std::ifstream file;
  std::istream* stream = nullptr;
  if (source) {
    if (lo != hi)
      throw std::invalid_argument("a graph6 stream covers one order at a time");
    if (*source == "-") {
      stream = &std::cin;
    } else {
      file.open(*source);
      if (!file) throw std::invalid_argument("cannot open " + *source);
      stream = &file;
    }
  }

  for (int n = lo; n <= hi; ++n) {
    if (k) {
      ConjectureReport rep = check_conjecture(*k, n, mode, stream);
      if (machine) {
        json rec = record("verify");
        rec["result"] = {{"kind", "conjecture"},
                         {"k", rep.k},
                         {"n", rep.n},
                         {"mode", mode_name(rep.mode)},
                         {"candidates", rep.candidate_count},
                         {"best", rep.best_average.str()},
                         {"probe", rep.probe.str()},
                         {"witnesses", rep.witnesses},
                         {"bipartite_by_degree_class",
                          rep.winners_bipartite_by_degree_class}};
        emit(rec);
      } else {
        std::cout << "n=" << rep.n << " k=" << rep.k << " mode="
                  << mode_name(rep.mode)
                  << " candidates=" << rep.candidate_count
                  << " best=" << rep.best_average.str()
                  << " probe=" << rep.probe.str()
                  << " bipartite_by_degree_class="
                  << (rep.winners_bipartite_by_degree_class ? "yes" : "no")
                  << '\n';
      }
    } else {
      OptimalCertificate cert = find_optimal(n, mode, stream);
      if (machine) {
        json rec = record("verify");
        rec["result"] = {{"kind", "certificate"},
                         {"n", cert.n},
                         {"mode", mode_name(cert.mode)},
                         {"candidates", cert.candidate_count},
                         {"best", cert.best_average.str()},
                         {"bound", cert.bound.str()},
                         {"gap", cert.gap.str()},
                         {"witnesses", cert.witnesses},
                         {"bipartite_by_degree_class",
                          cert.winners_bipartite_by_degree_class},
                         {"two_connected", cert.winners_2_connected},
                         {"simple", cert.winners_simple}};
        emit(rec);
      } else {
        std::cout << "n=" << cert.n << " mode=" << mode_name(cert.mode)
                  << " candidates=" << cert.candidate_count
                  << " best=" << cert.best_average.str()
                  << " bound=" << cert.bound.str()
                  << " gap=" << cert.gap.str()
                  << " winners=" << cert.witnesses.size() << '\n';
      }
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"average connectivity toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string input = "-";
  std::string format_name = "graph6";
  std::string mode_name_arg = "vertex";
  std::string which;
  std::string family;
  std::string range;
  std::vector<int> params;
  std::optional<std::string> out_format;
  std::optional<std::string> source;
  bool machine = false;
  bool self_verify = false;
  int k = 2;
  std::optional<int> verify_k;
  long long limit = -1;
  unsigned seed = 1;

  auto add_common = [&](CLI::App* cmd, bool with_input) {
    if (with_input)
      cmd->add_option("input", input, "graph file, or - for stdin");
    cmd->add_option("--format", format_name, "graph6|edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
    cmd->add_option("--mode", mode_name_arg, "vertex|edge")
        ->check(CLI::IsMember({"vertex", "edge"}));
    cmd->add_flag("--json", machine, "line-delimited JSON output");
  };

  CLI::App* compute = app.add_subcommand("compute", "pairwise connectivity report");
  add_common(compute, true);

  CLI::App* check = app.add_subcommand("check", "structural predicates");
  check->add_option("which", which,
                    "min2conn|min2edge|necklace|ideal|ideal-edge|mink")
      ->required()
      ->check(CLI::IsMember({"min2conn", "min2edge", "necklace", "ideal",
                             "ideal-edge", "mink"}));
  add_common(check, true);
  check->add_option("--k", k, "target connectivity for mink");

  CLI::App* construct = app.add_subcommand("construct", "named graph families");
  construct->add_option("family", family,
                        "cycle|kab|cyclepower|bundle|optimal-vertex|optimal-edge")
      ->required();
  construct->add_option("params", params, "integer parameters");
  construct->add_option("--format", out_format, "graph6|edgelist");
  construct->add_flag("--self-verify", self_verify, "re-certify the output");
  construct->add_option("--seed", seed, "seed for the extremal search");
  construct->add_flag("--json", machine, "line-delimited JSON output");

  CLI::App* bounds = app.add_subcommand("bounds", "upper-bound table");
  bounds->add_option("range", range, "n or a..b")->required();
  bounds->add_option("--mode", mode_name_arg, "vertex|edge")
      ->check(CLI::IsMember({"vertex", "edge"}));
  bounds->add_flag("--json", machine, "line-delimited JSON instead of CSV");

  CLI::App* improve = app.add_subcommand("improve", "run the rewrite driver");
  add_common(improve, true);
  improve->add_option("--limit", limit, "stop after this many steps");

  CLI::App* verify = app.add_subcommand("verify", "optimality certificates");
  verify->add_option("range", range, "n or a..b")->required();
  verify->add_option("--mode", mode_name_arg, "vertex|edge")
      ->check(CLI::IsMember({"vertex", "edge"}));
  verify->add_option("--source", source, "graph6 stream file, or - for stdin");
  verify->add_option("--k", verify_k, "optimal minimally k-connected mode");
  verify->add_flag("--json", machine, "line-delimited JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    GraphFormat fmt = to_format(format_name);
    Mode mode = to_mode(mode_name_arg);
    if (compute->parsed()) return cmd_compute(input, fmt, mode, machine);
    if (check->parsed()) return cmd_check(input, fmt, which, k, mode, machine);
    if (construct->parsed())
      return cmd_construct(family, params, out_format, self_verify, seed,
                           machine);
    if (bounds->parsed()) return cmd_bounds(range, mode, machine);
    if (improve->parsed())
      return cmd_improve(input, fmt, mode, limit, machine);
    if (verify->parsed())
      return cmd_verify(range, mode, source, verify_k, machine);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::logic_error& e) {
    std::cerr << "internal invariant violated: " << e.what() << '\n';
    return kInternalError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
