#include "avgconn/graph_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace avgconn {

namespace {

constexpr int kG6MaxOrder = 258047;

void append_bits(std::string& out, long long value, int bits) {
  for (int i = bits - 6; i >= 0; i -= 6)
    out.push_back(static_cast<char>(((value >> i) & 0x3f) + 63));
}

}  // namespace

std::string to_graph6(const MultiGraph& g) {
  if (!g.is_simple())
    throw std::invalid_argument("to_graph6: graph must be simple");
  int n = g.order();
  if (n > kG6MaxOrder)
    throw std::invalid_argument("to_graph6: order too large for graph6");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    append_bits(out, n, 18);
  }
  int bit = 0, acc = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.multiplicity(i, j) > 0 ? 1 : 0);
      if (++bit == 6) {
        out.push_back(static_cast<char>(acc + 63));
        bit = 0;
        acc = 0;
      }
    }
  }
  if (bit > 0) out.push_back(static_cast<char>((acc << (6 - bit)) + 63));
  return out;
}

MultiGraph from_graph6(const std::string& line) {
  std::string s = line;
  const std::string header = ">>graph6<<";
  if (s.rfind(header, 0) == 0) s = s.substr(header.size());
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.empty()) throw std::invalid_argument("from_graph6: empty input");

  size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= s.size())
      throw std::invalid_argument("from_graph6: truncated input");
    int c = static_cast<unsigned char>(s[pos++]);
    if (c < 63 || c > 126)
      throw std::invalid_argument("from_graph6: byte out of range");
    return c - 63;
  };

  long long n;
  int first = next();
  if (first < 63) {
    n = first;
  } else {
    long long v = 0;
    int digits = 3;
    if (pos < s.size() && static_cast<unsigned char>(s[pos]) == 126) {
      ++pos;
      digits = 6;
    }
    for (int i = 0; i < digits; ++i) v = (v << 6) | next();
    n = v;
  }
  if (n > kG6MaxOrder)
    throw std::invalid_argument("from_graph6: order too large");

  MultiGraph g(static_cast<int>(n));
  int bit = 0, acc = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bit == 0) {
        acc = next();
        bit = 6;
      }
      --bit;
      if ((acc >> bit) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

std::string to_edge_list(const MultiGraph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.distinct_pair_count() << '\n';
  for (const auto& [pair, mult] : g.edges())
    out << pair.first << ' ' << pair.second << ' ' << mult << '\n';
  return out.str();
}

MultiGraph from_edge_list(const std::string& text) {
  std::istringstream in(text);
  int n, m;
  if (!(in >> n >> m))
    throw std::invalid_argument("from_edge_list: missing 'n m' header");
  if (n < 0 || m < 0)
    throw std::invalid_argument("from_edge_list: negative header value");
  MultiGraph g(n);
  std::pair<int, int> prev{-1, -1};
  for (int row = 0; row < m; ++row) {
    int u, v, mult;
    if (!(in >> u >> v >> mult))
      throw std::invalid_argument("from_edge_list: expected " +
                                  std::to_string(m) + " edge lines");
    if (u >= v)
      throw std::invalid_argument("from_edge_list: pairs must satisfy u < v");
    if (std::pair<int, int>{u, v} <= prev)
      throw std::invalid_argument("from_edge_list: pairs must be ascending");
    prev = {u, v};
    g.add_edge(u, v, mult);
  }
  return g;
}

MultiGraph read_graph(std::istream& in, GraphFormat format) {
  if (format == GraphFormat::graph6) {
    std::string line;
    do {
      if (!std::getline(in, line))
        throw std::invalid_argument("read_graph: no graph6 line found");
    } while (line.empty());
    return from_graph6(line);
  }
  std::ostringstream all;
  all << in.rdbuf();
  return from_edge_list(all.str());
}

void write_graph(std::ostream& out, const MultiGraph& g, GraphFormat format) {
  if (format == GraphFormat::graph6)
    out << to_graph6(g) << '\n';
  else
    out << to_edge_list(g);
}

}  // namespace avgconn
