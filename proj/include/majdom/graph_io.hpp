#ifndef MAJDOM_GRAPH_IO_HPP
#define MAJDOM_GRAPH_IO_HPP

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "majdom/graph.hpp"
#include "majdom/opinion.hpp"

namespace majdom {

// Graph file format:
//   line 1: "n m", then m lines "u v" (0-based endpoints).
// Opinion file format, either
//   n lines "v x" with x in {-1, 1}, or
//   a single line of n signed values.
// '#' starts a comment in both formats; whitespace is free-form.

namespace io_detail {

inline std::vector<std::string> tokens_without_comments(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) out.push_back(tok);
  }
  return out;
}

inline std::vector<std::vector<std::string>> token_lines(const std::string& text) {
  std::vector<std::vector<std::string>> out;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) toks.push_back(tok);
    if (!toks.empty()) out.push_back(std::move(toks));
  }
  return out;
}

inline long long parse_int(const std::string& tok, const char* what) {
  std::size_t pos = 0;
  long long value = 0;
  try {
    value = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("malformed ") + what + ": '" + tok + "'");
  }
  if (pos != tok.size())
    throw std::invalid_argument(std::string("malformed ") + what + ": '" + tok + "'");
  return value;
}

}  // namespace io_detail

inline Graph parse_graph(const std::string& text) {
  const auto toks = io_detail::tokens_without_comments(text);
  if (toks.size() < 2)
    throw std::invalid_argument("malformed graph header: expected 'n m'");
  const long long n = io_detail::parse_int(toks[0], "vertex count");
  const long long m = io_detail::parse_int(toks[1], "edge count");
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  if (m < 0) throw std::invalid_argument("negative edge count");
  if (static_cast<long long>(toks.size()) != 2 + 2 * m)
    throw std::invalid_argument(
        "graph body does not match header: expected " + std::to_string(2 * m) +
        " endpoint tokens, got " + std::to_string(toks.size() - 2));
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    const long long u = io_detail::parse_int(toks[2 + 2 * i], "edge endpoint");
    const long long v = io_detail::parse_int(toks[3 + 2 * i], "edge endpoint");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range: " +
                                  std::to_string(u) + " " + std::to_string(v));
    edges.push_back(make_edge(static_cast<int>(u), static_cast<int>(v)));
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

// Canonical form: header, then edges normalized (u < v) in lexicographic
// order, one per line. serialize . parse is the identity on canonical files.
inline std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

inline OpinionFunction parse_opinions(const std::string& text) {
  const auto lines = io_detail::token_lines(text);
  if (lines.empty()) throw std::invalid_argument("empty opinion file");

  // "v x" pair format: one line per vertex, each vertex exactly once.
  const int n = static_cast<int>(lines.size());
  bool pair_shape = true;
  for (const auto& l : lines) pair_shape &= (l.size() == 2);
  if (pair_shape) {
    std::vector<int> values(n, 0);
    std::vector<bool> seen(n, false);
    bool ok = true;
    for (const auto& l : lines) {
      long long v = 0, x = 0;
      try {
        v = io_detail::parse_int(l[0], "vertex");
        x = io_detail::parse_int(l[1], "opinion");
      } catch (const std::invalid_argument&) {
        ok = false;
        break;
      }
      if (v < 0 || v >= n || seen[v] || (x != 1 && x != -1)) {
        ok = false;
        break;
      }
      seen[v] = true;
      values[v] = static_cast<int>(x);
    }
    if (ok) return OpinionFunction(std::move(values));
  }

  // Fallback: flat list of n signed values.
  std::vector<int> values;
  for (const auto& l : lines)
    for (const auto& tok : l) {
      const long long x = io_detail::parse_int(tok, "opinion value");
      if (x != 1 && x != -1)
        throw std::invalid_argument("opinion value must be +1 or -1, got " +
                                    std::to_string(x));
      values.push_back(static_cast<int>(x));
    }
  return OpinionFunction(std::move(values));
}

inline std::string serialize_opinions(const OpinionFunction& f) {
  std::ostringstream out;
  for (int v = 0; v < f.size(); ++v) out << v << ' ' << f.at(v) << '\n';
  return out.str();
}

}  // namespace majdom

#endif  // MAJDOM_GRAPH_IO_HPP
