#ifndef MAJDOM_GENERATE_HPP
#define MAJDOM_GENERATE_HPP

#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "majdom/graph.hpp"

namespace majdom {

// Seeded generator wrapper. mt19937_64 output is specified bit-for-bit by the
// standard; bounded sampling is done by rejection here because the standard
// distributions are not portable across library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, bound), unbiased.
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("next_below needs bound > 0");
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t x, r;
    do {
      x = engine_();
      r = x % bound;
    } while (x - r > max - (bound - 1));
    return r;
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_unit() { return (engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

inline Graph complete(int n) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

// Circulant graph: vertex v is joined to v +- o (mod n) for o = 1..degree/2;
// an odd degree additionally joins antipodal pairs, which needs even n.
// Degree-regular by construction, connected for degree >= 2.
inline Graph circulant(int n, int degree) {
  if (n < 1) throw std::invalid_argument("circulant needs n >= 1");
  if (degree < 1 || degree >= n)
    throw std::invalid_argument("circulant degree must satisfy 1 <= degree < n");
  if (n % 2 == 1 && degree % 2 == 1)
    throw std::invalid_argument("no regular graph exists: n * degree is odd");
  std::vector<Edge> edges;
  const int half = degree / 2;
  for (int o = 1; o <= half; ++o)
    for (int v = 0; v < n; ++v) edges.push_back(make_edge(v, (v + o) % n));
  if (degree % 2 == 1)
    for (int v = 0; v < n / 2; ++v) edges.push_back(make_edge(v, v + n / 2));
  return Graph(n, std::move(edges));
}

inline Graph gnp(int n, double p, Rng& rng) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("gnp needs p in [0, 1]");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_unit() < p) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

inline Graph gnp(int n, double p, std::uint64_t seed) {
  Rng rng(seed);
  return gnp(n, p, rng);
}

// Uniform random labeled tree via Pruefer decoding.
inline Graph random_tree(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("tree needs n >= 1");
  if (n == 1) return Graph(1);
  if (n == 2) return Graph(2, {{0, 1}});
  std::vector<int> seq(n - 2);
  for (int& s : seq) s = static_cast<int>(rng.next_below(n));
  std::vector<int> degree(n, 1);
  for (int s : seq) ++degree[s];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (int s : seq) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.push_back(make_edge(leaf, s));
    if (--degree[s] == 1) leaves.insert(s);
  }
  const int a = *leaves.begin();
  const int b = *std::next(leaves.begin());
  edges.push_back(make_edge(a, b));
  return Graph(n, std::move(edges));
}

inline Graph random_tree(int n, std::uint64_t seed) {
  Rng rng(seed);
  return random_tree(n, rng);
}

// Random connected graph: a random tree plus each remaining pair
// independently with probability extra_p. One draw, always connected.
inline Graph random_connected(int n, double extra_p, Rng& rng) {
  Graph t = random_tree(n, rng);
  std::vector<Edge> edges = t.edges();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!t.has_edge(u, v) && rng.next_unit() < extra_p)
        edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

}  // namespace majdom

#endif  // MAJDOM_GENERATE_HPP
