#ifndef MAJDOM_TESTS_SUPPORT_NAIVE_HPP
#define MAJDOM_TESTS_SUPPORT_NAIVE_HPP

// Test-side reference implementations. Deliberately written against raw
// edge lists so they share no code path with the library they check.

#include <cstdint>
#include <utility>
#include <vector>

namespace naive {

using EdgeList = std::vector<std::pair<int, int>>;

inline int neighborhood_sum(const EdgeList& edges, const std::vector<int>& f,
                            int v) {
  int s = f[v];
  for (const auto& [a, b] : edges) {
    if (a == v) s += f[b];
    if (b == v) s += f[a];
  }
  return s;
}

inline int yes_count(int n, const EdgeList& edges, const std::vector<int>& f) {
  int yes = 0;
  for (int v = 0; v < n; ++v) yes += neighborhood_sum(edges, f, v) > 0;
  return yes;
}

inline bool accepted(int n, const EdgeList& edges, const std::vector<int>& f) {
  return 2 * yes_count(n, edges, f) > n;
}

struct BruteResult {
  int gamma = 0;
  std::vector<int> witness;
  int yes = 0;
};

// Plain enumeration in lexicographic order (vertex 0 most significant, -1
// before +1); keeping the first minimizer found yields the
// lexicographically least optimal witness.
inline BruteResult brute_force(int n, const EdgeList& edges) {
  BruteResult best;
  bool have = false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<int> f(n);
    int sum = 0;
    for (int v = 0; v < n; ++v) {
      f[v] = ((mask >> (n - 1 - v)) & 1) ? 1 : -1;
      sum += f[v];
    }
    const int yes = yes_count(n, edges, f);
    if (2 * yes <= n) continue;
    if (!have || sum < best.gamma) {
      best = {sum, f, yes};
      have = true;
    }
  }
  return best;
}

}  // namespace naive

#endif  // MAJDOM_TESTS_SUPPORT_NAIVE_HPP
