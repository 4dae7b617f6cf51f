#ifndef MAJDOM_ORDER_HPP
#define MAJDOM_ORDER_HPP

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "majdom/graph.hpp"

namespace majdom {

// Vertex priority used for every deterministic tie-break (repair candidate
// choice, witness selection, edit replay order, ...). A default-constructed
// order is the natural index order. Relabeling a graph and permuting the
// order the same way keeps all pipelines equivariant, which is what the
// certificate-width invariance tests rely on.
class VertexOrder {
 public:
  VertexOrder() = default;

  // ranks[v] is the priority position of vertex v (0 = first).
  static VertexOrder from_ranks(std::vector<int> ranks) {
    std::vector<bool> seen(ranks.size(), false);
    for (int r : ranks) {
      if (r < 0 || r >= static_cast<int>(ranks.size()) || seen[r])
        throw std::invalid_argument("ranks must form a permutation");
      seen[r] = true;
    }
    VertexOrder o;
    o.ranks_ = std::move(ranks);
    return o;
  }

  bool is_identity() const { return ranks_.empty(); }

  int rank(int v) const { return ranks_.empty() ? v : ranks_[v]; }

  bool less(int u, int v) const { return rank(u) < rank(v); }

  std::pair<int, int> edge_key(const Edge& e) const {
    int a = rank(e.first);
    int b = rank(e.second);
    if (a > b) std::swap(a, b);
    return {a, b};
  }

  bool edge_less(const Edge& a, const Edge& b) const {
    return edge_key(a) < edge_key(b);
  }

  // Vertices 0..n-1 sorted by ascending rank.
  std::vector<int> sorted_vertices(int n) const {
    std::vector<int> vs(n);
    std::iota(vs.begin(), vs.end(), 0);
    if (!ranks_.empty())
      std::sort(vs.begin(), vs.end(),
                [this](int a, int b) { return rank(a) < rank(b); });
    return vs;
  }

  int min_vertex(int n) const {
    if (ranks_.empty()) return 0;
    int best = 0;
    for (int v = 1; v < n; ++v)
      if (rank(v) < rank(best)) best = v;
    return best;
  }

 private:
  std::vector<int> ranks_;
};

}  // namespace majdom

#endif  // MAJDOM_ORDER_HPP
