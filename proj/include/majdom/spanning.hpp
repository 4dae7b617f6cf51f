#ifndef MAJDOM_SPANNING_HPP
#define MAJDOM_SPANNING_HPP

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <vector>

#include "majdom/graph.hpp"
#include "majdom/order.hpp"

namespace majdom {

enum class TraversalStrategy { bfs, dfs };

// Spanning tree of a connected graph; neighbors are explored in ascending
// vertex priority, so the result is deterministic and relabel-equivariant.
inline Graph spanning_tree(const Graph& g, TraversalStrategy strategy, int root,
                           const VertexOrder& order = {}) {
  g.check_vertex(root);
  const int n = g.vertex_count();
  std::vector<bool> visited(n, false);
  std::vector<Edge> tree_edges;
  tree_edges.reserve(n - 1);

  auto ordered_neighbors = [&](int v) {
    std::vector<int> nb = g.neighbors(v);
    if (!order.is_identity())
      std::sort(nb.begin(), nb.end(),
                [&](int a, int b) { return order.less(a, b); });
    return nb;
  };

  if (strategy == TraversalStrategy::bfs) {
    std::queue<int> q;
    q.push(root);
    visited[root] = true;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w : ordered_neighbors(v)) {
        if (!visited[w]) {
          visited[w] = true;
          tree_edges.push_back(make_edge(v, w));
          q.push(w);
        }
      }
    }
  } else {
    std::vector<std::pair<int, int>> stack;  // (parent, vertex)
    stack.push_back({-1, root});
    while (!stack.empty()) {
      const auto [parent, v] = stack.back();
      stack.pop_back();
      if (visited[v]) continue;
      visited[v] = true;
      if (parent >= 0) tree_edges.push_back(make_edge(parent, v));
      auto nb = ordered_neighbors(v);
      for (auto it = nb.rbegin(); it != nb.rend(); ++it)
        if (!visited[*it]) stack.push_back({v, *it});
    }
  }

  if (static_cast<int>(tree_edges.size()) != n - 1)
    throw std::invalid_argument("spanning_tree requires a connected graph");
  return Graph(n, std::move(tree_edges));
}

// |E| - n + 1 for a connected graph: the number of edges whose removal
// leaves a spanning tree.
inline int cyclomatic_number(const Graph& g) {
  if (!is_connected(g))
    throw std::invalid_argument("cyclomatic_number requires a connected graph");
  return g.edge_count() - g.vertex_count() + 1;
}

}  // namespace majdom

#endif  // MAJDOM_SPANNING_HPP
