#ifndef MAJDOM_GRAPH_HPP
#define MAJDOM_GRAPH_HPP

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace majdom {

// Vertices are dense labels 0..n-1. Edges are stored normalized (u < v) and
// lexicographically sorted, so serialization is byte-stable. Every vertex
// carries an implicit self-loop in the voting semantics; loops are never
// stored as edges.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) {
  if (u == v)
    throw std::invalid_argument("self-loops are implicit, not stored: vertex " +
                                std::to_string(u));
  return u < v ? Edge{u, v} : Edge{v, u};
}

class Graph {
 public:
  explicit Graph(int n) : Graph(n, std::vector<Edge>{}) {}

  Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw std::invalid_argument("graph needs at least one vertex");
    for (Edge& e : edges_) e = make_edge(e.first, e.second);
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const auto [u, v] = edges_[i];
      if (u < 0 || v >= n_)
        throw std::invalid_argument("edge endpoint out of range: " +
                                    std::to_string(u) + " " + std::to_string(v));
      if (i > 0 && edges_[i] == edges_[i - 1])
        throw std::invalid_argument("duplicate edge: " + std::to_string(u) +
                                    " " + std::to_string(v));
    }
    adj_.assign(n_, {});
    for (const auto [u, v] : edges_) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  int degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
  }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  Graph with_edge_added(int u, int v) const {
    const Edge e = make_edge(u, v);
    check_vertex(e.first);
    check_vertex(e.second);
    if (has_edge(u, v))
      throw std::invalid_argument("edge already present: " + std::to_string(u) +
                                  " " + std::to_string(v));
    std::vector<Edge> edges = edges_;
    edges.push_back(e);
    return Graph(n_, std::move(edges));
  }

  Graph with_edge_removed(int u, int v) const {
    const Edge e = make_edge(u, v);
    if (!has_edge(u, v))
      throw std::invalid_argument("edge not present: " + std::to_string(u) +
                                  " " + std::to_string(v));
    std::vector<Edge> edges;
    edges.reserve(edges_.size() - 1);
    for (const Edge& x : edges_)
      if (x != e) edges.push_back(x);
    return Graph(n_, std::move(edges));
  }

  // New graph where vertex v becomes perm[v]; perm must be a permutation of
  // 0..n-1.
  Graph relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
      throw std::invalid_argument("permutation size mismatch");
    std::vector<bool> seen(n_, false);
    for (int p : perm) {
      if (p < 0 || p >= n_ || seen[p])
        throw std::invalid_argument("not a permutation");
      seen[p] = true;
    }
    std::vector<Edge> edges;
    edges.reserve(edges_.size());
    for (const auto [u, v] : edges_) edges.push_back(make_edge(perm[u], perm[v]));
    return Graph(n_, std::move(edges));
  }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw std::out_of_range("vertex out of range: " + std::to_string(v));
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

inline bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<bool> visited(n, false);
  std::queue<int> q;
  q.push(0);
  visited[0] = true;
  int reached = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w : g.neighbors(v)) {
      if (!visited[w]) {
        visited[w] = true;
        ++reached;
        q.push(w);
      }
    }
  }
  return reached == n;
}

inline bool is_tree(const Graph& g) {
  return g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

}  // namespace majdom

#endif  // MAJDOM_GRAPH_HPP
