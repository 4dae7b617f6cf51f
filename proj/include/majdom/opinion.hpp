#ifndef MAJDOM_OPINION_HPP
#define MAJDOM_OPINION_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "majdom/graph.hpp"

namespace majdom {

// Assignment of +1/-1 to every vertex (the "for"/"against" opinions).
class OpinionFunction {
 public:
  explicit OpinionFunction(std::vector<int> values) {
    values_.reserve(values.size());
    for (int x : values) {
      if (x != 1 && x != -1)
        throw std::invalid_argument("opinion values must be +1 or -1, got " +
                                    std::to_string(x));
      values_.push_back(static_cast<std::int8_t>(x));
    }
    if (values_.empty())
      throw std::invalid_argument("opinion function needs at least one vertex");
  }

  static OpinionFunction all_plus(int n) {
    return OpinionFunction(std::vector<int>(n, 1));
  }

  int size() const { return static_cast<int>(values_.size()); }

  int at(int v) const {
    if (v < 0 || v >= size())
      throw std::out_of_range("vertex out of range: " + std::to_string(v));
    return values_[v];
  }

  bool is_minus(int v) const { return at(v) == -1; }

  int sum() const {
    int s = 0;
    for (std::int8_t x : values_) s += x;
    return s;
  }

  int count_minus() const {
    int c = 0;
    for (std::int8_t x : values_) c += (x == -1);
    return c;
  }

  OpinionFunction flipped_to_plus(int v) const {
    if (at(v) != -1)
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " already has opinion +1");
    OpinionFunction f = *this;
    f.values_[v] = 1;
    return f;
  }

  const std::vector<std::int8_t>& values() const { return values_; }

  bool operator==(const OpinionFunction& other) const {
    return values_ == other.values_;
  }

 private:
  std::vector<std::int8_t> values_;
};

inline int opinion_sum(const OpinionFunction& f) { return f.sum(); }

struct Configuration {
  Graph graph;
  OpinionFunction opinions;

  Configuration(Graph g, OpinionFunction f)
      : graph(std::move(g)), opinions(std::move(f)) {
    if (opinions.size() != graph.vertex_count())
      throw std::invalid_argument("opinion function size does not match graph");
  }
};

struct VoteTally {
  int yes_count = 0;
  std::vector<bool> per_vertex_votes;
  bool accepted = false;
};

// Sum of opinions over the closed neighborhood of v (v itself included).
inline int neighborhood_sum(const Graph& g, const OpinionFunction& f, int v) {
  g.check_vertex(v);
  int s = f.at(v);
  for (int w : g.neighbors(v)) s += f.at(w);
  return s;
}

inline int neighborhood_sum(const Configuration& c, int v) {
  return neighborhood_sum(c.graph, c.opinions, v);
}

inline VoteTally tally_votes(const Graph& g, const OpinionFunction& f) {
  if (f.size() != g.vertex_count())
    throw std::invalid_argument("opinion function size does not match graph");
  const int n = g.vertex_count();
  VoteTally t;
  t.per_vertex_votes.resize(n);
  for (int v = 0; v < n; ++v) {
    const bool yes = neighborhood_sum(g, f, v) > 0;
    t.per_vertex_votes[v] = yes;
    t.yes_count += yes;
  }
  t.accepted = 2 * t.yes_count > n;  // strictly more than half
  return t;
}

inline VoteTally tally_votes(const Configuration& c) {
  return tally_votes(c.graph, c.opinions);
}

inline bool strictly_majoritarian(const Graph& g, const OpinionFunction& f) {
  return tally_votes(g, f).accepted;
}

}  // namespace majdom

#endif  // MAJDOM_OPINION_HPP
