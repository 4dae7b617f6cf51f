#ifndef MAJDOM_EDITS_HPP
#define MAJDOM_EDITS_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "majdom/graph.hpp"
#include "majdom/opinion.hpp"
#include "majdom/order.hpp"

namespace majdom {

enum class EditKind { add, remove };

struct EdgeEdit {
  EditKind kind;
  Edge endpoints;

  bool operator==(const EdgeEdit&) const = default;
};

using EditScript = std::vector<EdgeEdit>;

inline EdgeEdit add_edge_edit(int u, int v) {
  return {EditKind::add, make_edge(u, v)};
}
inline EdgeEdit remove_edge_edit(int u, int v) {
  return {EditKind::remove, make_edge(u, v)};
}

// Opinion combination of the two endpoints of an edited edge.
enum class OpinionPairClass { plus_plus, minus_minus, mixed };

inline OpinionPairClass classify_pair(const OpinionFunction& f, int u, int v) {
  const int fu = f.at(u);
  const int fv = f.at(v);
  if (fu == 1 && fv == 1) return OpinionPairClass::plus_plus;
  if (fu == -1 && fv == -1) return OpinionPairClass::minus_minus;
  return OpinionPairClass::mixed;
}

inline OpinionPairClass classify_pair(const OpinionFunction& f, const Edge& e) {
  return classify_pair(f, e.first, e.second);
}

// Bounds on gamma(before) - gamma(after) for a single edit. Intervals
// compose by coordinate-wise addition across edit sequences.
struct DeltaBound {
  int lower = 0;
  int upper = 0;

  bool operator==(const DeltaBound&) const = default;

  DeltaBound operator+(const DeltaBound& o) const {
    return {lower + o.lower, upper + o.upper};
  }

  bool contains(int x) const { return lower <= x && x <= upper; }
};

// No knowledge of opinions: removal gives [-4, 2]; reading the same
// inequality backwards, an addition gives [-2, 4].
inline DeltaBound lemma1_bound(EditKind kind = EditKind::remove) {
  return kind == EditKind::remove ? DeltaBound{-4, 2} : DeltaBound{-2, 4};
}

// Removal of edge uv, endpoints classified by an optimal function on the
// larger graph (the one still containing uv).
inline DeltaBound lemma2_bound(OpinionPairClass cls) {
  switch (cls) {
    case OpinionPairClass::plus_plus: return {-4, 2};
    case OpinionPairClass::minus_minus: return {0, 2};
    case OpinionPairClass::mixed: return {-2, 2};
  }
  throw std::logic_error("unreachable");
}

// Removal of edge uv, endpoints classified by an optimal function on the
// smaller graph (uv already absent).
inline DeltaBound lemma3_bound(OpinionPairClass cls) {
  switch (cls) {
    case OpinionPairClass::plus_plus: return {-4, 0};
    case OpinionPairClass::minus_minus: return {-4, 2};
    case OpinionPairClass::mixed: return {-4, 2};
  }
  throw std::logic_error("unreachable");
}

struct RepairFlip {
  int vertex;
  EdgeEdit trigger;
};

// Ordered -1 -> +1 flips performed to restore strict majority. Each flip
// raises the opinion sum by exactly 2.
struct RepairLog {
  std::vector<RepairFlip> flips;

  int flip_count() const { return static_cast<int>(flips.size()); }

  void append(const RepairLog& other) {
    flips.insert(flips.end(), other.flips.begin(), other.flips.end());
  }
};

// Applies one edge edit to a strictly majoritarian configuration and flips
// -1 opinions to +1 until strict majority holds again. Candidates, in order:
// a -1 endpoint of the edited edge, then a -1 vertex in the closed
// neighborhood of an endpoint that lost its yes vote, then any -1 vertex;
// ties go to the lowest-priority-rank vertex. If the edit does not break
// strict majority, the opinions are returned unchanged.
inline std::pair<Configuration, RepairLog> apply_edit_with_repair(
    const Configuration& c, const EdgeEdit& edit, const VertexOrder& order = {}) {
  const auto [u, v] = edit.endpoints;
  const VoteTally before = tally_votes(c);
  if (!before.accepted)
    throw std::invalid_argument(
        "apply_edit_with_repair requires a strictly majoritarian configuration");

  Graph g = edit.kind == EditKind::add ? c.graph.with_edge_added(u, v)
                                       : c.graph.with_edge_removed(u, v);
  std::vector<int> f(c.opinions.values().begin(), c.opinions.values().end());
  RepairLog log;

  auto pick_candidate = [&](const VoteTally& now) -> int {
    // (1) -1 endpoint of the edited edge
    int best = -1;
    for (int w : {u, v})
      if (f[w] == -1 && (best == -1 || order.less(w, best))) best = w;
    if (best != -1) return best;
    // (2) -1 vertex next to an endpoint that lost its yes vote
    std::vector<int> endpoints{u, v};
    std::sort(endpoints.begin(), endpoints.end(),
              [&](int a, int b) { return order.less(a, b); });
    for (int w : endpoints) {
      if (!before.per_vertex_votes[w] || now.per_vertex_votes[w]) continue;
      for (int x : g.neighbors(w))
        if (f[x] == -1 && (best == -1 || order.less(x, best))) best = x;
      if (best != -1) return best;
    }
    // (3) any -1 vertex
    for (int x = 0; x < g.vertex_count(); ++x)
      if (f[x] == -1 && (best == -1 || order.less(x, best))) best = x;
    return best;
  };

  OpinionFunction fo(f);
  while (true) {
    const VoteTally now = tally_votes(g, fo);
    if (now.accepted) break;
    const int cand = pick_candidate(now);
    if (cand < 0) throw std::logic_error("no repair candidate left");
    f[cand] = 1;
    fo = OpinionFunction(f);
    log.flips.push_back({cand, edit});
  }
  return {Configuration(std::move(g), std::move(fo)), std::move(log)};
}

}  // namespace majdom

#endif  // MAJDOM_EDITS_HPP
