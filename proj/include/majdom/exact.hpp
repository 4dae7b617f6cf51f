#ifndef MAJDOM_EXACT_HPP
#define MAJDOM_EXACT_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "majdom/graph.hpp"
#include "majdom/opinion.hpp"
#include "majdom/order.hpp"

namespace majdom {

struct GammaResult {
  int gamma = 0;
  OpinionFunction witness;
  int yes_count = 0;
  bool optimal = false;  // true for exact solvers, false for heuristics
};

inline constexpr int kDefaultOracleCap = 20;

// Exhaustive oracle: enumerates all 2^n opinion functions in Gray-code order
// with incremental closed-neighborhood sums. Returns the minimum opinion sum
// over strictly majoritarian functions and the lexicographically least
// witness among minimizers (-1 before +1, vertices in priority order).
inline GammaResult gamma_bruteforce(const Graph& g, const VertexOrder& order = {},
                                    int cap = kDefaultOracleCap) {
  const int n = g.vertex_count();
  if (cap < 1 || cap > 62) throw std::invalid_argument("oracle cap must be in [1, 62]");
  if (n > cap)
    throw std::invalid_argument("oracle cap exceeded: n=" + std::to_string(n) +
                                ", cap=" + std::to_string(cap));

  const std::vector<int> scan = order.sorted_vertices(n);
  std::vector<std::int8_t> f(n, 1);
  std::vector<std::int8_t> best(f);
  std::vector<int> sums(n);
  for (int v = 0; v < n; ++v) sums[v] = g.degree(v) + 1;
  int yes = n;  // the all-plus function is always accepted
  int minus_count = 0;
  int best_gamma = n;
  int best_yes = n;

  auto lex_less = [&](const std::vector<std::int8_t>& a,
                      const std::vector<std::int8_t>& b) {
    for (int v : scan)
      if (a[v] != b[v]) return a[v] < b[v];
    return false;
  };

  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    const int w = std::countr_zero(i);
    const std::int8_t nf = static_cast<std::int8_t>(-f[w]);
    f[w] = nf;
    const int delta = 2 * nf;
    minus_count += (nf == -1) ? 1 : -1;
    int old = sums[w];
    sums[w] += delta;
    yes += (sums[w] > 0) - (old > 0);
    for (int u : g.neighbors(w)) {
      old = sums[u];
      sums[u] += delta;
      yes += (sums[u] > 0) - (old > 0);
    }
    if (2 * yes > n) {
      const int value = n - 2 * minus_count;
      if (value < best_gamma || (value == best_gamma && lex_less(f, best))) {
        best_gamma = value;
        best = f;
        best_yes = yes;
      }
    }
  }

  return {best_gamma, OpinionFunction(std::vector<int>(best.begin(), best.end())),
          best_yes, true};
}

namespace exact_detail {

// Rooted-tree dynamic program. For each vertex v and pair (own opinion,
// parent opinion) it records, per achievable yes-count in v's subtree, the
// minimum opinion sum of that subtree, with v's own vote already resolved.
// While children are merged one at a time the running sum of the children's
// own opinions is carried as an extra dimension; it is folded into v's vote
// once the last child is in, so the tables handed upward stay small.
// Opinions can be clamped per vertex, which is how witnesses are extracted.
class TreeDp {
 public:
  TreeDp(const Graph& tree, const VertexOrder& order)
      : t_(tree), n_(tree.vertex_count()) {
    root_ = order.min_vertex(n_);
    parent_.assign(n_, -1);
    children_.assign(n_, {});
    std::vector<int> stack{root_};
    std::vector<bool> seen(n_, false);
    seen[root_] = true;
    std::vector<int> preorder;
    preorder.reserve(n_);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      preorder.push_back(v);
      std::vector<int> nb = t_.neighbors(v);
      std::sort(nb.begin(), nb.end(),
                [&](int a, int b) { return order.less(a, b); });
      for (int w : nb) {
        if (!seen[w]) {
          seen[w] = true;
          parent_[w] = v;
          children_[v].push_back(w);
          stack.push_back(w);
        }
      }
    }
    postorder_.assign(preorder.rbegin(), preorder.rend());
    subtree_size_.assign(n_, 1);
    for (int v : postorder_)
      for (int c : children_[v]) subtree_size_[v] += subtree_size_[c];
  }

  // Minimum strictly majoritarian opinion sum subject to the clamps
  // (0 = free, otherwise the forced opinion), or nullopt if none exists.
  std::optional<int> min_gamma(const std::vector<std::int8_t>& clamp) const {
    constexpr int kNone = std::numeric_limits<int>::min();
    std::vector<std::array<std::array<std::vector<int>, 2>, 2>> fin(n_);
    std::array<std::vector<int>, 2> root_fin;

    for (int v : postorder_) {
      const int sz = subtree_size_[v];
      for (int ai = 0; ai < 2; ++ai) {
        const int a = ai ? 1 : -1;
        if (clamp[v] != 0 && clamp[v] != a) continue;

        // cur is indexed by (children yes-count, children opinion sum S):
        // slot y * (2j+1) + (S+j) after j children, holding the minimum
        // total opinion sum of the merged child subtrees.
        std::vector<int> cur{0};
        int accum = 0;
        int j = 0;
        for (int c : children_[v]) {
          const int csz = subtree_size_[c];
          const int old_width = 2 * j + 1;
          const int new_width = 2 * (j + 1) + 1;
          std::vector<int> nxt((accum + csz + 1) * new_width, kNone);
          for (int y = 0; y <= accum; ++y) {
            for (int S = -j; S <= j; ++S) {
              const int cursum = cur[y * old_width + (S + j)];
              if (cursum == kNone) continue;
              for (int bi = 0; bi < 2; ++bi) {
                const int b = bi ? 1 : -1;
                const auto& ct = fin[c][bi][ai];
                if (ct.empty()) continue;
                for (int yc = 0; yc <= csz; ++yc) {
                  if (ct[yc] == kNone) continue;
                  int& slot = nxt[(y + yc) * new_width + (S + b + j + 1)];
                  const int cand = cursum + ct[yc];
                  if (slot == kNone || cand < slot) slot = cand;
                }
              }
            }
          }
          cur = std::move(nxt);
          accum += csz;
          ++j;
        }

        const int width = 2 * j + 1;
        if (v == root_) {
          root_fin[ai].assign(sz + 1, kNone);
          for (int y = 0; y <= accum; ++y)
            for (int S = -j; S <= j; ++S) {
              const int cursum = cur[y * width + (S + j)];
              if (cursum == kNone) continue;
              const int vote = (a + S > 0) ? 1 : 0;
              int& slot = root_fin[ai][y + vote];
              const int cand = cursum + a;
              if (slot == kNone || cand < slot) slot = cand;
            }
        } else {
          for (int pi = 0; pi < 2; ++pi) {
            const int p = pi ? 1 : -1;
            auto& table = fin[v][ai][pi];
            table.assign(sz + 1, kNone);
            for (int y = 0; y <= accum; ++y)
              for (int S = -j; S <= j; ++S) {
                const int cursum = cur[y * width + (S + j)];
                if (cursum == kNone) continue;
                const int vote = (a + p + S > 0) ? 1 : 0;
                int& slot = table[y + vote];
                const int cand = cursum + a;
                if (slot == kNone || cand < slot) slot = cand;
              }
          }
        }
      }
    }

    std::optional<int> best;
    for (int ai = 0; ai < 2; ++ai) {
      if (root_fin[ai].empty()) continue;
      for (int y = 0; y <= n_; ++y) {
        if (2 * y <= n_) continue;
        const int s = root_fin[ai][y];
        if (s != kNone && (!best || s < *best)) best = s;
      }
    }
    return best;
  }

 private:
  const Graph& t_;
  int n_;
  int root_;
  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
  std::vector<int> postorder_;
  std::vector<int> subtree_size_;
};

}  // namespace exact_detail

// Polynomial solver for trees. The optimum value comes from one DP pass;
// the witness is the lexicographically least optimal function (priority
// order, -1 before +1), obtained by clamping one vertex at a time and
// re-running the DP, so the output is deterministic and relabel-equivariant.
inline GammaResult gamma_tree(const Graph& t, const VertexOrder& order = {}) {
  if (!is_tree(t)) throw std::invalid_argument("gamma_tree requires a tree");
  const int n = t.vertex_count();
  exact_detail::TreeDp dp(t, order);
  std::vector<std::int8_t> clamp(n, 0);
  const std::optional<int> base = dp.min_gamma(clamp);
  if (!base) throw std::logic_error("tree DP found no feasible function");
  const int gamma = *base;
  for (int v : order.sorted_vertices(n)) {
    clamp[v] = -1;
    const std::optional<int> r = dp.min_gamma(clamp);
    if (!r || *r != gamma) clamp[v] = 1;
  }
  OpinionFunction witness(std::vector<int>(clamp.begin(), clamp.end()));
  const VoteTally tally = tally_votes(t, witness);
  if (!tally.accepted || opinion_sum(witness) != gamma)
    throw std::logic_error("tree DP produced an inconsistent witness");
  return {gamma, std::move(witness), tally.yes_count, true};
}

}  // namespace majdom

#endif  // MAJDOM_EXACT_HPP
