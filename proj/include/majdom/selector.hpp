#ifndef MAJDOM_SELECTOR_HPP
#define MAJDOM_SELECTOR_HPP

#include <numeric>
#include <stdexcept>
#include <vector>

#include "majdom/heuristics.hpp"

namespace majdom {

struct SelectionResult {
  std::size_t best_index;
  std::vector<std::size_t> ranking;  // candidate indices, best first
};

// Picks the outcome with the narrowest certificate; ties go to the smaller
// achieved value, then to method order tree < complete < regular.
inline SelectionResult select_best(const std::vector<HeuristicOutcome>& candidates) {
  if (candidates.empty())
    throw std::invalid_argument("select_best needs at least one candidate");
  for (std::size_t i = 1; i < candidates.size(); ++i)
    if (!(candidates[i].graph == candidates[0].graph))
      throw std::invalid_argument("candidates must describe the same graph");

  std::vector<std::size_t> idx(candidates.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const HeuristicOutcome& x = candidates[a];
    const HeuristicOutcome& y = candidates[b];
    if (x.certificate.width() != y.certificate.width())
      return x.certificate.width() < y.certificate.width();
    if (x.result.gamma != y.result.gamma) return x.result.gamma < y.result.gamma;
    return static_cast<int>(x.method) < static_cast<int>(y.method);
  });
  return {idx.front(), std::move(idx)};
}

struct PosthocReport {
  bool contains = false;  // oracle gamma inside the certified interval
  int abs_error = 0;      // achieved value minus oracle gamma
  int width = 0;
};

inline PosthocReport posthoc_check(const HeuristicOutcome& outcome,
                                   const GammaResult& oracle) {
  if (oracle.witness.size() != outcome.graph.vertex_count())
    throw std::invalid_argument("oracle result does not match the outcome graph");
  const VoteTally tally = tally_votes(outcome.graph, oracle.witness);
  if (!tally.accepted || opinion_sum(oracle.witness) != oracle.gamma)
    throw std::invalid_argument("oracle result does not match the outcome graph");
  PosthocReport r;
  r.contains = outcome.certificate.contains(oracle.gamma);
  r.abs_error = outcome.result.gamma - oracle.gamma;
  r.width = outcome.certificate.width();
  return r;
}

}  // namespace majdom

#endif  // MAJDOM_SELECTOR_HPP
