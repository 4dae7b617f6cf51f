#include <gtest/gtest.h>

#include "majdom/certificates.hpp"
#include "majdom/heuristics.hpp"
#include "majdom/selector.hpp"

using namespace majdom;

namespace {

GammaResult exact_base(int gamma, int n) {
  std::vector<int> values(n, 1);
  for (int v = 0; v < (n - gamma) / 2; ++v) values[v] = -1;
  OpinionFunction f(values);
  return {gamma, f, n, true};
}

TEST(TreeCertificate, Arithmetic) {
  const GammaResult base = exact_base(1, 5);
  const SimilarityCertificate zero = certificate_tree(base, 0, 0, 0);
  EXPECT_EQ(zero.lb, 1);
  EXPECT_EQ(zero.ub, 1);
  EXPECT_EQ(zero.width(), 0);

  const SimilarityCertificate one = certificate_tree(base, 1, 0, 1);
  EXPECT_EQ(one.lb, -3);
  EXPECT_EQ(one.ub, 3);

  const SimilarityCertificate two = certificate_tree(base, 2, 2, 0);
  EXPECT_EQ(two.lb, -7);
  EXPECT_EQ(two.ub, 1);
  EXPECT_EQ(two.width(), 4 * 2 + 2 * 0);

  EXPECT_THROW(certificate_tree(base, 2, 1, 0), std::invalid_argument);
  GammaResult heuristic_base = base;
  heuristic_base.optimal = false;
  EXPECT_THROW(certificate_tree(heuristic_base, 0, 0, 0), std::invalid_argument);
}

TEST(CompleteCertificate, Arithmetic) {
  const SimilarityCertificate zero = certificate_complete(1, 0, 0, 0);
  EXPECT_EQ(zero.lb, 1);
  EXPECT_EQ(zero.ub, 1);

  const SimilarityCertificate one = certificate_complete(1, 1, 0, 0);
  EXPECT_EQ(one.lb, -1);
  EXPECT_EQ(one.ub, 5);

  const SimilarityCertificate mix = certificate_complete(2, 0, 2, 1);
  EXPECT_EQ(mix.lb, -4);
  EXPECT_EQ(mix.ub, 4);
  EXPECT_EQ(mix.width(), 2 * 3 + 4 * 0 + 2 * 1);

  EXPECT_THROW(certificate_complete(1, -1, 0, 0), std::invalid_argument);
}

TEST(RegularCertificate, Arithmetic) {
  const SimilarityCertificate zero = certificate_regular(1, 0, 0, true, 5);
  EXPECT_EQ(zero.lb, 1);
  EXPECT_EQ(zero.ub, 1);

  const SimilarityCertificate rem = certificate_regular(1, 1, 0, true, 5);
  EXPECT_EQ(rem.lb, -3);
  EXPECT_EQ(rem.ub, 3);

  const SimilarityCertificate add = certificate_regular(1, 0, 1, true, 5);
  EXPECT_EQ(add.lb, -1);
  EXPECT_EQ(add.ub, 5);
  EXPECT_EQ(add.width(), 6 * 1);

  // a non-exact base only certifies the upper side
  const SimilarityCertificate degraded = certificate_regular(3, 1, 0, false, 9);
  EXPECT_TRUE(degraded.degraded);
  EXPECT_EQ(degraded.lb, -9);
  EXPECT_EQ(degraded.ub, 5);
}

TEST(Certificate, RecordFormat) {
  const SimilarityCertificate c = certificate_complete(2, 1, 2, 3);
  EXPECT_EQ(c.to_record(), "complete 2 6 1 2 3 -10 12 22 0");
  const SimilarityCertificate d = certificate_regular(1, 0, 0, false, 7);
  EXPECT_EQ(d.to_record(), "regular 1 0 0 0 0 -7 1 8 1");
}

HeuristicOutcome fake_outcome(const Graph& g, Method method, int gamma, int width) {
  GammaResult res{gamma, OpinionFunction::all_plus(g.vertex_count()),
                  g.vertex_count(), false};
  SimilarityCertificate cert;
  cert.method = method;
  cert.base_gamma = gamma;
  cert.lb = gamma - width;
  cert.ub = gamma;
  return {method, g, std::move(res), cert, {}, std::nullopt};
}

TEST(SelectBest, RanksByWidthThenValueThenMethod) {
  const Graph g = complete(3);
  {
    const std::vector<HeuristicOutcome> cands{
        fake_outcome(g, Method::tree, 3, 0),
        fake_outcome(g, Method::complete, 1, 12),
        fake_outcome(g, Method::regular, 1, 8)};
    const SelectionResult sel = select_best(cands);
    EXPECT_EQ(sel.best_index, 0u);
    EXPECT_EQ(sel.ranking, (std::vector<std::size_t>{0, 2, 1}));
  }
  {
    const std::vector<HeuristicOutcome> cands{
        fake_outcome(g, Method::tree, 3, 4),
        fake_outcome(g, Method::complete, 1, 4),
        fake_outcome(g, Method::regular, 3, 4)};
    EXPECT_EQ(select_best(cands).best_index, 1u);  // smaller achieved value
  }
  {
    const std::vector<HeuristicOutcome> cands{
        fake_outcome(g, Method::regular, 1, 4),
        fake_outcome(g, Method::complete, 1, 4),
        fake_outcome(g, Method::tree, 1, 4)};
    EXPECT_EQ(select_best(cands).best_index, 2u);  // method order tree first
  }
  EXPECT_THROW(select_best({}), std::invalid_argument);
  const std::vector<HeuristicOutcome> mismatched{
      fake_outcome(g, Method::tree, 1, 0), fake_outcome(complete(4), Method::tree, 2, 0)};
  EXPECT_THROW(select_best(mismatched), std::invalid_argument);
}

TEST(Posthoc, ReportsContainmentAndError) {
  const Graph g = complete(5);
  const HeuristicOutcome o = complete_heuristic(g);
  const GammaResult oracle = gamma_bruteforce(g);
  const PosthocReport r = posthoc_check(o, oracle);
  EXPECT_TRUE(r.contains);
  EXPECT_EQ(r.abs_error, 0);
  EXPECT_EQ(r.width, 0);
}

TEST(Posthoc, RejectsMismatchedOracle) {
  const HeuristicOutcome o = complete_heuristic(complete(5));
  const GammaResult other = gamma_bruteforce(complete(4));
  EXPECT_THROW(posthoc_check(o, other), std::invalid_argument);
  // same size but wrong graph: witness of K5 is not majoritarian on C5 here
  GammaResult forged = gamma_bruteforce(complete(5));
  forged.gamma += 2;  // no longer matches its own witness
  EXPECT_THROW(posthoc_check(o, forged), std::invalid_argument);
}

TEST(Posthoc, FlagsWouldBeTheoremViolation) {
  const Graph g = complete(5);
  HeuristicOutcome o = complete_heuristic(g);
  o.certificate.lb = 2;  // forge an interval that misses gamma = 1
  o.certificate.ub = 3;
  const PosthocReport r = posthoc_check(o, gamma_bruteforce(g));
  EXPECT_FALSE(r.contains);
}

}  // namespace
