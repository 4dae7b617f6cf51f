#include <gtest/gtest.h>

#include <set>

#include "majdom/edits.hpp"
#include "majdom/exact.hpp"
#include "majdom/generate.hpp"
#include "support/naive.hpp"

using namespace majdom;

namespace {

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, std::move(edges));
}

std::vector<int> to_vec(const OpinionFunction& f) {
  std::vector<int> out(f.size());
  for (int v = 0; v < f.size(); ++v) out[v] = f.at(v);
  return out;
}

TEST(LemmaTables, PrintedConstants) {
  EXPECT_EQ(lemma1_bound(EditKind::remove), (DeltaBound{-4, 2}));
  EXPECT_EQ(lemma1_bound(EditKind::add), (DeltaBound{-2, 4}));

  EXPECT_EQ(lemma2_bound(OpinionPairClass::plus_plus), (DeltaBound{-4, 2}));
  EXPECT_EQ(lemma2_bound(OpinionPairClass::minus_minus), (DeltaBound{0, 2}));
  EXPECT_EQ(lemma2_bound(OpinionPairClass::mixed), (DeltaBound{-2, 2}));

  EXPECT_EQ(lemma3_bound(OpinionPairClass::plus_plus), (DeltaBound{-4, 0}));
  EXPECT_EQ(lemma3_bound(OpinionPairClass::minus_minus), (DeltaBound{-4, 2}));
  EXPECT_EQ(lemma3_bound(OpinionPairClass::mixed), (DeltaBound{-4, 2}));
}

TEST(LemmaTables, IntervalsComposeByAddition) {
  const DeltaBound round_trip =
      lemma1_bound(EditKind::remove) + lemma1_bound(EditKind::add);
  EXPECT_EQ(round_trip, (DeltaBound{-6, 6}));
  EXPECT_TRUE(round_trip.contains(0));
}

TEST(ClassifyPair, CoversAllThreeCases) {
  OpinionFunction f({1, 1, -1, -1});
  EXPECT_EQ(classify_pair(f, 0, 1), OpinionPairClass::plus_plus);
  EXPECT_EQ(classify_pair(f, 2, 3), OpinionPairClass::minus_minus);
  EXPECT_EQ(classify_pair(f, 1, 2), OpinionPairClass::mixed);
  EXPECT_EQ(classify_pair(f, 2, 1), OpinionPairClass::mixed);
}

TEST(Repair, RejectsInapplicableEdits) {
  const Configuration c(path_graph(3), OpinionFunction({1, 1, 1}));
  EXPECT_THROW(apply_edit_with_repair(c, add_edge_edit(0, 1)), std::invalid_argument);
  EXPECT_THROW(apply_edit_with_repair(c, remove_edge_edit(0, 2)), std::invalid_argument);
}

TEST(Repair, RejectsNonMajoritarianInput) {
  const Configuration c(path_graph(3), OpinionFunction({-1, -1, -1}));
  EXPECT_THROW(apply_edit_with_repair(c, add_edge_edit(0, 2)), std::invalid_argument);
}

TEST(Repair, AddBetweenTwoMinusEndpointsOfP5Optimum) {
  // P5 optimum (-,+,+,+,-) stays strictly majoritarian when the cycle edge
  // joins the two minus endpoints: both already vote no.
  const Configuration c(path_graph(5), OpinionFunction({-1, 1, 1, 1, -1}));
  ASSERT_TRUE(tally_votes(c).accepted);
  const auto [after, log] = apply_edit_with_repair(c, add_edge_edit(0, 4));
  EXPECT_EQ(log.flip_count(), 0);
  EXPECT_EQ(after.opinions, c.opinions);
  EXPECT_TRUE(after.graph.has_edge(0, 4));
  EXPECT_TRUE(tally_votes(after).accepted);
}

TEST(Repair, MixedRemovalWithMarginOneFlipsTheMinusEndpoint) {
  // In P5 with (+,+,-,+,-), vertex 2 votes yes with margin exactly one;
  // removing (1,2) breaks strict majority and vertex 2 flips to +1.
  const Graph p5 = path_graph(5);
  const OpinionFunction f({1, 1, -1, 1, -1});
  ASSERT_TRUE(tally_votes(p5, f).accepted);
  ASSERT_EQ(neighborhood_sum(p5, f, 2), 1);
  const Configuration c(p5, f);
  const auto [after, log] = apply_edit_with_repair(c, remove_edge_edit(1, 2));
  ASSERT_EQ(log.flip_count(), 1);
  EXPECT_EQ(log.flips[0].vertex, 2);
  EXPECT_EQ(to_vec(after.opinions), (std::vector<int>{1, 1, 1, 1, -1}));
  EXPECT_TRUE(tally_votes(after).accepted);
}

TEST(Repair, RemovalBetweenMinusPairNeverFlips) {
  Rng rng(51);
  int covered = 0;
  for (int round = 0; round < 200 && covered < 25; ++round) {
    const int n = 3 + static_cast<int>(rng.next_below(8));
    const Graph g = random_connected(n, rng.next_unit() * 0.6, rng);
    const GammaResult r = gamma_bruteforce(g);
    for (const Edge& e : g.edges()) {
      if (classify_pair(r.witness, e) != OpinionPairClass::minus_minus) continue;
      const auto [after, log] = apply_edit_with_repair(
          Configuration(g, r.witness), remove_edge_edit(e.first, e.second));
      EXPECT_EQ(log.flip_count(), 0);
      EXPECT_TRUE(tally_votes(after).accepted);
      ++covered;
      break;
    }
  }
  EXPECT_GE(covered, 10);
}

TEST(Repair, FuzzSoundness) {
  Rng rng(53);
  for (int round = 0; round < 250; ++round) {
    const int n = 2 + static_cast<int>(rng.next_below(9));
    const Graph g = random_connected(n, rng.next_unit() * 0.7, rng);

    // random strictly majoritarian function: oracle witness with some of its
    // minus entries flipped back up at random
    OpinionFunction f = gamma_bruteforce(g).witness;
    for (int v = 0; v < n; ++v)
      if (f.is_minus(v) && rng.next_below(3) == 0) f = f.flipped_to_plus(v);
    ASSERT_TRUE(tally_votes(g, f).accepted);

    // random applicable edit
    std::vector<EdgeEdit> applicable;
    for (const Edge& e : g.edges())
      applicable.push_back(remove_edge_edit(e.first, e.second));
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!g.has_edge(u, v)) applicable.push_back(add_edge_edit(u, v));
    const EdgeEdit edit = applicable[rng.next_below(applicable.size())];

    const Configuration before(g, f);
    const auto [after, log] = apply_edit_with_repair(before, edit);

    // edited graph, strictly majoritarian again (checked naively)
    EXPECT_TRUE(naive::accepted(n, after.graph.edges(), to_vec(after.opinions)));
    EXPECT_EQ(after.graph.has_edge(edit.endpoints.first, edit.endpoints.second),
              edit.kind == EditKind::add);

    // only -1 -> +1 flips, each vertex at most once, cost 2 per flip
    std::set<int> flipped;
    for (const RepairFlip& flip : log.flips) {
      EXPECT_TRUE(flipped.insert(flip.vertex).second);
      EXPECT_EQ(f.at(flip.vertex), -1);
      EXPECT_EQ(after.opinions.at(flip.vertex), 1);
      EXPECT_EQ(flip.trigger, edit);
    }
    for (int v = 0; v < n; ++v)
      if (flipped.count(v) == 0) EXPECT_EQ(after.opinions.at(v), f.at(v));
    EXPECT_EQ(opinion_sum(after.opinions),
              opinion_sum(f) + 2 * log.flip_count());

    // zero flips exactly when the edit alone kept strict majority
    const Graph edited = edit.kind == EditKind::add
                             ? g.with_edge_added(edit.endpoints.first, edit.endpoints.second)
                             : g.with_edge_removed(edit.endpoints.first, edit.endpoints.second);
    const bool unbroken = naive::accepted(n, edited.edges(), to_vec(f));
    EXPECT_EQ(log.flip_count() == 0, unbroken);
  }
}

TEST(Repair, EmpiricalLemmaBoundsOnExactValues) {
  // miniature of the validate-lemmas campaign, exercised directly
  Rng rng(57);
  for (int round = 0; round < 120; ++round) {
    const int n = 2 + static_cast<int>(rng.next_below(7));
    const Graph g = random_connected(n, rng.next_unit() * 0.6, rng);
    const Edge e = g.edges()[rng.next_below(g.edge_count())];
    const Graph h = g.with_edge_removed(e.first, e.second);
    const GammaResult rg = gamma_bruteforce(g);
    const GammaResult rh = gamma_bruteforce(h);
    const int diff = rg.gamma - rh.gamma;
    EXPECT_TRUE(lemma1_bound(EditKind::remove).contains(diff));
    EXPECT_TRUE(lemma2_bound(classify_pair(rg.witness, e)).contains(diff));
    EXPECT_TRUE(lemma3_bound(classify_pair(rh.witness, e)).contains(diff));
  }
}

}  // namespace
