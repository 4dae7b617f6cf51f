#ifndef MAJDOM_CAMPAIGNS_HPP
#define MAJDOM_CAMPAIGNS_HPP

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "majdom/edits.hpp"
#include "majdom/exact.hpp"
#include "majdom/generate.hpp"
#include "majdom/graph_io.hpp"
#include "majdom/heuristics.hpp"
#include "majdom/selector.hpp"

namespace majdom {

// Raised when produced data fails one of its own invariants; the CLI maps
// this to exit code 1 (as opposed to 2 for usage and input errors).
struct InternalInvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::size_t pair_class_index(OpinionPairClass c) {
  return static_cast<std::size_t>(c);
}

inline const char* pair_class_name(OpinionPairClass c) {
  switch (c) {
    case OpinionPairClass::plus_plus: return "plus_plus";
    case OpinionPairClass::minus_minus: return "minus_minus";
    case OpinionPairClass::mixed: return "mixed";
  }
  throw std::logic_error("unreachable");
}

struct LemmaCampaignReport {
  int trials = 0;
  std::array<int, 3> lemma2_class_counts{};  // indexed by OpinionPairClass
  std::array<int, 3> lemma3_class_counts{};
  std::vector<std::string> violations;  // verbatim counterexample dumps

  bool ok() const { return violations.empty(); }

  std::string to_text() const {
    std::ostringstream out;
    out << "trials: " << trials << '\n';
    for (std::size_t i = 0; i < 3; ++i)
      out << "lemma2 " << pair_class_name(static_cast<OpinionPairClass>(i))
          << ": " << lemma2_class_counts[i] << '\n';
    for (std::size_t i = 0; i < 3; ++i)
      out << "lemma3 " << pair_class_name(static_cast<OpinionPairClass>(i))
          << ": " << lemma3_class_counts[i] << '\n';
    out << "violations: " << violations.size() << '\n';
    for (const std::string& v : violations) out << v;
    return out.str();
  }
};

// Samples random connected graphs plus one random edge each, computes exact
// gamma on both sides of the removal, and asserts the per-edit bounds: the
// class-free interval, then the per-class intervals keyed by the optimal
// function on the larger graph and by the one on the smaller graph.
inline LemmaCampaignReport run_lemma_campaign(int n_max, int trials,
                                              std::uint64_t seed,
                                              int oracle_cap = kDefaultOracleCap) {
  if (trials < 0) throw std::invalid_argument("trials must be nonnegative");
  if (trials > 0 && (n_max < 2 || n_max > oracle_cap))
    throw std::invalid_argument("n_max must be in [2, oracle cap]");

  LemmaCampaignReport report;
  report.trials = trials;
  Rng rng(seed);

  for (int trial = 0; trial < trials; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_below(n_max - 1));
    const double extra_p = rng.next_unit() * 0.6;
    const Graph larger = random_connected(n, extra_p, rng);
    const Edge edge =
        larger.edges()[static_cast<std::size_t>(rng.next_below(larger.edge_count()))];
    const Graph smaller = larger.with_edge_removed(edge.first, edge.second);

    const GammaResult on_larger = gamma_bruteforce(larger, {}, oracle_cap);
    const GammaResult on_smaller = gamma_bruteforce(smaller, {}, oracle_cap);
    const int diff = on_larger.gamma - on_smaller.gamma;

    const OpinionPairClass cls2 = classify_pair(on_larger.witness, edge);
    const OpinionPairClass cls3 = classify_pair(on_smaller.witness, edge);
    ++report.lemma2_class_counts[pair_class_index(cls2)];
    ++report.lemma3_class_counts[pair_class_index(cls3)];

    const DeltaBound b1 = lemma1_bound(EditKind::remove);
    const DeltaBound b2 = lemma2_bound(cls2);
    const DeltaBound b3 = lemma3_bound(cls3);
    if (b1.contains(diff) && b2.contains(diff) && b3.contains(diff)) continue;

    std::ostringstream dump;
    dump << "violation at trial " << trial << ": edge " << edge.first << ' '
         << edge.second << ", gamma(G)=" << on_larger.gamma
         << ", gamma(H)=" << on_smaller.gamma << ", diff=" << diff << '\n';
    if (!b1.contains(diff)) dump << "  lemma1 interval violated\n";
    if (!b2.contains(diff))
      dump << "  lemma2 interval violated, class " << pair_class_name(cls2) << '\n';
    if (!b3.contains(diff))
      dump << "  lemma3 interval violated, class " << pair_class_name(cls3) << '\n';
    dump << "graph G:\n" << serialize_graph(larger);
    dump << "optimal f on G: " << serialize_opinions(on_larger.witness);
    dump << "optimal f on H: " << serialize_opinions(on_smaller.witness);
    report.violations.push_back(dump.str());
  }
  return report;
}

enum class BenchGenerator { gnp, tree, complete, circulant };

inline const char* bench_generator_name(BenchGenerator g) {
  switch (g) {
    case BenchGenerator::gnp: return "gnp";
    case BenchGenerator::tree: return "tree";
    case BenchGenerator::complete: return "complete";
    case BenchGenerator::circulant: return "circulant";
  }
  throw std::logic_error("unreachable");
}

struct BenchParams {
  BenchGenerator generator = BenchGenerator::gnp;
  int n = 10;
  double p = 0.3;    // gnp only
  int degree = 4;    // circulant only
  int trials = 10;
  std::uint64_t seed = 0;
  int oracle_cap = kDefaultOracleCap;
  bool measure_time = false;  // off by default to keep outputs byte-stable
};

struct BenchRecord {
  int instance_id = 0;
  int n = 0;
  int m = 0;
  std::string method;
  int gamma_found = 0;
  int lb = 0;
  int ub = 0;
  std::optional<int> gamma_exact;
  std::optional<int> abs_error;
  int flips = 0;
  long long runtime_ms = 0;
  std::uint64_t seed = 0;
};

namespace campaign_detail {

inline Graph bench_instance(const BenchParams& params, Rng& rng) {
  switch (params.generator) {
    case BenchGenerator::tree:
      return random_tree(params.n, rng);
    case BenchGenerator::complete:
      return complete(params.n);
    case BenchGenerator::circulant:
      return circulant(params.n, params.degree);
    case BenchGenerator::gnp: {
      // heuristics need connectivity; resample within the same stream
      for (int attempt = 0; attempt < 1000; ++attempt) {
        Graph g = gnp(params.n, params.p, rng);
        if (is_connected(g)) return g;
      }
      throw std::invalid_argument(
          "gnp parameters produced no connected graph in 1000 attempts");
    }
  }
  throw std::logic_error("unreachable");
}

template <typename F>
inline long long timed_ms(bool measure, F&& run) {
  if (!measure) {
    run();
    return 0;
  }
  const auto start = std::chrono::steady_clock::now();
  run();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
}

}  // namespace campaign_detail

// One record per (instance, method): the exact oracle when the instance fits
// under the cap, then the three heuristics.
inline std::vector<BenchRecord> run_bench(const BenchParams& params) {
  if (params.trials < 0) throw std::invalid_argument("trials must be nonnegative");
  if (params.n < 1) throw std::invalid_argument("n must be positive");

  std::vector<BenchRecord> records;
  Rng rng(params.seed);
  for (int instance = 0; instance < params.trials; ++instance) {
    const Graph g = campaign_detail::bench_instance(params, rng);
    std::optional<GammaResult> oracle;
    if (g.vertex_count() <= params.oracle_cap)
      oracle = gamma_bruteforce(g, {}, params.oracle_cap);

    auto base_record = [&](const std::string& method) {
      BenchRecord r;
      r.instance_id = instance;
      r.n = g.vertex_count();
      r.m = g.edge_count();
      r.method = method;
      r.seed = params.seed;
      return r;
    };

    if (oracle) {
      BenchRecord r = base_record("exact");
      r.gamma_found = oracle->gamma;
      r.lb = oracle->gamma;
      r.ub = oracle->gamma;
      r.gamma_exact = oracle->gamma;
      r.abs_error = 0;
      records.push_back(std::move(r));
    }

    auto push_outcome = [&](const HeuristicOutcome& outcome, long long ms) {
      BenchRecord r = base_record(method_name(outcome.method));
      r.gamma_found = outcome.result.gamma;
      r.lb = outcome.certificate.lb;
      r.ub = outcome.certificate.ub;
      r.flips = outcome.repair_log.flip_count();
      r.runtime_ms = ms;
      if (oracle) {
        r.gamma_exact = oracle->gamma;
        r.abs_error = outcome.result.gamma - oracle->gamma;
      }
      records.push_back(std::move(r));
    };

    {
      std::optional<HeuristicOutcome> out;
      const long long ms = campaign_detail::timed_ms(
          params.measure_time, [&] { out = tree_heuristic(g); });
      push_outcome(*out, ms);
    }
    {
      std::optional<HeuristicOutcome> out;
      const long long ms = campaign_detail::timed_ms(
          params.measure_time, [&] { out = complete_heuristic(g); });
      push_outcome(*out, ms);
    }
    if (g.vertex_count() >= 3) {
      std::optional<HeuristicOutcome> out;
      RegularOptions opts;
      opts.oracle_cap = params.oracle_cap;
      const long long ms = campaign_detail::timed_ms(
          params.measure_time, [&] { out = regular_heuristic(g, {}, opts); });
      push_outcome(*out, ms);
    }
  }
  return records;
}

// CSV with a fixed header; checks every record's invariants first and
// throws InternalInvariantViolation instead of writing bad data.
inline std::string bench_csv(const std::vector<BenchRecord>& records) {
  for (const BenchRecord& r : records) {
    if (r.gamma_exact) {
      if (!(r.lb <= *r.gamma_exact && *r.gamma_exact <= r.ub))
        throw InternalInvariantViolation(
            "bench record violates certificate containment: instance " +
            std::to_string(r.instance_id) + " method " + r.method);
      if (r.gamma_found < *r.gamma_exact)
        throw InternalInvariantViolation(
            "bench record beats the oracle: instance " +
            std::to_string(r.instance_id) + " method " + r.method);
      if (!r.abs_error || *r.abs_error != r.gamma_found - *r.gamma_exact)
        throw InternalInvariantViolation(
            "bench record has inconsistent abs_error: instance " +
            std::to_string(r.instance_id) + " method " + r.method);
    }
  }
  std::ostringstream out;
  out << "instance_id,n,m,method,gamma_found,lb,ub,gamma_exact,abs_error,"
         "flips,runtime_ms,seed\n";
  for (const BenchRecord& r : records) {
    out << r.instance_id << ',' << r.n << ',' << r.m << ',' << r.method << ','
        << r.gamma_found << ',' << r.lb << ',' << r.ub << ',';
    if (r.gamma_exact) out << *r.gamma_exact;
    out << ',';
    if (r.abs_error) out << *r.abs_error;
    out << ',' << r.flips << ',' << r.runtime_ms << ',' << r.seed << '\n';
  }
  return out.str();
}

}  // namespace majdom

#endif  // MAJDOM_CAMPAIGNS_HPP
