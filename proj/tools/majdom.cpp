// Command-line front end: exact and heuristic solvers, the lemma validation
// campaign, the benchmark harness, and the closed-form audit for odd-order
// regular graphs.
//
// Exit codes: 0 success, 1 internal invariant violation (a produced result
// failed its own checks), 2 usage or input errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "majdom/majdom.hpp"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string witness_line(const majdom::OpinionFunction& f) {
  std::ostringstream out;
  for (int v = 0; v < f.size(); ++v) {
    if (v) out << ' ';
    out << f.at(v);
  }
  return out.str();
}

json witness_json(const majdom::OpinionFunction& f) {
  json arr = json::array();
  for (int v = 0; v < f.size(); ++v) arr.push_back(f.at(v));
  return arr;
}

json outcome_json(const majdom::HeuristicOutcome& o) {
  json j;
  j["method"] = majdom::method_name(o.method);
  j["gamma"] = o.result.gamma;
  j["yes"] = o.result.yes_count;
  j["lb"] = o.certificate.lb;
  j["ub"] = o.certificate.ub;
  j["width"] = o.certificate.width();
  j["degraded"] = o.certificate.degraded;
  j["certificate"] = o.certificate.to_record();
  j["flips"] = o.repair_log.flip_count();
  j["witness"] = witness_json(o.result.witness);
  if (o.formula_value) j["formula"] = o.formula_value->to_string();
  return j;
}

void print_outcome_text(std::ostream& out, const majdom::HeuristicOutcome& o) {
  out << "method: " << majdom::method_name(o.method) << '\n'
      << "gamma: " << o.result.gamma << '\n'
      << "yes: " << o.result.yes_count << '\n'
      << "interval: [" << o.certificate.lb << ", " << o.certificate.ub << "]\n"
      << "width: " << o.certificate.width() << '\n'
      << "certificate: " << o.certificate.to_record() << '\n'
      << "flips: " << o.repair_log.flip_count() << '\n';
  if (o.formula_value) out << "formula: " << o.formula_value->to_string() << '\n';
  out << "witness: " << witness_line(o.result.witness) << '\n';
}

struct SolveArgs {
  std::string input;
  std::string method = "auto";
  bool as_json = false;
  std::uint64_t seed = 0;
  bool median_degree = false;
  bool widen_search = false;
};

int run_solve(const SolveArgs& args) {
  const majdom::Graph g = majdom::parse_graph(read_file(args.input));
  majdom::RegularOptions regular_opts;
  regular_opts.use_median_degree = args.median_degree;
  regular_opts.widen_degree_search = args.widen_search;
  std::ostringstream out;
  json j;
  j["n"] = g.vertex_count();
  j["m"] = g.edge_count();
  j["seed"] = args.seed;
  out << "n: " << g.vertex_count() << '\n'
      << "m: " << g.edge_count() << '\n'
      << "seed: " << args.seed << '\n';

  if (args.method == "exact") {
    const majdom::GammaResult r = majdom::gamma_bruteforce(g);
    out << "method: exact\n"
        << "gamma: " << r.gamma << '\n'
        << "yes: " << r.yes_count << '\n'
        << "witness: " << witness_line(r.witness) << '\n';
    j["method"] = "exact";
    j["gamma"] = r.gamma;
    j["yes"] = r.yes_count;
    j["witness"] = witness_json(r.witness);
  } else if (args.method == "tree" || args.method == "complete" ||
             args.method == "regular") {
    majdom::HeuristicOutcome o =
        args.method == "tree"      ? majdom::tree_heuristic(g)
        : args.method == "complete" ? majdom::complete_heuristic(g)
                                    : majdom::regular_heuristic(g, {}, regular_opts);
    print_outcome_text(out, o);
    j = outcome_json(o);
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["seed"] = args.seed;
  } else if (args.method == "auto") {
    std::vector<majdom::HeuristicOutcome> candidates;
    std::vector<std::string> skipped;
    candidates.push_back(majdom::complete_heuristic(g));
    try {
      candidates.push_back(majdom::tree_heuristic(g));
    } catch (const std::invalid_argument& e) {
      skipped.push_back(std::string("tree: ") + e.what());
    }
    try {
      candidates.push_back(majdom::regular_heuristic(g));
    } catch (const std::invalid_argument& e) {
      skipped.push_back(std::string("regular: ") + e.what());
    }
    const majdom::SelectionResult sel = majdom::select_best(candidates);
    out << "candidates:\n";
    json cand_json = json::array();
    for (std::size_t idx : sel.ranking) {
      const majdom::HeuristicOutcome& o = candidates[idx];
      out << "  " << majdom::method_name(o.method)
          << ": gamma=" << o.result.gamma << " interval=[" << o.certificate.lb
          << ", " << o.certificate.ub << "] width=" << o.certificate.width()
          << " flips=" << o.repair_log.flip_count() << '\n';
      cand_json.push_back(outcome_json(o));
    }
    for (const std::string& s : skipped) out << "  skipped " << s << '\n';
    out << "selected: " << majdom::method_name(candidates[sel.best_index].method)
        << '\n';
    print_outcome_text(out, candidates[sel.best_index]);
    j["mode"] = "auto";
    j["candidates"] = cand_json;
    j["selected"] = outcome_json(candidates[sel.best_index]);
    j["skipped"] = skipped;
  } else {
    throw std::invalid_argument("unknown method: " + args.method);
  }

  if (args.as_json)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << out.str();
  return 0;
}

struct LemmaArgs {
  int n_max = 10;
  int trials = 500;
  std::uint64_t seed = 0;
};

int run_validate_lemmas(const LemmaArgs& args) {
  const majdom::LemmaCampaignReport report =
      majdom::run_lemma_campaign(args.n_max, args.trials, args.seed);
  std::cout << "seed: " << args.seed << '\n'
            << "n_max: " << args.n_max << '\n'
            << report.to_text();
  return report.ok() ? 0 : 1;
}

struct BenchArgs {
  std::string generator = "gnp";
  int n = 10;
  double p = 0.3;
  int degree = 4;
  int trials = 10;
  std::uint64_t seed = 0;
  std::string out;
  bool timings = false;
};

int run_bench(const BenchArgs& args) {
  majdom::BenchParams params;
  if (args.generator == "gnp")
    params.generator = majdom::BenchGenerator::gnp;
  else if (args.generator == "tree")
    params.generator = majdom::BenchGenerator::tree;
  else if (args.generator == "complete")
    params.generator = majdom::BenchGenerator::complete;
  else if (args.generator == "circulant")
    params.generator = majdom::BenchGenerator::circulant;
  else
    throw std::invalid_argument("unknown generator: " + args.generator);
  params.n = args.n;
  params.p = args.p;
  params.degree = args.degree;
  params.trials = args.trials;
  params.seed = args.seed;
  params.measure_time = args.timings;

  const std::vector<majdom::BenchRecord> records = majdom::run_bench(params);
  const std::string csv = majdom::bench_csv(records);
  std::ofstream out(args.out, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + args.out);
  out << csv;
  if (!out) throw std::invalid_argument("write failed: " + args.out);
  std::cout << "records: " << records.size() << '\n'
            << "seed: " << params.seed << '\n'
            << "out: " << args.out << '\n';
  return 0;
}

struct GammaRegularArgs {
  int n = 0;
  int k = 0;
  bool oracle = false;
};

int run_gamma_regular(const GammaRegularArgs& args) {
  if (args.n % 2 == 0) throw std::invalid_argument("n must be odd");
  const majdom::Rational formula = majdom::regular_formula_gamma(args.n, args.k);
  std::cout << "n: " << args.n << '\n'
            << "k: " << args.k << '\n'
            << "formula: " << formula.to_string() << '\n';
  if (!args.oracle) return 0;

  // The circulant target may not exist (n*k odd); the formula above is still
  // reported before failing.
  const majdom::Graph target = majdom::circulant(args.n, args.k);
  const majdom::GammaResult r = majdom::gamma_bruteforce(target);
  std::cout << "oracle: " << r.gamma << '\n'
            << "verdict: " << (formula == majdom::Rational(r.gamma) ? "agree" : "disagree")
            << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"strict majority domination toolkit"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "solve one instance");
  solve->add_option("--input", solve_args.input, "graph file")->required();
  solve->add_option("--method", solve_args.method,
                    "exact|tree|complete|regular|auto (default auto)")
      ->check(CLI::IsMember({"exact", "tree", "complete", "regular", "auto"}));
  solve->add_flag("--json", solve_args.as_json, "machine-readable output");
  solve->add_option("--seed", solve_args.seed, "seed echoed into the output");

  LemmaArgs lemma_args;
  CLI::App* lemmas =
      app.add_subcommand("validate-lemmas", "empirical per-edit bound campaign");
  lemmas->add_option("--n-max", lemma_args.n_max, "largest instance size");
  lemmas->add_option("--trials", lemma_args.trials, "number of sampled pairs");
  lemmas->add_option("--seed", lemma_args.seed, "rng seed");

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "heuristic-vs-oracle benchmark CSV");
  bench->add_option("--generator", bench_args.generator, "gnp|tree|complete|circulant");
  bench->add_option("--n", bench_args.n, "instance size");
  bench->add_option("--p", bench_args.p, "gnp edge probability");
  bench->add_option("--degree", bench_args.degree, "circulant degree");
  bench->add_option("--trials", bench_args.trials, "number of instances");
  bench->add_option("--seed", bench_args.seed, "rng seed");
  bench->add_option("--out", bench_args.out, "output CSV path")->required();
  bench->add_flag("--timings", bench_args.timings,
                  "measure runtimes (makes output non-reproducible)");

  GammaRegularArgs gr_args;
  CLI::App* gr = app.add_subcommand("gamma-regular",
                                    "closed-form value for odd-order regular graphs");
  gr->add_option("--n", gr_args.n, "vertex count (odd)")->required();
  gr->add_option("--k", gr_args.k, "regular degree")->required();
  gr->add_flag("--oracle", gr_args.oracle, "cross-check against brute force");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (solve->parsed()) return run_solve(solve_args);
    if (lemmas->parsed()) return run_validate_lemmas(lemma_args);
    if (bench->parsed()) return run_bench(bench_args);
    if (gr->parsed()) return run_gamma_regular(gr_args);
  } catch (const majdom::InternalInvariantViolation& e) {
    std::cerr << "internal invariant violation: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
