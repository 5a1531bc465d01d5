// degseq: degree-sequence laboratory front end.
//
// Exit codes: 0 success / verdict yes, 1 negative verdict or failed
// check, 2 usage error, 3 inconclusive or budget exhaustion.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "degseq/potential.hpp"
#include "degseq/realization.hpp"
#include "degseq/sigma.hpp"
#include "degseq/verify.hpp"

using namespace degseq;

namespace {

struct GlobalFlags {
  bool json = false;
  int workers = 0;
  int oracle_limit = kDefaultOracleLimit;
  std::optional<std::uint64_t> budget_nodes;
  std::string cache;
  std::uint64_t seed = 12345;
};

TargetSpec make_target(int m, int k, const std::string& pattern_g6) {
  if (!pattern_g6.empty())
    return TargetSpec::pattern(SimpleGraph::from_graph6(pattern_g6));
  return TargetSpec::family(m, k);
}

int cmd_check(const GlobalFlags& gf, const std::string& text) {
  DegreeSequence s = DegreeSequence::parse(text);
  GraphicalCheck chk = erdos_gallai(s);
  if (gf.json) {
    nlohmann::json j{{"sequence", s.format()}, {"graphical", chk.graphical}};
    if (!chk.graphical) j["failure_index"] = chk.failure_index;
    std::cout << j.dump() << "\n";
  } else if (chk.graphical) {
    std::cout << s.format() << " is graphical\n";
  } else if (chk.failure_index == 0) {
    std::cout << s.format() << " is not graphical (odd degree sum)\n";
  } else {
    std::cout << s.format() << " is not graphical (Erdos-Gallai fails at k="
              << chk.failure_index << ")\n";
  }
  return chk.graphical ? 0 : 1;
}

int cmd_realize(const GlobalFlags& gf, const std::string& text) {
  DegreeSequence s = DegreeSequence::parse(text);
  if (!is_graphical(s)) {
    std::cout << s.format() << " is not graphical\n";
    return 1;
  }
  SimpleGraph g = havel_hakimi_realization(s);
  if (gf.json)
    std::cout << g.to_json().dump() << "\n";
  else
    std::cout << g.to_graph6() << "\n";
  return 0;
}

int cmd_potential(const GlobalFlags& gf, const std::string& text, int m, int k,
                  const std::string& pattern_g6) {
  DegreeSequence s = DegreeSequence::parse(text);
  TargetSpec target = make_target(m, k, pattern_g6);
  Budget b;
  b.max_nodes = gf.budget_nodes;
  PotentialDecision d = is_potentially(s, target, b);
  if (gf.json) {
    std::cout << decision_to_json(s, target, d).dump() << "\n";
  } else {
    switch (d.verdict) {
      case Verdict::yes:
        std::cout << s.format() << " is potentially " << target.describe()
                  << "-graphic; witness " << d.witness->to_graph6() << "\n";
        break;
      case Verdict::no:
        std::cout << s.format() << " is not potentially " << target.describe()
                  << "-graphic\n";
        break;
      case Verdict::inconclusive:
        std::cout << "inconclusive: node budget exhausted\n";
        break;
    }
  }
  return d.verdict == Verdict::yes ? 0 : d.verdict == Verdict::no ? 1 : 3;
}

int cmd_sigma(const GlobalFlags& gf, int m, int k, int n) {
  TargetSpec target = TargetSpec::family(m, k);
  SigmaOptions so;
  so.workers = gf.workers;
  so.budget_nodes = gf.budget_nodes;
  std::optional<SigmaResult> r;
  if (!gf.cache.empty()) r = sigma_cache_lookup(gf.cache, target, n);
  try {
    if (!r) {
      r = sigma_exact(target, n, so);
      if (!gf.cache.empty()) sigma_cache_append(gf.cache, *r);
    }
  } catch (const BudgetExhausted& e) {
    std::cout << "budget exhausted: all sums above " << e.last_completed_sum
              << " decided yes (" << e.nodes_spent << " nodes)\n";
    return 3;
  }
  if (gf.json) {
    std::cout << sigma_to_json(*r).dump() << "\n";
  } else {
    std::cout << "sigma(" << target.describe() << ", " << n << ") = " << r->sigma
              << "\n";
    std::cout << "witness (maximal non-potential): " << r->witness.format()
              << "\n";
    nlohmann::json j = sigma_to_json(*r);
    if (!j["formula"].is_null())
      std::cout << "formula value " << j["formula"].get<int>() << ", conjecture "
                << j["conjecture"].get<std::string>() << "\n";
    if (r->from_cache) std::cout << "(cache hit, witness re-verified)\n";
  }
  return 0;
}

int cmd_verify_theorem1(const GlobalFlags& gf, int m, int k, int n) {
  Theorem1Report rep = verify_theorem1(m, k, n, gf.oracle_limit);
  if (gf.json) {
    nlohmann::json j{{"m", m},
                     {"k", k},
                     {"n", n},
                     {"bound", rep.bound},
                     {"degree_sequence_ok", rep.degree_sequence_ok},
                     {"sum_ok", rep.sum_ok},
                     {"no_target_ok", rep.no_target_ok}};
    if (rep.uniqueness_ok)
      j["uniqueness_ok"] = *rep.uniqueness_ok;
    else
      j["uniqueness_ok"] = nullptr;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "construction degree sequence: "
              << (rep.degree_sequence_ok ? "ok" : "FAIL") << "\n"
              << "sum equals bound - 2: " << (rep.sum_ok ? "ok" : "FAIL") << "\n"
              << "no K" << m << "-P" << k << " contained: "
              << (rep.no_target_ok ? "ok" : "FAIL") << "\n";
    if (rep.uniqueness_ok)
      std::cout << "unique realization up to isomorphism: "
                << (*rep.uniqueness_ok ? "ok" : "FAIL") << "\n";
    else
      std::cout << "unique realization: skipped (n beyond oracle limit)\n";
    std::cout << "sigma(K" << m << "-P" << k << ", " << n << ") >= " << rep.bound
              << "\n";
  }
  return rep.passed() ? 0 : 1;
}

int cmd_conjecture_scan(const GlobalFlags& gf, int m, int n,
                        std::optional<int> k_only) {
  SigmaOptions so;
  so.workers = gf.workers;
  so.budget_nodes = gf.budget_nodes;
  int klo = k_only.value_or(3), khi = k_only.value_or(m - 1);
  bool any_fail = false;
  for (int k = klo; k <= khi; ++k) {
    ConjectureResult r = check_conjecture(m, k, n, so);
    const char* v = r.verdict == ConjectureVerdict::holds
                        ? "holds"
                        : r.verdict == ConjectureVerdict::fails ? "fails"
                                                                : "inconclusive";
    if (gf.json) {
      nlohmann::json j{{"m", m},
                       {"k", k},
                       {"n", n},
                       {"formula", r.formula},
                       {"verdict", v},
                       {"in_conjecture_range", r.in_conjecture_range}};
      if (r.sigma) {
        j["sigma"] = r.sigma->sigma;
        j["witness"] = r.sigma->witness.format();
      }
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "K" << m << "-P" << k << ", n=" << n << ": " << v;
      if (r.sigma)
        std::cout << " (sigma=" << r.sigma->sigma << ", formula=" << r.formula
                  << ", witness " << r.sigma->witness.format() << ")";
      if (!r.in_conjecture_range) std::cout << " [out of conjecture range]";
      std::cout << "\n";
    }
    any_fail |= r.verdict == ConjectureVerdict::fails;
  }
  return any_fail ? 1 : 0;
}

int cmd_verify_paper(const GlobalFlags& gf, int max_n, int samples) {
  VerifyOptions vo;
  vo.max_n = max_n;
  vo.sample_count = samples;
  vo.seed = gf.seed;
  vo.workers = gf.workers;
  auto outcomes = verify_paper(vo, std::cout);
  return all_gating_passed(outcomes) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"degree-sequence laboratory: graphicality, potential "
               "subgraph decisions, and exact sigma(H, n) thresholds"};
  app.require_subcommand(1);

  GlobalFlags gf;
  std::uint64_t budget_raw = 0;
  app.add_flag("--json", gf.json, "machine-readable JSON output");
  app.add_option("--workers", gf.workers, "worker thread count (0 = auto)");
  app.add_option("--oracle-limit", gf.oracle_limit,
                 "max n for full realization enumeration");
  auto* budget_opt =
      app.add_option("--budget-nodes", budget_raw, "search node budget");
  app.add_option("--cache", gf.cache, "JSON-lines sigma cache path");
  app.add_option("--seed", gf.seed, "seed for sampled re-checks");

  std::string seq_text, pattern_g6;
  int m = 5, k = 3, n = 0;
  std::optional<int> scan_k;
  int max_n = 8, samples = 500;

  auto* check = app.add_subcommand("check", "test a sequence for graphicality");
  check->add_option("sequence", seq_text)->required();

  auto* realize = app.add_subcommand("realize", "Havel-Hakimi realization");
  realize->add_option("sequence", seq_text)->required();

  auto* potential =
      app.add_subcommand("potential", "decide potentially K_m - P_k graphic");
  potential->add_option("sequence", seq_text)->required();
  potential->add_option("-m", m, "clique order m");
  potential->add_option("-k", k, "removed path edge count k");
  potential->add_option("--pattern", pattern_g6, "explicit pattern (graph6)");

  auto* sigma = app.add_subcommand("sigma", "compute sigma(K_m - P_k, n)");
  sigma->add_option("-m", m)->required();
  sigma->add_option("-k", k)->required();
  sigma->add_option("-n", n)->required();

  auto* vt1 = app.add_subcommand("verify-theorem1", "check the lower-bound construction");
  vt1->add_option("-m", m)->required();
  vt1->add_option("-k", k)->required();
  vt1->add_option("-n", n)->required();

  auto* scan = app.add_subcommand("conjecture-scan",
                                  "compare sigma against the closed form");
  scan->add_option("-m", m)->required();
  scan->add_option("-n", n)->required();
  int scan_k_raw = -1;
  scan->add_option("-k", scan_k_raw, "single k (default: all 3..m-1)");

  auto* vp = app.add_subcommand("verify-paper", "run the full verification battery");
  vp->add_option("--max-n", max_n, "skip sigma levels above this n");
  vp->add_option("--samples", samples, "n = 7 sample size");

  // global flags may appear after the subcommand
  for (auto* sub : {check, realize, potential, sigma, vt1, scan, vp})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (budget_opt->count() > 0) gf.budget_nodes = budget_raw;
  if (scan_k_raw >= 0) scan_k = scan_k_raw;

  try {
    if (check->parsed()) return cmd_check(gf, seq_text);
    if (realize->parsed()) return cmd_realize(gf, seq_text);
    if (potential->parsed()) return cmd_potential(gf, seq_text, m, k, pattern_g6);
    if (sigma->parsed()) return cmd_sigma(gf, m, k, n);
    if (vt1->parsed()) return cmd_verify_theorem1(gf, m, k, n);
    if (scan->parsed()) return cmd_conjecture_scan(gf, m, n, scan_k);
    if (vp->parsed()) return cmd_verify_paper(gf, max_n, samples);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
