#include "degseq/sigma.hpp"

#include <omp.h>

#include <atomic>
#include <chrono>
#include <fstream>
#include <stdexcept>

#include "degseq/realization.hpp"

namespace degseq {

int lower_bound_formula(int m, int n) {
  if (m < 4 || n < m)
    throw std::invalid_argument("bound formula requires n >= m >= 4");
  return (2 * m - 6) * n - (m - 3) * (m - 2) + 2;
}

namespace {

// Decide exactly; a budgeted first pass may defer, the retry never does.
bool decide_yes(const DegreeSequence& s, const TargetSpec& target,
                const SigmaOptions& opts, std::uint64_t& nodes) {
  Budget b;
  b.max_nodes = opts.budget_nodes;
  PotentialDecision d = is_potentially(s, target, b);
  nodes += d.stats.nodes_expanded;
  if (d.verdict == Verdict::inconclusive) {
    d = is_potentially(s, target, Budget{});
    nodes += d.stats.nodes_expanded;
  }
  return d.verdict == Verdict::yes;
}

SigmaResult sigma_scan(const TargetSpec& target, int n, const SigmaOptions& opts,
                       bool parallel) {
  SimpleGraph t = target.build();
  if (n < t.order())
    throw std::invalid_argument("threshold undefined: n < |V(target)|");
  if (t.edge_count() == 0)
    throw std::invalid_argument("target has no edges; every sequence qualifies");

  const auto t0 = std::chrono::steady_clock::now();
  std::uint64_t checked = 0;
  std::uint64_t total_nodes = 0;
  const int nthreads = opts.workers > 0 ? opts.workers : omp_get_max_threads();

  for (int level = n * (n - 1); level >= 0; level -= 2) {
    auto seqs = graphical_sequences_at_sum(n, level);
    std::vector<char> yes(seqs.size(), 1);
    if (parallel) {
      std::atomic<std::uint64_t> nodes{0};
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
      for (long i = 0; i < static_cast<long>(seqs.size()); ++i) {
        std::uint64_t local = 0;
        yes[static_cast<size_t>(i)] =
            decide_yes(seqs[static_cast<size_t>(i)], target, opts, local);
        nodes.fetch_add(local, std::memory_order_relaxed);
      }
      total_nodes += nodes.load();
    } else {
      for (size_t i = 0; i < seqs.size(); ++i)
        yes[i] = decide_yes(seqs[i], target, opts, total_nodes);
    }
    checked += seqs.size();
    for (size_t i = 0; i < seqs.size(); ++i) {
      if (!yes[i]) {
        // enumeration is lex-descending, so the first no is the witness
        const auto t1 = std::chrono::steady_clock::now();
        return SigmaResult{
            target,
            n,
            level + 2,
            seqs[i],
            checked,
            std::chrono::duration<double, std::milli>(t1 - t0).count(),
            false};
      }
    }
    if (opts.budget_nodes && total_nodes >= *opts.budget_nodes)
      throw BudgetExhausted(level, total_nodes);
  }
  throw std::logic_error("sigma scan exhausted all levels without a witness");
}

}  // namespace

SigmaResult sigma_exact(const TargetSpec& target, int n, const SigmaOptions& opts) {
  return sigma_scan(target, n, opts, true);
}

SigmaResult sigma_exact_serial(const TargetSpec& target, int n,
                               const SigmaOptions& opts) {
  return sigma_scan(target, n, opts, false);
}

Theorem1Report verify_theorem1(int m, int k, int n, int oracle_limit) {
  if (k < 3 || m < k + 1 || n < m)
    throw std::invalid_argument("requires n >= m >= k + 1 >= 4");
  Theorem1Report rep{m, k, n, lower_bound_formula(m, n),
                     false, false, false, std::nullopt};

  SimpleGraph h = SimpleGraph::extremal_construction(m, n);
  std::vector<int> expected;
  expected.insert(expected.end(), static_cast<size_t>(m - 3), n - 1);
  expected.insert(expected.end(), static_cast<size_t>(n - m + 3), m - 3);
  DegreeSequence want(expected);

  DegreeSequence got = h.degree_sequence();
  rep.degree_sequence_ok = got == want && is_graphical(got);
  rep.sum_ok = got.sum() == rep.bound - 2;
  rep.no_target_ok =
      !contains_subgraph(h, SimpleGraph::km_minus_pk(m, k)).has_value();

  if (n <= oracle_limit) {
    bool unique = true;
    enumerate_realizations_backtrack(want, oracle_limit,
                                     [&](const SimpleGraph& g) {
                                       if (!is_isomorphic(g, h)) {
                                         unique = false;
                                         return false;
                                       }
                                       return true;
                                     });
    rep.uniqueness_ok = unique;
  }
  return rep;
}

ConjectureResult check_conjecture(int m, int k, int n, const SigmaOptions& opts) {
  if (k < 1 || m < k + 1 || n < m || m < 4)
    throw std::invalid_argument("requires n >= m >= k + 1 and m >= 4");
  ConjectureResult out{ConjectureVerdict::holds, std::nullopt,
                       lower_bound_formula(m, n), k + 1 >= 4};
  try {
    SigmaResult r = sigma_exact(TargetSpec::family(m, k), n, opts);
    out.verdict = r.sigma == out.formula ? ConjectureVerdict::holds
                                         : ConjectureVerdict::fails;
    out.sigma = std::move(r);
  } catch (const BudgetExhausted&) {
    out.verdict = ConjectureVerdict::inconclusive;
  }
  return out;
}

nlohmann::json sigma_to_json(const SigmaResult& r) {
  nlohmann::json j{
      {"target", r.target.to_json()},
      {"n", r.n},
      {"sigma", r.sigma},
      {"witness", r.witness.format()},
      {"stats",
       {{"sequences_checked", r.sequences_checked}, {"wall_time_ms", r.wall_ms}}},
  };
  const KmMinusPk* f = r.target.as_family();
  if (f && f->m >= 4 && r.n >= f->m) {
    j["formula"] = lower_bound_formula(f->m, r.n);
    if (f->k + 1 >= 4)
      j["conjecture"] = r.sigma == lower_bound_formula(f->m, r.n) ? "holds" : "fails";
    else
      j["conjecture"] = "out-of-range";
  } else {
    j["formula"] = nullptr;
    j["conjecture"] = "out-of-range";
  }
  return j;
}

std::optional<SigmaResult> sigma_cache_lookup(const std::string& path,
                                              const TargetSpec& target, int n) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::optional<SigmaResult> hit;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded()) continue;
    if (j.value("version", "") != kCodeVersion) continue;
    if (j.value("n", -1) != n) continue;
    if (j.at("target") != target.to_json()) continue;
    try {
      SigmaResult r{target,
                    n,
                    j.at("sigma").get<int>(),
                    DegreeSequence::parse(j.at("witness").get<std::string>()),
                    0,
                    0.0,
                    true};
      if (r.witness.size() != n || r.witness.sum() != r.sigma - 2) continue;
      hit = std::move(r);  // last valid line wins
    } catch (const std::exception&) {
      continue;
    }
  }
  if (hit) {
    // cheap re-verification: the cached witness must still decide no
    PotentialDecision d = is_potentially(hit->witness, target, Budget{});
    if (d.verdict != Verdict::no) return std::nullopt;
  }
  return hit;
}

void sigma_cache_append(const std::string& path, const SigmaResult& r) {
  nlohmann::json j{{"target", r.target.to_json()},
                   {"n", r.n},
                   {"sigma", r.sigma},
                   {"witness", r.witness.format()},
                   {"version", kCodeVersion}};
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open cache file " + path);
  out << j.dump() << '\n';
}

}  // namespace degseq
