#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "degseq/graph.hpp"
#include "degseq/potential.hpp"
#include "degseq/sequence.hpp"

namespace degseq {

inline constexpr const char* kCodeVersion = "degseq-1.0";

// (2m-6)n - (m-3)(m-2) + 2; requires n >= m >= 4.
int lower_bound_formula(int m, int n);

struct SigmaOptions {
  int workers = 0;  // 0 = library default thread count
  std::optional<std::uint64_t> budget_nodes;  // total cap, level granularity
};

struct SigmaResult {
  TargetSpec target;
  int n;
  int sigma;
  DegreeSequence witness;  // maximal-sum non-potential sequence
  std::uint64_t sequences_checked = 0;
  double wall_ms = 0.0;
  bool from_cache = false;
};

struct BudgetExhausted : std::runtime_error {
  BudgetExhausted(int last_sum, std::uint64_t nodes)
      : std::runtime_error("node budget exhausted during sigma scan"),
        last_completed_sum(last_sum),
        nodes_spent(nodes) {}
  int last_completed_sum;  // lowest sum level fully decided (all yes)
  std::uint64_t nodes_spent;
};

// Descending-sum scan: the first sum level holding a non-potential
// sequence fixes sigma = level + 2, witness = lexicographically
// greatest non-potential sequence there. OpenMP across sequences
// within a level; deterministic for any worker count.
SigmaResult sigma_exact(const TargetSpec& target, int n,
                        const SigmaOptions& opts = {});

// Plain serial reference of the same scan, kept for testing.
SigmaResult sigma_exact_serial(const TargetSpec& target, int n,
                               const SigmaOptions& opts = {});

struct Theorem1Report {
  int m, k, n;
  int bound;  // lower_bound_formula(m, n)
  bool degree_sequence_ok;   // (a)
  bool sum_ok;               // (b)
  bool no_target_ok;         // (c)
  std::optional<bool> uniqueness_ok;  // (d); nullopt when beyond oracle limit
  bool passed() const {
    return degree_sequence_ok && sum_ok && no_target_ok &&
           uniqueness_ok.value_or(true);
  }
};

Theorem1Report verify_theorem1(int m, int k, int n,
                               int oracle_limit = kDefaultOracleLimit);

enum class ConjectureVerdict { holds, fails, inconclusive };

struct ConjectureResult {
  ConjectureVerdict verdict;
  std::optional<SigmaResult> sigma;  // absent when inconclusive
  int formula;
  bool in_conjecture_range;  // k + 1 >= 4
};

ConjectureResult check_conjecture(int m, int k, int n,
                                  const SigmaOptions& opts = {});

nlohmann::json sigma_to_json(const SigmaResult& r);

// Append-only JSON-lines cache keyed by (target, n, code version).
// Lookup re-verifies the cached witness before returning it.
std::optional<SigmaResult> sigma_cache_lookup(const std::string& path,
                                              const TargetSpec& target, int n);
void sigma_cache_append(const std::string& path, const SigmaResult& r);

}  // namespace degseq
