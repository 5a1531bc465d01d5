#include "degseq/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "degseq/bruteforce.hpp"
#include "degseq/potential.hpp"
#include "degseq/realization.hpp"
#include "degseq/sigma.hpp"

namespace degseq {

namespace {

std::vector<std::string> backtrack_keys(const DegreeSequence& s) {
  std::vector<std::string> keys;
  enumerate_realizations_backtrack(s, kDefaultOracleLimit,
                                   [&](const SimpleGraph& g) {
                                     keys.push_back(g.to_graph6());
                                     return true;
                                   });
  std::sort(keys.begin(), keys.end());
  return keys;
}

std::vector<std::string> swapbfs_keys(const DegreeSequence& s) {
  std::vector<std::string> keys;
  for (const auto& g : enumerate_realizations_swapbfs(s))
    keys.push_back(g.to_graph6());
  return keys;  // already canonically sorted
}

bool oracle_potential(const DegreeSequence& s, const SimpleGraph& target) {
  if (s.size() < target.order()) return false;
  bool found = false;
  enumerate_realizations_backtrack(s, kDefaultOracleLimit,
                                   [&](const SimpleGraph& g) {
                                     if (contains_subgraph(g, target)) {
                                       found = true;
                                       return false;
                                     }
                                     return true;
                                   });
  return found;
}

// every non-increasing sequence of length n with terms in [0, n-1]
void for_each_nonincreasing(int n, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> buf(static_cast<size_t>(n));
  auto rec = [&](auto&& self, int i, int prev) -> void {
    if (i == n) {
      fn(buf);
      return;
    }
    for (int v = prev; v >= 0; --v) {
      buf[static_cast<size_t>(i)] = v;
      self(self, i + 1, v);
    }
  };
  rec(rec, 0, n - 1);
}

struct Ctx {
  const VerifyOptions& opts;
  std::ostream& log;
  std::vector<CriterionOutcome> out;
  std::map<int, int> sigma_k5p3;  // n -> sigma, filled by criterion 1

  void add(int id, const std::string& name, bool passed, bool gating,
           bool skipped, const std::string& detail) {
    out.push_back({id, name, passed, gating, skipped, detail});
    log << "criterion " << id << " ["
        << (skipped ? "SKIP" : passed ? "PASS" : "FAIL") << "] " << name
        << (detail.empty() ? "" : ": " + detail) << "\n";
  }
};

void criterion_sigma_family(Ctx& c, int id, const std::string& name, int m,
                            int k, int lo,
                            const std::function<int(int)>& expected,
                            bool check_witness_sum, bool record_k5p3,
                            const std::map<int, int>* upper) {
  const int hi = std::min(8, c.opts.max_n);
  std::ostringstream detail;
  bool ok = true;
  bool any = false;
  std::mt19937 rng(c.opts.seed);
  for (int n = lo; n <= hi; ++n) {
    any = true;
    SigmaOptions so;
    so.workers = c.opts.workers;
    SigmaResult r = sigma_exact(TargetSpec::family(m, k), n, so);
    bool good = r.sigma == expected(n);
    if (check_witness_sum) good = good && r.witness.sum() == r.sigma - 2;
    if (upper) {
      auto it = upper->find(n);
      if (it != upper->end()) good = good && r.sigma <= it->second;
    }
    if (record_k5p3 && good) {
      c.sigma_k5p3[n] = r.sigma;
      // seeded spot check: sequences at the threshold sum all decide yes
      auto at = graphical_sequences_at_sum(n, r.sigma);
      for (int i = 0; i < 25 && !at.empty(); ++i) {
        const auto& s = at[rng() % at.size()];
        if (is_potentially(s, TargetSpec::family(m, k)).verdict != Verdict::yes) {
          good = false;
          break;
        }
      }
    }
    detail << "n=" << n << ":" << r.sigma << (good ? "" : "(!)") << " ";
    ok = ok && good;
  }
  if (hi < 8) detail << "(n=" << hi + 1 << ".." << 8 << " skipped by limit) ";
  if (record_k5p3) detail << "seed=" << c.opts.seed;
  c.add(id, name, ok, true, !any, detail.str());
}

void criterion_theorem1(Ctx& c) {
  const int hi = std::min(8, c.opts.max_n);
  bool ok = true;
  bool any = false;
  std::ostringstream detail;
  int cases = 0;
  for (int n = 4; n <= hi; ++n)
    for (int m = 4; m <= n; ++m)
      for (int k = 3; k <= m - 1; ++k) {
        any = true;
        ++cases;
        // uniqueness check (d) runs at n <= 7
        Theorem1Report rep = verify_theorem1(m, k, n, 7);
        bool need_d = n <= 7;
        bool good = rep.degree_sequence_ok && rep.sum_ok && rep.no_target_ok &&
                    (!need_d || (rep.uniqueness_ok && *rep.uniqueness_ok));
        if (!good) {
          ok = false;
          detail << "fail(m=" << m << ",k=" << k << ",n=" << n << ") ";
        }
      }
  detail << cases << " cases";
  if (hi < 8) detail << " (n>" << hi << " skipped by limit)";
  c.add(3, "lower-bound construction checks, 4 <= k+1 <= m <= n <= 8", ok,
        true, !any, detail.str());
}

void criterion_case_sequences(Ctx& c) {
  std::vector<std::string> listed = {"5^1,3^5",     "4^2,3^4", "5^6",
                                     "6^1,3^6",     "5^1,4^1,3^5", "4^3,3^4"};
  for (int n = 5; n <= 9; ++n)
    listed.push_back(std::to_string(n - 1) + "^1,3^" + std::to_string(n - 1));
  TargetSpec target = TargetSpec::family(5, 3);
  SimpleGraph pat = target.build();
  bool ok = true;
  std::ostringstream detail;
  for (const auto& text : listed) {
    DegreeSequence s = DegreeSequence::parse(text);
    PotentialDecision d = is_potentially(s, target);
    bool good = d.verdict == Verdict::yes && d.witness &&
                d.witness->degree_sequence() == s &&
                bruteforce::contains_by_enumeration(*d.witness, pat);
    if (!good) {
      ok = false;
      detail << "fail(" << text << ") ";
    }
  }
  detail << listed.size() << " sequences";
  c.add(5, "case-analysis sequences all decide yes with verified witnesses",
        ok, true, false, detail.str());
}

bool check_one_sequence(const DegreeSequence& s, const SimpleGraph& pat,
                        std::string& msg) {
  if (backtrack_keys(s) != swapbfs_keys(s)) {
    msg = "swap-bfs / backtrack mismatch on " + s.format();
    return false;
  }
  bool expect = oracle_potential(s, pat);
  Verdict got = is_potentially(s, TargetSpec::family(5, 3)).verdict;
  if ((got == Verdict::yes) != expect) {
    msg = "potential decision mismatch on " + s.format();
    return false;
  }
  return true;
}

void criterion_oracle_equivalence(Ctx& c) {
  SimpleGraph pat = SimpleGraph::km_minus_pk(5, 3);
  bool ok = true;
  std::string first_fail;
  std::ostringstream detail;
  std::uint64_t seqs_checked = 0;

  for (int n = 2; n <= 7 && ok; ++n) {
    auto multisets = bruteforce::all_degree_multisets(n);
    // (i) graphicality test vs realization existence, all non-increasing seqs
    for_each_nonincreasing(n, [&](const std::vector<int>& terms) {
      bool eg = erdos_gallai(terms).graphical;
      bool exists = multisets.count(terms) > 0;
      if (eg != exists) {
        ok = false;
        first_fail = "graphicality mismatch at n=" + std::to_string(n);
      }
    });
    if (!ok) break;

    // (ii)+(iii) on all graphical sequences (n <= 6) or the n = 7 sample
    std::vector<DegreeSequence> pool;
    for_each_graphical_sequence(n, 0, n * (n - 1), [&](const DegreeSequence& s) {
      pool.push_back(s);
      return true;
    });
    if (n == 7) {
      if (static_cast<int>(pool.size()) > c.opts.sample_count) {
        std::mt19937 rng(c.opts.seed);
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.erase(pool.begin() + c.opts.sample_count, pool.end());
      }
      // otherwise the population is smaller than the sample; use all of it
    }
    if (n < 4) {  // K_5 - P_3 needs 5 vertices; still run (ii)
      for (const auto& s : pool)
        if (backtrack_keys(s) != swapbfs_keys(s)) {
          ok = false;
          first_fail = "swap-bfs mismatch on " + s.format();
        }
      seqs_checked += pool.size();
      continue;
    }
    const int nthreads = c.opts.workers > 0 ? c.opts.workers : omp_get_max_threads();
    std::atomic<bool> failed{false};
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
    for (long i = 0; i < static_cast<long>(pool.size()); ++i) {
      if (failed.load(std::memory_order_relaxed)) continue;
      std::string msg;
      if (!check_one_sequence(pool[static_cast<size_t>(i)], pat, msg)) {
#pragma omp critical
        {
          failed.store(true);
          first_fail = msg;
        }
      }
    }
    if (failed.load()) ok = false;
    seqs_checked += pool.size();
  }
  detail << seqs_checked << " sequences, n <= 7 (seed=" << c.opts.seed << ")";
  if (!ok) detail << "; " << first_fail;
  c.add(6, "oracle equivalence: graphicality, swap connectivity, potential",
        ok, true, false, detail.str());
}

void criterion_determinism(Ctx& c) {
  const int hi = std::min(8, c.opts.max_n);
  bool ok = true;
  bool any = false;
  std::ostringstream detail;
  for (int n = 5; n <= hi; ++n) {
    any = true;
    SigmaOptions one, eight;
    one.workers = 1;
    eight.workers = 8;
    nlohmann::json a = sigma_to_json(sigma_exact(TargetSpec::family(5, 3), n, one));
    nlohmann::json b = sigma_to_json(sigma_exact(TargetSpec::family(5, 3), n, eight));
    a["stats"].erase("wall_time_ms");
    b["stats"].erase("wall_time_ms");
    if (a.dump() != b.dump()) {
      ok = false;
      detail << "mismatch at n=" << n << " ";
    }
  }
  detail << "worker counts 1 and 8, n=5.." << hi;
  c.add(7, "byte-identical reports across worker counts", ok, true, !any,
        detail.str());
}

void criterion_conjecture_scan(Ctx& c) {
  bool ok = true;
  std::ostringstream detail;
  for (int k = 3; k <= 5; ++k) {
    SigmaOptions so;
    so.workers = c.opts.workers;
    ConjectureResult r = check_conjecture(6, k, 6, so);
    const char* v = r.verdict == ConjectureVerdict::holds
                        ? "holds"
                        : r.verdict == ConjectureVerdict::fails ? "fails"
                                                                : "inconclusive";
    detail << "(m=6,k=" << k << ",n=6):" << v;
    if (r.sigma) {
      detail << ",sigma=" << r.sigma->sigma;
      // internal consistency: the witness must still decide no
      if (is_potentially(r.sigma->witness, TargetSpec::family(6, k)).verdict !=
          Verdict::no)
        ok = false;
    } else {
      ok = false;
    }
    detail << " ";
  }
  c.add(8, "open conjecture cases complete with consistent witnesses", ok,
        false, false, detail.str());
}

}  // namespace

std::vector<CriterionOutcome> verify_paper(const VerifyOptions& opts,
                                           std::ostream& log) {
  Ctx c{opts, log, {}, {}};

  criterion_sigma_family(
      c, 1, "sigma(K5-P3, n) = 4n - 4 for n = 5..8", 5, 3, 5,
      [](int n) { return 4 * n - 4; }, true, true, nullptr);
  criterion_sigma_family(
      c, 2, "sigma(K5-P4, n) = 4n - 4 and <= sigma(K5-P3, n)", 5, 4, 5,
      [](int n) { return 4 * n - 4; }, false, false, &c.sigma_k5p3);
  criterion_theorem1(c);
  criterion_sigma_family(
      c, 4, "sigma(K4-P3, n) = 2n for n = 4..8", 4, 3, 4,
      [](int n) { return 2 * n; }, false, false, nullptr);
  criterion_case_sequences(c);
  criterion_oracle_equivalence(c);
  criterion_determinism(c);
  criterion_conjecture_scan(c);

  return c.out;
}

bool all_gating_passed(const std::vector<CriterionOutcome>& outcomes) {
  for (const auto& o : outcomes)
    if (o.gating && !o.skipped && !o.passed) return false;
  return true;
}

}  // namespace degseq
