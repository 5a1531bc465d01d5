#include "degseq/potential.hpp"

#include <algorithm>
#include <stdexcept>

namespace degseq {

namespace {

std::vector<int> sorted_demands(const SimpleGraph& target) {
  std::vector<int> d(static_cast<size_t>(target.order()));
  for (int v = 0; v < target.order(); ++v) d[static_cast<size_t>(v)] = target.degree(v);
  std::sort(d.begin(), d.end(), std::greater<int>());
  return d;
}

// Necessary condition: some placement of the target's degree demand
// leaves a graphical residual. Only degree-class-distinct position
// sets are tried, with demands paired largest-to-largest.
bool residual_filter_passes(const DegreeSequence& s, const SimpleGraph& target) {
  const int n = s.size(), t = target.order();
  std::vector<int> demands = sorted_demands(target);

  // classes: (value, start, count) runs of the sorted sequence
  struct Cls {
    int value, start, count;
  };
  std::vector<Cls> classes;
  for (int i = 0; i < n; ++i) {
    if (!classes.empty() && classes.back().value == s[i])
      ++classes.back().count;
    else
      classes.push_back({s[i], i, 1});
  }

  std::vector<int> take(classes.size(), 0);
  auto rec = [&](auto&& self, size_t c, int left) -> bool {
    if (left == 0) {
      // chosen positions in ascending index = supplies descending
      std::vector<int> residual = s.terms();
      int di = 0;
      for (size_t j = 0; j < classes.size(); ++j) {
        for (int i = 0; i < take[j]; ++i) {
          int pos = classes[j].start + i;
          residual[static_cast<size_t>(pos)] -= demands[static_cast<size_t>(di++)];
          if (residual[static_cast<size_t>(pos)] < 0) return false;
        }
      }
      return is_graphical_multiset(std::move(residual));
    }
    if (c == classes.size()) return false;
    int cap = std::min(classes[c].count, left);
    for (int u = 0; u <= cap; ++u) {
      take[c] = u;
      if (self(self, c + 1, left - u)) {
        take[c] = 0;
        return true;
      }
    }
    take[c] = 0;
    return false;
  };
  return rec(rec, 0, t);
}

}  // namespace

DegreeSequence residual_after_placement(const DegreeSequence& s,
                                        const TargetSpec& target,
                                        const std::vector<int>& positions) {
  SimpleGraph t = target.build();
  if (static_cast<int>(positions.size()) != t.order())
    throw std::invalid_argument("positions must match the target order");
  std::vector<int> demands = sorted_demands(t);
  std::vector<int> residual = s.terms();
  std::vector<bool> seen(static_cast<size_t>(s.size()), false);
  for (size_t i = 0; i < positions.size(); ++i) {
    int pos = positions[i];
    if (pos < 0 || pos >= s.size() || seen[static_cast<size_t>(pos)])
      throw std::invalid_argument("positions must be distinct indices into the sequence");
    seen[static_cast<size_t>(pos)] = true;
    residual[static_cast<size_t>(pos)] -= demands[i];
    if (residual[static_cast<size_t>(pos)] < 0)
      throw std::invalid_argument(
          "placement infeasible: degree at position " + std::to_string(pos) +
          " cannot supply the target demand");
  }
  return DegreeSequence(std::move(residual));
}

PotentialDecision is_potentially(const DegreeSequence& s,
                                 const TargetSpec& target,
                                 const Budget& budget) {
  PotentialDecision d{Verdict::no, std::nullopt, {}};
  SimpleGraph t = target.build();

  if (!is_graphical(s)) return d;
  if (s.size() < t.order()) return d;
  if (s.sum() < 2 * t.edge_count()) return d;
  if (!residual_filter_passes(s, t)) return d;

  auto r1 = find_realization_containing(s, t, PlacementStrategy::highest_degree,
                                        budget.max_nodes);
  d.stats = r1.stats;
  if (r1.outcome != SearchOutcome::found) {
    std::optional<std::uint64_t> remaining;
    if (budget.max_nodes) {
      if (r1.outcome == SearchOutcome::budget_exceeded ||
          d.stats.nodes_expanded >= *budget.max_nodes) {
        d.verdict = Verdict::inconclusive;
        return d;
      }
      remaining = *budget.max_nodes - d.stats.nodes_expanded;
    }
    auto r2 = find_realization_containing(s, t, PlacementStrategy::exhaustive,
                                          remaining);
    d.stats.placements_tried += r2.stats.placements_tried;
    d.stats.nodes_expanded += r2.stats.nodes_expanded;
    if (r2.outcome == SearchOutcome::budget_exceeded) {
      d.verdict = Verdict::inconclusive;
      return d;
    }
    if (r2.outcome != SearchOutcome::found) return d;  // exhausted: no
    r1.witness = std::move(r2.witness);
  }

  // re-verify the witness before reporting yes
  const SimpleGraph& w = *r1.witness;
  if (!(w.degree_sequence() == s) || !contains_subgraph(w, t))
    throw std::logic_error("witness failed re-verification");
  d.verdict = Verdict::yes;
  d.witness = std::move(r1.witness);
  return d;
}

nlohmann::json decision_to_json(const DegreeSequence& s,
                                const TargetSpec& target,
                                const PotentialDecision& d) {
  nlohmann::json j{
      {"sequence", s.format()},
      {"target", target.to_json()},
      {"verdict", d.verdict == Verdict::yes
                      ? "yes"
                      : d.verdict == Verdict::no ? "no" : "inconclusive"},
      {"stats",
       {{"placements_tried", d.stats.placements_tried},
        {"nodes_expanded", d.stats.nodes_expanded}}},
  };
  if (d.witness) j["witness_graph6"] = d.witness->to_graph6();
  return j;
}

}  // namespace degseq
