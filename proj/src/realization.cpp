#include "degseq/realization.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace degseq {

SimpleGraph havel_hakimi_realization(const DegreeSequence& s) {
  if (!is_graphical(s))
    throw std::invalid_argument("sequence is not graphical: " + s.format());
  const int n = s.size();
  SimpleGraph g(n);
  std::vector<int> res = s.terms();
  for (;;) {
    int v = static_cast<int>(std::distance(
        res.begin(), std::max_element(res.begin(), res.end())));
    if (res[static_cast<size_t>(v)] == 0) break;
    // next-highest residuals, ties by lowest index
    std::vector<int> others;
    for (int u = 0; u < n; ++u)
      if (u != v && !g.has_edge(u, v)) others.push_back(u);
    std::stable_sort(others.begin(), others.end(), [&](int a, int b) {
      return res[static_cast<size_t>(a)] > res[static_cast<size_t>(b)];
    });
    int need = res[static_cast<size_t>(v)];
    for (int i = 0; i < need; ++i) {
      int u = others[static_cast<size_t>(i)];
      g.add_edge(u, v);
      --res[static_cast<size_t>(u)];
    }
    res[static_cast<size_t>(v)] = 0;
  }
  if (!(g.degree_sequence() == s))
    throw std::logic_error("Havel-Hakimi output failed the degree check");
  return g;
}

SimpleGraph apply_swap(const SimpleGraph& g, const SwapMove& mv) {
  const int vs[4] = {mv.a, mv.b, mv.c, mv.d};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (vs[i] == vs[j])
        throw std::invalid_argument("swap endpoints must be distinct");
  if (!g.has_edge(mv.a, mv.b) || !g.has_edge(mv.c, mv.d))
    throw std::invalid_argument("swap removes a missing edge");
  if (g.has_edge(mv.a, mv.c) || g.has_edge(mv.b, mv.d))
    throw std::invalid_argument("swap inserts an existing edge");
  SimpleGraph out = g;
  out.remove_edge(mv.a, mv.b);
  out.remove_edge(mv.c, mv.d);
  out.add_edge(mv.a, mv.c);
  out.add_edge(mv.b, mv.d);
  return out;
}

namespace {

struct BudgetHit {};

// Backtracking fill of residual degree demand, vertex by vertex; edges
// always go from the current vertex to higher indices, so each labeled
// graph is produced exactly once. Pre-laid edges are never duplicated.
class DegreeFill {
 public:
  DegreeFill(SimpleGraph g, std::vector<int> res,
             std::function<bool(const SimpleGraph&)> emit,
             std::optional<std::uint64_t> budget)
      : g_(std::move(g)),
        res_(std::move(res)),
        emit_(std::move(emit)),
        budget_(budget) {}

  // false return means the caller asked to stop (not exhaustion)
  bool run() { return rec(0); }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool rec(int i) {
    ++nodes_;
    if (budget_ && nodes_ > *budget_) throw BudgetHit{};
    const int n = g_.order();
    if (i == n) return emit_(g_);
    if (res_[static_cast<size_t>(i)] == 0) return rec(i + 1);
    // residual suffix must at least be graphical ignoring forbidden pairs
    std::vector<int> suffix(res_.begin() + i, res_.end());
    if (!is_graphical_multiset(std::move(suffix))) return true;
    cand_.clear();
    for (int j = i + 1; j < n; ++j)
      if (res_[static_cast<size_t>(j)] > 0 && !g_.has_edge(i, j))
        cand_.push_back(j);
    const int need = res_[static_cast<size_t>(i)];
    if (static_cast<int>(cand_.size()) < need) return true;
    std::vector<int> cand = cand_;  // local copy: cand_ is clobbered below
    res_[static_cast<size_t>(i)] = 0;
    bool cont = choose(cand, i, 0, need);
    res_[static_cast<size_t>(i)] = need;
    return cont;
  }

  bool choose(const std::vector<int>& cand, int i, int start, int need) {
    if (need == 0) return rec(i + 1);
    const int last = static_cast<int>(cand.size()) - need;
    for (int t = start; t <= last; ++t) {
      int j = cand[static_cast<size_t>(t)];
      g_.add_edge(i, j);
      --res_[static_cast<size_t>(j)];
      bool cont = choose(cand, i, t + 1, need - 1);
      ++res_[static_cast<size_t>(j)];
      g_.remove_edge(i, j);
      if (!cont) return false;
    }
    return true;
  }

  SimpleGraph g_;
  std::vector<int> res_;
  std::vector<int> cand_;
  std::function<bool(const SimpleGraph&)> emit_;
  std::optional<std::uint64_t> budget_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

void enumerate_realizations_backtrack(
    const DegreeSequence& s, int oracle_limit,
    const std::function<bool(const SimpleGraph&)>& fn) {
  if (s.size() > oracle_limit)
    throw std::invalid_argument(
        "instance exceeds the oracle limit (n = " + std::to_string(s.size()) +
        " > " + std::to_string(oracle_limit) + ")");
  DegreeFill fill(SimpleGraph(s.size()), s.terms(), fn, std::nullopt);
  fill.run();
}

std::vector<SimpleGraph> all_realizations(const DegreeSequence& s,
                                          int oracle_limit) {
  std::vector<SimpleGraph> out;
  enumerate_realizations_backtrack(s, oracle_limit,
                                   [&](const SimpleGraph& g) {
                                     out.push_back(g);
                                     return true;
                                   });
  return out;
}

std::vector<SimpleGraph> enumerate_realizations_swapbfs(const DegreeSequence& s) {
  SimpleGraph start = havel_hakimi_realization(s);
  std::unordered_set<std::string> visited;
  std::deque<SimpleGraph> queue;
  std::vector<SimpleGraph> out;
  visited.insert(start.to_graph6());
  queue.push_back(start);
  out.push_back(start);
  while (!queue.empty()) {
    SimpleGraph g = std::move(queue.front());
    queue.pop_front();
    auto es = g.edges();
    for (size_t x = 0; x < es.size(); ++x) {
      for (size_t y = x + 1; y < es.size(); ++y) {
        auto [a, b] = es[x];
        auto [c, d] = es[y];
        if (a == c || a == d || b == c || b == d) continue;
        const SwapMove moves[2] = {{a, b, c, d}, {a, b, d, c}};
        for (const SwapMove& mv : moves) {
          if (g.has_edge(mv.a, mv.c) || g.has_edge(mv.b, mv.d)) continue;
          SimpleGraph next = apply_swap(g, mv);
          if (visited.insert(next.to_graph6()).second) {
            out.push_back(next);
            queue.push_back(next);
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const SimpleGraph& a, const SimpleGraph& b) {
              return a.to_graph6() < b.to_graph6();
            });
  return out;
}

namespace {

// Degree classes of a non-increasing sequence: runs of equal value.
struct DegreeClass {
  int value;
  int start;
  int count;
};

std::vector<DegreeClass> degree_classes(const DegreeSequence& s) {
  std::vector<DegreeClass> out;
  for (int i = 0; i < s.size(); ++i) {
    if (!out.empty() && out.back().value == s[i])
      ++out.back().count;
    else
      out.push_back({s[i], i, 1});
  }
  return out;
}

// Placements up to the symmetry of equal-degree positions: assign each
// pattern vertex to a degree class, then use the class's first slots in
// pattern-index order.
std::vector<std::vector<int>> exhaustive_placements(const DegreeSequence& s,
                                                    const SimpleGraph& target) {
  const int t = target.order();
  auto classes = degree_classes(s);
  std::vector<int> used(classes.size(), 0);
  std::vector<int> assign(static_cast<size_t>(t), -1);
  std::vector<std::vector<int>> out;

  auto rec = [&](auto&& self, int p) -> void {
    if (p == t) {
      std::vector<int> phi(static_cast<size_t>(t));
      std::vector<int> next(classes.size());
      for (size_t c = 0; c < classes.size(); ++c) next[c] = classes[c].start;
      for (int q = 0; q < t; ++q) {
        int c = assign[static_cast<size_t>(q)];
        phi[static_cast<size_t>(q)] = next[static_cast<size_t>(c)]++;
      }
      out.push_back(std::move(phi));
      return;
    }
    for (size_t c = 0; c < classes.size(); ++c) {
      if (used[c] >= classes[c].count) continue;
      if (classes[c].value < target.degree(p)) continue;
      assign[static_cast<size_t>(p)] = static_cast<int>(c);
      ++used[c];
      self(self, p + 1);
      --used[c];
    }
  };
  rec(rec, 0);
  return out;
}

// The single sorted placement: pattern vertices by descending degree
// onto positions 0..t-1.
std::optional<std::vector<int>> highest_placement(const DegreeSequence& s,
                                                  const SimpleGraph& target) {
  const int t = target.order();
  std::vector<int> order(static_cast<size_t>(t));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return target.degree(a) > target.degree(b);
  });
  std::vector<int> phi(static_cast<size_t>(t));
  for (int j = 0; j < t; ++j) {
    int p = order[static_cast<size_t>(j)];
    if (s[j] < target.degree(p)) return std::nullopt;
    phi[static_cast<size_t>(p)] = j;
  }
  return phi;
}

}  // namespace

RealizationSearchResult find_realization_containing(
    const DegreeSequence& s, const SimpleGraph& target,
    PlacementStrategy strategy, std::optional<std::uint64_t> node_budget) {
  RealizationSearchResult result{SearchOutcome::exhausted, std::nullopt, {}};
  const int n = s.size(), t = target.order();
  if (t > n) return result;

  std::vector<std::vector<int>> placements;
  if (strategy == PlacementStrategy::highest_degree) {
    if (auto phi = highest_placement(s, target)) placements.push_back(*phi);
  } else {
    placements = exhaustive_placements(s, target);
  }

  for (const auto& phi : placements) {
    ++result.stats.placements_tried;
    SimpleGraph g0(n);
    for (auto [u, v] : target.edges())
      g0.add_edge(phi[static_cast<size_t>(u)], phi[static_cast<size_t>(v)]);
    std::vector<int> res(static_cast<size_t>(n));
    bool feasible = true;
    for (int i = 0; i < n; ++i) {
      res[static_cast<size_t>(i)] = s[i] - g0.degree(i);
      if (res[static_cast<size_t>(i)] < 0) feasible = false;
    }
    if (!feasible) continue;

    std::optional<std::uint64_t> remaining;
    if (node_budget) {
      if (result.stats.nodes_expanded >= *node_budget) {
        result.outcome = SearchOutcome::budget_exceeded;
        return result;
      }
      remaining = *node_budget - result.stats.nodes_expanded;
    }
    std::optional<SimpleGraph> witness;
    DegreeFill fill(std::move(g0), std::move(res),
                    [&](const SimpleGraph& g) {
                      witness = g;
                      return false;  // first completion wins
                    },
                    remaining);
    try {
      fill.run();
      result.stats.nodes_expanded += fill.nodes();
    } catch (const BudgetHit&) {
      result.stats.nodes_expanded += fill.nodes();
      result.outcome = SearchOutcome::budget_exceeded;
      return result;
    }
    if (witness) {
      result.outcome = SearchOutcome::found;
      result.witness = std::move(witness);
      return result;
    }
  }
  return result;
}

RealizationSearchResult find_realization_containing(
    const DegreeSequence& s, const TargetSpec& target,
    PlacementStrategy strategy, std::optional<std::uint64_t> node_budget) {
  return find_realization_containing(s, target.build(), strategy, node_budget);
}

}  // namespace degseq
