#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "degseq/graph.hpp"
#include "degseq/sequence.hpp"

namespace degseq {

inline constexpr int kDefaultOracleLimit = 8;

// Degree-preserving two-edge interchange: removes edges ab and cd,
// inserts ac and bd. All four endpoints must be distinct.
struct SwapMove {
  int a, b, c, d;
};

// Deterministic Havel-Hakimi construction: highest residual degree
// connects to the next-highest residuals, ties broken by lowest index.
SimpleGraph havel_hakimi_realization(const DegreeSequence& s);

// Throws std::invalid_argument when a removed edge is missing or an
// added edge is already present.
SimpleGraph apply_swap(const SimpleGraph& g, const SwapMove& move);

// Yields every labeled graph realizing s exactly once, by edge-by-edge
// backtracking over the position-sorted sequence. Refuses instances
// with n > oracle_limit. Return false from fn to stop the stream.
void enumerate_realizations_backtrack(
    const DegreeSequence& s, int oracle_limit,
    const std::function<bool(const SimpleGraph&)>& fn);

std::vector<SimpleGraph> all_realizations(const DegreeSequence& s,
                                          int oracle_limit = kDefaultOracleLimit);

// Breadth-first closure of two-edge swaps from the Havel-Hakimi
// realization; visited states keyed by exact labeled adjacency.
// Output is sorted canonically (by graph6 encoding).
std::vector<SimpleGraph> enumerate_realizations_swapbfs(const DegreeSequence& s);

enum class PlacementStrategy { highest_degree, exhaustive };
enum class SearchOutcome { found, exhausted, budget_exceeded };

struct SearchStats {
  std::uint64_t placements_tried = 0;
  std::uint64_t nodes_expanded = 0;
};

struct RealizationSearchResult {
  SearchOutcome outcome;
  std::optional<SimpleGraph> witness;
  SearchStats stats;
};

// Lays the target's edges on a vertex subset, then completes the
// residual degree demand by backtracking over non-target edges.
// highest_degree tries the single sorted placement on the |V(target)|
// highest-degree positions; exhaustive covers every degree-class
// distinct placement, so an empty result is exact there.
RealizationSearchResult find_realization_containing(
    const DegreeSequence& s, const SimpleGraph& target,
    PlacementStrategy strategy,
    std::optional<std::uint64_t> node_budget = std::nullopt);

RealizationSearchResult find_realization_containing(
    const DegreeSequence& s, const TargetSpec& target,
    PlacementStrategy strategy,
    std::optional<std::uint64_t> node_budget = std::nullopt);

}  // namespace degseq
