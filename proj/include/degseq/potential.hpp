#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "json.hpp"

#include "degseq/graph.hpp"
#include "degseq/realization.hpp"
#include "degseq/sequence.hpp"

namespace degseq {

enum class Verdict { yes, no, inconclusive };

struct Budget {
  std::optional<std::uint64_t> max_nodes;
};

struct PotentialDecision {
  Verdict verdict;
  std::optional<SimpleGraph> witness;  // present iff yes; re-verified
  SearchStats stats;
};

// Exact decision of "s is potentially target-graphic": trivial
// rejections, then a graphical-residual necessary filter, then the
// constructive search (highest-degree placement first, exhaustive
// fallback). Without a budget the verdict is never inconclusive.
PotentialDecision is_potentially(const DegreeSequence& s,
                                 const TargetSpec& target,
                                 const Budget& budget = {});

// Subtracts the target's degrees (sorted descending) from the terms at
// positions[0], positions[1], ... and re-sorts. Throws when a term
// would go negative; a graphical result is necessary but not
// sufficient for the sequence being potentially target-graphic.
DegreeSequence residual_after_placement(const DegreeSequence& s,
                                        const TargetSpec& target,
                                        const std::vector<int>& positions);

nlohmann::json decision_to_json(const DegreeSequence& s,
                                const TargetSpec& target,
                                const PotentialDecision& d);

}  // namespace degseq
