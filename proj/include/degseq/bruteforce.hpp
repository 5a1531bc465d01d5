#pragma once

// Exhaustive reference implementations over all labeled graphs.
// Only usable at tiny n; these stay independent of the tuned search
// paths they are used to check.

#include <functional>
#include <set>
#include <vector>

#include "degseq/graph.hpp"
#include "degseq/sequence.hpp"

namespace degseq::bruteforce {

// All 2^(n(n-1)/2) labeled graphs. Return false from fn to stop.
void for_each_graph(int n, const std::function<bool(const SimpleGraph&)>& fn);

// Degree multisets (sorted descending) of all labeled graphs on n vertices.
std::set<std::vector<int>> all_degree_multisets(int n);

bool realization_exists(const DegreeSequence& s);  // n <= 6

// Containment by trying every injective vertex map.
bool contains_by_enumeration(const SimpleGraph& host, const SimpleGraph& pattern);

}  // namespace degseq::bruteforce
