#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "degseq/bruteforce.hpp"
#include "degseq/realization.hpp"

using namespace degseq;

namespace {

std::vector<std::string> keys_of(const std::vector<SimpleGraph>& gs) {
  std::vector<std::string> out;
  for (const auto& g : gs) out.push_back(g.to_graph6());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("havel-hakimi realizes known sequences") {
  auto tri = havel_hakimi_realization(DegreeSequence::parse("2,2,2"));
  CHECK(tri.edge_count() == 3);
  auto star = havel_hakimi_realization(DegreeSequence::parse("5,1,1,1,1,1"));
  CHECK(star.degree_sequence().format() == "5^1,1^5");
  auto h = havel_hakimi_realization(DegreeSequence::parse("5^2,2^4"));
  CHECK(is_isomorphic(h, SimpleGraph::extremal_construction(5, 6)));
  CHECK_THROWS_AS(havel_hakimi_realization(DegreeSequence::parse("3,3,1,1")),
                  std::invalid_argument);
}

TEST_CASE("havel-hakimi realizes every graphical sequence up to n = 7") {
  for (int n = 2; n <= 7; ++n)
    for_each_graphical_sequence(n, 0, n * (n - 1), [&](const DegreeSequence& s) {
      CHECK(havel_hakimi_realization(s).degree_sequence() == s);
      return true;
    });
}

TEST_CASE("apply_swap: valid move on a 4-cycle") {
  SimpleGraph c4(4);
  c4.add_edge(0, 1); c4.add_edge(1, 2); c4.add_edge(2, 3); c4.add_edge(3, 0);
  auto g = apply_swap(c4, SwapMove{0, 1, 2, 3});  // remove 01,23; add 02,13
  CHECK(g.degree_sequence() == c4.degree_sequence());
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(1, 3));
  CHECK_FALSE(g.has_edge(0, 1));
  // inverse move restores the original labeled graph
  CHECK(apply_swap(g, SwapMove{0, 2, 1, 3}) == c4);
}

TEST_CASE("apply_swap: invalid moves rejected") {
  SimpleGraph c4(4);
  c4.add_edge(0, 1); c4.add_edge(1, 2); c4.add_edge(2, 3); c4.add_edge(3, 0);
  CHECK_THROWS_AS(apply_swap(c4, SwapMove{0, 1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(apply_swap(c4, SwapMove{0, 2, 1, 3}), std::invalid_argument);
  SimpleGraph k4 = SimpleGraph::complete(4);
  CHECK_THROWS_AS(apply_swap(k4, SwapMove{0, 1, 2, 3}), std::invalid_argument);
}

TEST_CASE("backtracking enumeration counts") {
  CHECK(all_realizations(DegreeSequence::parse("2,2,2")).size() == 1);
  CHECK(all_realizations(DegreeSequence::parse("1,1,1,1")).size() == 3);
  CHECK(all_realizations(DegreeSequence::parse("2,2,2,2")).size() == 3);
}

TEST_CASE("backtracking enumeration matches brute force for n <= 5") {
  // realizations carry the position-sorted degree vector: vertex i has
  // degree exactly s[i]
  for (int n = 2; n <= 5; ++n)
    for_each_graphical_sequence(n, 0, n * (n - 1), [&](const DegreeSequence& s) {
      std::vector<std::string> expect;
      bruteforce::for_each_graph(n, [&](const SimpleGraph& g) {
        bool positional = true;
        for (int v = 0; v < n; ++v)
          if (g.degree(v) != s[v]) positional = false;
        if (positional) expect.push_back(g.to_graph6());
        return true;
      });
      std::sort(expect.begin(), expect.end());
      CHECK(keys_of(all_realizations(s)) == expect);
      return true;
    });
}

TEST_CASE("oracle limit is a refusal") {
  std::vector<int> big(static_cast<size_t>(9), 0);
  CHECK_THROWS_AS(all_realizations(DegreeSequence(big)), std::invalid_argument);
}

TEST_CASE("swap-bfs equals backtracking for all graphical sequences, n <= 6") {
  for (int n = 2; n <= 6; ++n)
    for_each_graphical_sequence(n, 0, n * (n - 1), [&](const DegreeSequence& s) {
      CHECK(keys_of(enumerate_realizations_swapbfs(s)) ==
            keys_of(all_realizations(s)));
      return true;
    });
}

TEST_CASE("swap-bfs on unique realizations") {
  CHECK(enumerate_realizations_swapbfs(DegreeSequence::parse("5,1,1,1,1,1")).size() == 1);
  auto h = SimpleGraph::extremal_construction(5, 6);
  for (const auto& g :
       enumerate_realizations_swapbfs(DegreeSequence::parse("5^2,2^4")))
    CHECK(is_isomorphic(g, h));
}

TEST_CASE("find_realization_containing: listed cases") {
  auto pat = SimpleGraph::km_minus_pk(5, 3);
  auto hit = find_realization_containing(DegreeSequence::parse("4^2,3^4"), pat,
                                         PlacementStrategy::exhaustive);
  REQUIRE(hit.outcome == SearchOutcome::found);
  CHECK(hit.witness->degree_sequence() == DegreeSequence::parse("4^2,3^4"));
  CHECK(contains_subgraph(*hit.witness, pat).has_value());

  auto miss = find_realization_containing(DegreeSequence::parse("4,4,2,2,2"), pat,
                                          PlacementStrategy::exhaustive);
  CHECK(miss.outcome == SearchOutcome::exhausted);

  auto k4 = find_realization_containing(DegreeSequence::parse("3,3,3,3"),
                                        SimpleGraph::complete(4),
                                        PlacementStrategy::exhaustive);
  REQUIRE(k4.outcome == SearchOutcome::found);
  CHECK(*k4.witness == SimpleGraph::complete(4));
}

TEST_CASE("find_realization_containing agrees with the enumeration oracle") {
  auto pat = SimpleGraph::km_minus_pk(5, 3);
  for (int n = 5; n <= 6; ++n)
    for_each_graphical_sequence(n, 0, n * (n - 1), [&](const DegreeSequence& s) {
      bool expect = false;
      enumerate_realizations_backtrack(s, 8, [&](const SimpleGraph& g) {
        if (contains_subgraph(g, pat)) {
          expect = true;
          return false;
        }
        return true;
      });
      auto got = find_realization_containing(s, pat, PlacementStrategy::exhaustive);
      CHECK((got.outcome == SearchOutcome::found) == expect);
      return true;
    });
}

TEST_CASE("unique realization of the construction sequence at small n") {
  for (int m = 4; m <= 6; ++m)
    for (int n = m; n <= 7; ++n) {
      auto h = SimpleGraph::extremal_construction(m, n);
      for (const auto& g : all_realizations(h.degree_sequence()))
        CHECK(is_isomorphic(g, h));
    }
}

TEST_CASE("node budget reports budget_exceeded, never a silent no") {
  auto pat = SimpleGraph::km_minus_pk(5, 3);
  auto s = DegreeSequence::parse("4^2,3^4");
  auto r = find_realization_containing(s, pat, PlacementStrategy::exhaustive,
                                       std::uint64_t{1});
  CHECK(r.outcome == SearchOutcome::budget_exceeded);
}
