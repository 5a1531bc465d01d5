#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "degseq/potential.hpp"
#include "degseq/realization.hpp"

using namespace degseq;

TEST_CASE("listed yes/no cases") {
  auto t = TargetSpec::family(5, 3);
  CHECK(is_potentially(DegreeSequence::parse("5^1,3^5"), t).verdict == Verdict::yes);
  CHECK(is_potentially(DegreeSequence::parse("4,4,2,2,2"), t).verdict == Verdict::no);
  CHECK(is_potentially(DegreeSequence::parse("3,1,1,1"), t).verdict == Verdict::no);
  CHECK(is_potentially(DegreeSequence::parse("2,2,2"), t).verdict == Verdict::no);
}

TEST_CASE("yes verdicts carry verified witnesses") {
  auto t = TargetSpec::family(5, 3);
  for (const char* text : {"5^1,3^5", "4^2,3^4", "5^6", "6^1,3^6",
                           "5^1,4^1,3^5", "4^3,3^4"}) {
    auto s = DegreeSequence::parse(text);
    auto d = is_potentially(s, t);
    REQUIRE(d.verdict == Verdict::yes);
    REQUIRE(d.witness.has_value());
    CHECK(d.witness->degree_sequence() == s);
    CHECK(contains_subgraph(*d.witness, t.build()).has_value());
  }
  for (int n = 5; n <= 9; ++n) {
    auto s = DegreeSequence::parse(std::to_string(n - 1) + "^1,3^" +
                                   std::to_string(n - 1));
    CHECK(is_potentially(s, t).verdict == Verdict::yes);
  }
}

TEST_CASE("residual_after_placement: K_5 host leaves the removed path") {
  auto t = TargetSpec::family(5, 3);
  auto r = residual_after_placement(DegreeSequence::parse("4,4,4,4,4"), t,
                                    {0, 1, 2, 3, 4});
  CHECK(r.terms() == std::vector<int>{2, 2, 1, 1, 0});
}

TEST_CASE("residual_after_placement: infeasible placement throws") {
  auto t = TargetSpec::family(5, 3);
  CHECK_THROWS_AS(residual_after_placement(DegreeSequence::parse("5^2,2^4"), t,
                                           {0, 1, 2, 3, 4}),
                  std::invalid_argument);
  CHECK_THROWS_AS(residual_after_placement(DegreeSequence::parse("4,4,4,4,4"), t,
                                           {0, 0, 1, 2, 3}),
                  std::invalid_argument);
}

TEST_CASE("residual_after_placement: best sorted mapping is graphical") {
  auto t = TargetSpec::family(5, 3);
  auto r = residual_after_placement(DegreeSequence::parse("5^1,3^5"), t,
                                    {0, 1, 2, 3, 4});
  CHECK(is_graphical(r));
}

TEST_CASE("sorted demand mapping dominates arbitrary mappings") {
  // if any permutation of pattern demands onto a position set leaves a
  // graphical residual, the sorted pairing does too
  std::mt19937 rng(41);
  std::vector<int> demands = {4, 3, 3, 2, 2};  // K5 - P3 degrees
  for (int iter = 0; iter < 300; ++iter) {
    int n = 5 + static_cast<int>(rng() % 3);
    std::vector<int> terms(static_cast<size_t>(n));
    for (auto& v : terms) v = static_cast<int>(rng() % static_cast<unsigned>(n));
    DegreeSequence s(terms);
    std::vector<int> perm = demands;
    std::sort(perm.begin(), perm.end());
    bool any = false, sorted_ok = false;
    do {
      std::vector<int> res = s.terms();
      bool feasible = true;
      for (int i = 0; i < 5 && feasible; ++i) {
        res[static_cast<size_t>(i)] -= perm[static_cast<size_t>(i)];
        if (res[static_cast<size_t>(i)] < 0) feasible = false;
      }
      if (!feasible) continue;
      if (is_graphical_multiset(res)) {
        any = true;
        if (std::is_sorted(perm.rbegin(), perm.rend())) sorted_ok = true;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (any) CHECK(sorted_ok);
  }
}

TEST_CASE("monotonicity: the shorter removed path embeds in the longer") {
  auto p3 = SimpleGraph::km_minus_pk(5, 3);
  auto p4 = SimpleGraph::km_minus_pk(5, 4);
  CHECK(contains_subgraph(p3, p4).has_value());
  for (int n = 5; n <= 6; ++n)
    for_each_graphical_sequence(n, 0, n * (n - 1), [&](const DegreeSequence& s) {
      if (is_potentially(s, TargetSpec::family(5, 3)).verdict == Verdict::yes)
        CHECK(is_potentially(s, TargetSpec::family(5, 4)).verdict == Verdict::yes);
      return true;
    });
}

TEST_CASE("without a budget the verdict is never inconclusive") {
  for (int n = 2; n <= 6; ++n)
    for_each_graphical_sequence(n, 0, n * (n - 1), [&](const DegreeSequence& s) {
      CHECK(is_potentially(s, TargetSpec::family(5, 3)).verdict != Verdict::inconclusive);
      return true;
    });
}

TEST_CASE("tiny budget yields inconclusive on a searchable instance") {
  Budget b;
  b.max_nodes = 1;
  auto d = is_potentially(DegreeSequence::parse("4^2,3^4"), TargetSpec::family(5, 3), b);
  CHECK(d.verdict == Verdict::inconclusive);
}

TEST_CASE("decision JSON round-trips its fields") {
  auto s = DegreeSequence::parse("4^2,3^4");
  auto t = TargetSpec::family(5, 3);
  auto d = is_potentially(s, t);
  auto j = decision_to_json(s, t, d);
  CHECK(j["verdict"] == "yes");
  CHECK(DegreeSequence::parse(j["sequence"].get<std::string>()) == s);
  CHECK(j["target"]["m"] == 5);
  auto w = SimpleGraph::from_graph6(j["witness_graph6"].get<std::string>());
  CHECK(w.degree_sequence() == s);
}
