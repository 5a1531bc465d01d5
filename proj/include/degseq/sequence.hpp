#pragma once

#include <functional>
#include <string>
#include <vector>

namespace degseq {

// Non-increasing sequence of vertex degrees. Terms are sorted on
// construction; every term must lie in [0, n-1].
class DegreeSequence {
 public:
  explicit DegreeSequence(std::vector<int> terms);

  // Accepts "5,3,3,3,3,3" or exponent notation "5^1,3^5" (mixes allowed).
  static DegreeSequence parse(const std::string& text);

  int size() const { return static_cast<int>(terms_.size()); }
  int sum() const { return sum_; }
  int operator[](int i) const { return terms_[static_cast<size_t>(i)]; }
  const std::vector<int>& terms() const { return terms_; }

  // Exponent notation ("5^1,3^5") when any value repeats, plain otherwise.
  std::string format() const;

  bool operator==(const DegreeSequence&) const = default;
  bool lex_greater(const DegreeSequence& other) const;

 private:
  std::vector<int> terms_;
  int sum_ = 0;
};

struct GraphicalCheck {
  bool graphical;
  // -1 when graphical; 0 when the degree sum is odd; otherwise the
  // smallest failing prefix length of the Erdos-Gallai inequalities.
  int failure_index;
};

GraphicalCheck erdos_gallai(const std::vector<int>& sorted_desc);
GraphicalCheck erdos_gallai(const DegreeSequence& s);
bool is_graphical(const DegreeSequence& s);

// Sorts a copy, then runs the Erdos-Gallai test.
bool is_graphical_multiset(std::vector<int> terms);

// Yields every graphical non-increasing sequence of length n with
// min_sum <= sum <= max_sum, each exactly once, ordered by descending
// sum then lexicographically descending. Return false from fn to stop.
void for_each_graphical_sequence(
    int n, int min_sum, int max_sum,
    const std::function<bool(const DegreeSequence&)>& fn);

std::vector<DegreeSequence> graphical_sequences_at_sum(int n, int sum);

}  // namespace degseq
