#include "degseq/bruteforce.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace degseq::bruteforce {

void for_each_graph(int n, const std::function<bool(const SimpleGraph&)>& fn) {
  if (n < 1 || n > 7) throw std::invalid_argument("brute force needs 1 <= n <= 7");
  const int pairs = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
    SimpleGraph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++bit)
        if ((mask >> bit) & 1u) g.add_edge(u, v);
    if (!fn(g)) return;
  }
}

std::set<std::vector<int>> all_degree_multisets(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("brute force needs 1 <= n <= 7");
  const int pairs = n * (n - 1) / 2;
  std::set<std::vector<int>> out;
  std::vector<int> deg(static_cast<size_t>(n));
  for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
    std::fill(deg.begin(), deg.end(), 0);
    int bit = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++bit)
        if ((mask >> bit) & 1u) {
          ++deg[static_cast<size_t>(u)];
          ++deg[static_cast<size_t>(v)];
        }
    std::vector<int> sorted = deg;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    out.insert(std::move(sorted));
  }
  return out;
}

bool realization_exists(const DegreeSequence& s) {
  if (s.size() > 6) throw std::invalid_argument("brute force needs n <= 6");
  bool found = false;
  for_each_graph(s.size(), [&](const SimpleGraph& g) {
    if (g.degree_sequence() == s) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

bool contains_by_enumeration(const SimpleGraph& host, const SimpleGraph& pattern) {
  const int np = pattern.order(), nh = host.order();
  if (np > nh) return false;
  std::vector<int> map(static_cast<size_t>(np), -1);
  std::vector<bool> used(static_cast<size_t>(nh), false);
  auto rec = [&](auto&& self, int p) -> bool {
    if (p == np) {
      for (auto [u, v] : pattern.edges())
        if (!host.has_edge(map[static_cast<size_t>(u)], map[static_cast<size_t>(v)]))
          return false;
      return true;
    }
    for (int g = 0; g < nh; ++g) {
      if (used[static_cast<size_t>(g)]) continue;
      used[static_cast<size_t>(g)] = true;
      map[static_cast<size_t>(p)] = g;
      if (self(self, p + 1)) return true;
      used[static_cast<size_t>(g)] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace degseq::bruteforce
