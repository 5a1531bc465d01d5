#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "degseq/sequence.hpp"

namespace degseq {

inline constexpr int kMaxOrder = 64;

// Small labeled simple graph; adjacency rows are 64-bit neighbor sets.
class SimpleGraph {
 public:
  explicit SimpleGraph(int order);

  static SimpleGraph complete(int m);
  static SimpleGraph empty_of(int n);  // n isolated vertices
  static SimpleGraph join(const SimpleGraph& g, const SimpleGraph& h);

  // Path convention: P_k has k edges on k+1 vertices. K_m - P_k is
  // K_m with the edges v_i v_{i+1}, 0 <= i < k, removed. Requires m >= k+1.
  static SimpleGraph km_minus_pk(int m, int k);

  // K_{m-3} joined with n-m+3 isolated vertices; degree sequence
  // ((n-1)^{m-3}, (m-3)^{n-m+3}). Requires n >= m >= 4.
  static SimpleGraph extremal_construction(int m, int n);

  int order() const { return n_; }
  bool has_edge(int u, int v) const {
    return (adj_[static_cast<size_t>(u)] >> v) & 1u;
  }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  std::uint64_t neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
  int degree(int v) const;
  int edge_count() const;
  DegreeSequence degree_sequence() const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

  std::string to_graph6() const;
  static SimpleGraph from_graph6(const std::string& text);
  nlohmann::json to_json() const;  // {"n": ..., "edges": [[u,v], ...]}
  static SimpleGraph from_json(const nlohmann::json& j);

  bool operator==(const SimpleGraph&) const = default;

 private:
  int n_;
  std::vector<std::uint64_t> adj_;
};

// Injective map phi with uv in E(pattern) => phi(u)phi(v) in E(host)
// (non-induced containment). Backtracking over pattern vertices in
// descending-degree order with degree-compatibility pruning.
std::optional<std::vector<int>> contains_subgraph(const SimpleGraph& host,
                                                  const SimpleGraph& pattern);

// Exact maximum independent set size by branch and bound.
int independence_number(const SimpleGraph& g);

bool is_isomorphic(const SimpleGraph& g, const SimpleGraph& h);

struct KmMinusPk {
  int m;
  int k;
};

// Either the K_m - P_k family or an arbitrary pattern graph.
class TargetSpec {
 public:
  static TargetSpec family(int m, int k);
  static TargetSpec pattern(SimpleGraph g);

  const KmMinusPk* as_family() const { return std::get_if<KmMinusPk>(&spec_); }
  SimpleGraph build() const;
  std::string describe() const;  // "K5-P3" or "pattern:<graph6>"
  nlohmann::json to_json() const;

 private:
  explicit TargetSpec(std::variant<KmMinusPk, SimpleGraph> s)
      : spec_(std::move(s)) {}
  std::variant<KmMinusPk, SimpleGraph> spec_;
};

}  // namespace degseq
