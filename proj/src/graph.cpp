#include "degseq/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace degseq {

SimpleGraph::SimpleGraph(int order) : n_(order) {
  if (order < 1 || order > kMaxOrder)
    throw std::invalid_argument("graph order must be in [1, 64]");
  adj_.assign(static_cast<size_t>(order), 0);
}

SimpleGraph SimpleGraph::complete(int m) {
  SimpleGraph g(m);
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v) g.add_edge(u, v);
  return g;
}

SimpleGraph SimpleGraph::empty_of(int n) { return SimpleGraph(n); }

SimpleGraph SimpleGraph::join(const SimpleGraph& g, const SimpleGraph& h) {
  const int ng = g.order(), nh = h.order();
  if (ng + nh > kMaxOrder)
    throw std::invalid_argument("join exceeds the 64-vertex limit");
  SimpleGraph out(ng + nh);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(ng + u, ng + v);
  for (int u = 0; u < ng; ++u)
    for (int v = 0; v < nh; ++v) out.add_edge(u, ng + v);
  return out;
}

SimpleGraph SimpleGraph::km_minus_pk(int m, int k) {
  if (k < 1 || m < k + 1)
    throw std::invalid_argument("K_m - P_k requires m >= k + 1 and k >= 1");
  SimpleGraph g = complete(m);
  for (int i = 0; i < k; ++i) g.remove_edge(i, i + 1);
  return g;
}

SimpleGraph SimpleGraph::extremal_construction(int m, int n) {
  if (m < 4 || n < m)
    throw std::invalid_argument("extremal construction requires n >= m >= 4");
  return join(complete(m - 3), empty_of(n - m + 3));
}

void SimpleGraph::add_edge(int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("bad edge endpoints");
  adj_[static_cast<size_t>(u)] |= 1ull << v;
  adj_[static_cast<size_t>(v)] |= 1ull << u;
}

void SimpleGraph::remove_edge(int u, int v) {
  adj_[static_cast<size_t>(u)] &= ~(1ull << v);
  adj_[static_cast<size_t>(v)] &= ~(1ull << u);
}

int SimpleGraph::degree(int v) const {
  return std::popcount(adj_[static_cast<size_t>(v)]);
}

int SimpleGraph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

DegreeSequence SimpleGraph::degree_sequence() const {
  std::vector<int> d(static_cast<size_t>(n_));
  for (int v = 0; v < n_; ++v) d[static_cast<size_t>(v)] = degree(v);
  return DegreeSequence(std::move(d));
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

std::string SimpleGraph::to_graph6() const {
  std::string out;
  if (n_ <= 62) {
    out.push_back(static_cast<char>(n_ + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n_ >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n_ >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n_ & 63) + 63));
  }
  int bits = 0, cur = 0;
  for (int v = 1; v < n_; ++v) {
    for (int u = 0; u < v; ++u) {
      cur = (cur << 1) | (has_edge(u, v) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(cur + 63));
        bits = 0;
        cur = 0;
      }
    }
  }
  if (bits) out.push_back(static_cast<char>((cur << (6 - bits)) + 63));
  return out;
}

SimpleGraph SimpleGraph::from_graph6(const std::string& text) {
  size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= text.size()) throw std::invalid_argument("truncated graph6");
    int c = static_cast<unsigned char>(text[pos++]);
    if (c < 63 || c > 126) throw std::invalid_argument("bad graph6 byte");
    return c - 63;
  };
  int n;
  int first = next();
  if (first == 63) {  // '~' prefix: 18-bit order
    n = (next() << 12) | (next() << 6) | next();
  } else {
    n = first;
  }
  if (n < 1 || n > kMaxOrder)
    throw std::invalid_argument("graph6 order out of supported range");
  SimpleGraph g(n);
  int bits = 0, cur = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (bits == 0) {
        cur = next();
        bits = 6;
      }
      if ((cur >> (bits - 1)) & 1) g.add_edge(u, v);
      --bits;
    }
  }
  if (pos != text.size()) throw std::invalid_argument("trailing graph6 bytes");
  return g;
}

nlohmann::json SimpleGraph::to_json() const {
  nlohmann::json e = nlohmann::json::array();
  for (auto [u, v] : edges()) e.push_back({u, v});
  return {{"n", n_}, {"edges", e}};
}

SimpleGraph SimpleGraph::from_json(const nlohmann::json& j) {
  SimpleGraph g(j.at("n").get<int>());
  for (const auto& e : j.at("edges"))
    g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
  return g;
}

std::optional<std::vector<int>> contains_subgraph(const SimpleGraph& host,
                                                  const SimpleGraph& pattern) {
  const int np = pattern.order(), nh = host.order();
  if (np > nh) return std::nullopt;

  std::vector<int> order(static_cast<size_t>(np));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return pattern.degree(a) > pattern.degree(b);
  });

  std::vector<int> map(static_cast<size_t>(np), -1);
  std::uint64_t used = 0;

  auto rec = [&](auto&& self, int level) -> bool {
    if (level == np) return true;
    int p = order[static_cast<size_t>(level)];
    for (int g = 0; g < nh; ++g) {
      if ((used >> g) & 1u) continue;
      if (host.degree(g) < pattern.degree(p)) continue;
      bool ok = true;
      std::uint64_t nbrs = pattern.neighbors(p);
      while (nbrs) {
        int q = std::countr_zero(nbrs);
        nbrs &= nbrs - 1;
        int mq = map[static_cast<size_t>(q)];
        if (mq >= 0 && !host.has_edge(mq, g)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map[static_cast<size_t>(p)] = g;
      used |= 1ull << g;
      if (self(self, level + 1)) return true;
      used &= ~(1ull << g);
      map[static_cast<size_t>(p)] = -1;
    }
    return false;
  };

  if (!rec(rec, 0)) return std::nullopt;
  return map;
}

namespace {

void mis_rec(const SimpleGraph& g, std::uint64_t cand, int cur, int& best) {
  if (cur + std::popcount(cand) <= best) return;
  if (!cand) {
    best = std::max(best, cur);
    return;
  }
  // branch on the candidate with the most candidate-neighbors
  int pick = -1, pick_deg = -1;
  std::uint64_t rest = cand;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    int d = std::popcount(g.neighbors(v) & cand);
    if (d > pick_deg) {
      pick_deg = d;
      pick = v;
    }
  }
  if (pick_deg > 0) mis_rec(g, cand & ~(1ull << pick), cur, best);
  mis_rec(g, cand & ~(g.neighbors(pick) | (1ull << pick)), cur + 1, best);
}

}  // namespace

int independence_number(const SimpleGraph& g) {
  int best = 0;
  std::uint64_t all =
      g.order() == 64 ? ~0ull : ((1ull << g.order()) - 1);
  mis_rec(g, all, 0, best);
  return best;
}

bool is_isomorphic(const SimpleGraph& g, const SimpleGraph& h) {
  if (g.order() != h.order()) return false;
  if (g.edge_count() != h.edge_count()) return false;
  if (!(g.degree_sequence() == h.degree_sequence())) return false;
  // an edge-preserving bijection with equal edge counts is an isomorphism
  return contains_subgraph(g, h).has_value();
}

TargetSpec TargetSpec::family(int m, int k) {
  if (k < 1 || m < k + 1)
    throw std::invalid_argument("K_m - P_k requires m >= k + 1 and k >= 1");
  if (m > kMaxOrder) throw std::invalid_argument("m exceeds the order limit");
  return TargetSpec(KmMinusPk{m, k});
}

TargetSpec TargetSpec::pattern(SimpleGraph g) { return TargetSpec(std::move(g)); }

SimpleGraph TargetSpec::build() const {
  if (auto* f = as_family()) return SimpleGraph::km_minus_pk(f->m, f->k);
  return std::get<SimpleGraph>(spec_);
}

std::string TargetSpec::describe() const {
  if (auto* f = as_family())
    return "K" + std::to_string(f->m) + "-P" + std::to_string(f->k);
  return "pattern:" + std::get<SimpleGraph>(spec_).to_graph6();
}

nlohmann::json TargetSpec::to_json() const {
  if (auto* f = as_family()) return {{"m", f->m}, {"k", f->k}};
  return {{"pattern_graph6", std::get<SimpleGraph>(spec_).to_graph6()}};
}

}  // namespace degseq
