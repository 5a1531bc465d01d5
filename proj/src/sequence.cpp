#include "degseq/sequence.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace degseq {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

int parse_int(const std::string& tok) {
  if (tok.empty()) throw std::invalid_argument("empty token in sequence");
  size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(tok, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed token '" + tok + "'");
  }
  if (pos != tok.size())
    throw std::invalid_argument("malformed token '" + tok + "'");
  if (v < -1000000 || v > 1000000)
    throw std::invalid_argument("token out of range '" + tok + "'");
  return static_cast<int>(v);
}

}  // namespace

DegreeSequence::DegreeSequence(std::vector<int> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw std::invalid_argument("sequence must be non-empty");
  std::sort(terms_.begin(), terms_.end(), std::greater<int>());
  const int n = static_cast<int>(terms_.size());
  for (int t : terms_) {
    if (t < 0) throw std::invalid_argument("negative degree in sequence");
    if (t > n - 1)
      throw std::invalid_argument("degree " + std::to_string(t) +
                                  " needs more than " + std::to_string(n) +
                                  " vertices");
    sum_ += t;
  }
}

DegreeSequence DegreeSequence::parse(const std::string& text) {
  std::vector<int> terms;
  std::stringstream ss(text);
  std::string tok;
  bool any = false;
  while (std::getline(ss, tok, ',')) {
    any = true;
    tok = trim(tok);
    size_t caret = tok.find('^');
    if (caret == std::string::npos) {
      terms.push_back(parse_int(tok));
    } else {
      int value = parse_int(trim(tok.substr(0, caret)));
      int count = parse_int(trim(tok.substr(caret + 1)));
      if (count < 1)
        throw std::invalid_argument("exponent must be positive in '" + tok + "'");
      terms.insert(terms.end(), static_cast<size_t>(count), value);
    }
  }
  if (!any || text.empty() || text.back() == ',')
    throw std::invalid_argument("empty token in sequence");
  return DegreeSequence(std::move(terms));
}

std::string DegreeSequence::format() const {
  // runs of equal values; exponent style iff some value repeats
  std::vector<std::pair<int, int>> runs;
  for (int t : terms_) {
    if (!runs.empty() && runs.back().first == t)
      ++runs.back().second;
    else
      runs.emplace_back(t, 1);
  }
  bool repeats = false;
  for (auto& [v, c] : runs) repeats |= c > 1;
  std::string out;
  for (size_t i = 0; i < runs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(runs[i].first);
    if (repeats) out += '^' + std::to_string(runs[i].second);
  }
  return out;
}

bool DegreeSequence::lex_greater(const DegreeSequence& other) const {
  return std::lexicographical_compare(other.terms_.begin(), other.terms_.end(),
                                      terms_.begin(), terms_.end());
}

GraphicalCheck erdos_gallai(const std::vector<int>& d) {
  const int n = static_cast<int>(d.size());
  long sum = std::accumulate(d.begin(), d.end(), 0L);
  if (sum % 2 != 0) return {false, 0};
  long lhs = 0;
  for (int k = 1; k <= n; ++k) {
    lhs += d[static_cast<size_t>(k - 1)];
    long rhs = static_cast<long>(k) * (k - 1);
    for (int i = k; i < n; ++i) rhs += std::min(d[static_cast<size_t>(i)], k);
    if (lhs > rhs) return {false, k};
  }
  return {true, -1};
}

GraphicalCheck erdos_gallai(const DegreeSequence& s) {
  return erdos_gallai(s.terms());
}

bool is_graphical(const DegreeSequence& s) { return erdos_gallai(s).graphical; }

bool is_graphical_multiset(std::vector<int> terms) {
  std::sort(terms.begin(), terms.end(), std::greater<int>());
  return erdos_gallai(terms).graphical;
}

namespace {

// Non-increasing compositions of `remaining` into the open slots,
// descending-lex order, Erdos-Gallai filter at the leaves.
bool emit_level(int n, std::vector<int>& buf, int i, int prev, int remaining,
                const std::function<bool(const DegreeSequence&)>& fn) {
  const int slots = n - i;
  if (slots == 0) {
    if (remaining != 0) return true;
    if (!erdos_gallai(buf).graphical) return true;
    return fn(DegreeSequence(buf));
  }
  int hi = std::min(prev, remaining);
  int lo = (remaining + slots - 1) / slots;  // ceil; ensures completability
  for (int v = hi; v >= lo; --v) {
    buf[static_cast<size_t>(i)] = v;
    if (!emit_level(n, buf, i + 1, v, remaining - v, fn)) return false;
  }
  return true;
}

}  // namespace

void for_each_graphical_sequence(
    int n, int min_sum, int max_sum,
    const std::function<bool(const DegreeSequence&)>& fn) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (min_sum < 0 || min_sum > max_sum || max_sum > n * (n - 1))
    throw std::invalid_argument("sum range out of bounds");
  std::vector<int> buf(static_cast<size_t>(n));
  for (int sum = max_sum; sum >= min_sum; --sum) {
    if (sum % 2 != 0) continue;  // graphical sums are even
    if (!emit_level(n, buf, 0, n - 1, sum, fn)) return;
  }
}

std::vector<DegreeSequence> graphical_sequences_at_sum(int n, int sum) {
  std::vector<DegreeSequence> out;
  for_each_graphical_sequence(n, sum, sum, [&](const DegreeSequence& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

}  // namespace degseq
