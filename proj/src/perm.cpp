#include "sepalt/perm.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sepalt {

Permutation::Permutation(std::vector<int> values) : vals_(std::move(values)) {
  if (vals_.empty()) throw std::invalid_argument("permutation must have length >= 1");
  std::vector<int> sorted = vals_;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i) + 1)
      throw std::invalid_argument("values are not a bijection of {1..n}");
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
  return Permutation(std::move(v));
}

Permutation Permutation::parse(const std::string& line) {
  std::istringstream is(line);
  std::vector<int> v;
  int x;
  while (is >> x) v.push_back(x);
  return Permutation(std::move(v));
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < vals_.size(); ++i) {
    if (i) os << ' ';
    os << vals_[i];
  }
  return os.str();
}

Permutation reverse(const Permutation& p) {
  std::vector<int> v(p.values().rbegin(), p.values().rend());
  return Permutation(std::move(v));
}

Permutation complement(const Permutation& p) {
  const int n = p.size();
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = n + 1 - p[i];
  return Permutation(std::move(v));
}

Permutation reverse_complement(const Permutation& p) { return complement(reverse(p)); }

Permutation direct_sum(const Permutation& p, const Permutation& q) {
  std::vector<int> v = p.values();
  v.reserve(static_cast<size_t>(p.size() + q.size()));
  for (int x : q.values()) v.push_back(x + p.size());
  return Permutation(std::move(v));
}

Permutation skew_sum(const Permutation& p, const Permutation& q) {
  std::vector<int> v;
  v.reserve(static_cast<size_t>(p.size() + q.size()));
  for (int x : p.values()) v.push_back(x + q.size());
  for (int x : q.values()) v.push_back(x);
  return Permutation(std::move(v));
}

namespace {

bool contains_rec(std::span<const int> p, std::span<const int> pat_rank, size_t pos,
                  std::vector<int>& chosen) {
  const size_t k = pat_rank.size();
  if (chosen.size() == k) {
    // order-isomorphism: ranks of chosen must equal pattern ranks
    for (size_t i = 0; i < k; ++i) {
      int rank = 0;
      for (size_t j = 0; j < k; ++j)
        if (chosen[j] < chosen[i]) ++rank;
      if (rank != pat_rank[i]) return false;
    }
    return true;
  }
  if (p.size() - pos < k - chosen.size()) return false;
  for (size_t i = pos; i < p.size(); ++i) {
    chosen.push_back(p[i]);
    if (contains_rec(p, pat_rank, i + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool contains_pattern(const Permutation& p, const Permutation& pattern) {
  if (pattern.size() > p.size()) return false;
  std::vector<int> pat_rank(static_cast<size_t>(pattern.size()));
  for (int i = 0; i < pattern.size(); ++i) pat_rank[static_cast<size_t>(i)] = pattern[i] - 1;
  std::vector<int> chosen;
  chosen.reserve(pat_rank.size());
  return contains_rec(p.span(), pat_rank, 0, chosen);
}

namespace {

// Values in [l, r) are guaranteed contiguous by the interval splitting.
bool separable_range(std::span<const int> v, int l, int r) {
  const int len = r - l;
  if (len <= 1) return true;
  int lo = v[static_cast<size_t>(l)], hi = lo;
  // proper prefixes only: k+1 = 1 .. len-1
  for (int k = 0; k < len - 1; ++k) {
    if (k > 0) {
      const int x = v[static_cast<size_t>(l + k)];
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
    if (hi - lo != k) continue;  // prefix of length k+1 is not a value interval
    // prefix must hug one end of the full value range
    int full_lo = lo, full_hi = hi;
    for (int j = l + k + 1; j < r; ++j) {
      full_lo = std::min(full_lo, v[static_cast<size_t>(j)]);
      full_hi = std::max(full_hi, v[static_cast<size_t>(j)]);
    }
    if (lo != full_lo && hi != full_hi) continue;
    return separable_range(v, l, l + k + 1) && separable_range(v, l + k + 1, r);
  }
  return false;
}

}  // namespace

bool is_separable(const Permutation& p) { return separable_range(p.span(), 0, p.size()); }

BlockStats block_stats(std::span<const int> v) {
  const int n = static_cast<int>(v.size());
  BlockStats bs{n, n};
  int mx = 0;
  for (int j = 0; j < n; ++j) {
    mx = std::max(mx, v[static_cast<size_t>(j)]);
    if (mx == j + 1) {
      bs.b_plus = j + 1;
      break;
    }
  }
  int mn = n + 1;
  for (int k = 0; k < n; ++k) {
    mn = std::min(mn, v[static_cast<size_t>(k)]);
    if (mn == n - k) {
      bs.b_minus = k + 1;
      break;
    }
  }
  return bs;
}

BlockStats block_stats(const Permutation& p) { return block_stats(p.span()); }

namespace {

struct EnumTables {
  // sep[n]: all of SEP(n); plus[n]: plus-indecomposable ones;
  // skew[n]: skew-indecomposable ones.
  std::vector<std::vector<Permutation>> sep, plus, skew;

  explicit EnumTables(int cap) {
    sep.resize(static_cast<size_t>(cap) + 1);
    plus.resize(static_cast<size_t>(cap) + 1);
    skew.resize(static_cast<size_t>(cap) + 1);
    sep[1] = plus[1] = skew[1] = {Permutation::identity(1)};
    for (int n = 2; n <= cap; ++n) {
      // plus-indecomposable of length n = skew-indec block (size k) over SEP(n-k)
      for (int k = 1; k < n; ++k)
        for (const auto& head : skew[static_cast<size_t>(k)])
          for (const auto& tail : sep[static_cast<size_t>(n - k)])
            plus[static_cast<size_t>(n)].push_back(skew_sum(head, tail));
      // skew-indecomposable of length n = plus-indec block (size k) before SEP(n-k)
      for (int k = 1; k < n; ++k)
        for (const auto& head : plus[static_cast<size_t>(k)])
          for (const auto& tail : sep[static_cast<size_t>(n - k)])
            skew[static_cast<size_t>(n)].push_back(direct_sum(head, tail));
      // SEP(n): first indecomposable block of size j, j = 1..n
      for (int j = 1; j < n; ++j)
        for (const auto& head : plus[static_cast<size_t>(j)])
          for (const auto& tail : sep[static_cast<size_t>(n - j)])
            sep[static_cast<size_t>(n)].push_back(direct_sum(head, tail));
      for (const auto& p : plus[static_cast<size_t>(n)]) sep[static_cast<size_t>(n)].push_back(p);
    }
  }
};

const EnumTables& enum_tables() {
  static const EnumTables tables(kEnumerationCap);
  return tables;
}

void check_cap(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n > kEnumerationCap)
    throw std::length_error("enumeration capacity exceeded (cap " +
                            std::to_string(kEnumerationCap) + ")");
}

}  // namespace

std::vector<Permutation> enumerate_separable(int n) {
  check_cap(n);
  return enum_tables().sep[static_cast<size_t>(n)];
}

std::vector<Permutation> enumerate_plus_indecomposable(int n) {
  check_cap(n);
  return enum_tables().plus[static_cast<size_t>(n)];
}

}  // namespace sepalt
