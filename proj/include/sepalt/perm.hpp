#pragma once

#include <span>
#include <string>
#include <vector>

namespace sepalt {

/// A permutation of {1..n} in one-line notation.  Immutable after
/// construction; the constructor rejects anything that is not a
/// bijection of {1..n}.
class Permutation {
 public:
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);
  static Permutation parse(const std::string& line);

  int size() const { return static_cast<int>(vals_.size()); }
  int operator[](int i) const { return vals_[static_cast<size_t>(i)]; }
  const std::vector<int>& values() const { return vals_; }
  std::span<const int> span() const { return vals_; }

  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& o) const { return vals_ < o.vals_; }

  /// Space-separated one-line notation, e.g. "4 3 5 2 1 6 7".
  std::string to_string() const;

 private:
  std::vector<int> vals_;
};

/// Lengths of the first indecomposable and first skew-indecomposable
/// blocks.  For a separable permutation of length n >= 2 exactly one of
/// the two equals n.
struct BlockStats {
  int b_plus;
  int b_minus;
};

Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);
Permutation reverse_complement(const Permutation& p);

Permutation direct_sum(const Permutation& p, const Permutation& q);
Permutation skew_sum(const Permutation& p, const Permutation& q);

/// Brute-force containment oracle; intended for |pattern| <= 4, |p| <= 12.
bool contains_pattern(const Permutation& p, const Permutation& pattern);

/// Recursive block-splitting test, O(n^2) worst case.  Equivalent to
/// avoiding both 2413 and 3142.
bool is_separable(const Permutation& p);

BlockStats block_stats(const Permutation& p);
BlockStats block_stats(std::span<const int> values);

inline constexpr int kEnumerationCap = 10;

/// All separable permutations of length n, generated directly by the
/// first-block recursion (no filtering of S_n).  Throws std::length_error
/// above kEnumerationCap.
std::vector<Permutation> enumerate_separable(int n);

/// All separable permutations of length n whose first indecomposable
/// block has length exactly n (the plus-indecomposable ones).
std::vector<Permutation> enumerate_plus_indecomposable(int n);

}  // namespace sepalt
