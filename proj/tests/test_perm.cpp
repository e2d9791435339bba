#include <doctest.h>

#include <algorithm>
#include <set>

#include "sepalt/perm.hpp"
#include "sepalt/schroder.hpp"

using namespace sepalt;

namespace {

std::vector<Permutation> all_of_sn(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace

TEST_CASE("construction and text round trip") {
  const Permutation p = Permutation::parse("4 3 5 2 1 6 7");
  CHECK(p.size() == 7);
  CHECK(p.to_string() == "4 3 5 2 1 6 7");
  CHECK(Permutation::identity(3) == Permutation::parse("1 2 3"));
  CHECK_THROWS(Permutation({1, 1}));
  CHECK_THROWS(Permutation({2, 3}));
  CHECK_THROWS(Permutation({}));
}

TEST_CASE("symmetry maps") {
  CHECK(complement(Permutation::parse("1 2")) == Permutation::parse("2 1"));
  CHECK(reverse(Permutation::parse("4 3 5 2 1 6 7")) == Permutation::parse("7 6 1 2 5 3 4"));
  const Permutation q = Permutation::parse("3 1 4 2");
  CHECK(reverse_complement(reverse_complement(q)) == q);
  CHECK(reverse(reverse(q)) == q);
  CHECK(complement(complement(q)) == q);
}

TEST_CASE("direct and skew sums") {
  CHECK(direct_sum(Permutation::parse("4 3 5 2 1"), Permutation::parse("1 2")) ==
        Permutation::parse("4 3 5 2 1 6 7"));
  CHECK(skew_sum(Permutation::parse("2 1 3"), Permutation::parse("2 1")) ==
        Permutation::parse("4 3 5 2 1"));
  CHECK(direct_sum(Permutation::identity(1), Permutation::identity(1)) ==
        Permutation::parse("1 2"));
}

TEST_CASE("pattern containment") {
  const Permutation p2413 = Permutation::parse("2 4 1 3");
  CHECK(contains_pattern(p2413, p2413));
  CHECK_FALSE(contains_pattern(Permutation::parse("4 3 5 2 1 6 7"), p2413));
  CHECK_FALSE(contains_pattern(Permutation::parse("1 2 3"), Permutation::parse("2 1")));
  CHECK_FALSE(contains_pattern(Permutation::parse("1 2"), p2413));
}

TEST_CASE("separability matches pattern avoidance on small S_n") {
  const Permutation p2413 = Permutation::parse("2 4 1 3");
  const Permutation p3142 = Permutation::parse("3 1 4 2");
  CHECK(is_separable(Permutation::parse("4 3 5 2 1 6 7")));
  CHECK_FALSE(is_separable(p2413));
  for (int n = 1; n <= 6; ++n) {
    int count = 0;
    for (const auto& p : all_of_sn(n)) {
      const bool avoid = !contains_pattern(p, p2413) && !contains_pattern(p, p3142);
      CHECK(is_separable(p) == avoid);
      count += avoid ? 1 : 0;
    }
    CHECK(BigInt(count) == schroder_numbers(n)[static_cast<size_t>(n)]);
  }
}

TEST_CASE("block statistics") {
  CHECK(block_stats(Permutation::parse("3 4 2 1 7 8 9 5 6")).b_plus == 4);
  CHECK(block_stats(Permutation::parse("1 2 4 3 7 8 9 5 6")).b_plus == 1);
  CHECK(block_stats(Permutation::parse("3 2 4 5 6 1 7 8 9")).b_plus == 6);
  // for separable inputs of length >= 2, exactly one block spans everything
  for (int n = 2; n <= 6; ++n)
    for (const auto& p : enumerate_separable(n)) {
      const auto bs = block_stats(p);
      CHECK(((bs.b_plus == n) != (bs.b_minus == n)));
    }
}

TEST_CASE("enumeration counts and closure") {
  const auto s = schroder_numbers(8);
  for (int n = 1; n <= 8; ++n) {
    const auto all = enumerate_separable(n);
    CHECK(BigInt(all.size()) == s[static_cast<size_t>(n)]);
    const std::set<Permutation> uniq(all.begin(), all.end());
    CHECK(uniq.size() == all.size());
  }
  for (const auto& p : enumerate_separable(4))
    for (const auto& q : enumerate_separable(3)) {
      CHECK(is_separable(direct_sum(p, q)));
      CHECK(is_separable(skew_sum(p, q)));
    }
  CHECK_THROWS_AS((void)enumerate_separable(kEnumerationCap + 1), std::length_error);
}

TEST_CASE("plus-indecomposable enumeration") {
  const auto s = schroder_numbers(7);
  for (int n = 2; n <= 7; ++n) {
    const auto plus = enumerate_plus_indecomposable(n);
    CHECK(BigInt(2 * plus.size()) == s[static_cast<size_t>(n)]);
    for (const auto& p : plus) CHECK(block_stats(p).b_plus == n);
  }
}

TEST_CASE("symmetries act bijectively on separable classes") {
  for (int n = 2; n <= 6; ++n) {
    const auto all = enumerate_separable(n);
    std::set<Permutation> comp_img, rc_img;
    int plus_full = 0, minus_full = 0;
    for (const auto& p : all) {
      const auto c = complement(p);
      const auto rc = reverse_complement(p);
      CHECK(is_separable(c));
      CHECK(is_separable(reverse(p)));
      comp_img.insert(c);
      rc_img.insert(rc);
      if (block_stats(p).b_plus == n) {
        ++plus_full;
        CHECK(block_stats(c).b_minus == n);      // complement swaps the block types
        CHECK(block_stats(rc).b_plus == n);      // reverse-complement preserves them
      }
      if (block_stats(p).b_minus == n) ++minus_full;
    }
    CHECK(comp_img.size() == all.size());
    CHECK(rc_img.size() == all.size());
    CHECK(plus_full == minus_full);
  }
}
