#include <doctest.h>

#include <algorithm>

#include "sepalt/las.hpp"
#include "sepalt/perm.hpp"

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

bool is_alternating(const Permutation& p) {
  for (int i = 2; i < p.size(); ++i)
    if ((p[i] > p[i - 1]) == (p[i - 1] > p[i - 2])) return false;
  return true;
}

}  // namespace

TEST_CASE("worked examples") {
  const auto a = alt_profile(Permutation::parse("3 4 2 1 7 8 9 5 6"));
  CHECK(a.pp == 6);
  CHECK(a.mp == 5);
  CHECK(alt_profile(Permutation::parse("1 2 4 3 7 8 9 5 6")).pp == 6);
  CHECK(alt_profile(Permutation::parse("3 2 4 5 6 1 7 8 9")).pp == 4);
  CHECK(alt_profile(Permutation::parse("1 4 5 6 7 8 9 2 3")).mp == 3);
}

TEST_CASE("singleton and pair conventions") {
  CHECK(alt_profile(Permutation::identity(1)) == AltProfile{1, 0, 1, 1, 0});
  CHECK(alt_profile_bruteforce(Permutation::identity(1)) == AltProfile{1, 0, 1, 1, 0});
  const auto a12 = alt_profile(Permutation::parse("1 2"));
  CHECK(a12.pp == 2);
  CHECK(a12.pm == 1);
  CHECK(a12.mp == 1);
  CHECK(a12.mm == 0);
  CHECK(alt_profile(Permutation::parse("2 1")).mm == 2);
  CHECK(alt_profile(Permutation::parse("1 3 2")).pm == 3);
}

TEST_CASE("fast profile equals brute force on S_6") {
  for (const auto& p : all_of_sn(6)) CHECK(alt_profile(p) == alt_profile_bruteforce(p));
}

TEST_CASE("parity and range invariants") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : all_of_sn(n)) {
      const auto a = alt_profile(p);
      CHECK(a.pp % 2 == 0);
      CHECK(a.mm % 2 == 0);
      CHECK(a.pm % 2 == 1);
      CHECK(a.mp % 2 == 1);
      CHECK(a.overall == std::max({a.pp, a.pm, a.mp, a.mm}));
      CHECK(a.overall - std::min({a.pp, a.pm, a.mp, a.mm}) <= 2);
      CHECK(a.overall >= 1);
      CHECK(a.overall <= n);
      CHECK((a.overall == n) == is_alternating(p));
    }
}

TEST_CASE("flavor symmetries under complement and reversal") {
  for (const auto& p : all_of_sn(6)) {
    const auto a = alt_profile(p);
    const auto ac = alt_profile(complement(p));
    CHECK(a.pp == ac.mm);
    CHECK(a.pm == ac.mp);
    CHECK(a.pm == alt_profile(reverse(p)).pm);
    CHECK(a.pm == alt_profile(reverse_complement(p)).mp);
  }
}

TEST_CASE("brute force capacity") {
  CHECK_THROWS_AS((void)alt_profile_bruteforce(Permutation::identity(kBruteForceCap + 1)),
                  std::length_error);
}

TEST_CASE("moment table values") {
  const auto t2 = moment_table(2);
  CHECK(t2.mm.c == 2);
  CHECK(t2.mm.C2 == 4);
  CHECK(t2.pm.C2 == 1);
  CHECK(moment_table(3).pm.mean == Rational(5, 3));
}

TEST_CASE("conditional moments obey the complement identities") {
  for (int n = 1; n <= 7; ++n) {
    const auto t = moment_table(n);
    CHECK(t.pp.d == t.mm.c);
    CHECK(t.mm.d == t.pp.c);
    CHECK(t.pm.d == t.mp.c);
    CHECK(t.mp.c == t.pm.c);
    CHECK(t.mp.d == t.pm.c);
    CHECK(t.pp.D2 == t.mm.C2);
    CHECK(t.mm.D2 == t.pp.C2);
    CHECK(t.pm.D2 == t.mp.C2);
    CHECK(t.mp.C2 == t.pm.C2);
    for (const auto* f : {&t.pp, &t.pm, &t.mp, &t.mm}) {
      CHECK(f->mean == (f->c + f->d) / 2);
      CHECK(f->secmom == (f->C2 + f->D2) / 2);
    }
    CHECK(t.pm.mean == t.pm.c);
  }
}

TEST_CASE("structure report passes for small n") {
  for (int n = 3; n <= 6; ++n) {
    const auto rep = verify_structure(n);
    CHECK(rep.size() >= 8);
    for (const auto& line : rep) {
      INFO(line.identity, " n=", n, " lhs=", line.lhs, " rhs=", line.rhs);
      CHECK(line.pass);
    }
  }
  CHECK_THROWS(verify_structure(2));
}
