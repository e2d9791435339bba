#pragma once

#include <span>
#include <vector>

#include "sepalt/numeric.hpp"
#include "sepalt/perm.hpp"
#include "sepalt/report.hpp"

namespace sepalt {

/// Longest alternating subsequence lengths, typed by (first step, last
/// step).  A singleton counts as type (+,-) and (-,+) of length 1, and
/// as neither (+,+) nor (-,-); hence a_pp/a_mm are even and a_pm/a_mp
/// odd.
struct AltProfile {
  int overall = 0;
  int pp = 0;  ///< begins and ends with an ascent
  int pm = 0;  ///< ascent ... descent
  int mp = 0;  ///< descent ... ascent
  int mm = 0;  ///< begins and ends with a descent

  bool operator==(const AltProfile&) const = default;
};

/// Single left-to-right pass, O(n).
AltProfile alt_profile(std::span<const int> values);
AltProfile alt_profile(const Permutation& p);

inline constexpr int kBruteForceCap = 12;

/// Exhaustive subsequence enumeration; test oracle, |p| <= kBruteForceCap.
AltProfile alt_profile_bruteforce(const Permutation& p);

/// Exact conditional / unconditional moments of one LAS flavor over
/// SEP(n).  c/C condition on {B1+ = n}, d/D on {B1- = n}.
struct FlavorMoments {
  Rational c, d;        // conditional first moments
  Rational C2, D2;      // conditional second moments
  Rational mean, secmom;
};

struct MomentTable {
  int n = 0;
  BigInt count;  // s_n
  FlavorMoments pp, pm, mp, mm;
};

/// Full enumeration of SEP(n) partitioned by block statistics.
MomentTable moment_table(int n);

/// Verifies, in exact rational arithmetic for one n: the count
/// recursion, the block-length law, both mean recursions, both
/// second-moment recursions, and the two distributional convolution
/// identities (as equality of full distributions).
std::vector<CheckLine> verify_structure(int n);

}  // namespace sepalt
