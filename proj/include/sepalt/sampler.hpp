#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sepalt/numeric.hpp"
#include "sepalt/perm.hpp"

namespace sepalt {

/// xoshiro256** with splitmix64 state initialization.  Substreams for
/// parallel work are derived by seeding splitmix64 with a mix of the
/// root seed and the stream index.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  static Rng substream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next();
  /// Unbiased draw in [0, bound), bound >= 1 (Lemire rejection).
  std::uint64_t bounded(std::uint64_t bound);

 private:
  std::uint64_t s_[4];
};

/// Exactly uniform generation over SEP(n) by the first-block law.
/// Branch probabilities are exact rationals; each discrete choice is an
/// inverse transform comparing a uniform 128-bit draw against cached
/// integer thresholds (cumulative probability scaled by 2^128).
class SeparableSampler {
 public:
  explicit SeparableSampler(int max_n);

  int max_n() const { return max_n_; }

  Permutation sample(int n, Rng& rng) const;

  /// Uniform over all of S_n (Fisher-Yates baseline).
  static Permutation sample_uniform(int n, Rng& rng);

 private:
  int pick(const std::vector<BigInt>& thresholds, Rng& rng) const;
  void gen_sep(int m, int pos, int lo, std::vector<int>& out, Rng& rng) const;
  void gen_plus_indec(int m, int pos, int lo, std::vector<int>& out, Rng& rng) const;
  void gen_skew_indec(int m, int pos, int lo, std::vector<int>& out, Rng& rng) const;

  int max_n_;
  // block_[m][j-1]: cumulative thresholds for the first-block length of a
  // separable m-permutation, outcomes j = 1..m.
  // indec_[m][k-1]: thresholds for the first skew block of a
  // plus-indecomposable m-permutation, outcomes k = 1..m-1 (by symmetry
  // also the first plus block of a skew-indecomposable one).
  std::vector<std::vector<BigInt>> block_, indec_;
};

struct FlavorEstimate {
  double mean = 0.0;
  double variance = 0.0;  // unbiased sample variance
  double stderr_mean = 0.0;
};

struct McEstimate {
  int n = 0;
  std::string ensemble;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  int workers = 0;
  FlavorEstimate overall, pp, pm, mp, mm;

  std::string to_json() const;
};

/// Deterministic parallel Monte Carlo over the chosen ensemble
/// ("separable" or "uniform").  The sample budget is split across
/// workers; worker w uses substream (seed, w); results merge in worker
/// order, so fixed (n, samples, seed, workers, ensemble) reproduces
/// bit-identical estimates.
McEstimate mc_stats(int n, std::uint64_t samples, std::uint64_t seed, int workers,
                    const std::string& ensemble);

}  // namespace sepalt
