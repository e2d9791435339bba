#include "sepalt/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "sepalt/las.hpp"
#include "sepalt/schroder.hpp"

namespace sepalt {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(std::uint64_t seed) {
  std::uint64_t x = seed;
  for (auto& w : s_) w = splitmix64(x);
}

Rng Rng::substream(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t x = seed;
  const std::uint64_t mixed = splitmix64(x) ^ (index * 0xd1342543de82ef95ULL + 1);
  return Rng(mixed);
}

std::uint64_t Rng::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

std::uint64_t Rng::bounded(std::uint64_t bound) {
  // Lemire's multiply-shift with rejection of the biased low range.
  std::uint64_t x = next();
  unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
  std::uint64_t l = static_cast<std::uint64_t>(m);
  if (l < bound) {
    const std::uint64_t t = -bound % bound;
    while (l < t) {
      x = next();
      m = static_cast<unsigned __int128>(x) * bound;
      l = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

SeparableSampler::SeparableSampler(int max_n) : max_n_(max_n) {
  if (max_n < 1) throw std::invalid_argument("max_n must be >= 1");
  const auto s = schroder_numbers(max_n);
  BigInt two128 = BigInt(1) << 128;

  block_.resize(static_cast<size_t>(max_n) + 1);
  indec_.resize(static_cast<size_t>(max_n) + 1);
  // Threshold for cumulative weight c out of denominator d: ceil(c*2^128/d);
  // a 128-bit uniform draw U selects the first outcome with U < threshold.
  const auto push_threshold = [&](std::vector<BigInt>& tab, const BigInt& cum, const BigInt& den) {
    BigInt t;
    mpz_cdiv_q(t.get_mpz_t(), BigInt(cum * two128).get_mpz_t(), den.get_mpz_t());
    tab.push_back(std::move(t));
  };
  for (int m = 2; m <= max_n; ++m) {
    // first block of a separable m-permutation: weights over j=1..m are
    // (2 s_{m-1}; s_j s_{m-j}; s_m), denominator 2 s_m
    auto& bt = block_[static_cast<size_t>(m)];
    const BigInt bden = 2 * s[static_cast<size_t>(m)];
    BigInt cum = 2 * s[static_cast<size_t>(m - 1)];
    push_threshold(bt, cum, bden);
    for (int j = 2; j <= m - 1; ++j) {
      cum += s[static_cast<size_t>(j)] * s[static_cast<size_t>(m - j)];
      push_threshold(bt, cum, bden);
    }
    cum += s[static_cast<size_t>(m)];
    push_threshold(bt, cum, bden);

    // first skew block of a plus-indecomposable m-permutation: weights
    // over k=1..m-1 are (2 s_{m-1}; s_k s_{m-k}), denominator s_m
    auto& it = indec_[static_cast<size_t>(m)];
    const BigInt& iden = s[static_cast<size_t>(m)];
    cum = 2 * s[static_cast<size_t>(m - 1)];
    push_threshold(it, cum, iden);
    for (int k = 2; k <= m - 1; ++k) {
      cum += s[static_cast<size_t>(k)] * s[static_cast<size_t>(m - k)];
      push_threshold(it, cum, iden);
    }
  }
}

int SeparableSampler::pick(const std::vector<BigInt>& thresholds, Rng& rng) const {
  BigInt u = rng.next();
  u <<= 64;
  u += rng.next();
  const auto it = std::upper_bound(thresholds.begin(), thresholds.end(), u);
  return static_cast<int>(it - thresholds.begin()) + 1;
}

void SeparableSampler::gen_sep(int m, int pos, int lo, std::vector<int>& out, Rng& rng) const {
  if (m == 1) {
    out[static_cast<size_t>(pos)] = lo;
    return;
  }
  const int j = pick(block_[static_cast<size_t>(m)], rng);
  if (j == m) {
    gen_plus_indec(m, pos, lo, out, rng);
  } else {
    gen_plus_indec(j, pos, lo, out, rng);
    gen_sep(m - j, pos + j, lo + j, out, rng);
  }
}

void SeparableSampler::gen_plus_indec(int m, int pos, int lo, std::vector<int>& out,
                                      Rng& rng) const {
  if (m == 1) {
    out[static_cast<size_t>(pos)] = lo;
    return;
  }
  // plus-indecomposable <=> skew-decomposable for m >= 2: first skew block
  // (skew-indecomposable) takes the top values, the rest sits below it
  const int k = pick(indec_[static_cast<size_t>(m)], rng);
  gen_skew_indec(k, pos, lo + (m - k), out, rng);
  gen_sep(m - k, pos + k, lo, out, rng);
}

void SeparableSampler::gen_skew_indec(int m, int pos, int lo, std::vector<int>& out,
                                      Rng& rng) const {
  if (m == 1) {
    out[static_cast<size_t>(pos)] = lo;
    return;
  }
  // mirror image: first plus block (plus-indecomposable) takes the bottom
  // values, the rest sits above it
  const int j = pick(indec_[static_cast<size_t>(m)], rng);
  gen_plus_indec(j, pos, lo, out, rng);
  gen_sep(m - j, pos + j, lo + j, out, rng);
}

Permutation SeparableSampler::sample(int n, Rng& rng) const {
  if (n < 1 || n > max_n_) throw std::length_error("n out of sampler range");
  std::vector<int> vals(static_cast<size_t>(n));
  gen_sep(n, 0, 1, vals, rng);
  return Permutation(std::move(vals));
}

Permutation SeparableSampler::sample_uniform(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::vector<int> vals(static_cast<size_t>(n));
  std::iota(vals.begin(), vals.end(), 1);
  for (int i = n - 1; i > 0; --i)
    std::swap(vals[static_cast<size_t>(i)],
              vals[static_cast<size_t>(rng.bounded(static_cast<std::uint64_t>(i) + 1))]);
  return Permutation(std::move(vals));
}

namespace {

struct FlavorSums {
  std::uint64_t sum = 0;
  unsigned __int128 sumsq = 0;

  void add(int v) {
    sum += static_cast<std::uint64_t>(v);
    sumsq += static_cast<unsigned __int128>(v) * static_cast<unsigned __int128>(v);
  }
  FlavorSums& operator+=(const FlavorSums& o) {
    sum += o.sum;
    sumsq += o.sumsq;
    return *this;
  }
};

struct WorkerSums {
  FlavorSums overall, pp, pm, mp, mm;

  void add(const AltProfile& a) {
    overall.add(a.overall);
    pp.add(a.pp);
    pm.add(a.pm);
    mp.add(a.mp);
    mm.add(a.mm);
  }
  WorkerSums& operator+=(const WorkerSums& o) {
    overall += o.overall;
    pp += o.pp;
    pm += o.pm;
    mp += o.mp;
    mm += o.mm;
    return *this;
  }
};

FlavorEstimate finish(const FlavorSums& f, std::uint64_t n) {
  FlavorEstimate e;
  const double sum = static_cast<double>(f.sum);
  const double sumsq = static_cast<double>(f.sumsq);
  const double num = static_cast<double>(n);
  e.mean = sum / num;
  e.variance = (sumsq - sum * sum / num) / (num - 1.0);
  if (e.variance < 0) e.variance = 0;  // guard against rounding
  e.stderr_mean = std::sqrt(e.variance / num);
  return e;
}

}  // namespace

McEstimate mc_stats(int n, std::uint64_t samples, std::uint64_t seed, int workers,
                    const std::string& ensemble) {
  if (samples < 2) throw std::domain_error("need at least 2 samples");
  if (workers < 1) throw std::domain_error("need at least 1 worker");
  const bool separable = ensemble == "separable";
  if (!separable && ensemble != "uniform") throw std::domain_error("unknown ensemble: " + ensemble);

  const SeparableSampler* sampler = nullptr;
  SeparableSampler owned(1);
  if (separable) {
    owned = SeparableSampler(n);
    sampler = &owned;
  }

  std::vector<WorkerSums> partial(static_cast<size_t>(workers));
  const auto run_worker = [&](int w) {
    const std::uint64_t base = samples / static_cast<std::uint64_t>(workers);
    const std::uint64_t extra = samples % static_cast<std::uint64_t>(workers);
    const std::uint64_t budget = base + (static_cast<std::uint64_t>(w) < extra ? 1 : 0);
    Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(w));
    WorkerSums sums;
    for (std::uint64_t i = 0; i < budget; ++i) {
      const Permutation p =
          separable ? sampler->sample(n, rng) : SeparableSampler::sample_uniform(n, rng);
      sums.add(alt_profile(p));
    }
    partial[static_cast<size_t>(w)] = sums;
  };

  if (workers == 1) {
    run_worker(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) threads.emplace_back(run_worker, w);
    for (auto& t : threads) t.join();
  }

  WorkerSums total;
  for (const auto& p : partial) total += p;

  McEstimate e;
  e.n = n;
  e.ensemble = ensemble;
  e.samples = samples;
  e.seed = seed;
  e.workers = workers;
  e.overall = finish(total.overall, samples);
  e.pp = finish(total.pp, samples);
  e.pm = finish(total.pm, samples);
  e.mp = finish(total.mp, samples);
  e.mm = finish(total.mm, samples);
  return e;
}

std::string McEstimate::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["ensemble"] = ensemble;
  j["samples"] = samples;
  j["seed"] = seed;
  j["workers"] = workers;
  const auto put = [&](const char* name, const FlavorEstimate& f) {
    j["flavors"][name] = {
        {"mean", f.mean}, {"variance", f.variance}, {"stderr", f.stderr_mean}};
  };
  put("overall", overall);
  put("pp", pp);
  put("pm", pm);
  put("mp", mp);
  put("mm", mm);
  return j.dump(2);
}

}  // namespace sepalt
