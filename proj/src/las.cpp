#include "sepalt/las.hpp"

#include <algorithm>
#include <stdexcept>

namespace sepalt {

AltProfile alt_profile(std::span<const int> v) {
  const int n = static_cast<int>(v.size());
  if (n == 0) throw std::invalid_argument("empty sequence");
  if (n == 1) return AltProfile{1, 0, 1, 1, 0};

  // Compress into the zigzag of local extrema: m extrema, first step s,
  // last step e.  A longest (f,l)-subsequence is the extrema zigzag
  // trimmed at the ends whose step type disagrees.
  bool s = v[1] > v[0];
  bool last = s;
  int m = 2;
  for (int i = 2; i < n; ++i) {
    const bool d = v[static_cast<size_t>(i)] > v[static_cast<size_t>(i - 1)];
    if (d != last) {
      ++m;
      last = d;
    }
  }
  const bool e = last;

  const auto len = [&](bool f, bool l) { return m - (f != s ? 1 : 0) - (l != e ? 1 : 0); };
  AltProfile r;
  r.pp = std::max(len(true, true), 0);
  r.mm = std::max(len(false, false), 0);
  r.pm = std::max(len(true, false), 1);
  r.mp = std::max(len(false, true), 1);
  r.overall = std::max({r.pp, r.pm, r.mp, r.mm});
  return r;
}

AltProfile alt_profile(const Permutation& p) { return alt_profile(p.span()); }

AltProfile alt_profile_bruteforce(const Permutation& p) {
  const int n = p.size();
  if (n > kBruteForceCap) throw std::length_error("brute-force capacity exceeded");
  AltProfile r{1, 0, 1, 1, 0};
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    int vals[kBruteForceCap];
    int k = 0;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) vals[k++] = p[i];
    if (k < 2) continue;
    bool alternating = true;
    for (int i = 2; i < k && alternating; ++i)
      alternating = (vals[i] > vals[i - 1]) != (vals[i - 1] > vals[i - 2]);
    if (!alternating) continue;
    const bool f = vals[1] > vals[0];
    const bool l = vals[k - 1] > vals[k - 2];
    int& slot = f ? (l ? r.pp : r.pm) : (l ? r.mp : r.mm);
    slot = std::max(slot, k);
  }
  r.overall = std::max({r.pp, r.pm, r.mp, r.mm});
  return r;
}

namespace {

struct FlavorSums {
  BigInt plus_sum = 0, plus_sq = 0;  // over {B1+ = n}
  BigInt minus_sum = 0, minus_sq = 0;

  void add(int value, bool plus_side, bool minus_side) {
    const long v = value;
    if (plus_side) {
      plus_sum += v;
      plus_sq += v * v;
    }
    if (minus_side) {
      minus_sum += v;
      minus_sq += v * v;
    }
  }

  FlavorMoments finish(const BigInt& plus_count, const BigInt& minus_count) const {
    FlavorMoments fm;
    fm.c = Rational(plus_sum, plus_count);
    fm.d = Rational(minus_sum, minus_count);
    fm.C2 = Rational(plus_sq, plus_count);
    fm.D2 = Rational(minus_sq, minus_count);
    fm.c.canonicalize();
    fm.d.canonicalize();
    fm.C2.canonicalize();
    fm.D2.canonicalize();
    fm.mean = (fm.c + fm.d) / 2;
    fm.secmom = (fm.C2 + fm.D2) / 2;
    return fm;
  }
};

}  // namespace

MomentTable moment_table(int n) {
  const auto all = enumerate_separable(n);
  FlavorSums pp, pm, mp, mm;
  BigInt plus_count = 0, minus_count = 0;
  for (const auto& p : all) {
    const auto bs = block_stats(p);
    const bool plus_side = bs.b_plus == n;
    const bool minus_side = bs.b_minus == n;
    if (!plus_side && !minus_side) continue;
    const auto prof = alt_profile(p);
    if (plus_side) plus_count += 1;
    if (minus_side) minus_count += 1;
    pp.add(prof.pp, plus_side, minus_side);
    pm.add(prof.pm, plus_side, minus_side);
    mp.add(prof.mp, plus_side, minus_side);
    mm.add(prof.mm, plus_side, minus_side);
  }
  MomentTable t;
  t.n = n;
  t.count = BigInt(static_cast<unsigned long>(all.size()));
  t.pp = pp.finish(plus_count, minus_count);
  t.pm = pm.finish(plus_count, minus_count);
  t.mp = mp.finish(plus_count, minus_count);
  t.mm = mm.finish(plus_count, minus_count);
  return t;
}

namespace {

using Dist = std::vector<Rational>;  // index = length, entries sum to 1

enum class Flavor { pp, pm, mp, mm };

int flavor_value(const AltProfile& p, Flavor f) {
  switch (f) {
    case Flavor::pp: return p.pp;
    case Flavor::pm: return p.pm;
    case Flavor::mp: return p.mp;
    case Flavor::mm: return p.mm;
  }
  return 0;
}

Dist distribution(const std::vector<const Permutation*>& perms, Flavor f, int max_len) {
  Dist d(static_cast<size_t>(max_len) + 1, Rational(0));
  for (const auto* p : perms) d[static_cast<size_t>(flavor_value(alt_profile(*p), f))] += 1;
  const Rational total(static_cast<unsigned long>(perms.size()));
  for (auto& x : d) x /= total;
  return d;
}

Dist convolve(const Dist& a, const Dist& b, int max_len) {
  Dist d(static_cast<size_t>(max_len) + 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      d.at(i + j) += a[i] * b[j];
    }
  }
  return d;
}

std::string dist_str(const Dist& d) {
  std::string s = "(";
  for (size_t i = 0; i < d.size(); ++i) {
    if (i) s += ", ";
    s += rat_str(d[i]);
  }
  return s + ")";
}

std::vector<const Permutation*> ptrs(const std::vector<Permutation>& v) {
  std::vector<const Permutation*> out;
  out.reserve(v.size());
  for (const auto& p : v) out.push_back(&p);
  return out;
}

}  // namespace

std::vector<CheckLine> verify_structure(int n) {
  if (n < 3) throw std::invalid_argument("verify_structure requires n >= 3");
  std::vector<CheckLine> report;
  const auto check = [&](std::string id, const Rational& lhs, const Rational& rhs) {
    report.push_back(CheckLine{std::move(id), n, lhs == rhs, rat_str(lhs), rat_str(rhs)});
  };

  std::vector<MomentTable> mt(static_cast<size_t>(n) + 1);
  std::vector<Rational> s(static_cast<size_t>(n) + 1, Rational(0));
  for (int j = 1; j <= n; ++j) {
    mt[static_cast<size_t>(j)] = moment_table(j);
    s[static_cast<size_t>(j)] = Rational(mt[static_cast<size_t>(j)].count);
  }
  const auto c_pm = [&](int j) { return mt[static_cast<size_t>(j)].pm.c; };
  const auto c_mm = [&](int j) { return mt[static_cast<size_t>(j)].mm.c; };
  const auto C_pm = [&](int j) { return mt[static_cast<size_t>(j)].pm.C2; };
  const auto C_mm = [&](int j) { return mt[static_cast<size_t>(j)].mm.C2; };

  // count recursion
  {
    Rational rhs = s[1] * s[static_cast<size_t>(n - 1)] + s[static_cast<size_t>(n)] / 2;
    for (int j = 2; j <= n - 1; ++j)
      rhs += s[static_cast<size_t>(j)] * s[static_cast<size_t>(n - j)] / 2;
    check("rec", s[static_cast<size_t>(n)], rhs);
  }

  // block-length law against enumerated counts
  {
    std::vector<BigInt> count(static_cast<size_t>(n) + 1, BigInt(0));
    for (const auto& p : enumerate_separable(n)) count[static_cast<size_t>(block_stats(p).b_plus)] += 1;
    bool ok = true;
    std::string lhs, rhs;
    for (int j = 1; j <= n; ++j) {
      Rational expected = j == 1   ? s[1] * s[static_cast<size_t>(n - 1)] / s[static_cast<size_t>(n)]
                          : j == n ? Rational(1, 2)
                                   : s[static_cast<size_t>(j)] * s[static_cast<size_t>(n - j)] /
                                         (2 * s[static_cast<size_t>(n)]);
      Rational observed = Rational(count[static_cast<size_t>(j)]) / s[static_cast<size_t>(n)];
      observed.canonicalize();
      if (j > 1) {
        lhs += " ";
        rhs += " ";
      }
      lhs += rat_str(observed);
      rhs += rat_str(expected);
      ok = ok && observed == expected;
    }
    report.push_back(CheckLine{"Bprob", n, ok, lhs, rhs});
  }

  // mean recursions
  {
    Rational rhs = s[static_cast<size_t>(n - 1)] / s[static_cast<size_t>(n)] * (1 + c_pm(n - 1));
    for (int j = 2; j <= n - 1; ++j)
      rhs += s[static_cast<size_t>(j)] * s[static_cast<size_t>(n - j)] /
             (2 * s[static_cast<size_t>(n)]) * (c_pm(j) + c_pm(n - j));
    check("keypair_mm", c_mm(n) / 2, rhs);
  }
  {
    Rational rhs = s[static_cast<size_t>(n - 1)] / s[static_cast<size_t>(n)] * c_pm(n - 1);
    for (int j = 2; j <= n - 1; ++j)
      rhs += s[static_cast<size_t>(j)] * s[static_cast<size_t>(n - j)] /
             (2 * s[static_cast<size_t>(n)]) * (c_mm(j) + c_pm(n - j));
    check("keypair_pm", c_pm(n) / 2, rhs);
  }

  // second-moment recursions
  {
    Rational rhs = s[static_cast<size_t>(n - 1)] * (2 + 4 * c_pm(n - 1) + 2 * C_pm(n - 1));
    for (int j = 2; j <= n - 1; ++j)
      rhs += s[static_cast<size_t>(j)] * s[static_cast<size_t>(n - j)] *
             (C_pm(j) + 2 * c_pm(j) * c_pm(n - j) + C_pm(n - j));
    check("varrecur_mm", s[static_cast<size_t>(n)] * C_mm(n), rhs);
  }
  {
    Rational rhs = 2 * s[static_cast<size_t>(n - 1)] * C_pm(n - 1);
    for (int j = 2; j <= n - 1; ++j)
      rhs += s[static_cast<size_t>(j)] * s[static_cast<size_t>(n - j)] *
             (C_mm(j) + 2 * c_mm(j) * c_pm(n - j) + C_pm(n - j));
    check("varrecur_pm", s[static_cast<size_t>(n)] * C_pm(n), rhs);
  }

  // distributional convolution identities, full exact distributions
  {
    // SEP(n) partitioned by first-block length
    std::vector<std::vector<const Permutation*>> by_block(static_cast<size_t>(n) + 1);
    const auto& all = enumerate_separable(n);
    for (const auto& p : all) by_block[static_cast<size_t>(block_stats(p).b_plus)].push_back(&p);

    for (const bool pp_case : {true, false}) {
      bool ok = true;
      std::string detail = "all j";
      for (int j = 1; j <= n - 1 && ok; ++j) {
        const auto head_perms = enumerate_plus_indecomposable(j);
        const auto tail_perms = enumerate_separable(n - j);
        const auto head = ptrs(head_perms);
        const auto tail = ptrs(tail_perms);
        const Dist lhs = distribution(by_block[static_cast<size_t>(j)],
                                      pp_case ? Flavor::pp : Flavor::mp, n);
        const Dist rhs = convolve(distribution(head, pp_case ? Flavor::pm : Flavor::mm, j),
                                  distribution(tail, Flavor::mp, n - j), n);
        if (lhs != rhs) {
          ok = false;
          detail = "j=" + std::to_string(j) + ": " + dist_str(lhs) + " vs " + dist_str(rhs);
        }
      }
      report.push_back(CheckLine{pp_case ? "conv_pp" : "conv_mp", n, ok,
                                 ok ? "distributions equal" : detail,
                                 "convolution of conditioned marginals"});
    }
  }

  return report;
}

}  // namespace sepalt
