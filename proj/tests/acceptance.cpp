// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Shares one order-2048 catalog across the series-based checks.

#include <algorithm>
#include <cmath>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sepalt/las.hpp"
#include "sepalt/numeric.hpp"
#include "sepalt/perm.hpp"
#include "sepalt/sampler.hpp"
#include "sepalt/schroder.hpp"
#include "sepalt/series.hpp"

using namespace sepalt;

namespace {

int failures = 0;

void result(int idx, const std::string& name, bool pass, const std::string& detail) {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << idx << " [" << name << "]"
            << (detail.empty() ? "" : ": " + detail) << std::endl;
  if (!pass) ++failures;
}

std::vector<Permutation> all_of_sn(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

double dbl(const Real& x) { return static_cast<double>(x); }

}  // namespace

int main() {
  init_precision();
  const AsymptoticConstants konst;
  const Real sqrt2 = sqrt(Real(2));

  // ---- 1: counting -------------------------------------------------------
  {
    const auto s = schroder_numbers(10);
    const long expected[] = {0, 1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098};
    bool ok = true;
    for (int n = 1; n <= 10; ++n) ok = ok && s[static_cast<size_t>(n)] == expected[n];
    const Permutation p2413 = Permutation::parse("2 4 1 3");
    const Permutation p3142 = Permutation::parse("3 1 4 2");
    for (int n = 1; n <= 8 && ok; ++n) {
      ok = ok && BigInt(enumerate_separable(n).size()) == s[static_cast<size_t>(n)];
      long filtered = 0;
      for (const auto& p : all_of_sn(n))
        if (!contains_pattern(p, p2413) && !contains_pattern(p, p3142)) ++filtered;
      ok = ok && BigInt(filtered) == s[static_cast<size_t>(n)];
    }
    result(1, "counting", ok,
           "recursion, direct enumeration and 2413/3142 filtering agree for n <= 8");
  }

  // ---- 2: LAS oracle equivalence ----------------------------------------
  {
    bool ok = true;
    for (const auto& p : all_of_sn(7)) ok = ok && alt_profile(p) == alt_profile_bruteforce(p);
    const auto a = alt_profile(Permutation::parse("3 4 2 1 7 8 9 5 6"));
    ok = ok && a.pp == 6 && a.mp == 5;
    ok = ok && alt_profile(Permutation::parse("1 2 4 3 7 8 9 5 6")).pp == 6;
    ok = ok && alt_profile(Permutation::parse("3 2 4 5 6 1 7 8 9")).pp == 4;
    ok = ok && alt_profile(Permutation::parse("1 4 5 6 7 8 9 2 3")).mp == 3;
    result(2, "las oracle", ok, "linear pass equals brute force on all of S_7");
  }

  // ---- 3: symmetry suite --------------------------------------------------
  {
    bool ok = true;
    for (int n = 1; n <= 7 && ok; ++n) {
      const auto all = enumerate_separable(n);
      std::set<Permutation> comp_img;
      for (const auto& p : all) {
        const auto c = complement(p);
        const auto rc = reverse_complement(p);
        const auto a = alt_profile(p);
        const auto ac = alt_profile(c);
        ok = ok && a.pp == ac.mm && a.pm == ac.mp;
        ok = ok && a.pm == alt_profile(reverse(p)).pm;
        ok = ok && a.pm == alt_profile(rc).mp;
        ok = ok && is_separable(c) && is_separable(reverse(p));
        comp_img.insert(c);
        if (n >= 2 && block_stats(p).b_plus == n)
          ok = ok && block_stats(c).b_minus == n && block_stats(rc).b_plus == n;
      }
      ok = ok && comp_img.size() == all.size();
    }
    result(3, "symmetries", ok, "flavor identities and block bijections on SEP(n), n <= 7");
  }

  // ---- 4: recursion suite -------------------------------------------------
  {
    bool ok = true;
    std::string first_fail;
    for (int n = 3; n <= 8; ++n)
      for (const auto& line : verify_structure(n))
        if (!line.pass) {
          ok = false;
          if (first_fail.empty())
            first_fail = line.identity + " at n=" + std::to_string(n);
        }
    result(4, "recursions", ok,
           ok ? "count, block law, mean/second-moment recursions and both "
                "distributional identities exact for n = 3..8"
              : first_fail);
  }

  const Catalog cat = build_catalog(2048);

  // ---- 5: generating-function ground truth --------------------------------
  {
    bool ok = true;
    for (int n = 1; n <= 8 && ok; ++n) {
      const auto mt = moment_table(n);
      const auto em = exact_moments(n, cat);
      ok = em.mean_pm == mt.pm.c && em.c_mm == mt.mm.c && em.secmom_pm == mt.pm.C2 &&
           em.C_mm == mt.mm.C2;
    }
    const auto a = coeff_sequence(CoeffKind::a, 500);
    for (int n = 2; n <= 500 && ok; ++n)
      ok = cat.G_pm[n] == Rational(a[static_cast<size_t>(n - 1)] - a[static_cast<size_t>(n - 2)]);
    result(5, "series ground truth", ok,
           "coefficients equal enumeration moments (n <= 8) and the difference "
           "sequence a_{n-1} - a_{n-2} (n <= 500)");
  }

  // ---- 6: refined mean constant -------------------------------------------
  {
    const Real shift = konst.mean_shift_pm.to_real();  // -(3-2*sqrt2)/4
    const auto gap = [&](int n) -> Real {
      return abs(to_real(exact_moments(n, cat).mean_pm) - konst.mean_slope.to_real() * n - shift);
    };
    const Real g500 = gap(500), g2000 = gap(2000);
    const bool ok = g500 < 0.005 && g2000 < 0.002;
    std::ostringstream os;
    os << "|mean - (2-sqrt2)n + (3-2sqrt2)/4| = " << dbl(g500) << " at n=500, " << dbl(g2000)
       << " at n=2000";
    result(6, "mean constant", ok, os.str());
  }

  // ---- 7: variance constant -----------------------------------------------
  {
    const Real target = konst.var_slope.to_real();  // (16-11*sqrt2)/2
    std::vector<Real> dev;
    for (int n : {250, 500, 1000, 2000})
      dev.push_back(abs(to_real(exact_moments(n, cat).var_pm) / n - target));
    bool ok = dev[3] < 0.01;
    for (size_t i = 1; i < dev.size(); ++i) ok = ok && dev[i] < dev[i - 1];
    std::ostringstream os;
    os << "|var/n - (16-11sqrt2)/2| at n=250,500,1000,2000: " << dbl(dev[0]) << ", " << dbl(dev[1])
       << ", " << dbl(dev[2]) << ", " << dbl(dev[3]);
    result(7, "variance constant", ok, os.str());
  }

  // ---- 8: appendix asymptotics ---------------------------------------------
  {
    const auto s = schroder_numbers(2000);
    const auto a = coeff_sequence(CoeffKind::a, 2000);
    const auto b = coeff_sequence(CoeffKind::b, 2000);
    const auto alpha = coeff_sequence(CoeffKind::alpha, 2000);
    const std::vector<int> ns = {250, 500, 1000, 2000};
    bool ok = true;
    std::string detail = "ratio to leading term within 0.002 at n=2000 and refined "
                         "residual * n decreasing for s, a, b, alpha";
    const auto run = [&](const char* name, const std::vector<BigInt>& seq, AsymKind lead,
                         AsymKind refined) {
      const Real lead_ratio =
          to_real(seq[2000]) / asymptotic_value(lead, 2000);
      if (!(abs(lead_ratio - 1) < 0.002)) {
        ok = false;
        detail = std::string(name) + ": leading-order ratio off at n=2000";
      }
      Real prev(-1);
      for (int n : ns) {
        const Real res =
            abs(to_real(seq[static_cast<size_t>(n)]) / asymptotic_value(refined, n) - 1) * n;
        if (prev >= 0 && !(res < prev)) {
          ok = false;
          detail = std::string(name) + ": refined residual * n not decreasing at n=" +
                   std::to_string(n);
        }
        prev = res;
      }
      if (!(prev < 0.01)) {
        ok = false;
        detail = std::string(name) + ": refined residual * n too large at n=2000";
      }
    };
    run("s", s, AsymKind::s_lead, AsymKind::s_refined);
    run("a", a, AsymKind::a_lead, AsymKind::a_refined);
    run("b", b, AsymKind::b_lead, AsymKind::b_refined);
    run("alpha", alpha, AsymKind::alpha_lead, AsymKind::alpha_refined);
    result(8, "asymptotics", ok, detail);
  }

  // ---- 9: sampler correctness ----------------------------------------------
  {
    bool ok = true;
    std::ostringstream os;
    const auto chisq = [&](int n, int draws) {
      const auto cells = enumerate_separable(n);
      std::map<Permutation, int> freq;
      SeparableSampler sampler(n);
      Rng rng(20240817u + static_cast<unsigned>(n));
      for (int i = 0; i < draws; ++i) {
        const auto p = sampler.sample(n, rng);
        if (!is_separable(p)) ok = false;
        ++freq[p];
      }
      const double expect = double(draws) / double(cells.size());
      double stat = 0;
      for (const auto& c : cells) {
        const double diff = freq[c] - expect;
        stat += diff * diff / expect;
      }
      return stat;
    };
    const double s5 = chisq(5, 90000);
    const double s6 = chisq(6, 400000);
    ok = ok && s5 < 135 && s6 < 520;

    SeparableSampler big(200);
    Rng rng(7);
    for (int i = 0; i < 10000; ++i)
      if (!is_separable(big.sample(200, rng))) ok = false;

    const auto e1 = mc_stats(80, 5000, 11, 2, "separable");
    const auto e2 = mc_stats(80, 5000, 11, 2, "separable");
    ok = ok && e1.to_json() == e2.to_json();

    os << "chi-square " << s5 << " (n=5, 90 cells), " << s6
       << " (n=6, 394 cells); all draws separable; reruns bit-identical";
    result(9, "sampler", ok, os.str());
  }

  // ---- 10: Monte Carlo vs theory --------------------------------------------
  {
    bool ok = true;
    std::ostringstream os;
    const auto est = mc_stats(1000, 10000, 424242, 4, "separable");
    const double exact_mean = dbl(to_real(exact_moments(1000, cat).mean_pm));
    const double mean_gap = std::abs(est.pm.mean - exact_mean);
    ok = ok && mean_gap <= 3 * est.pm.stderr_mean;
    const double var_slope = dbl(konst.var_slope.to_real());
    ok = ok && std::abs(est.pm.variance / 1000 - var_slope) < 0.1 * var_slope;
    // The translation by 3-2*sqrt2 relates the conditional means: the pp
    // mean over the skew-indecomposable half against the pm mean over the
    // plus-indecomposable half.  (Unconditionally the two flavor means
    // coincide in the limit, by complement symmetry.)  Estimate the gap
    // with a paired difference on each draw -- mm-pm on the direct-sum
    // side, pp-mp on the skew side, which the complement bijection maps
    // to the same conditional quantity.  Both differences are +/-1
    // pointwise, so the estimator has variance at most 1 regardless of n.
    const double shift = dbl(3 - 2 * sqrt2);
    double cond_diff = 0;
    {
      SeparableSampler sampler(1000);
      Rng rng(1234);
      long diff_sum = 0;
      const int draws = 30000;
      for (int i = 0; i < draws; ++i) {
        const auto p = sampler.sample(1000, rng);
        const auto prof = alt_profile(p);
        if (block_stats(p).b_plus == 1000)
          diff_sum += prof.mm - prof.pm;
        else
          diff_sum += prof.pp - prof.mp;
      }
      cond_diff = double(diff_sum) / double(draws);
    }
    ok = ok && std::abs(cond_diff - shift) < 0.05;

    const auto uni = mc_stats(10000, 10000, 99, 4, "uniform");
    const double uratio = uni.overall.mean / 10000.0;
    ok = ok && std::abs(uratio - 2.0 / 3.0) < 0.02 * (2.0 / 3.0) + 1e-12;

    os << "separable n=1000: mean gap " << mean_gap << " (3se = " << 3 * est.pm.stderr_mean
       << "), var/n = " << est.pm.variance / 1000 << ", conditional pp-pm shift = "
       << cond_diff << "; uniform n=10^4: mean/n = " << uratio;
    result(10, "monte carlo", ok, os.str());
  }

  // ---- 11: closed-form adjudication ------------------------------------------
  {
    bool ok = true;
    std::string stated = "(missing)";
    for (const auto& line : verify_identities(64)) {
      if (!line.pass) ok = false;
      if (line.identity == "H_mm_closed_form_adjudication") stated = line.lhs;
    }
    ok = ok && stated.find("index 2") != std::string::npos;
    for (int n = 1; n <= 8 && ok; ++n)
      ok = exact_moments(n, cat).C_mm == moment_table(n).mm.C2;
    result(11, "closed-form adjudication", ok, stated);
  }

  if (failures) std::cout << failures << " criterion(s) failed" << std::endl;
  return failures == 0 ? 0 : 1;
}
