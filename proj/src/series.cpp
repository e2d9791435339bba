#include "sepalt/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "sepalt/schroder.hpp"

namespace sepalt {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
}

bool all_integer(const std::vector<Rational>& v) {
  for (const auto& x : v)
    if (x.get_den() != 1) return false;
  return true;
}

// Schoolbook convolution of the first `ncoeff` coefficients.  Integer
// inputs take a pure mpz path (mpz_addmul); the general path uses mpq.
std::vector<Rational> conv(const std::vector<Rational>& a, const std::vector<Rational>& b,
                           size_t ncoeff) {
  std::vector<Rational> out(ncoeff, Rational(0));
  const size_t na = std::min(a.size(), ncoeff);
  if (all_integer(a) && all_integer(b)) {
    std::vector<BigInt> acc(ncoeff, BigInt(0));
    for (size_t i = 0; i < na; ++i) {
      if (a[i] == 0) continue;
      const mpz_srcptr ai = a[i].get_num().get_mpz_t();
      const size_t jmax = std::min(b.size(), ncoeff - i);
      for (size_t j = 0; j < jmax; ++j) {
        if (b[j] == 0) continue;
        mpz_addmul(acc[i + j].get_mpz_t(), ai, b[j].get_num().get_mpz_t());
      }
    }
    for (size_t k = 0; k < ncoeff; ++k) out[k] = Rational(acc[k]);
    return out;
  }
  Rational tmp;
  for (size_t i = 0; i < na; ++i) {
    if (a[i] == 0) continue;
    const size_t jmax = std::min(b.size(), ncoeff - i);
    for (size_t j = 0; j < jmax; ++j) {
      if (b[j] == 0) continue;
      mpq_mul(tmp.get_mpq_t(), a[i].get_mpq_t(), b[j].get_mpq_t());
      out[i + j] += tmp;
    }
  }
  return out;
}

}  // namespace

TruncatedSeries TruncatedSeries::poly(std::initializer_list<Rational> coeffs, int order) {
  TruncatedSeries f(order);
  int i = 0;
  for (const auto& c : coeffs) {
    if (i > order) break;
    f[i++] = c;
  }
  return f;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  require_same_order(*this, o);
  TruncatedSeries r = *this;
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  require_same_order(*this, o);
  TruncatedSeries r = *this;
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  require_same_order(*this, o);
  TruncatedSeries r(order());
  auto out = conv(c_, o.c_, c_.size());
  for (size_t i = 0; i < out.size(); ++i) r.c_[i] = std::move(out[i]);
  return r;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& k) const {
  TruncatedSeries r = *this;
  for (auto& x : r.c_) x *= k;
  return r;
}

TruncatedSeries TruncatedSeries::shifted(int k) const {
  TruncatedSeries r(order());
  for (int i = 0; i + k <= order(); ++i) r[i + k] = c_[static_cast<size_t>(i)];
  return r;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  TruncatedSeries r(order);
  for (int i = 0; i <= std::min(order, this->order()); ++i) r[i] = c_[static_cast<size_t>(i)];
  return r;
}

int TruncatedSeries::first_difference(const TruncatedSeries& o) const {
  const int n = std::min(order(), o.order());
  for (int i = 0; i <= n; ++i)
    if ((*this)[i] != o[i]) return i;
  return -1;
}

namespace {

// f * (short polynomial), O(N * deg).
TruncatedSeries mul_short(const TruncatedSeries& f, std::initializer_list<Rational> poly) {
  TruncatedSeries r(f.order());
  int k = 0;
  for (const auto& p : poly) {
    if (p != 0)
      for (int i = 0; i + k <= f.order(); ++i) r[i + k] += p * f[i];
    ++k;
  }
  return r;
}

}  // namespace

TruncatedSeries series_inverse(const TruncatedSeries& f) {
  if (f[0] == 0) throw std::domain_error("series_inverse requires nonzero constant term");
  const size_t N = static_cast<size_t>(f.order()) + 1;
  std::vector<Rational> g{1 / Rational(f[0])};
  size_t m = 1;
  while (m < N) {
    const size_t nm = std::min(2 * m, N);
    // e = 1 - f*g mod t^nm; first m coefficients vanish
    auto fg = conv(f.coeffs(), g, nm);
    for (auto& x : fg) x = -x;
    fg[0] += 1;
    auto corr = conv(g, fg, nm);
    g.resize(nm, Rational(0));
    for (size_t i = m; i < nm; ++i) g[i] += corr[i];
    m = nm;
  }
  TruncatedSeries r(f.order());
  for (size_t i = 0; i < N; ++i) r[static_cast<int>(i)] = std::move(g[i]);
  return r;
}

TruncatedSeries series_sqrt(const TruncatedSeries& f) {
  if (f[0] != 1) throw std::domain_error("series_sqrt requires constant term 1");
  const size_t N = static_cast<size_t>(f.order()) + 1;
  // Newton on h = f^{-1/2}: h <- h + h*(1 - f*h^2)/2, then sqrt = f*h.
  std::vector<Rational> h{1};
  size_t m = 1;
  while (m < N) {
    const size_t nm = std::min(2 * m, N);
    auto h2 = conv(h, h, nm);
    auto e = conv(f.coeffs(), h2, nm);
    for (auto& x : e) x = -x;
    e[0] += 1;
    auto corr = conv(h, e, nm);
    h.resize(nm, Rational(0));
    for (size_t i = m; i < nm; ++i) h[i] += corr[i] / 2;
    m = nm;
  }
  auto g = conv(f.coeffs(), h, N);
  TruncatedSeries r(f.order());
  for (size_t i = 0; i < N; ++i) r[static_cast<int>(i)] = std::move(g[i]);
  return r;
}

TruncatedSeries divide_linear(const TruncatedSeries& f, const Rational& d0, const Rational& d1) {
  if (d0 == 0) throw std::domain_error("divide_linear requires d0 != 0");
  TruncatedSeries g(f.order());
  g[0] = f[0] / d0;
  for (int n = 1; n <= f.order(); ++n) g[n] = (f[n] - d1 * g[n - 1]) / d0;
  return g;
}

Catalog build_catalog(int N) {
  if (N < 4) throw std::invalid_argument("catalog order must be >= 4");
  const Rational half(1, 2);

  TruncatedSeries X = series_sqrt(TruncatedSeries::poly({1, -6, 1}, N));
  // s = (1 - t - X)/2
  TruncatedSeries s = (TruncatedSeries::poly({1, -1}, N) - X).scaled(half);
  TruncatedSeries invX = series_inverse(X);

  TruncatedSeries G_pm = mul_short(invX, {0, 1, -1});  // t(1-t)/X

  // 2s + t = 1 - X
  TruncatedSeries one_minus_X = TruncatedSeries::poly({1}, N) - X;
  TruncatedSeries G_mm = one_minus_X * G_pm + mul_short(s, {0, 1});

  TruncatedSeries invX3 = (invX * invX) * invX;
  // H_pm = 2t^2(1-t)^2 X^{-3} + (-3t+8t^2-5t^3)/(t-3) X^{-1}
  //        + (t^2(1-t)/2)/(t-3) X - t^2(1-t)/2
  TruncatedSeries H_pm = mul_short(invX3, {0, 0, 2, -4, 2});
  H_pm = H_pm + divide_linear(mul_short(invX, {0, -3, 8, -5}), -3, 1);
  H_pm = H_pm + divide_linear(mul_short(X, {0, 0, half, -half}), -3, 1);
  H_pm = H_pm - TruncatedSeries::poly({0, 0, half, -half}, N);

  TruncatedSeries H_mm = one_minus_X * H_pm + mul_short(s, {0, 1}) +
                         G_pm.shifted(1).scaled(2) + (G_pm * G_pm).scaled(2);

  return Catalog{N, std::move(X), std::move(s), std::move(G_pm),
                 std::move(G_mm), std::move(H_pm), std::move(H_mm)};
}

ExactMoments exact_moments(int n, const Catalog& cat) {
  if (n < 1 || n > cat.order) throw std::length_error("n exceeds catalog order");
  if (cat.s[n].get_den() != 1) throw std::logic_error("s_n is not an integer");
  const Rational sn = cat.s[n];
  ExactMoments m;
  m.n = n;
  m.mean_pm = cat.G_pm[n] / sn;
  m.c_mm = cat.G_mm[n] / sn;
  m.secmom_pm = cat.H_pm[n] / sn;
  m.C_mm = cat.H_mm[n] / sn;
  m.var_pm = m.secmom_pm - m.mean_pm * m.mean_pm;
  return m;
}

std::vector<CheckLine> verify_identities(int N) {
  if (N < 16) throw std::invalid_argument("verify_identities requires order >= 16");
  const Rational half(1, 2);
  const Catalog cat = build_catalog(N);
  const auto& X = cat.X;
  const auto& s = cat.s;
  const auto& G_pm = cat.G_pm;

  std::vector<CheckLine> report;
  const auto check = [&](std::string id, const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    const int diff = lhs.first_difference(rhs);
    report.push_back(CheckLine{std::move(id), N, diff < 0,
                               diff < 0 ? "equal to order " + std::to_string(N)
                                        : "differs at index " + std::to_string(diff),
                               diff < 0 ? "" : rat_str(lhs[diff]) + " vs " + rat_str(rhs[diff])});
  };

  const TruncatedSeries P = TruncatedSeries::poly({1, -6, 1}, N);  // t^2-6t+1
  const TruncatedSeries Y = TruncatedSeries::poly({-3, 1}, N);     // t-3
  const TruncatedSeries s2 = s * s;

  check("X_defining", X * X, P);
  check("sgenfunc_rearranged", s.scaled(2) + TruncatedSeries::poly({0, 1}, N),
        TruncatedSeries::poly({1}, N) - X);
  check("s_squared", s2,
        (TruncatedSeries::poly({1, -4, 1}, N) - mul_short(X, {1, -1})).scaled(half));
  check("Ggenmeanform", G_pm * X, TruncatedSeries::poly({0, 1, -1}, N));

  // D = 1 - t - s - 2s^2 - ts
  const TruncatedSeries D =
      TruncatedSeries::poly({1, -1}, N) - s - s2.scaled(2) - s.shifted(1);
  check("denomG_pm", D, (P + Y * X).scaled(Rational(-1, 2)));
  check("numeratorG_pm", s2 + TruncatedSeries::poly({1}, N),
        TruncatedSeries::poly({Rational(3, 2), -2, half}, N) - mul_short(X, {half, -half}));
  check("G_pm_functional", G_pm * D, TruncatedSeries::poly({0, 1}, N) + s2.shifted(1));

  // numerator of the second-moment functional equation
  const TruncatedSeries G2 = G_pm * G_pm;
  const TruncatedSeries numH = TruncatedSeries::poly({0, 1}, N) + s2.shifted(1) +
                               (cat.G_mm * G_pm).scaled(2) + (s * G_pm).shifted(1).scaled(2) +
                               (s * G2).scaled(2);
  check("H_pm_functional", cat.H_pm * D, numH);
  // numH * (t^2-6t+1) == (3/2 t - 4t^2 + 5/2 t^3)(t^2-6t+1)
  //   - (t(1-t)/2)(t^2-6t+1) X - t^2(1-t)^2 X - t^2(1-t)^2 (t-3)
  {
    const TruncatedSeries lhs = numH * P;
    const TruncatedSeries rhs =
        TruncatedSeries::poly({0, Rational(3, 2), -4, Rational(5, 2)}, N) * P -
        (mul_short(P, {0, half, -half}) + TruncatedSeries::poly({0, 0, 1, -2, 1}, N)) * X -
        TruncatedSeries::poly({0, 0, -3, 7, -5, 1}, N);
    check("numeratorH_pm", lhs, rhs);
  }

  // 1/(X^2+YX) = 1/(YX) - 1/8 + X/(8Y), cleared by 8YX(X+Y)
  check("XY_partial_fraction", Y.scaled(8),
        (X + Y).scaled(8) - Y * X * (X + Y) + X * X * (X + Y));

  // t(-3+4t-t^2+(1-t)X) / (X^2+(t-3)X) collapses to t(1-t)/X
  check("simplification_G_pm",
        G_pm * (P + Y * X),
        mul_short(X + Y, {0, 1, -1}));

  // coefficient identity against the P-recursive route
  {
    const auto a = coeff_sequence(CoeffKind::a, N);
    const auto sn = schroder_numbers(N);
    int bad = -1;
    for (int n = 2; n <= N && bad < 0; ++n) {
      if (G_pm[n] != Rational(a[static_cast<size_t>(n - 1)] - a[static_cast<size_t>(n - 2)]))
        bad = n;
      if (bad < 0 && s[n] != Rational(sn[static_cast<size_t>(n)])) bad = n;
    }
    report.push_back(CheckLine{"coeff_vs_recurrences", N, bad < 0,
                               bad < 0 ? "G_pm[n]=a_{n-1}-a_{n-2}, s[n]=s_n for n<=" +
                                             std::to_string(N)
                                       : "differs at n=" + std::to_string(bad),
                               ""});
  }

  // Adjudicate the X-coefficient of the H_pm closed form: the shipped
  // construction (X-term (t^2(1-t)/2)/(t-3) X, forced by the functional
  // equation) against the variant with X-term t^2(1-t)/2 X.
  {
    const int M = std::min(N, 64);
    const Catalog small = build_catalog(M);
    TruncatedSeries variant = small.H_pm;
    variant = variant - divide_linear(mul_short(small.X, {0, 0, half, -half}), -3, 1);
    variant = variant + mul_short(small.X, {0, 0, half, -half});
    const int diff = small.H_pm.first_difference(variant);
    report.push_back(CheckLine{
        "H_pm_closed_form_adjudication", M, true,
        diff < 0 ? "both X-coefficient readings agree"
                 : "undivided X-term variant first differs at index " + std::to_string(diff) +
                       " (" + rat_str(small.H_pm[diff]) + " vs " + rat_str(variant[diff]) +
                       "); functional-equation-consistent construction is shipped",
        ""});
  }

  // Adjudicate the two H_mm constructions: the identity-based one
  // (shipped in the catalog) against the literal printed closed form.
  {
    const int M = std::min(N, 64);
    const Catalog small = build_catalog(M);
    const TruncatedSeries Pm = TruncatedSeries::poly({1, -6, 1}, M);
    const TruncatedSeries q3 =
        divide_linear(TruncatedSeries::poly({0, -3, 8, -5}, M), -3, 1);
    const TruncatedSeries invXm = series_inverse(small.X);
    // the printed formula refers to the printed H_pm, undivided X-term included
    TruncatedSeries literal_H_pm = small.H_pm;
    literal_H_pm = literal_H_pm - divide_linear(mul_short(small.X, {0, 0, half, -half}), -3, 1);
    literal_H_pm = literal_H_pm + mul_short(small.X, {0, 0, half, -half});
    TruncatedSeries literal = literal_H_pm - q3;
    literal = literal - mul_short(Pm, {0, 0, half, -half});          // -1/2 t^2(1-t) P
    literal = literal + mul_short(small.X, {0, 0, half, -half});     // +1/2 t^2(1-t) X
    literal = literal + TruncatedSeries::poly({0, half, -half}, M);  // +1/2 t(1-t)
    literal = literal - mul_short(Pm, {0, half});                    // -1/2 t P
    literal = literal + mul_short(invXm, {0, 0, 2, -2});             // +2t^2(1-t)/X
    const int diff = small.H_mm.first_difference(literal);
    report.push_back(CheckLine{
        "H_mm_closed_form_adjudication", M, true,
        diff < 0 ? "literal closed form agrees with identity-based construction"
                 : "literal closed form first differs at index " + std::to_string(diff) +
                       " (" + rat_str(small.H_mm[diff]) + " vs " + rat_str(literal[diff]) +
                       "); identity-based construction is shipped",
        ""});
  }

  return report;
}

}  // namespace sepalt
