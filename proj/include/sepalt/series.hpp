#pragma once

#include <initializer_list>
#include <vector>

#include "sepalt/numeric.hpp"
#include "sepalt/report.hpp"

namespace sepalt {

/// Formal power series over Q truncated at a fixed order: coefficients
/// c_0..c_N, all arithmetic exact modulo t^{N+1}.  Dense representation.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order) : c_(static_cast<size_t>(order) + 1, Rational(0)) {}

  /// Polynomial c_0 + c_1 t + ... padded with zeros to the given order.
  static TruncatedSeries poly(std::initializer_list<Rational> coeffs, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  Rational& operator[](int i) { return c_[static_cast<size_t>(i)]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool operator==(const TruncatedSeries&) const = default;

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries scaled(const Rational& k) const;
  TruncatedSeries shifted(int k) const;  // * t^k
  TruncatedSeries truncated(int order) const;

  /// First index at which *this and o differ, or -1 if equal up to the
  /// common order.
  int first_difference(const TruncatedSeries& o) const;

 private:
  std::vector<Rational> c_;
};

/// g with g*g = f mod t^{N+1}; requires c_0 = 1 (branch +1).  Newton
/// iteration on the inverse square root, order doubling per step.
TruncatedSeries series_sqrt(const TruncatedSeries& f);

/// g with g*f = 1 mod t^{N+1}; requires c_0 != 0.
TruncatedSeries series_inverse(const TruncatedSeries& f);

/// f / (d0 + d1 t) by back-substitution, O(N); requires d0 != 0.
TruncatedSeries divide_linear(const TruncatedSeries& f, const Rational& d0, const Rational& d1);

/// The named series of the moment analysis:
///   X      = sqrt(t^2 - 6t + 1)
///   s      = (1 - t - X)/2                      (counts)
///   G_pm   = t(1-t)/X                           (s_n * conditional mean, (+,-))
///   G_mm   = (2s+t) G_pm + t s                  ((-,-))
///   H_pm   = closed form with X^{-3}, X^{-1}, X (second moments, (+,-))
///   H_mm   = (2s+t) H_pm + t s + 2t G_pm + 2 G_pm^2
struct Catalog {
  int order;
  TruncatedSeries X, s, G_pm, G_mm, H_pm, H_mm;
};

Catalog build_catalog(int N);

struct ExactMoments {
  int n;
  Rational mean_pm;    // t^n[G_pm]/s_n
  Rational c_mm;       // t^n[G_mm]/s_n
  Rational secmom_pm;  // t^n[H_pm]/s_n
  Rational C_mm;       // t^n[H_mm]/s_n
  Rational var_pm;     // secmom_pm - mean_pm^2
};

ExactMoments exact_moments(int n, const Catalog& cat);

/// Checks every algebraic identity between the catalog series to order N
/// (clearing denominators, never dividing by non-units), plus the
/// comparison between the two constructions of H_mm (the identity-based
/// one and the literal printed closed form, which differ; the report
/// names the first differing coefficient).
std::vector<CheckLine> verify_identities(int N);

}  // namespace sepalt
