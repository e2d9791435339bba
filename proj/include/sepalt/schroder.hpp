#pragma once

#include <vector>

#include "sepalt/numeric.hpp"

namespace sepalt {

/// s_1..s_N (big Schroeder numbers) from the first-block recursion;
/// returned 1-indexed with [0] = 0.
std::vector<BigInt> schroder_numbers(int N);

/// Exact first-block-length law over j = 1..n (index 0 unused); n >= 2.
std::vector<Rational> block_distribution(int n);

/// Coefficient families of (t^2-6t+1)^{m/2}:
///   a: m = -1, b: m = +1, alpha: m = -3.
enum class CoeffKind { a, b, alpha };

/// c_0..c_N via the three-term recurrence induced by
/// (t^2-6t+1) y' = m (t-3) y.  Exact integers.
std::vector<BigInt> coeff_sequence(CoeffKind kind, int N);

/// Exact element p + q*sqrt(2) of the quadratic extension.
struct QuadRat {
  Rational p, q;

  QuadRat operator*(const QuadRat& o) const {
    return {p * o.p + 2 * q * o.q, p * o.q + q * o.p};
  }
  bool operator==(const QuadRat&) const = default;
  Real to_real() const;
};

/// The roots of t^2 - 6t + 1 and the derived constants of the limit
/// theorems, exact in Q(sqrt(2)).
struct AsymptoticConstants {
  QuadRat r1{3, -2};                  // 3 - 2*sqrt(2), the smaller root
  QuadRat r2{3, 2};                   // 3 + 2*sqrt(2) = 1/r1
  QuadRat mean_slope{2, -1};          // 2 - sqrt(2)
  QuadRat mean_shift_pm{Rational(-3, 4), Rational(1, 2)};   // -(3-2*sqrt2)/4
  QuadRat mean_shift_mm{Rational(9, 4), Rational(-3, 2)};   // +3(3-2*sqrt2)/4
  QuadRat var_slope{8, Rational(-11, 2)};                   // (16-11*sqrt2)/2
};

/// (3-2*sqrt(2))^(-n) evaluated by expanding (3+2*sqrt(2))^n exactly in
/// the extension (no cancellation) and rounding once.
Real r1_inv_pow(long n);

enum class AsymKind {
  s_lead,
  s_refined,
  a_lead,
  a_refined,
  b_lead,
  b_refined,
  alpha_lead,
  alpha_refined,
};

/// Closed-form asymptotic value of s_n, a_n, b_n or alpha_n at n
/// (leading order or with the 1/n refinement).
Real asymptotic_value(AsymKind kind, long n);

}  // namespace sepalt
