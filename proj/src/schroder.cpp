#include "sepalt/schroder.hpp"

#include <stdexcept>

namespace sepalt {

std::vector<BigInt> schroder_numbers(int N) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  std::vector<BigInt> s(static_cast<size_t>(N) + 1);
  s[0] = 0;
  s[1] = 1;
  // s_n = 2 s_1 s_{n-1} + sum_{j=2}^{n-1} s_j s_{n-j}
  for (int n = 2; n <= N; ++n) {
    BigInt acc = 2 * s[static_cast<size_t>(n - 1)];
    for (int j = 2; j <= n - 1; ++j)
      acc += s[static_cast<size_t>(j)] * s[static_cast<size_t>(n - j)];
    s[static_cast<size_t>(n)] = acc;
  }
  return s;
}

std::vector<Rational> block_distribution(int n) {
  if (n < 2) throw std::domain_error("block_distribution requires n >= 2");
  const auto s = schroder_numbers(n);
  std::vector<Rational> p(static_cast<size_t>(n) + 1, Rational(0));
  p[1] = Rational(s[static_cast<size_t>(n - 1)], s[static_cast<size_t>(n)]);
  p[1].canonicalize();
  for (int j = 2; j <= n - 1; ++j) {
    auto& pj = p[static_cast<size_t>(j)];
    pj = Rational(s[static_cast<size_t>(j)] * s[static_cast<size_t>(n - j)],
                  2 * s[static_cast<size_t>(n)]);
    pj.canonicalize();
  }
  p[static_cast<size_t>(n)] = Rational(1, 2);
  return p;
}

std::vector<BigInt> coeff_sequence(CoeffKind kind, int N) {
  if (N < 2) throw std::invalid_argument("N must be >= 2");
  // (t^2-6t+1) y' = m (t-3) y  gives
  //   (n+1) c_{n+1} = (6n - 3m) c_n + (m - n + 1) c_{n-1}
  long m;
  BigInt c1;
  switch (kind) {
    case CoeffKind::a: m = -1; c1 = 3; break;
    case CoeffKind::b: m = 1; c1 = -3; break;
    case CoeffKind::alpha: m = -3; c1 = 9; break;
    default: throw std::domain_error("unknown coefficient kind");
  }
  std::vector<BigInt> c(static_cast<size_t>(N) + 1);
  c[0] = 1;
  c[1] = c1;
  for (long n = 1; n < N; ++n) {
    BigInt num = (6 * n - 3 * m) * c[static_cast<size_t>(n)] +
                 (m - n + 1) * c[static_cast<size_t>(n - 1)];
    if (!mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(n + 1)))
      throw std::logic_error("coefficient recurrence produced a non-integer");
    c[static_cast<size_t>(n + 1)] = num / (n + 1);
  }
  return c;
}

Real QuadRat::to_real() const {
  return sepalt::to_real(p) + sepalt::to_real(q) * sqrt(Real(2));
}

Real r1_inv_pow(long n) {
  if (n < 0) throw std::domain_error("n must be >= 0");
  init_precision();
  // (3+2*sqrt2)^n = P + Q*sqrt2 with P, Q >= 0: no cancellation on rounding.
  BigInt P = 1, Q = 0, bp = 3, bq = 2;
  long e = n;
  while (e > 0) {
    if (e & 1) {
      BigInt np = P * bp + 2 * Q * bq;
      Q = P * bq + Q * bp;
      P = np;
    }
    BigInt sp = bp * bp + 2 * bq * bq;
    bq = 2 * bp * bq;
    bp = sp;
    e >>= 1;
  }
  return to_real(P) + to_real(Q) * sqrt(Real(2));
}

namespace {

Real pi_value() {
  init_precision();
  Real r;
  r.precision(Real::default_precision());
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

struct Env {
  Real sqrt2 = sqrt(Real(2));
  Real sqrtpi = sqrt(pi_value());
  Real r1 = 3 - 2 * sqrt2;
  Real sqrt_r1 = sqrt(r1);
  Real p14 = pow(Real(2), Real(1) / 4);
  Real p34 = pow(Real(2), Real(3) / 4);
  Real p54 = pow(Real(2), Real(5) / 4);
};

Real powi2(const Real& n, int twice_exp) {  // n^{twice_exp/2}
  return pow(n, Real(twice_exp) / 2);
}

}  // namespace

Real asymptotic_value(AsymKind kind, long n) {
  if (n < 3) throw std::domain_error("asymptotic_value requires n >= 3");
  init_precision();
  const Env env;
  const Real N(n);
  const Real R = r1_inv_pow(n);  // r1^{-n}

  switch (kind) {
    case AsymKind::s_lead:
      return R * env.sqrt_r1 / (env.p34 * env.sqrtpi) * powi2(N, -3);
    case AsymKind::s_refined:
      return R * env.sqrt_r1 / env.sqrtpi *
             (powi2(N, -3) / env.p34 +
              (12 * env.sqrt2 - 9) / (env.p14 * 32) * powi2(N, -5));
    case AsymKind::a_lead:
      return R / env.sqrt_r1 / (env.p54 * env.sqrtpi) * powi2(N, -1);
    case AsymKind::a_refined:
      return R / env.sqrt_r1 / env.sqrtpi *
             (powi2(N, -1) / env.p54 +
              (3 - 4 * env.sqrt2) / (32 * env.p34) * powi2(N, -3));
    case AsymKind::b_lead:
      return -R * env.sqrt_r1 * env.p14 / env.sqrtpi * powi2(N, -3);
    case AsymKind::b_refined:
      return R * env.sqrt_r1 / env.sqrtpi *
             (-env.p14 * powi2(N, -3) +
              (9 - 12 * env.sqrt2) / (16 * env.p14) * powi2(N, -5));
    case AsymKind::alpha_lead:
      return R / (env.r1 * env.sqrt_r1) / (4 * env.p34 * env.sqrtpi) * powi2(N, 1);
    case AsymKind::alpha_refined:
      return R / (env.r1 * env.sqrt_r1) / env.sqrtpi *
             (powi2(N, 1) / (4 * env.p34) +
              (24 - 9 * env.sqrt2) / (128 * env.p34) * powi2(N, -1));
  }
  throw std::domain_error("unknown asymptotic kind");
}

}  // namespace sepalt
