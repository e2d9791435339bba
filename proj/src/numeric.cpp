#include "sepalt/numeric.hpp"

#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <string>

namespace sepalt {

void init_precision() {
  static const bool done = [] {
    unsigned digits = 80;
    if (const char* env = std::getenv("SEPALT_PRECISION")) {
      const long v = std::strtol(env, nullptr, 10);
      if (v >= 40 && v <= 100000) digits = static_cast<unsigned>(v);
    }
    Real::default_precision(digits);
    return true;
  }();
  (void)done;
}

Real to_real(const Rational& q) {
  init_precision();
  Real r;
  r.precision(Real::default_precision());
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real to_real(const BigInt& z) {
  init_precision();
  Real r;
  r.precision(Real::default_precision());
  mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

std::string rat_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string real_str(const Real& x, unsigned sig_digits) {
  std::ostringstream os;
  os << std::setprecision(static_cast<int>(sig_digits)) << x;
  return os.str();
}

}  // namespace sepalt
