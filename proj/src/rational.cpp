#include "eprb/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace eprb {

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("rational_from_double: non-finite value");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  // 53-bit integer mantissa m with x = m * 2^exp, exactly.
  double m = std::frexp(x, &exp);
  const auto mant = static_cast<long long>(std::ldexp(m, 53));
  exp -= 53;
  Rational r(mant);
  if (exp >= 0) {
    r *= Rational(BigInt(1) << exp);
  } else {
    r /= Rational(BigInt(1) << -exp);
  }
  return r;
}

}  // namespace eprb
