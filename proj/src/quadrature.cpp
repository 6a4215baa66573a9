#include "eprb/quadrature.hpp"

#include <cmath>

namespace eprb {
namespace {

double simpson(double fa, double fm, double fb, double h) { return h / 6.0 * (fa + 4.0 * fm + fb); }

double adapt(const std::function<double(double)>& f, double a, double b, double fa, double fm,
             double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;  // Richardson correction
  return adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double abs_tol) {
  if (!(b > a)) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = simpson(fa, fm, fb, b - a);
  return adapt(f, a, b, fa, fm, fb, whole, abs_tol, 48);
}

}  // namespace eprb
