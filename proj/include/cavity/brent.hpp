#pragma once

#include <cmath>
#include <limits>
#include <utility>

#include "cavity/errors.hpp"

namespace cavity {

struct BrentResult {
  double root = 0.0;
  double f_root = 0.0;
  double bracket_width = 0.0;  ///< |b - c| at termination
  int evaluations = 0;
};

/// Brent's method (bisection / secant / inverse quadratic) on a bracketing
/// interval. Terminates when |f| <= ftol or the bracket shrinks below xtol.
/// fa and fb are the already-known endpoint values, so callers doing bracket
/// expansion pay no extra evaluations.
template <class F>
BrentResult brent_root(F&& f, double a, double b, double fa, double fb, double xtol, double ftol,
                       int max_iter = 200) {
  if (fa == 0.0) return {a, 0.0, 0.0, 0};
  if (fb == 0.0) return {b, 0.0, 0.0, 0};
  if ((fa > 0.0) == (fb > 0.0))
    throw NoRootError("brent_root: endpoints do not bracket a sign change");

  const double eps = std::numeric_limits<double>::epsilon();
  double c = a, fc = fa;
  double d = b - a, e = d;
  int evals = 0;
  for (int iter = 0; iter < max_iter; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol1 = 2.0 * eps * std::abs(b) + 0.5 * xtol;
    const double xm = 0.5 * (c - b);
    if (std::abs(fb) <= ftol || std::abs(xm) <= tol1 || fb == 0.0)
      return {b, fb, std::abs(c - b), evals};
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      const double s = fb / fa;
      double p, q;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    if (std::abs(d) > tol1)
      b += d;
    else
      b += std::copysign(tol1, xm);
    fb = f(b);
    ++evals;
  }
  throw SolverError("brent_root: iteration budget exhausted");
}

}  // namespace cavity
