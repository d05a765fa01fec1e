#pragma once

// Test-side closed forms and brute-force oracles. These stay independent of
// the solver code paths they are used to check.

#include <cmath>
#include <functional>
#include <stdexcept>

namespace test_oracles {

inline double bisect(const std::function<double(double)>& f, double a, double b) {
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0)) throw std::runtime_error("oracle bisect: no sign change");
  for (int i = 0; i < 300; ++i) {
    const double m = 0.5 * (a + b);
    if (m == a || m == b) break;
    const double fm = f(m);
    if (fm == 0.0) return m;
    if ((fm > 0.0) == (fa > 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

inline double sph_bessel(int l, double x) {
  const double j0 = std::sin(x) / x;
  if (l == 0) return j0;
  double jm = j0;
  double j = std::sin(x) / (x * x) - std::cos(x) / x;
  for (int k = 2; k <= l; ++k) {
    const double jn = (2.0 * k - 1.0) / x * j - jm;
    jm = j;
    j = jn;
  }
  return j;
}

/// k-th positive zero of j_l (k >= 1), located by scan plus bisection.
inline double sph_bessel_zero(int l, int k) {
  int found = 0;
  const double step = 0.02;
  double prev_x = 0.05;
  double prev_f = sph_bessel(l, prev_x);
  for (double x = prev_x + step; x < 300.0; x += step) {
    const double f = sph_bessel(l, x);
    if (prev_f == 0.0 || (f > 0.0) != (prev_f > 0.0)) {
      if (++found == k)
        return bisect([l](double z) { return sph_bessel(l, z); }, prev_x, x);
      prev_f = f;
    }
    prev_x = x;
    prev_f = f;
  }
  throw std::runtime_error("oracle: bessel zero not found");
}

/// First positive root of tan z = z, bisected inside (pi, 3 pi/2).
inline double tan_z_equals_z_root() {
  return bisect([](double z) { return std::tan(z) - z; }, 3.2, 4.7115);
}

inline double hydrogen_energy(int n) { return -0.5 / (static_cast<double>(n) * n); }

/// Free Hulthen s levels, E_n = -(1/n - n delta / 2)^2 / 2 while n^2 delta < 2.
inline double hulthen_s_energy(double delta, int n) {
  const double t = 1.0 / n - 0.5 * n * delta;
  if (t <= 0.0) throw std::runtime_error("oracle: hulthen s state unbound");
  return -0.5 * t * t;
}

inline double central_difference(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace test_oracles
