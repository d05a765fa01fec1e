#pragma once

#include <cmath>

namespace cavity {

/// P_n(x) by the three-term recurrence; optionally returns P_{n-1} as well.
/// Extended precision keeps the derived grid quantities (weights and
/// differentiation entries) accurate to near double rounding for orders of
/// a few hundred.
inline long double legendre(int n, long double x, long double* prev = nullptr) {
  if (n == 0) {
    if (prev) *prev = 0.0L;
    return 1.0L;
  }
  long double pkm1 = 1.0L;
  long double pk = x;
  for (int k = 2; k <= n; ++k) {
    long double pkp1 = ((2 * k - 1) * x * pk - (k - 1) * pkm1) / k;
    pkm1 = pk;
    pk = pkp1;
  }
  if (prev) *prev = pkm1;
  return pk;
}

/// P'_n(x) for |x| < 1, from (1 - x^2) P'_n = n (P_{n-1} - x P_n).
inline long double legendre_derivative(int n, long double x) {
  long double pm1;
  long double p = legendre(n, x, &pm1);
  return n * (pm1 - x * p) / (1.0L - x * x);
}

/// P''_n(x) for |x| < 1, from the Legendre differential equation.
inline long double legendre_second_derivative(int n, long double x) {
  long double pm1;
  long double p = legendre(n, x, &pm1);
  long double dp = n * (pm1 - x * p) / (1.0L - x * x);
  return (2.0L * x * dp - static_cast<long double>(n) * (n + 1) * p) / (1.0L - x * x);
}

}  // namespace cavity
