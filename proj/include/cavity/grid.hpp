#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "cavity/errors.hpp"
#include "cavity/legendre.hpp"
#include "cavity/matrix.hpp"

namespace cavity {

/// Legendre-Gauss-Lobatto collocation grid of polynomial order N: the N+1
/// nodes on [-1, 1] (endpoints plus the roots of P'_N), the quadrature
/// weights, and the cardinal-function first-derivative matrix.
struct SpectralGrid {
  int order = 0;                 ///< polynomial order N (N+1 nodes)
  std::vector<double> nodes;     ///< ascending, nodes[0] = -1, nodes[N] = +1
  std::vector<double> weights;   ///< Gauss-Lobatto quadrature weights
  Matrix d1;                     ///< d1(j,k) = g'_k(x_j), cardinal derivatives

  int points() const { return order + 1; }
};

namespace detail {

// Root of P'_n inside [lo, hi]: bisection keeps the bracket, Newton steps
// polish once inside it. The bracket must straddle a sign change.
inline long double polish_lobatto_node(int n, long double lo, long double hi, int index) {
  long double flo = legendre_derivative(n, lo);
  long double fhi = legendre_derivative(n, hi);
  if (flo == 0.0L) return lo;
  if (fhi == 0.0L) return hi;
  if ((flo > 0.0L) == (fhi > 0.0L))
    throw SolverError("lobatto_grid: interior node " + std::to_string(index) +
                      " is not bracketed by its Chebyshev seed interval");
  long double x = 0.5L * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    long double f = legendre_derivative(n, x);
    if (f == 0.0L) return x;
    if ((f > 0.0L) == (flo > 0.0L)) {
      lo = x;
      flo = f;
    } else {
      hi = x;
      fhi = f;
    }
    if (hi - lo <= 8.0L * std::numeric_limits<long double>::epsilon()) return 0.5L * (lo + hi);
    long double step = f / legendre_second_derivative(n, x);
    long double next = x - step;
    if (!(next > lo && next < hi)) next = 0.5L * (lo + hi);
    if (next == x) return x;
    x = next;
  }
  throw SolverError("lobatto_grid: node " + std::to_string(index) +
                    " did not converge within the iteration budget");
}

}  // namespace detail

inline SpectralGrid lobatto_grid(int order) {
  if (order < 4) throw std::invalid_argument("lobatto_grid: order must be at least 4");
  const int n = order;

  SpectralGrid grid;
  grid.order = n;
  grid.nodes.assign(n + 1, 0.0);
  grid.weights.assign(n + 1, 0.0);
  grid.nodes[0] = -1.0;
  grid.nodes[n] = 1.0;

  // Chebyshev-Lobatto points seed the brackets for the interior roots.
  std::vector<long double> seed(n + 1);
  for (int j = 0; j <= n; ++j)
    seed[j] = -std::cos(std::numbers::pi_v<long double> * j / n);
  for (int j = 1; j < n; ++j) {
    long double lo = 0.5L * (seed[j - 1] + seed[j]);
    long double hi = 0.5L * (seed[j] + seed[j + 1]);
    grid.nodes[j] = static_cast<double>(detail::polish_lobatto_node(n, lo, hi, j));
  }

  // Enforce the exact +/- symmetry of the node set.
  for (int j = 1; 2 * j < n; ++j) {
    double s = 0.5 * (grid.nodes[j] - grid.nodes[n - j]);
    grid.nodes[j] = s;
    grid.nodes[n - j] = -s;
  }
  if (n % 2 == 0) grid.nodes[n / 2] = 0.0;

  // w_j = 2 / (N (N+1) P_N(x_j)^2)
  std::vector<long double> pn(n + 1);
  for (int j = 0; j <= n; ++j) pn[j] = legendre(n, grid.nodes[j]);
  const long double wscale = 2.0L / (static_cast<long double>(n) * (n + 1));
  for (int j = 0; j <= n; ++j)
    grid.weights[j] = static_cast<double>(wscale / (pn[j] * pn[j]));

  // Off-diagonal cardinal derivatives D_jk = P_N(x_j) / (P_N(x_k) (x_j - x_k));
  // the diagonal closes each row to a zero row sum.
  grid.d1 = Matrix(n + 1, n + 1);
  for (int j = 0; j <= n; ++j) {
    long double rowsum = 0.0L;
    for (int k = 0; k <= n; ++k) {
      if (k == j) continue;
      long double dx = static_cast<long double>(grid.nodes[j]) - grid.nodes[k];
      grid.d1(j, k) = static_cast<double>(pn[j] / (pn[k] * dx));
      rowsum += grid.d1(j, k);
    }
    grid.d1(j, j) = static_cast<double>(-rowsum);
  }
  return grid;
}

}  // namespace cavity
