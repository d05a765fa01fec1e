#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "cavity/errors.hpp"
#include "cavity/matrix.hpp"

namespace cavity {

struct SymmetricEigenSolution {
  std::vector<double> values;  ///< ascending
  Matrix vectors;              ///< column k is the unit eigenvector of values[k]
};

namespace detail {

// Householder reduction of a symmetric matrix to tridiagonal form, with the
// orthogonal transformation accumulated in place of the input.
inline void householder_tridiagonalize(Matrix& a, std::vector<double>& d, std::vector<double>& e) {
  const int n = a.rows();
  d.assign(n, 0.0);
  e.assign(n, 0.0);
  for (int i = n - 1; i >= 1; --i) {
    const int l = i - 1;
    double h = 0.0;
    if (l > 0) {
      double scale = 0.0;
      for (int k = 0; k <= l; ++k) scale += std::abs(a(i, k));
      if (scale == 0.0) {
        e[i] = a(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          a(i, k) /= scale;
          h += a(i, k) * a(i, k);
        }
        double f = a(i, l);
        double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        a(i, l) = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          a(j, i) = a(i, j) / h;
          g = 0.0;
          for (int k = 0; k <= j; ++k) g += a(j, k) * a(i, k);
          for (int k = j + 1; k <= l; ++k) g += a(k, j) * a(i, k);
          e[j] = g / h;
          f += e[j] * a(i, j);
        }
        const double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = a(i, j);
          e[j] = g = e[j] - hh * f;
          for (int k = 0; k <= j; ++k) a(j, k) -= f * e[k] + g * a(i, k);
        }
      }
    } else {
      e[i] = a(i, l);
    }
    d[i] = h;
  }
  d[0] = 0.0;
  e[0] = 0.0;
  for (int i = 0; i < n; ++i) {
    if (d[i] != 0.0) {
      for (int j = 0; j < i; ++j) {
        double g = 0.0;
        for (int k = 0; k < i; ++k) g += a(i, k) * a(k, j);
        for (int k = 0; k < i; ++k) a(k, j) -= g * a(k, i);
      }
    }
    d[i] = a(i, i);
    a(i, i) = 1.0;
    for (int j = 0; j < i; ++j) a(j, i) = a(i, j) = 0.0;
  }
}

// Implicitly shifted QL iteration on the tridiagonal (d, e); plane rotations
// are applied to the columns of z so that column k ends up the eigenvector
// of d[k].
inline void ql_implicit_shifts(std::vector<double>& d, std::vector<double>& e, Matrix& z) {
  const int n = static_cast<int>(d.size());
  if (n == 1) return;
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  const double eps = std::numeric_limits<double>::epsilon();
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == 60)
          throw SolverError("symmetric eigensolver: QL sweep " + std::to_string(l) +
                            " did not converge in 60 iterations (n = " + std::to_string(n) + ")");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        bool underflow = false;
        int i = m - 1;
        for (; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          for (int k = 0; k < z.rows(); ++k) {
            f = z(k, i + 1);
            z(k, i + 1) = s * z(k, i) + c * f;
            z(k, i) = c * z(k, i) - s * f;
          }
        }
        if (underflow && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace detail

/// Full eigendecomposition of a symmetric matrix (Householder tridiagonal
/// reduction followed by implicitly shifted QL), eigenpairs ascending.
inline SymmetricEigenSolution eigensolve_symmetric(Matrix a) {
  const int n = a.rows();
  if (n == 0 || a.cols() != n) throw std::invalid_argument("eigensolve_symmetric: matrix must be square");
  std::vector<double> d;
  std::vector<double> e;
  detail::householder_tridiagonalize(a, d, e);
  detail::ql_implicit_shifts(d, e, a);

  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&d](int i, int j) { return d[i] < d[j]; });

  SymmetricEigenSolution out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (int k = 0; k < n; ++k) {
    out.values[k] = d[idx[k]];
    for (int r = 0; r < n; ++r) out.vectors(r, k) = a(r, idx[k]);
  }
  return out;
}

/// Rayleigh quotient of column `col` of z against h, accumulated in extended
/// precision. One cheap pass that strips most of the QL rounding noise off a
/// converged eigenpair.
inline double rayleigh_quotient(const Matrix& h, const Matrix& z, int col) {
  const int n = h.rows();
  long double num = 0.0L;
  long double den = 0.0L;
  for (int i = 0; i < n; ++i) {
    long double hv = 0.0L;
    const double* hrow = h.row(i);
    for (int j = 0; j < n; ++j) hv += static_cast<long double>(hrow[j]) * z(j, col);
    num += static_cast<long double>(z(i, col)) * hv;
    den += static_cast<long double>(z(i, col)) * z(i, col);
  }
  return static_cast<double>(num / den);
}

}  // namespace cavity
