#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "cavity/errors.hpp"
#include "cavity/potential.hpp"

// Independent shooting-method verifier for the same radial problems the
// collocation solver handles. Deliberately low-tech (uniform mesh, fourth
// order Numerov stencil, energy bisection) and deliberately sharing nothing
// with the spectral code beyond the Potential type.

namespace cavity {

struct ShootingResult {
  double energy = 0.0;
  double mesh_step = 0.0;
  int node_count = 0;
  double boundary_mismatch = 0.0;  ///< |u(r_c)| / max |u| at the converged energy
};

namespace numerov_detail {

struct Shot {
  int nodes = 0;
  double boundary = 0.0;  ///< u at the wall, oriented and in rescaled units
  double peak = 0.0;      ///< max |u|, same units
};

// March u'' = 2 (V_eff - E) u from r_min with u ~ r^(l+1). The whole profile
// is kept so nodes can be counted against a relative noise floor: for large l
// the stencil is invalid over the first few points (h^2 g / 12 is order one
// near the centrifugal singularity) and the garbage there may flip the
// downstream sign, so the solution is oriented by its first value above the
// floor before the wall value and the sign changes are read off.
inline Shot integrate(const Potential& v, int ell, double energy, double r_min, double r_c,
                      int mesh_points) {
  const int steps = mesh_points;
  const double h = (r_c - r_min) / steps;
  const auto g = [&](double r) {
    return 2.0 * (0.5 * ell * (ell + 1) / (r * r) + evaluate(v, r) - energy);
  };

  // Frobenius launch u = r^(l+1) (1 + a r + b r^2) with the potential split
  // v ~ v1/r + v0 near the origin (probed numerically); a plain power-law
  // start would cap global accuracy at O(h^2).
  const double r_probe = 1e-3 * r_min;
  const double v1 = r_probe * evaluate(v, r_probe);
  const double v0 = evaluate(v, r_min) - v1 / r_min;
  const double a_coef = v1 / (ell + 1);
  const double b_coef = (2.0 * a_coef * v1 + 2.0 * (v0 - energy)) / (4.0 * ell + 6.0);
  const auto launch = [&](double r) {
    return std::pow(r, ell + 1) * (1.0 + r * (a_coef + r * b_coef));
  };

  // The march accumulates in extended precision: double rounding noise in
  // this recurrence grows superlinearly with the step count and would cap
  // fine meshes near 1e-9.
  std::vector<double> u(steps + 1);
  long double u_prev = launch(r_min);
  long double u_cur = launch(r_min + h);
  u[0] = static_cast<double>(u_prev);
  u[1] = static_cast<double>(u_cur);
  const long double h2_12l = static_cast<long double>(h) * h / 12.0L;
  long double g_prev = g(r_min);
  long double g_cur = g(r_min + h);
  for (int i = 2; i <= steps; ++i) {
    const long double g_next = g(r_min + i * h);
    const long double u_next =
        (2.0L * u_cur * (1.0L + 5.0L * h2_12l * g_cur) - u_prev * (1.0L - h2_12l * g_prev)) /
        (1.0L - h2_12l * g_next);
    u_prev = u_cur;
    u_cur = u_next;
    g_prev = g_cur;
    g_cur = g_next;
    u[i] = static_cast<double>(u_cur);
    const long double a = u_cur < 0.0L ? -u_cur : u_cur;
    if (a > 1e250L) {
      u_prev /= a;
      u_cur /= a;
      const double shrink = static_cast<double>(a);
      for (int j = 0; j <= i; ++j) u[j] /= shrink;
    }
  }

  Shot shot;
  for (double value : u) shot.peak = std::max(shot.peak, std::abs(value));
  const double floor = 1e-8 * shot.peak;

  double orientation = 1.0;
  for (int i = 1; i <= steps; ++i) {
    if (std::abs(u[i]) > floor) {
      orientation = u[i] > 0.0 ? 1.0 : -1.0;
      break;
    }
  }
  double last = 0.0;
  for (int i = 1; i < steps; ++i) {
    if (std::abs(u[i]) <= floor) continue;
    if (last != 0.0 && (u[i] > 0.0) != (last > 0.0)) ++shot.nodes;
    last = u[i];
  }
  shot.boundary = orientation * u[steps];
  return shot;
}

}  // namespace numerov_detail

/// Energy of the state with `radial_index` interior nodes by bisection on
/// the wall value u(r_c). For E just below the target eigenvalue the
/// integrated u has `radial_index` nodes and sign (-1)^index at the wall;
/// crossing the eigenvalue either flips that sign or admits one more node.
inline ShootingResult numerov_energy(const Potential& v, int ell, double r_c, int radial_index,
                                     int mesh_points = 20000) {
  validate(v);
  if (mesh_points < 2000)
    throw std::invalid_argument("numerov_energy: mesh must have at least 2000 points");
  if (radial_index < 0) throw std::invalid_argument("numerov_energy: radial index must be >= 0");
  if (ell < 0) throw std::invalid_argument("numerov_energy: ell must be >= 0");
  if (!(r_c > 0.0)) throw std::invalid_argument("numerov_energy: cavity radius must be positive");
  if (mesh_points < 16 * (radial_index + ell + 2))
    throw OracleError("numerov_energy: node count " + std::to_string(radial_index) +
                      " exceeds what a " + std::to_string(mesh_points) +
                      "-point mesh resolves");

  const double r_min = r_c * 1e-6;
  const int k = radial_index;
  const double tail_sign = (k % 2 == 0) ? 1.0 : -1.0;

  const auto above = [&](double energy) {
    const numerov_detail::Shot shot = numerov_detail::integrate(v, ell, energy, r_min, r_c, mesh_points);
    if (shot.nodes > k) return true;
    if (shot.nodes < k) return false;
    return shot.boundary * tail_sign <= 0.0;
  };

  double lo = -2.0;
  for (int guard = 0; above(lo); ++guard) {
    lo = 2.0 * lo - 1.0;
    if (guard > 40) throw OracleError("numerov_energy: no lower energy bracket found");
  }
  const double pi = 3.14159265358979323846;
  double span = (k + ell + 2) * pi / r_c;
  double hi = 0.5 * span * span + 1.0;
  for (int guard = 0; !above(hi); ++guard) {
    hi = 2.0 * hi + 1.0;
    if (guard > 40)
      throw OracleError("numerov_energy: no upper bracket; requested node count " +
                        std::to_string(k) + " exceeds the resolvable window");
  }

  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;  // bisected to machine resolution
    if (above(mid))
      hi = mid;
    else
      lo = mid;
  }

  const double energy = 0.5 * (lo + hi);
  const numerov_detail::Shot at_lo = numerov_detail::integrate(v, ell, lo, r_min, r_c, mesh_points);
  const numerov_detail::Shot at_mid = numerov_detail::integrate(v, ell, energy, r_min, r_c, mesh_points);
  if (at_lo.nodes != k)
    throw OracleError("numerov_energy: converged window has " + std::to_string(at_lo.nodes) +
                      " nodes, expected " + std::to_string(k));

  ShootingResult out;
  out.energy = energy;
  out.mesh_step = (r_c - r_min) / mesh_points;
  out.node_count = at_lo.nodes;
  out.boundary_mismatch = at_mid.peak > 0.0 ? std::abs(at_mid.boundary) / at_mid.peak : 0.0;
  return out;
}

}  // namespace cavity
