#pragma once

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "cavity/eigen.hpp"
#include "cavity/errors.hpp"
#include "cavity/grid.hpp"
#include "cavity/mapping.hpp"
#include "cavity/matrix.hpp"
#include "cavity/potential.hpp"
#include "cavity/state_label.hpp"

namespace cavity {

inline constexpr int kDefaultGridOrder = 128;
inline constexpr int kQuickGridOrder = 64;

/// One radial eigenproblem: a central potential with angular momentum `ell`,
/// confined by an impenetrable wall at r = cavity_radius. The reduced radial
/// function obeys
///
///   [-1/2 d^2/dr^2 + l(l+1)/(2 r^2) + v(r)] psi = E psi,  psi(0) = psi(r_c) = 0.
struct ConfinedProblem {
  Potential potential = Coulomb{};
  int ell = 0;
  double cavity_radius = 1.0;
  int grid_order = kDefaultGridOrder;
  double mapping_scale = 0.0;  ///< L; non-positive means cavity_radius / 2

  double effective_mapping_scale() const {
    return mapping_scale > 0.0 ? mapping_scale : 0.5 * cavity_radius;
  }
};

inline void validate(const ConfinedProblem& p) {
  validate(p.potential);
  if (p.ell < 0) throw std::invalid_argument("ConfinedProblem: ell must be non-negative");
  if (!(p.cavity_radius > 0.0))
    throw std::invalid_argument("ConfinedProblem: cavity radius must be positive");
  if (p.grid_order < 8) throw std::invalid_argument("ConfinedProblem: grid order must be >= 8");
}

inline double effective_potential(const Potential& v, int ell, double r) {
  return 0.5 * ell * (ell + 1) / (r * r) + evaluate(v, r);
}

/// Discrete Hamiltonian over the interior collocation nodes, with the wall
/// placed at the x = +1 endpoint (mapping r_max = cavity radius). Kinetic
/// part in the weak form T = 1/2 G^T W G with G the mapped first-derivative
/// operator under the sqrt(w r') similarity, so the matrix is symmetric by
/// construction and Dirichlet ends drop out with the boundary columns.
inline Matrix assemble_hamiltonian(const ConfinedProblem& p, const SpectralGrid& grid,
                                   const RadialMapping& map) {
  validate(p);
  const int n = grid.order;
  const int m = n - 1;

  std::vector<double> jac(n + 1);
  std::vector<double> sqw(n + 1);
  for (int j = 0; j <= n; ++j) {
    jac[j] = map.jacobian(grid.nodes[j]);
    sqw[j] = std::sqrt(grid.weights[j] * jac[j]);
  }

  // gt(i, k) = sqrt(w_k / r'_k) d1(k, i+1) / sqrt(w_{i+1} r'_{i+1});
  // interior column i of the scaled gradient, stored row-wise for the
  // contraction below.
  Matrix gt(m, n + 1);
  for (int k = 0; k <= n; ++k) {
    const double rowf = std::sqrt(grid.weights[k] / jac[k]);
    for (int i = 0; i < m; ++i) gt(i, k) = rowf * grid.d1(k, i + 1) / sqw[i + 1];
  }

  Matrix h(m, m);
  for (int i = 0; i < m; ++i) {
    const double* gi = gt.row(i);
    for (int j = i; j < m; ++j) {
      const double* gj = gt.row(j);
      double t = 0.0;
      for (int k = 0; k <= n; ++k) t += gi[k] * gj[k];
      h(i, j) = h(j, i) = 0.5 * t;
    }
  }

  for (int i = 0; i < m; ++i) {
    const double r = map.radius(grid.nodes[i + 1]);
    const double veff = effective_potential(p.potential, p.ell, r);
    if (!std::isfinite(veff))
      throw SolverError("potential is not finite at interior node r = " + std::to_string(r));
    h(i, i) += veff;
  }
  return h;
}

inline Matrix assemble_hamiltonian(const ConfinedProblem& p) {
  const SpectralGrid grid = lobatto_grid(p.grid_order);
  const RadialMapping map(p.effective_mapping_scale(), p.cavity_radius);
  return assemble_hamiltonian(p, grid, map);
}

namespace detail {

// Interior sign changes with a relative noise floor; values in the
// exponentially decayed tail (or the r^(l+1) shadow near the origin) sit
// below the floor and never toggle the sign tracker.
inline int count_sign_changes(const double* values, int count) {
  double amax = 0.0;
  for (int i = 0; i < count; ++i) amax = std::max(amax, std::abs(values[i]));
  const double floor = 1e-8 * amax;
  int changes = 0;
  double last = 0.0;
  for (int i = 0; i < count; ++i) {
    const double v = values[i];
    if (std::abs(v) <= floor) continue;
    if (last != 0.0 && (v > 0.0) != (last > 0.0)) ++changes;
    last = v;
  }
  return changes;
}

}  // namespace detail

/// Lowest eigenpairs of one confined problem. Wavefunctions are the reduced
/// radial functions at the interior radii, quadrature-normalized to
/// int_0^rc psi^2 dr = 1 and sign-fixed so the first interior value is
/// positive.
struct Spectrum {
  ConfinedProblem problem;
  std::vector<double> radii;       ///< interior r_j, ascending
  std::vector<double> quadrature;  ///< w_j r'(x_j) at interior nodes
  std::vector<double> energies;    ///< ascending
  Matrix wavefunctions;            ///< (node j, state k) -> psi_k(r_j)
  std::vector<double> origin_slopes;  ///< d psi/dr at r = 0, per state
  double origin_weight = 0.0;         ///< w_0 r'(-1), quadrature mass at the origin endpoint

  int states() const { return static_cast<int>(energies.size()); }

  int node_count(int k) const {
    std::vector<double> column(radii.size());
    for (std::size_t j = 0; j < radii.size(); ++j) column[j] = wavefunctions(static_cast<int>(j), k);
    return detail::count_sign_changes(column.data(), static_cast<int>(column.size()));
  }

  /// Index of the label within this spectrum, after checking it belongs here.
  int index_of(const StateLabel& s) const {
    if (!s.valid() || s.ell != problem.ell || s.radial_index() >= states())
      throw std::invalid_argument("state " + format(s) + " is not part of this spectrum");
    return s.radial_index();
  }
};

/// Solves for the `count` lowest states of the confined problem.
inline Spectrum solve(const ConfinedProblem& p, int count) {
  validate(p);
  if (count < 1 || count > p.grid_order - 1)
    throw std::invalid_argument("solve: count must lie in [1, N-1]");

  const SpectralGrid grid = lobatto_grid(p.grid_order);
  const RadialMapping map(p.effective_mapping_scale(), p.cavity_radius);
  const Matrix h = assemble_hamiltonian(p, grid, map);
  SymmetricEigenSolution eig = eigensolve_symmetric(h);

  const int n = grid.order;
  const int m = n - 1;

  Spectrum out;
  out.problem = p;
  out.radii.resize(m);
  out.quadrature.resize(m);
  for (int j = 0; j < m; ++j) {
    out.radii[j] = map.radius(grid.nodes[j + 1]);
    out.quadrature[j] = grid.weights[j + 1] * map.jacobian(grid.nodes[j + 1]);
  }

  out.energies.resize(count);
  out.wavefunctions = Matrix(m, count);
  for (int k = 0; k < count; ++k) {
    out.energies[k] = rayleigh_quotient(h, eig.vectors, k);
    // y = sqrt(w r') psi  ->  psi, then renormalize against the quadrature
    long double norm = 0.0L;
    for (int j = 0; j < m; ++j) {
      const double psi = eig.vectors(j, k) / std::sqrt(out.quadrature[j]);
      out.wavefunctions(j, k) = psi;
      norm += static_cast<long double>(out.quadrature[j]) * psi * psi;
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(norm));
    for (int j = 0; j < m; ++j) out.wavefunctions(j, k) *= scale;
    int first = 0;
    while (first < m - 1 && out.wavefunctions(first, k) == 0.0) ++first;
    if (out.wavefunctions(first, k) < 0.0)
      for (int j = 0; j < m; ++j) out.wavefunctions(j, k) = -out.wavefunctions(j, k);
  }

  // spectral derivative at the origin endpoint; negative-power moments need
  // the non-vanishing origin contribution of the Lobatto rule
  out.origin_weight = grid.weights[0] * map.jacobian(-1.0);
  out.origin_slopes.resize(count);
  const double origin_jacobian = map.jacobian(-1.0);
  for (int k = 0; k < count; ++k) {
    long double acc = 0.0L;
    for (int j = 0; j < m; ++j)
      acc += static_cast<long double>(grid.d1(0, j + 1)) * out.wavefunctions(j, k);
    out.origin_slopes[k] = static_cast<double>(acc) / origin_jacobian;
  }

  for (int k = 1; k < count; ++k)
    if (!(out.energies[k] > out.energies[k - 1]))
      throw SolverError("spectrum is not strictly increasing between states " +
                        std::to_string(k - 1) + " and " + std::to_string(k));
  for (int k = 0; k < count; ++k) {
    const int nodes = out.node_count(k);
    if (nodes != k)
      throw SolverError("state labeling failed: eigenvector " + std::to_string(k) + " has " +
                        std::to_string(nodes) + " interior nodes (" + describe(p.potential) +
                        ", l = " + std::to_string(p.ell) +
                        ", r_c = " + std::to_string(p.cavity_radius) + ")");
  }
  return out;
}

/// Energy of one labeled state (n, l) at cavity radius r_c.
inline double energy(const Potential& v, const StateLabel& s, double r_c,
                     int grid_order = kDefaultGridOrder, double mapping_scale = 0.0) {
  if (!s.valid()) throw std::invalid_argument("energy: invalid state label " + format(s));
  ConfinedProblem p{v, s.ell, r_c, grid_order, mapping_scale};
  const Spectrum sp = solve(p, s.radial_index() + 1);
  return sp.energies.back();
}

struct FreeLimitOptions {
  double tolerance = 1e-10;   ///< successive-ladder agreement target
  double first_radius = 50.0;
  double max_radius = 1600.0;
  int grid_order = kDefaultGridOrder;
};

/// Unconfined limit of a bound state: walks a geometric ladder of cavity
/// radii until successive energies agree to the tolerance.
inline double free_limit_energy(const Potential& v, const StateLabel& s,
                                const FreeLimitOptions& opt = {}) {
  double prev = energy(v, s, opt.first_radius, opt.grid_order);
  for (double rc = 2.0 * opt.first_radius; rc <= opt.max_radius * (1.0 + 1e-12); rc *= 2.0) {
    const double cur = energy(v, s, rc, opt.grid_order);
    if (std::abs(cur - prev) <= opt.tolerance) return cur;
    prev = cur;
  }
  throw UnboundStateError("free limit of " + format(s) + " for " + describe(v) +
                          ": state unbound or tolerance unreachable by r_c = " +
                          std::to_string(opt.max_radius));
}

/// Default production grid order; the environment variable CAVITY_DEFAULT_N
/// overrides it (the only environment knob in the project).
inline int default_grid_order_from_env() {
  if (const char* env = std::getenv("CAVITY_DEFAULT_N")) {
    const int n = std::atoi(env);
    if (n >= 8) return n;
  }
  return kDefaultGridOrder;
}

}  // namespace cavity
