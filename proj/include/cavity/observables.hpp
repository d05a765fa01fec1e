#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cavity/hamiltonian.hpp"
#include "cavity/state_label.hpp"

namespace cavity {

/// Lobatto quadrature of int_0^rc r^power psi^2 dr for one state of a solved
/// spectrum. power = 0 returns the norm (1 by construction). Negative powers
/// are safe: the origin is not a collocation node and psi ~ r^(l+1) there.
inline double expectation(const Spectrum& sp, const StateLabel& s, int power) {
  if (power < -2 || power > 3)
    throw std::out_of_range("expectation: power must lie in [-2, 3]");
  const int k = sp.index_of(s);
  long double acc = 0.0L;
  for (std::size_t j = 0; j < sp.radii.size(); ++j) {
    const double psi = sp.wavefunctions(static_cast<int>(j), k);
    acc += static_cast<long double>(sp.quadrature[j]) * std::pow(sp.radii[j], power) * psi * psi;
  }
  // psi^2 r^-2 tends to psi'(0)^2 at the origin, so that endpoint of the
  // Lobatto rule contributes; every other power vanishes there
  if (power == -2) {
    const double slope = sp.origin_slopes[k];
    acc += static_cast<long double>(sp.origin_weight) * slope * slope;
  }
  return static_cast<double>(acc);
}

/// The radial moments <r^k> for k in {-2, -1, 1, 2, 3}.
struct MomentSet {
  StateLabel state;
  double r_c = 0.0;
  std::map<int, double> moments;
};

inline MomentSet radial_moments(const Spectrum& sp, const StateLabel& s) {
  MomentSet out{s, sp.problem.cavity_radius, {}};
  for (int power : {-2, -1, 1, 2, 3}) out.moments[power] = expectation(sp, s, power);
  return out;
}

/// Raise of a confined level above its unconfined value,
/// dE = E(r_c) - E(free); positive for every finite cavity.
inline double energy_shift(const Potential& v, const StateLabel& s, double r_c,
                           int grid_order = kDefaultGridOrder) {
  FreeLimitOptions opt;
  opt.grid_order = grid_order;
  const double free_e = free_limit_energy(v, s, opt);
  return energy(v, s, r_c, grid_order) - free_e;
}

struct PolarizabilityPair {
  double kirkwood = 0.0;
  double buckingham = 0.0;
};

/// Kirkwood and Buckingham closed-form dipole polarizabilities from the
/// radial moments:
///
///   a_K = (4/9) <r^2>^2
///   a_B = (2/3) [6 <r^2>^3 + 3 <r^3>^2 - 8 <r><r^2><r^3>] / [9 <r^2> - 8 <r>^2]
///
/// The Buckingham quotient is evaluated exactly in this printed form.
inline PolarizabilityPair polarizability(const MomentSet& m) {
  const auto need = [&m](int p) {
    const auto it = m.moments.find(p);
    if (it == m.moments.end())
      throw std::invalid_argument("polarizability: moment <r^" + std::to_string(p) +
                                  "> is missing");
    return it->second;
  };
  const double r1 = need(1);
  const double r2 = need(2);
  const double r3 = need(3);
  const double denom = 9.0 * r2 - 8.0 * r1 * r1;
  if (!(denom > 0.0))
    throw SolverError("buckingham polarizability: denominator 9<r^2> - 8<r>^2 is not positive");
  PolarizabilityPair out;
  out.kirkwood = (4.0 / 9.0) * r2 * r2;
  out.buckingham = (2.0 / 3.0) * (6.0 * r2 * r2 * r2 + 3.0 * r3 * r3 - 8.0 * r1 * r2 * r3) / denom;
  return out;
}

/// (r_j, psi^2(r_j)) pairs, ascending in r; integrates to 1 under the grid
/// quadrature.
inline std::vector<std::pair<double, double>> radial_density(const Spectrum& sp,
                                                             const StateLabel& s) {
  const int k = sp.index_of(s);
  std::vector<std::pair<double, double>> out;
  out.reserve(sp.radii.size());
  for (std::size_t j = 0; j < sp.radii.size(); ++j) {
    const double psi = sp.wavefunctions(static_cast<int>(j), k);
    out.emplace_back(sp.radii[j], psi * psi);
  }
  return out;
}

}  // namespace cavity
