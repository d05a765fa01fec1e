#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cavity/brent.hpp"
#include "cavity/errors.hpp"
#include "cavity/hamiltonian.hpp"
#include "cavity/observables.hpp"
#include "cavity/potential.hpp"
#include "cavity/state_label.hpp"

namespace cavity {

/// Cavity radius at which a state's energy crosses zero, with a sign-bracket
/// certificate: E > 0 just below, E < 0 just above.
struct CriticalRadius {
  StateLabel state;
  Potential potential;
  double radius = 0.0;
  double residual = 0.0;       ///< |E(radius)|
  double bracket_width = 0.0;  ///< final Brent bracket
};

/// Finds the critical cage radius by expanding a bracket from the hydrogenic
/// scale n(n+1) and refining with Brent's method. Each evaluation is a full
/// eigensolve. E(r_c) is strictly decreasing in r_c, so the bracket is safe.
inline CriticalRadius critical_radius(const Potential& v, const StateLabel& s,
                                      double energy_tol = 1e-9,
                                      int grid_order = kDefaultGridOrder) {
  if (!s.valid()) throw std::invalid_argument("critical_radius: invalid state " + format(s));
  validate(v);
  constexpr double kMinRadius = 1e-2;
  constexpr double kMaxRadius = 1e4;

  const auto f = [&](double rc) { return energy(v, s, rc, grid_order); };

  const double rc0 = static_cast<double>(s.n) * (s.n + 1);
  const double e0 = f(rc0);
  if (e0 == 0.0) return {s, v, rc0, 0.0, 0.0};

  double lo, hi, flo, fhi;
  if (e0 > 0.0) {
    lo = rc0;
    flo = e0;
    hi = 2.0 * rc0;
    fhi = f(hi);
    while (fhi > 0.0) {
      lo = hi;
      flo = fhi;
      hi *= 2.0;
      if (hi > kMaxRadius)
        throw NoRootError("critical_radius: no sign change up to r_c = 1e4 for " + format(s) +
                          " (" + describe(v) + "); the state has no bound free limit");
      fhi = f(hi);
    }
  } else {
    hi = rc0;
    fhi = e0;
    lo = 0.5 * rc0;
    flo = f(lo);
    while (flo < 0.0) {
      hi = lo;
      fhi = flo;
      lo *= 0.5;
      if (lo < kMinRadius)
        throw NoRootError("critical_radius: energy stays negative down to r_c = 1e-2 for " +
                          format(s) + " (" + describe(v) + ")");
      flo = f(lo);
    }
  }
  // E decreases with r_c: positive at lo, negative at hi.
  BrentResult root = brent_root(f, lo, hi, flo, fhi, /*xtol=*/1e-8, /*ftol=*/energy_tol);
  return {s, v, root.root, std::abs(root.f_root), std::max(root.bracket_width, 1e-10)};
}

struct SweepPoint {
  double r_c = 0.0;
  double energy = 0.0;
  bool ok = false;
  bool monotone_violation = false;
  std::string message;  ///< failure note when !ok
};

struct SweepResult {
  Potential potential;
  StateLabel state;
  int grid_order = 0;
  std::vector<SweepPoint> points;

  int failures() const {
    int n = 0;
    for (const auto& p : points) n += p.ok ? 0 : 1;
    return n;
  }
  bool monotone() const {
    for (const auto& p : points)
      if (p.monotone_violation) return false;
    return true;
  }
};

/// One eigensolve per cavity radius. Per-point failures are recorded and the
/// point skipped; any numerical break of the E(r_c) monotone decrease is
/// flagged on the offending point rather than silently returned.
inline SweepResult sweep(const Potential& v, const StateLabel& s, std::span<const double> radii,
                         int grid_order = kDefaultGridOrder) {
  if (!s.valid()) throw std::invalid_argument("sweep: invalid state " + format(s));
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0)) throw std::invalid_argument("sweep: cavity radii must be positive");
    if (i > 0 && !(radii[i] > radii[i - 1]))
      throw std::invalid_argument("sweep: cavity radii must be strictly increasing");
  }
  SweepResult out{v, s, grid_order, {}};
  out.points.reserve(radii.size());
  bool have_prev = false;
  double prev_energy = 0.0;
  for (double rc : radii) {
    SweepPoint pt;
    pt.r_c = rc;
    try {
      pt.energy = energy(v, s, rc, grid_order);
      pt.ok = true;
    } catch (const std::exception& ex) {
      pt.message = ex.what();
    }
    if (pt.ok) {
      if (have_prev && !(pt.energy < prev_energy)) pt.monotone_violation = true;
      have_prev = true;
      prev_energy = pt.energy;
    }
    out.points.push_back(std::move(pt));
  }
  return out;
}

struct DegeneracyResult {
  double r_c = 0.0;
  double gap = 0.0;
  double energy_lower_ell = 0.0;   ///< E(n, l)
  double energy_higher_ell = 0.0;  ///< E(n+1, l+2)
};

/// Confined-hydrogen coincidence E(n, l) = E(n+1, l+2) at r_c = (l+1)(l+2).
inline DegeneracyResult degeneracy_check(int n, int ell, int grid_order = kDefaultGridOrder) {
  if (ell < 0 || n < ell + 2)
    throw std::invalid_argument("degeneracy_check: pair requires n >= l + 2");
  const double rc = static_cast<double>(ell + 1) * (ell + 2);
  const Potential v = Coulomb{};
  const double e1 = energy(v, StateLabel{n, ell}, rc, grid_order);
  const double e2 = energy(v, StateLabel{n + 1, ell + 2}, rc, grid_order);
  return {rc, std::abs(e1 - e2), e1, e2};
}

/// Labels of the lowest levels of a strongly confined system, merged across
/// angular momentum blocks and sorted by energy. The per-l blocks are solved
/// independently, so labels never suffer cross-block tracking ambiguity.
inline std::vector<StateLabel> small_box_ordering(const Potential& v, double r_c, int max_states,
                                                  int grid_order = kQuickGridOrder) {
  if (!(r_c > 0.0) || r_c > 0.1)
    throw std::invalid_argument("small_box_ordering: cavity radius must lie in (0, 0.1]");
  if (max_states < 1) throw std::invalid_argument("small_box_ordering: max_states must be >= 1");

  std::vector<std::pair<double, StateLabel>> levels;
  for (int ell = 0;; ++ell) {
    ConfinedProblem p{v, ell, r_c, grid_order};
    const Spectrum sp = solve(p, std::min(max_states, grid_order - 1));
    // the lowest level per block rises with l; once it clears the current
    // cutoff no later block can contribute
    if (static_cast<int>(levels.size()) >= max_states) {
      std::nth_element(levels.begin(), levels.begin() + (max_states - 1), levels.end(),
                       [](const auto& a, const auto& b) { return a.first < b.first; });
      if (sp.energies.front() > levels[max_states - 1].first) break;
    }
    for (int k = 0; k < sp.states(); ++k)
      levels.emplace_back(sp.energies[k], StateLabel{k + ell + 1, ell});
    if (ell > max_states + 2) break;  // unreachable for physical spectra
  }
  std::sort(levels.begin(), levels.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  levels.resize(max_states);
  std::vector<StateLabel> out;
  out.reserve(levels.size());
  for (const auto& [e, label] : levels) out.push_back(label);
  return out;
}

/// Free-space energy ordering of the bound Hulthen levels at screening
/// delta. Shell minima (the closed-form s levels) prune the n scan.
inline std::vector<StateLabel> hulthen_free_ordering(double delta, int max_states,
                                                     const FreeLimitOptions& opt = {}) {
  if (!(delta > 0.0)) throw std::invalid_argument("hulthen_free_ordering: delta must be positive");
  if (max_states < 1) throw std::invalid_argument("hulthen_free_ordering: max_states must be >= 1");

  const auto by_energy = [](const auto& a, const auto& b) { return a.first < b.first; };
  std::vector<std::pair<double, StateLabel>> levels;
  for (int n = 1; hulthen_s_state_bound(delta, n); ++n) {
    if (static_cast<int>(levels.size()) >= max_states) {
      std::sort(levels.begin(), levels.end(), by_energy);
      // within a shell every level lies above the s state, and shell minima
      // rise with n
      if (hulthen_free_s_energy(delta, n) > levels[max_states - 1].first) break;
    }
    for (int ell = 0; ell < n; ++ell) {
      const StateLabel s{n, ell};
      try {
        const double e = free_limit_energy(Hulthen{delta}, s, opt);
        if (e < 0.0) levels.emplace_back(e, s);
      } catch (const UnboundStateError&) {
        // shallower than the cavity ladder can certify; not a bound level
      }
    }
  }
  if (static_cast<int>(levels.size()) < max_states)
    throw UnboundStateError("hulthen_free_ordering: only " + std::to_string(levels.size()) +
                            " bound states at delta = " + std::to_string(delta));
  std::sort(levels.begin(), levels.end(), by_energy);
  levels.resize(max_states);
  std::vector<StateLabel> out;
  out.reserve(levels.size());
  for (const auto& [e, label] : levels) out.push_back(label);
  return out;
}

/// Largest screening parameter that still binds the given Hulthen state in a
/// cavity of radius r_c (root of delta -> E, which increases with delta).
inline double critical_screening(const StateLabel& s, double r_c, double energy_tol = 1e-9,
                                 int grid_order = kDefaultGridOrder) {
  if (!s.valid()) throw std::invalid_argument("critical_screening: invalid state " + format(s));
  const auto f = [&](double delta) { return energy(Hulthen{delta}, s, r_c, grid_order); };
  double lo = 1e-4;
  double flo = f(lo);
  if (flo >= 0.0)
    throw NoRootError("critical_screening: state " + format(s) + " is unbound at r_c = " +
                      std::to_string(r_c) + " even for delta -> 0");
  double hi = 2.0 * lo;
  double fhi = f(hi);
  while (fhi < 0.0) {
    lo = hi;
    flo = fhi;
    hi *= 2.0;
    if (hi > 64.0)
      throw NoRootError("critical_screening: no unbinding threshold below delta = 64");
    fhi = f(hi);
  }
  const BrentResult root = brent_root(f, lo, hi, flo, fhi, 1e-10, energy_tol);
  return root.root;
}

}  // namespace cavity
