#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <variant>

#include "cavity/errors.hpp"

namespace cavity {

/// Attractive Coulomb tail, v(r) = -Z / r.
struct Coulomb {
  double charge = 1.0;
};

/// Screened Coulomb potential v(r) = -delta e^{-delta r} / (1 - e^{-delta r}).
/// Coulomb-like near the origin, exponentially decaying at large r; supports
/// finitely many bound states.
struct Hulthen {
  double screening = 0.1;
};

/// Zero potential inside the cavity; the wall alone binds the particle.
struct ParticleInBox {};

/// User-supplied radial potential.
struct RadialFunction {
  std::function<double(double)> v;
  std::string label = "custom";
};

using Potential = std::variant<Coulomb, Hulthen, ParticleInBox, RadialFunction>;

inline void validate(const Potential& p) {
  if (const auto* c = std::get_if<Coulomb>(&p)) {
    if (!(c->charge > 0.0)) throw std::invalid_argument("Coulomb potential requires Z > 0");
  } else if (const auto* h = std::get_if<Hulthen>(&p)) {
    if (!(h->screening > 0.0)) throw std::invalid_argument("Hulthen potential requires delta > 0");
  } else if (const auto* f = std::get_if<RadialFunction>(&p)) {
    if (!f->v) throw std::invalid_argument("custom potential has no function attached");
  }
}

inline double evaluate(const Potential& p, double r) {
  return std::visit(
      [r](const auto& pot) -> double {
        using T = std::decay_t<decltype(pot)>;
        if constexpr (std::is_same_v<T, Coulomb>) {
          return -pot.charge / r;
        } else if constexpr (std::is_same_v<T, Hulthen>) {
          // expm1 keeps the r -> 0 cancellation benign
          return pot.screening * std::exp(-pot.screening * r) / std::expm1(-pot.screening * r);
        } else if constexpr (std::is_same_v<T, ParticleInBox>) {
          return 0.0;
        } else {
          return pot.v(r);
        }
      },
      p);
}

inline std::string describe(const Potential& p) {
  return std::visit(
      [](const auto& pot) -> std::string {
        using T = std::decay_t<decltype(pot)>;
        if constexpr (std::is_same_v<T, Coulomb>) {
          return "coulomb(Z=" + std::to_string(pot.charge) + ")";
        } else if constexpr (std::is_same_v<T, Hulthen>) {
          return "hulthen(delta=" + std::to_string(pot.screening) + ")";
        } else if constexpr (std::is_same_v<T, ParticleInBox>) {
          return "box";
        } else {
          return pot.label;
        }
      },
      p);
}

/// Closed-form free-space energy of the Hulthen l = 0 level n:
/// E_n = -(1/n - n delta / 2)^2 / 2, bound only while n^2 delta < 2.
inline double hulthen_free_s_energy(double delta, int n) {
  if (n < 1) throw std::invalid_argument("hulthen_free_s_energy: n must be positive");
  const double t = 1.0 / n - 0.5 * n * delta;
  if (!(t > 0.0))
    throw UnboundStateError("hulthen " + std::to_string(n) +
                            "s state is unbound at delta = " + std::to_string(delta));
  return -0.5 * t * t;
}

inline bool hulthen_s_state_bound(double delta, int n) {
  return static_cast<double>(n) * n * delta < 2.0;
}

}  // namespace cavity
