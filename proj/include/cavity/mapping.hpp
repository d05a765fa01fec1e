#pragma once

#include <stdexcept>

namespace cavity {

/// Algebraic map between the collocation interval x in [-1, 1] and the
/// radial domain r in [0, r_max]:
///
///   r(x) = L (1 + x) / (1 - x + alpha),   alpha = 2 L / r_max
///
/// Strictly increasing with r(-1) = 0 and r(+1) = r_max. L sets how strongly
/// nodes cluster toward the origin.
struct RadialMapping {
  double scale = 1.0;   ///< L, in a.u.
  double r_max = 1.0;   ///< outer radius, in a.u.

  RadialMapping() = default;
  RadialMapping(double scale_in, double r_max_in) : scale(scale_in), r_max(r_max_in) {
    if (!(scale > 0.0)) throw std::invalid_argument("RadialMapping: scale must be positive");
    if (!(r_max > 0.0)) throw std::invalid_argument("RadialMapping: r_max must be positive");
  }

  double alpha() const { return 2.0 * scale / r_max; }

  double radius(double x) const {
    if (x == 1.0) return r_max;  // pin the wall to the endpoint exactly
    return scale * (1.0 + x) / (1.0 - x + alpha());
  }

  /// dr/dx = L (2 + alpha) / (1 - x + alpha)^2, positive on [-1, 1].
  double jacobian(double x) const {
    const double d = 1.0 - x + alpha();
    return scale * (2.0 + alpha()) / (d * d);
  }
};

}  // namespace cavity
