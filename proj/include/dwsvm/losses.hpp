#pragma once

#include <cmath>
#include <stdexcept>

namespace dwsvm {

enum class LossKind { Hinge, Dwd };

namespace detail {

inline void check_loss_args(double u, double c) {
  if (!std::isfinite(u)) throw std::invalid_argument("loss: margin u must be finite");
  if (!std::isfinite(c) || c <= 0.0) throw std::invalid_argument("loss: c must be positive and finite");
}

}  // namespace detail

/// Modified hinge loss H_C(u): sqrt(C) - C*u for u <= 1/sqrt(C), else 0.
/// Convex, nonincreasing, nonnegative; kink at u = 1/sqrt(C).
inline double hinge_loss(double u, double c) {
  detail::check_loss_args(u, c);
  const double root_c = std::sqrt(c);
  const double kink = 1.0 / root_c;
  return u <= kink ? root_c - c * u : 0.0;
}

/// DWD loss V_C(u): 2*sqrt(C) - C*u for u <= 1/sqrt(C), else 1/u.
/// Convex and C^1: both branches give value sqrt(C) and slope -C at the kink.
inline double dwd_loss(double u, double c) {
  detail::check_loss_args(u, c);
  const double root_c = std::sqrt(c);
  const double kink = 1.0 / root_c;
  return u <= kink ? 2.0 * root_c - c * u : 1.0 / u;
}

/// Derivative (subgradient element) of the chosen loss at u.
/// Dwd: -C for u <= 1/sqrt(C), -1/u^2 otherwise (true derivative, V is C^1).
/// Hinge: -C for u < 1/sqrt(C), 0 for u > 1/sqrt(C); at the kink the
/// subdifferential is [-C, 0] and we return -C (steepest element) so that
/// subgradient steps keep making progress from the kink.
inline double loss_subgradient(LossKind kind, double u, double c) {
  detail::check_loss_args(u, c);
  const double kink = 1.0 / std::sqrt(c);
  if (kind == LossKind::Dwd) {
    return u <= kink ? -c : -1.0 / (u * u);
  }
  return u <= kink ? -c : 0.0;
}

inline double loss_value(LossKind kind, double u, double c) {
  return kind == LossKind::Hinge ? hinge_loss(u, c) : dwd_loss(u, c);
}

}  // namespace dwsvm
