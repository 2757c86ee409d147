#pragma once

#include <Eigen/Core>
#include <optional>
#include <stdexcept>

namespace dwsvm {

/// Linear discriminant f(x) = x'omega + beta. After fitting, omega has unit
/// L2 norm. DWSVM models additionally carry the axillary intercept beta0 of
/// the parallel hyperplane used by the gap term; beta0 never participates in
/// prediction.
struct LinearModel {
  Eigen::VectorXd direction;                 // omega
  double intercept = 0.0;                    // beta
  std::optional<double> axillary_intercept;  // beta0, DWSVM only
};

/// Functional margin y * (x'omega + b), with b = beta or, when requested,
/// beta0.
inline double functional_margin(const LinearModel& model, const Eigen::VectorXd& x, int y,
                                bool use_axillary = false) {
  if (x.size() != model.direction.size())
    throw std::invalid_argument("functional_margin: dimension mismatch");
  if (use_axillary && !model.axillary_intercept)
    throw std::invalid_argument("functional_margin: model has no axillary intercept");
  const double b = use_axillary ? *model.axillary_intercept : model.intercept;
  return static_cast<double>(y) * (model.direction.dot(x) + b);
}

/// Classification rule sign(x'omega + beta). Ties (exact zero) map to +1.
/// The axillary intercept is never used here.
inline int predict(const LinearModel& model, const Eigen::VectorXd& x) {
  if (x.size() != model.direction.size())
    throw std::invalid_argument("predict: dimension mismatch");
  return model.direction.dot(x) + model.intercept >= 0.0 ? +1 : -1;
}

}  // namespace dwsvm
