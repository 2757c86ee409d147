#pragma once

#include <cmath>
#include <stdexcept>

namespace dwsvm {

/// Hyperparameters shared by the four classifiers. alpha weights the DWD
/// component of DWSVM and must stay in [0, 1); lambda is used only by the
/// penalized solver variant.
struct Hyperparams {
  double c_svm = 100.0;
  double c_dwd = 1.0;
  double alpha = 0.5;
  double lambda = 0.0;

  void validate() const {
    if (!std::isfinite(c_svm) || c_svm <= 0.0)
      throw std::invalid_argument("Hyperparams: c_svm must be positive");
    if (!std::isfinite(c_dwd) || c_dwd <= 0.0)
      throw std::invalid_argument("Hyperparams: c_dwd must be positive");
    if (!std::isfinite(alpha) || alpha < 0.0 || alpha >= 1.0)
      throw std::invalid_argument("Hyperparams: alpha must lie in [0, 1)");
    if (!std::isfinite(lambda) || lambda < 0.0)
      throw std::invalid_argument("Hyperparams: lambda must be nonnegative");
  }
};

}  // namespace dwsvm
