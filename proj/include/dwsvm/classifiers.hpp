#pragma once

#include <string>

#include "dwsvm/dataset.hpp"
#include "dwsvm/hyperparams.hpp"
#include "dwsvm/linear_model.hpp"
#include "dwsvm/solver.hpp"

namespace dwsvm {

enum class Method { Svm, Dwd, Dwsvm, Ndwsvm };

std::string method_name(Method m);
Method method_from_name(const std::string& name);

struct FitDiagnostics {
  bool converged = false;
  int iterations = 0;
  double objective = 0.0;
  bool renormalized = false;  // solver returned ||omega|| < 1; model rescaled
};

/// A fitted classifier. model.direction has unit norm; only DWSVM models
/// carry the axillary intercept (nDWSVM discards its DWD intercept).
struct FittedClassifier {
  Method method = Method::Svm;
  LinearModel model;
  Hyperparams hyperparams;
  FitDiagnostics diagnostics;
};

/// SVM: n hinge terms (weight 1, c = c_svm) under the ball constraint.
FittedClassifier fit_svm(const LabeledDataset& data, double c_svm, const SolverConfig& config = {});

/// DWD: n DWD terms (weight 1, c = c_dwd); the single intercept plays both
/// roles since there is only one hyperplane.
FittedClassifier fit_dwd(const LabeledDataset& data, double c_dwd, const SolverConfig& config = {});

/// DWSVM: n DWD terms (weight alpha, axillary intercept) plus n hinge terms
/// (weight 1-alpha, main intercept); prediction uses (omega, beta) only.
FittedClassifier fit_dwsvm(const LabeledDataset& data, const Hyperparams& hp,
                           const SolverConfig& config = {});

/// Two-step prototype: DWD direction (intercept discarded), then the exact
/// 1-d SVM intercept on the projections x_i'omega.
FittedClassifier fit_ndwsvm(const LabeledDataset& data, double c_dwd, double c_svm,
                            const SolverConfig& config = {});

/// Scale heuristic for c_dwd: 100 / s^2 where s is the median distance
/// ||x_i - x_j|| over all between-class pairs. Throws on single-class data
/// or when the median distance is zero.
double default_c_dwd(const LabeledDataset& data);

}  // namespace dwsvm
