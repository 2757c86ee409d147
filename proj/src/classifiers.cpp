#include "dwsvm/classifiers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "dwsvm/errors.hpp"
#include "dwsvm/objective.hpp"

namespace dwsvm {

std::string method_name(Method m) {
  switch (m) {
    case Method::Svm: return "svm";
    case Method::Dwd: return "dwd";
    case Method::Dwsvm: return "dwsvm";
    case Method::Ndwsvm: return "ndwsvm";
  }
  return "unknown";
}

Method method_from_name(const std::string& name) {
  if (name == "svm") return Method::Svm;
  if (name == "dwd") return Method::Dwd;
  if (name == "dwsvm") return Method::Dwsvm;
  if (name == "ndwsvm") return Method::Ndwsvm;
  throw std::invalid_argument("unknown method '" + name + "'");
}

namespace {

void require_both_classes(const LabeledDataset& data, const char* who) {
  if (!data.has_both_classes())
    throw std::invalid_argument(std::string(who) + ": both classes must be present");
}

// The constrained optimum can have ||omega|| < 1 on flat stretches of the
// objective; the reported model is rescaled so the direction has unit norm
// and (beta, beta0) keep the same hyperplanes.
FittedClassifier assemble(Method method, const SolveResult& solve, const Hyperparams& hp,
                          bool keep_axillary) {
  const double norm = solve.omega.norm();
  if (!(norm > 1e-12))
    throw NumericError("fit: solver returned a degenerate (near-zero) direction");
  FittedClassifier fitted;
  fitted.method = method;
  fitted.hyperparams = hp;
  fitted.model.direction = solve.omega / norm;
  fitted.model.intercept = solve.beta / norm;
  if (keep_axillary && solve.beta0) fitted.model.axillary_intercept = *solve.beta0 / norm;
  fitted.diagnostics.converged = solve.converged;
  fitted.diagnostics.iterations = solve.iterations;
  fitted.diagnostics.objective = solve.objective;
  fitted.diagnostics.renormalized = norm < 1.0 - 1e-6;
  return fitted;
}

}  // namespace

FittedClassifier fit_svm(const LabeledDataset& data, double c_svm, const SolverConfig& config) {
  require_both_classes(data, "fit_svm");
  Hyperparams hp;
  hp.c_svm = c_svm;
  const auto spec = make_svm_spec(data, c_svm);
  return assemble(Method::Svm, solve_constrained(spec, config), hp, false);
}

FittedClassifier fit_dwd(const LabeledDataset& data, double c_dwd, const SolverConfig& config) {
  require_both_classes(data, "fit_dwd");
  Hyperparams hp;
  hp.c_dwd = c_dwd;
  const auto spec = make_dwd_spec(data, c_dwd);
  return assemble(Method::Dwd, solve_constrained(spec, config), hp, false);
}

FittedClassifier fit_dwsvm(const LabeledDataset& data, const Hyperparams& hp,
                           const SolverConfig& config) {
  require_both_classes(data, "fit_dwsvm");
  hp.validate();
  const auto spec = make_dwsvm_spec(data, hp);
  return assemble(Method::Dwsvm, solve_constrained(spec, config), hp, true);
}

FittedClassifier fit_ndwsvm(const LabeledDataset& data, double c_dwd, double c_svm,
                            const SolverConfig& config) {
  require_both_classes(data, "fit_ndwsvm");
  if (!std::isfinite(c_svm) || c_svm <= 0.0)
    throw std::invalid_argument("fit_ndwsvm: c_svm must be positive");
  FittedClassifier fitted = fit_dwd(data, c_dwd, config);
  fitted.method = Method::Ndwsvm;
  fitted.hyperparams.c_svm = c_svm;
  // DWD intercept discarded; the cutoff comes from the exact 1-d SVM on the
  // projections along the DWD direction.
  const Eigen::VectorXd projections = data.features() * fitted.model.direction;
  fitted.model.intercept = solve_intercept_1d(projections, data.labels(), c_svm);
  fitted.model.axillary_intercept.reset();
  return fitted;
}

double default_c_dwd(const LabeledDataset& data) {
  require_both_classes(data, "default_c_dwd");
  std::vector<double> distances;
  distances.reserve(static_cast<std::size_t>(data.count_positive() * data.count_negative()));
  for (Eigen::Index i = 0; i < data.n(); ++i) {
    if (data.labels()[i] != 1) continue;
    for (Eigen::Index j = 0; j < data.n(); ++j) {
      if (data.labels()[j] != -1) continue;
      distances.push_back((data.features().row(i) - data.features().row(j)).norm());
    }
  }
  // median: average of the two central order statistics for even counts
  const std::size_t m = distances.size();
  auto mid = distances.begin() + static_cast<std::ptrdiff_t>(m / 2);
  std::nth_element(distances.begin(), mid, distances.end());
  double median = *mid;
  if (m % 2 == 0) {
    auto lo = std::max_element(distances.begin(), mid);
    median = 0.5 * (median + *lo);
  }
  if (!(median > 0.0))
    throw std::invalid_argument("default_c_dwd: zero median between-class distance");
  return 100.0 / (median * median);
}

}  // namespace dwsvm
