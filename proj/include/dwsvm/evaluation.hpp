#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "dwsvm/dataset.hpp"
#include "dwsvm/linear_model.hpp"

namespace dwsvm {

/// Fraction of observations with predict(model, x) != label.
double misclass_rate(const LinearModel& model, const LabeledDataset& data);

/// Angle in degrees between two unit directions, folded to [0, 90]: a
/// direction and its negation define the same hyperplane family, so the
/// angle is arccos(|a'b|). Inputs must be unit vectors within 1e-6.
double angle_between(const Eigen::VectorXd& dir_a, const Eigen::VectorXd& dir_b);

/// One row per observation: projection x'omega, label, functional margin to
/// the main hyperplane, and to the axillary hyperplane when present.
struct ProjectionTable {
  Eigen::VectorXd projection;
  Eigen::VectorXi label;
  Eigen::VectorXd margin_main;
  std::optional<Eigen::VectorXd> margin_axillary;
};

ProjectionTable export_projections(const LinearModel& model, const LabeledDataset& data);

/// Largest fraction of values lying within `window` of any one value (the
/// modal margin). Near 1 for severe data-piling.
double piling_fraction(const Eigen::VectorXd& margins, double window = 1e-3);

/// Stratified k-fold assignment: within each class, a seeded shuffle is dealt
/// round-robin, so per-class fold sizes differ by at most one.
struct FoldPlan {
  int k = 0;
  std::vector<int> assignment;  // observation -> fold in [0, k)
  std::uint64_t seed = 0;
};

/// Throws std::invalid_argument if k < 2, k > n, or some fold's training
/// part would miss a class entirely (single-class folds cannot be fixed by
/// reshuffling; retries are pointless for stratified deals, so this fails
/// fast).
FoldPlan make_stratified_folds(const LabeledDataset& data, int k, std::uint64_t seed);

using FitProcedure = std::function<LinearModel(const LabeledDataset&)>;

struct CvResult {
  std::vector<int> fold_misclassified;  // held-out errors per fold
  double mean_misclassified = 0.0;
  int total_misclassified = 0;
};

/// k-fold cross validation. Training always uses the dataset's labels; when
/// score_labels is given, held-out predictions are scored against it instead
/// (the label-perturbation protocol scores against pre-perturbation labels).
CvResult kfold_cv(const LabeledDataset& data, const FoldPlan& plan, const FitProcedure& fit,
                  const std::optional<Eigen::VectorXi>& score_labels = std::nullopt);

/// The c_svm tuning grid 2^-5, 2^-4, ..., 2^12.
std::vector<double> default_c_svm_grid();

/// Fit on train at each grid value, score on the tuning set, return the grid
/// value with the smallest error; ties break toward the smaller c_svm.
double tune_c_svm(const LabeledDataset& train, const LabeledDataset& tuning,
                  const std::vector<double>& grid,
                  const std::function<LinearModel(const LabeledDataset&, double)>& fit_at_c);

/// Same protocol with k-fold cross validation instead of a tuning set.
double tune_c_svm_cv(const LabeledDataset& train, const FoldPlan& plan,
                     const std::vector<double>& grid,
                     const std::function<LinearModel(const LabeledDataset&, double)>& fit_at_c);

}  // namespace dwsvm
