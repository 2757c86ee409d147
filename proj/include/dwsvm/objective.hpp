#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "dwsvm/dataset.hpp"
#include "dwsvm/hyperparams.hpp"
#include "dwsvm/losses.hpp"

namespace dwsvm {

enum class InterceptRole { Main, Axillary };
enum class ConstraintMode { UnitBall, Penalty };

/// One weighted loss term: loss(y_i * (x_i'omega + chosen intercept); c).
struct ObjectiveTerm {
  LossKind kind = LossKind::Hinge;
  double weight = 1.0;
  double c = 1.0;
  Eigen::Index observation = 0;
  InterceptRole intercept = InterceptRole::Main;
};

/// A convex objective over (beta0, beta, omega): weighted sum of hinge/DWD
/// terms over dataset observations, under either the unit-ball constraint
/// ||omega||^2 <= 1 or the ridge penalty (lambda/2)||omega||^2.
///
/// Hinge terms always bind the main intercept. DWD terms bind the axillary
/// intercept when the spec has one (the two-hyperplane objective) and the
/// main intercept otherwise (plain DWD).
class ObjectiveSpec {
 public:
  ObjectiveSpec(const LabeledDataset& data, std::vector<ObjectiveTerm> terms,
                ConstraintMode constraint = ConstraintMode::UnitBall, double lambda = 0.0);

  const LabeledDataset& data() const { return *data_; }
  const std::vector<ObjectiveTerm>& terms() const { return terms_; }
  ConstraintMode constraint() const { return constraint_; }
  double lambda() const { return lambda_; }
  bool has_axillary() const { return has_axillary_; }
  Eigen::Index dim() const { return data_->dim(); }

 private:
  const LabeledDataset* data_;
  std::vector<ObjectiveTerm> terms_;
  ConstraintMode constraint_;
  double lambda_;
  bool has_axillary_ = false;
};

/// A candidate point. beta0 is ignored by specs without an axillary
/// intercept.
struct SolvePoint {
  double beta0 = 0.0;
  double beta = 0.0;
  Eigen::VectorXd omega;
};

/// Sum of weight * loss(margin; c) over terms, plus (lambda/2)||omega||^2 in
/// penalty mode. The ball constraint is not enforced here.
double evaluate_objective(const ObjectiveSpec& spec, const SolvePoint& point);

/// Analytic subgradient of evaluate_objective with respect to
/// (beta0, beta, omega), using the documented kink tie-breaks of
/// loss_subgradient. Layout: [beta0?, beta, omega...]; beta0 slot present
/// only when the spec has an axillary intercept.
Eigen::VectorXd objective_subgradient(const ObjectiveSpec& spec, const SolvePoint& point);

// Spec builders for the four methods' programs.
ObjectiveSpec make_svm_spec(const LabeledDataset& data, double c_svm);
ObjectiveSpec make_dwd_spec(const LabeledDataset& data, double c_dwd);
ObjectiveSpec make_dwsvm_spec(const LabeledDataset& data, const Hyperparams& hp);

/// Same terms, ridge penalty instead of the ball constraint.
ObjectiveSpec with_penalty(const ObjectiveSpec& spec, double lambda);

}  // namespace dwsvm
