#include "dwsvm/objective.hpp"

#include <cmath>
#include <stdexcept>

namespace dwsvm {

ObjectiveSpec::ObjectiveSpec(const LabeledDataset& data, std::vector<ObjectiveTerm> terms,
                             ConstraintMode constraint, double lambda)
    : data_(&data), terms_(std::move(terms)), constraint_(constraint), lambda_(lambda) {
  if (constraint_ == ConstraintMode::Penalty && (!std::isfinite(lambda_) || lambda_ < 0.0))
    throw std::invalid_argument("ObjectiveSpec: penalty lambda must be nonnegative");
  for (const auto& t : terms_) {
    if (t.observation < 0 || t.observation >= data_->n())
      throw std::invalid_argument("ObjectiveSpec: term references an invalid observation");
    if (!std::isfinite(t.weight) || t.weight < 0.0)
      throw std::invalid_argument("ObjectiveSpec: term weight must be nonnegative");
    if (!std::isfinite(t.c) || t.c <= 0.0)
      throw std::invalid_argument("ObjectiveSpec: term c must be positive");
    if (t.intercept == InterceptRole::Axillary) {
      if (t.kind == LossKind::Hinge)
        throw std::invalid_argument("ObjectiveSpec: hinge terms must bind the main intercept");
      has_axillary_ = true;
    }
  }
  if (has_axillary_) {
    for (const auto& t : terms_)
      if (t.kind == LossKind::Dwd && t.intercept != InterceptRole::Axillary)
        throw std::invalid_argument(
            "ObjectiveSpec: dwd terms must bind the axillary intercept when one exists");
  }
}

namespace {

double term_margin(const ObjectiveSpec& spec, const ObjectiveTerm& t, const SolvePoint& point) {
  const auto& data = spec.data();
  const double b = t.intercept == InterceptRole::Axillary ? point.beta0 : point.beta;
  const double y = static_cast<double>(data.labels()[t.observation]);
  return y * (data.features().row(t.observation).dot(point.omega) + b);
}

}  // namespace

double evaluate_objective(const ObjectiveSpec& spec, const SolvePoint& point) {
  if (point.omega.size() != spec.dim())
    throw std::invalid_argument("evaluate_objective: omega dimension mismatch");
  double total = 0.0;
  for (const auto& t : spec.terms()) {
    if (t.weight == 0.0) continue;
    total += t.weight * loss_value(t.kind, term_margin(spec, t, point), t.c);
  }
  if (spec.constraint() == ConstraintMode::Penalty)
    total += 0.5 * spec.lambda() * point.omega.squaredNorm();
  return total;
}

Eigen::VectorXd objective_subgradient(const ObjectiveSpec& spec, const SolvePoint& point) {
  if (point.omega.size() != spec.dim())
    throw std::invalid_argument("objective_subgradient: omega dimension mismatch");
  const Eigen::Index d = spec.dim();
  const Eigen::Index off = spec.has_axillary() ? 2 : 1;  // [beta0?, beta, omega...]
  Eigen::VectorXd grad = Eigen::VectorXd::Zero(off + d);
  for (const auto& t : spec.terms()) {
    if (t.weight == 0.0) continue;
    const double u = term_margin(spec, t, point);
    const double slope = t.weight * loss_subgradient(t.kind, u, t.c);
    if (slope == 0.0) continue;
    const double y = static_cast<double>(spec.data().labels()[t.observation]);
    const Eigen::Index b_slot = t.intercept == InterceptRole::Axillary ? 0 : off - 1;
    grad[b_slot] += slope * y;
    grad.tail(d) += (slope * y) * spec.data().features().row(t.observation).transpose();
  }
  if (spec.constraint() == ConstraintMode::Penalty) grad.tail(d) += spec.lambda() * point.omega;
  return grad;
}

ObjectiveSpec make_svm_spec(const LabeledDataset& data, double c_svm) {
  if (!std::isfinite(c_svm) || c_svm <= 0.0)
    throw std::invalid_argument("make_svm_spec: c_svm must be positive");
  std::vector<ObjectiveTerm> terms;
  terms.reserve(data.n());
  for (Eigen::Index i = 0; i < data.n(); ++i)
    terms.push_back({LossKind::Hinge, 1.0, c_svm, i, InterceptRole::Main});
  return ObjectiveSpec(data, std::move(terms));
}

ObjectiveSpec make_dwd_spec(const LabeledDataset& data, double c_dwd) {
  if (!std::isfinite(c_dwd) || c_dwd <= 0.0)
    throw std::invalid_argument("make_dwd_spec: c_dwd must be positive");
  std::vector<ObjectiveTerm> terms;
  terms.reserve(data.n());
  // one hyperplane: the single intercept acts as both main and axillary
  for (Eigen::Index i = 0; i < data.n(); ++i)
    terms.push_back({LossKind::Dwd, 1.0, c_dwd, i, InterceptRole::Main});
  return ObjectiveSpec(data, std::move(terms));
}

ObjectiveSpec make_dwsvm_spec(const LabeledDataset& data, const Hyperparams& hp) {
  hp.validate();
  std::vector<ObjectiveTerm> terms;
  terms.reserve(2 * data.n());
  for (Eigen::Index i = 0; i < data.n(); ++i)
    terms.push_back({LossKind::Dwd, hp.alpha, hp.c_dwd, i, InterceptRole::Axillary});
  for (Eigen::Index i = 0; i < data.n(); ++i)
    terms.push_back({LossKind::Hinge, 1.0 - hp.alpha, hp.c_svm, i, InterceptRole::Main});
  return ObjectiveSpec(data, std::move(terms));
}

ObjectiveSpec with_penalty(const ObjectiveSpec& spec, double lambda) {
  return ObjectiveSpec(spec.data(), spec.terms(), ConstraintMode::Penalty, lambda);
}

}  // namespace dwsvm
