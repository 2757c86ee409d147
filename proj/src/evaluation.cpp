#include "dwsvm/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "dwsvm/rng.hpp"

namespace dwsvm {

double misclass_rate(const LinearModel& model, const LabeledDataset& data) {
  if (data.dim() != model.direction.size())
    throw std::invalid_argument("misclass_rate: dimension mismatch");
  const Eigen::VectorXd score =
      (data.features() * model.direction).array() + model.intercept;
  Eigen::Index wrong = 0;
  for (Eigen::Index i = 0; i < data.n(); ++i) {
    const int pred = score[i] >= 0.0 ? +1 : -1;
    if (pred != data.labels()[i]) ++wrong;
  }
  return static_cast<double>(wrong) / static_cast<double>(data.n());
}

double angle_between(const Eigen::VectorXd& dir_a, const Eigen::VectorXd& dir_b) {
  if (dir_a.size() != dir_b.size()) throw std::invalid_argument("angle_between: size mismatch");
  if (std::abs(dir_a.norm() - 1.0) > 1e-6 || std::abs(dir_b.norm() - 1.0) > 1e-6)
    throw std::invalid_argument("angle_between: inputs must be unit vectors");
  const double cosine = std::clamp(std::abs(dir_a.dot(dir_b)), 0.0, 1.0);
  return std::acos(cosine) * 180.0 / 3.14159265358979323846;
}

ProjectionTable export_projections(const LinearModel& model, const LabeledDataset& data) {
  if (data.dim() != model.direction.size())
    throw std::invalid_argument("export_projections: dimension mismatch");
  ProjectionTable table;
  table.projection = data.features() * model.direction;
  table.label = data.labels();
  table.margin_main.resize(data.n());
  for (Eigen::Index i = 0; i < data.n(); ++i)
    table.margin_main[i] = data.labels()[i] * (table.projection[i] + model.intercept);
  if (model.axillary_intercept) {
    Eigen::VectorXd ax(data.n());
    for (Eigen::Index i = 0; i < data.n(); ++i)
      ax[i] = data.labels()[i] * (table.projection[i] + *model.axillary_intercept);
    table.margin_axillary = std::move(ax);
  }
  return table;
}

double piling_fraction(const Eigen::VectorXd& margins, double window) {
  if (margins.size() == 0) throw std::invalid_argument("piling_fraction: empty margins");
  std::vector<double> sorted(margins.data(), margins.data() + margins.size());
  std::sort(sorted.begin(), sorted.end());
  std::size_t best = 0;
  std::size_t lo = 0;
  for (std::size_t hi = 0; hi < sorted.size(); ++hi) {
    while (sorted[hi] - sorted[lo] > window) ++lo;
    best = std::max(best, hi - lo + 1);
  }
  return static_cast<double>(best) / static_cast<double>(sorted.size());
}

FoldPlan make_stratified_folds(const LabeledDataset& data, int k, std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("make_stratified_folds: k must be >= 2");
  if (k > data.n()) throw std::invalid_argument("make_stratified_folds: k exceeds n");

  // Stratified deals give identical per-fold class counts for any shuffle,
  // so retries cannot fix a class that is too small; they exist to honor the
  // bounded-retry contract before failing.
  for (int attempt = 0; attempt < 3; ++attempt) {
    FoldPlan plan;
    plan.k = k;
    plan.seed = seed;
    plan.assignment.assign(static_cast<std::size_t>(data.n()), 0);
    RngStream rng(derive_stream(seed, 0x7f01, static_cast<std::uint64_t>(attempt)));
    for (int label : {+1, -1}) {
      std::vector<Eigen::Index> idx;
      for (Eigen::Index i = 0; i < data.n(); ++i)
        if (data.labels()[i] == label) idx.push_back(i);
      for (std::size_t j = idx.size(); j > 1; --j)
        std::swap(idx[j - 1], idx[static_cast<std::size_t>(rng.below(j))]);
      for (std::size_t j = 0; j < idx.size(); ++j)
        plan.assignment[static_cast<std::size_t>(idx[j])] = static_cast<int>(j % k);
    }
    bool ok = true;
    for (int f = 0; f < k && ok; ++f) {
      Eigen::Index train_plus = 0, train_minus = 0, held = 0;
      for (Eigen::Index i = 0; i < data.n(); ++i) {
        if (plan.assignment[static_cast<std::size_t>(i)] == f) {
          ++held;
          continue;
        }
        (data.labels()[i] == 1 ? train_plus : train_minus)++;
      }
      ok = train_plus > 0 && train_minus > 0 && held > 0;
    }
    if (ok) return plan;
  }
  throw std::invalid_argument(
      "make_stratified_folds: some fold would leave a single-class training part");
}

namespace {

LabeledDataset subset(const LabeledDataset& data, const std::vector<Eigen::Index>& rows) {
  Eigen::MatrixXd x(static_cast<Eigen::Index>(rows.size()), data.dim());
  Eigen::VectorXi y(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    x.row(static_cast<Eigen::Index>(r)) = data.features().row(rows[r]);
    y[static_cast<Eigen::Index>(r)] = data.labels()[rows[r]];
  }
  return LabeledDataset(std::move(x), std::move(y));
}

}  // namespace

CvResult kfold_cv(const LabeledDataset& data, const FoldPlan& plan, const FitProcedure& fit,
                  const std::optional<Eigen::VectorXi>& score_labels) {
  if (static_cast<Eigen::Index>(plan.assignment.size()) != data.n())
    throw std::invalid_argument("kfold_cv: fold plan does not match dataset");
  if (score_labels && score_labels->size() != data.n())
    throw std::invalid_argument("kfold_cv: score labels size mismatch");
  CvResult result;
  result.fold_misclassified.resize(static_cast<std::size_t>(plan.k), 0);
  for (int f = 0; f < plan.k; ++f) {
    std::vector<Eigen::Index> train_rows, held_rows;
    for (Eigen::Index i = 0; i < data.n(); ++i)
      (plan.assignment[static_cast<std::size_t>(i)] == f ? held_rows : train_rows).push_back(i);
    const LinearModel model = fit(subset(data, train_rows));
    int wrong = 0;
    for (Eigen::Index i : held_rows) {
      const int truth = score_labels ? (*score_labels)[i] : data.labels()[i];
      if (predict(model, data.features().row(i).transpose()) != truth) ++wrong;
    }
    result.fold_misclassified[static_cast<std::size_t>(f)] = wrong;
  }
  result.total_misclassified =
      std::accumulate(result.fold_misclassified.begin(), result.fold_misclassified.end(), 0);
  result.mean_misclassified =
      static_cast<double>(result.total_misclassified) / static_cast<double>(plan.k);
  return result;
}

std::vector<double> default_c_svm_grid() {
  std::vector<double> grid;
  for (int e = -5; e <= 12; ++e) grid.push_back(std::ldexp(1.0, e));
  return grid;
}

namespace {

double pick_best(const std::vector<double>& grid, const std::function<double(double)>& error_at) {
  if (grid.empty()) throw std::invalid_argument("tune_c_svm: empty grid");
  std::vector<double> sorted = grid;
  std::sort(sorted.begin(), sorted.end());
  double best_c = sorted.front();
  double best_err = std::numeric_limits<double>::infinity();
  for (double c : sorted) {
    const double err = error_at(c);
    if (err < best_err) {  // ties keep the smaller c
      best_err = err;
      best_c = c;
    }
  }
  return best_c;
}

}  // namespace

double tune_c_svm(const LabeledDataset& train, const LabeledDataset& tuning,
                  const std::vector<double>& grid,
                  const std::function<LinearModel(const LabeledDataset&, double)>& fit_at_c) {
  return pick_best(grid, [&](double c) { return misclass_rate(fit_at_c(train, c), tuning); });
}

double tune_c_svm_cv(const LabeledDataset& train, const FoldPlan& plan,
                     const std::vector<double>& grid,
                     const std::function<LinearModel(const LabeledDataset&, double)>& fit_at_c) {
  return pick_best(grid, [&](double c) {
    const auto cv = kfold_cv(train, plan, [&](const LabeledDataset& d) { return fit_at_c(d, c); });
    return cv.mean_misclassified;
  });
}

}  // namespace dwsvm
