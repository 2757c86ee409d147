#pragma once

#include <Eigen/Core>
#include <cstdint>

#include "dwsvm/dataset.hpp"
#include "dwsvm/linear_model.hpp"

namespace dwsvm {

enum class CovKind { Identity, BlockInterchangeable, Dense };

/// Two-class Gaussian generative spec: classes are N(+mu, Sigma) and
/// N(-mu, Sigma) with equal priors. Sigma is stored in structured form.
class GaussianClassModel {
 public:
  static GaussianClassModel identity_cov(Eigen::VectorXd mu);
  /// Block-diagonal of (d / block) interchangeable blocks with unit diagonal
  /// and off-diagonal rho; requires -1/(block-1) < rho < 1 and d % block == 0.
  static GaussianClassModel block_interchangeable(Eigen::VectorXd mu, int block, double rho);
  static GaussianClassModel dense_cov(Eigen::VectorXd mu, Eigen::MatrixXd sigma);

  Eigen::Index dim() const { return mu_.size(); }
  const Eigen::VectorXd& mu() const { return mu_; }
  CovKind cov_kind() const { return kind_; }
  int block_size() const { return block_; }
  double rho() const { return rho_; }
  const Eigen::MatrixXd& dense_sigma() const { return sigma_; }

  /// Mahalanobis distance between the class means: {(2mu)' Sigma^-1 (2mu)}^(1/2).
  double mahalanobis() const { return mahalanobis_; }

  /// Applies Sigma^-1 (closed form for identity and interchangeable blocks,
  /// dense solve otherwise).
  Eigen::VectorXd solve_sigma(const Eigen::VectorXd& v) const;

  /// Lower Cholesky factor: one shared block for the interchangeable kind,
  /// the full factor for the dense kind, empty for identity.
  const Eigen::MatrixXd& chol_factor() const { return chol_block_; }

 private:
  GaussianClassModel() = default;
  void finalize();

  Eigen::VectorXd mu_;
  CovKind kind_ = CovKind::Identity;
  int block_ = 0;
  double rho_ = 0.0;
  Eigen::MatrixXd sigma_;        // dense kind only
  Eigen::MatrixXd chol_block_;   // Cholesky factor reused across blocks
  double mahalanobis_ = 0.0;
};

/// Constant mean difference, identity covariance: mu = c*1_d with
/// c = 1.35/sqrt(d), so the Mahalanobis distance is 2.7 exactly.
GaussianClassModel make_example1(Eigen::Index d);

/// Decreasing mean difference over the first block, block-diagonal
/// interchangeable covariance (block 50, rho 0.8): mu = c*v_d with
/// v_d = (sqrt(50), ..., sqrt(1), 0, ..., 0) and c chosen so the Mahalanobis
/// distance is 2.7. Requires d divisible by 50.
GaussianClassModel make_example2(Eigen::Index d);

/// n_plus draws from N(+mu, Sigma) then n_minus from N(-mu, Sigma), using
/// per-class substreams derived from the seed (class +1 uses key 1, class -1
/// key 2), one shared per-block Cholesky factor, and row-major draw order.
/// Deterministic given the seed.
LabeledDataset sample(const GaussianClassModel& model, Eigen::Index n_plus, Eigen::Index n_minus,
                      std::uint64_t seed);

/// Bayes rule for equal priors: direction proportional to Sigma^-1 (2mu),
/// normalized to unit length; intercept 0 by the +-mu symmetry. Training
/// imbalance is a sampling artifact and does not move the Bayes intercept.
LinearModel bayes_rule(const GaussianClassModel& model);

/// Bayes misclassification rate Phi(-Delta/2) for Mahalanobis distance Delta.
double bayes_error(const GaussianClassModel& model);

/// Standard normal CDF.
double standard_normal_cdf(double x);

}  // namespace dwsvm
