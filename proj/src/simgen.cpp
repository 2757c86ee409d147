#include "dwsvm/simgen.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <stdexcept>

#include "dwsvm/rng.hpp"

namespace dwsvm {

void GaussianClassModel::finalize() {
  const Eigen::VectorXd two_mu = 2.0 * mu_;
  mahalanobis_ = std::sqrt(two_mu.dot(solve_sigma(two_mu)));
}

GaussianClassModel GaussianClassModel::identity_cov(Eigen::VectorXd mu) {
  if (mu.size() < 1) throw std::invalid_argument("GaussianClassModel: empty mean");
  GaussianClassModel m;
  m.mu_ = std::move(mu);
  m.kind_ = CovKind::Identity;
  m.finalize();
  return m;
}

GaussianClassModel GaussianClassModel::block_interchangeable(Eigen::VectorXd mu, int block,
                                                             double rho) {
  if (mu.size() < 1) throw std::invalid_argument("GaussianClassModel: empty mean");
  if (block < 2 || mu.size() % block != 0)
    throw std::invalid_argument("GaussianClassModel: dimension must be a multiple of block size");
  if (!(rho > -1.0 / (block - 1)) || !(rho < 1.0))
    throw std::invalid_argument(
        "GaussianClassModel: interchangeable block requires -1/(block-1) < rho < 1");
  GaussianClassModel m;
  m.mu_ = std::move(mu);
  m.kind_ = CovKind::BlockInterchangeable;
  m.block_ = block;
  m.rho_ = rho;
  Eigen::MatrixXd sigma_block =
      Eigen::MatrixXd::Constant(block, block, rho) +
      (1.0 - rho) * Eigen::MatrixXd::Identity(block, block);
  Eigen::LLT<Eigen::MatrixXd> llt(sigma_block);
  if (llt.info() != Eigen::Success)
    throw std::invalid_argument("GaussianClassModel: covariance block is not positive definite");
  m.chol_block_ = llt.matrixL();
  m.finalize();
  return m;
}

GaussianClassModel GaussianClassModel::dense_cov(Eigen::VectorXd mu, Eigen::MatrixXd sigma) {
  if (mu.size() < 1) throw std::invalid_argument("GaussianClassModel: empty mean");
  if (sigma.rows() != mu.size() || sigma.cols() != mu.size())
    throw std::invalid_argument("GaussianClassModel: covariance shape mismatch");
  if (!sigma.isApprox(sigma.transpose(), 1e-12))
    throw std::invalid_argument("GaussianClassModel: covariance must be symmetric");
  GaussianClassModel m;
  m.mu_ = std::move(mu);
  m.kind_ = CovKind::Dense;
  m.sigma_ = std::move(sigma);
  Eigen::LLT<Eigen::MatrixXd> llt(m.sigma_);
  if (llt.info() != Eigen::Success)
    throw std::invalid_argument("GaussianClassModel: covariance is not positive definite");
  m.chol_block_ = llt.matrixL();
  m.finalize();
  return m;
}

Eigen::VectorXd GaussianClassModel::solve_sigma(const Eigen::VectorXd& v) const {
  if (v.size() != dim()) throw std::invalid_argument("solve_sigma: dimension mismatch");
  switch (kind_) {
    case CovKind::Identity:
      return v;
    case CovKind::BlockInterchangeable: {
      // closed-form inverse of (1-rho) I + rho J per block:
      // (1/(1-rho)) [v - rho/(1 + (b-1) rho) * sum(v) * 1]
      Eigen::VectorXd out(v.size());
      const double denom = 1.0 + (block_ - 1) * rho_;
      for (Eigen::Index start = 0; start < v.size(); start += block_) {
        const auto seg = v.segment(start, block_);
        out.segment(start, block_) =
            (seg.array() - rho_ * seg.sum() / denom).matrix() / (1.0 - rho_);
      }
      return out;
    }
    case CovKind::Dense: {
      Eigen::LLT<Eigen::MatrixXd> llt(sigma_);
      return llt.solve(v);
    }
  }
  throw std::logic_error("solve_sigma: unreachable");
}

GaussianClassModel make_example1(Eigen::Index d) {
  if (d < 1) throw std::invalid_argument("make_example1: d must be >= 1");
  const double c = 1.35 / std::sqrt(static_cast<double>(d));
  return GaussianClassModel::identity_cov(Eigen::VectorXd::Constant(d, c));
}

GaussianClassModel make_example2(Eigen::Index d) {
  if (d < 50 || d % 50 != 0)
    throw std::invalid_argument("make_example2: d must be a positive multiple of 50");
  constexpr int kBlock = 50;
  constexpr double kRho = 0.8;
  Eigen::VectorXd v = Eigen::VectorXd::Zero(d);
  for (int j = 0; j < kBlock; ++j) v[j] = std::sqrt(static_cast<double>(kBlock - j));
  // c solves {(2cv)' Sigma^-1 (2cv)}^(1/2) = 2.7 via the closed-form block
  // inverse; only the first block of v is nonzero.
  const double sum_v = v.head(kBlock).sum();
  const double quad =
      (v.head(kBlock).squaredNorm() - kRho * sum_v * sum_v / (1.0 + (kBlock - 1) * kRho)) /
      (1.0 - kRho);
  const double c = 2.7 / (2.0 * std::sqrt(quad));
  return GaussianClassModel::block_interchangeable(c * v, kBlock, kRho);
}

LabeledDataset sample(const GaussianClassModel& model, Eigen::Index n_plus, Eigen::Index n_minus,
                      std::uint64_t seed) {
  if (n_plus < 0 || n_minus < 0 || n_plus + n_minus == 0)
    throw std::invalid_argument("sample: class sizes must be nonnegative and not both zero");
  const Eigen::Index d = model.dim();
  Eigen::MatrixXd x(n_plus + n_minus, d);
  Eigen::VectorXi y(n_plus + n_minus);

  auto draw_class = [&](int label, Eigen::Index rows, Eigen::Index row0, RngStream& rng) {
    const double sign = label == 1 ? 1.0 : -1.0;
    Eigen::VectorXd z(d);
    for (Eigen::Index i = 0; i < rows; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) z[j] = rng.normal();
      switch (model.cov_kind()) {
        case CovKind::Identity:
          x.row(row0 + i) = (sign * model.mu() + z).transpose();
          break;
        case CovKind::BlockInterchangeable: {
          const int b = model.block_size();
          Eigen::VectorXd xi = sign * model.mu();
          for (Eigen::Index start = 0; start < d; start += b)
            xi.segment(start, b) += model.chol_factor() * z.segment(start, b);
          x.row(row0 + i) = xi.transpose();
          break;
        }
        case CovKind::Dense:
          x.row(row0 + i) = (sign * model.mu() + model.chol_factor() * z).transpose();
          break;
      }
      y[row0 + i] = label;
    }
  };

  RngStream rng_plus(derive_stream(seed, 1));
  RngStream rng_minus(derive_stream(seed, 2));
  draw_class(+1, n_plus, 0, rng_plus);
  draw_class(-1, n_minus, n_plus, rng_minus);
  return LabeledDataset(std::move(x), std::move(y));
}

LinearModel bayes_rule(const GaussianClassModel& model) {
  Eigen::VectorXd direction = model.solve_sigma(2.0 * model.mu());
  const double norm = direction.norm();
  if (!(norm > 0.0)) throw std::invalid_argument("bayes_rule: zero mean difference");
  LinearModel m;
  m.direction = direction / norm;
  m.intercept = 0.0;
  return m;
}

double standard_normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double bayes_error(const GaussianClassModel& model) {
  return standard_normal_cdf(-0.5 * model.mahalanobis());
}

}  // namespace dwsvm
