#pragma once

#include <Eigen/Core>

namespace dwsvm {

/// Two-class sample: n rows of features in R^d with labels in {+1, -1}.
/// Immutable after construction; validated on construction.
class LabeledDataset {
 public:
  /// Throws std::invalid_argument on empty data, labels outside {+1,-1},
  /// non-finite features, or a row-count mismatch.
  LabeledDataset(Eigen::MatrixXd features, Eigen::VectorXi labels);

  Eigen::Index n() const { return features_.rows(); }
  Eigen::Index dim() const { return features_.cols(); }
  const Eigen::MatrixXd& features() const { return features_; }
  const Eigen::VectorXi& labels() const { return labels_; }

  Eigen::Index count_positive() const { return n_plus_; }
  Eigen::Index count_negative() const { return labels_.size() - n_plus_; }
  bool has_both_classes() const { return n_plus_ > 0 && count_negative() > 0; }

  /// Rows with the given label, in original order.
  Eigen::MatrixXd class_features(int label) const;

 private:
  Eigen::MatrixXd features_;
  Eigen::VectorXi labels_;
  Eigen::Index n_plus_ = 0;
};

}  // namespace dwsvm
