#include "dwsvm/dataset.hpp"

#include <stdexcept>
#include <string>

namespace dwsvm {

LabeledDataset::LabeledDataset(Eigen::MatrixXd features, Eigen::VectorXi labels)
    : features_(std::move(features)), labels_(std::move(labels)) {
  if (features_.rows() < 1 || features_.cols() < 1)
    throw std::invalid_argument("LabeledDataset: need n >= 1 and d >= 1");
  if (labels_.size() != features_.rows())
    throw std::invalid_argument("LabeledDataset: feature rows and labels differ in count");
  if (!features_.allFinite())
    throw std::invalid_argument("LabeledDataset: features must be finite");
  for (Eigen::Index i = 0; i < labels_.size(); ++i) {
    if (labels_[i] != 1 && labels_[i] != -1)
      throw std::invalid_argument("LabeledDataset: label at row " + std::to_string(i) +
                                  " is not +1 or -1");
    if (labels_[i] == 1) ++n_plus_;
  }
}

Eigen::MatrixXd LabeledDataset::class_features(int label) const {
  const Eigen::Index rows = label == 1 ? count_positive() : count_negative();
  Eigen::MatrixXd out(rows, dim());
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < n(); ++i)
    if (labels_[i] == label) out.row(r++) = features_.row(i);
  return out;
}

}  // namespace dwsvm
