#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dwsvm/classifiers.hpp"

namespace dwsvm {

enum class ExperimentKind {
  Example1,
  Example2,
  SensitivityC,
  SensitivityAlpha,
  Imbalance,
  Perturb,
  Fisher,
  Fit,
  Predict,
};

std::string kind_name(ExperimentKind kind);
ExperimentKind kind_from_name(const std::string& name);

/// Flat key-value experiment configuration ("key = value" lines, '#'
/// comments). Unknown keys are errors: configs must describe exactly the run
/// they reproduce. Every field has the documented default, so a config may
/// be as short as its `kind` line.
struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::Example1;
  std::uint64_t seed = 1;
  int replications = 100;

  // simulation studies
  std::vector<int> dims = {100, 200, 300, 500, 1000};
  int n_plus = 200;
  int n_minus = 50;
  int n_test_per_class = 2000;
  std::vector<Method> methods = {Method::Svm, Method::Dwd, Method::Dwsvm, Method::Ndwsvm};

  // hyperparameters
  std::vector<double> c_svm_grid;        // defaults to 2^-5..2^12
  double c_svm_fixed = 100.0;            // DWSVM / nDWSVM
  double alpha = 0.5;
  std::optional<double> c_dwd;           // absent = scale heuristic ("auto")

  // sensitivity sweeps
  int example = 1;
  int d = 300;
  std::vector<double> alpha_grid;        // defaults to 0.05, 0.10, ..., 0.95

  // imbalance sweep
  double support_bound = 5.0;            // M: negatives uniform on [-M, 0]
  double x0 = 1.0;                       // the single positive observation
  std::vector<int> n_minus_list = {10, 100, 1000, 10000};
  double imbalance_c_svm = 1.0;

  // perturbation protocol
  std::string data_path;                 // empty = simulated HDLSS stand-in
  int standin_d = 1000;
  int standin_n_plus = 27;
  int standin_n_minus = 11;
  std::vector<int> k_list = {0, 1, 2};
  int cv_folds = 3;

  // Fisher consistency check
  std::vector<double> q_grid;            // defaults to 0.1..0.9 without 0.5
  std::vector<double> fisher_alpha_grid = {0.1, 0.5, 0.9};
  std::vector<double> fisher_c_grid = {1.0, 100.0};

  // fit / predict kinds
  std::string method = "dwsvm";
  std::string model_path;
  std::string output_path;
  std::optional<double> fit_c_svm;       // absent = method default

  // solver
  double tol = 1e-6;
  int max_iters = 50000;

  static ExperimentConfig parse_file(const std::filesystem::path& path);
  static ExperimentConfig parse_text(const std::string& text, const std::string& origin = "<text>");

  std::vector<double> effective_c_svm_grid() const;
  std::vector<double> effective_alpha_grid() const;
  std::vector<double> effective_q_grid() const;

  /// Canonical sorted key=value rendering for the manifest.
  std::string echo() const;
};

}  // namespace dwsvm
