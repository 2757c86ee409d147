#pragma once

#include <filesystem>
#include <vector>

#include "dwsvm/config.hpp"

namespace dwsvm {

/// One fitted cell of a simulation study. Deterministic fields go to
/// metrics.csv; wall-clock timing is written separately (timings.csv) so
/// metric CSVs stay byte-identical across reruns.
struct MetricRecord {
  Method method = Method::Svm;
  int d = 0;
  int replication = 0;
  double test_error = 0.0;
  double angle_to_bayes = 0.0;
  double c_svm = 0.0;
  double c_dwd = 0.0;
  double alpha = 0.0;
  double fit_seconds = 0.0;
};

struct SensitivityRecord {
  double grid_value = 0.0;  // c_svm or alpha, by experiment kind
  int replication = 0;
  double test_error = 0.0;
};

struct ImbalanceRecord {
  Method method = Method::Svm;
  int n_minus = 0;
  int replication = 0;
  double beta = 0.0;
};

struct PerturbRecord {
  Method method = Method::Svm;
  int k = 0;
  int folding = 0;
  int misclassified = 0;
  double c_svm_used = 0.0;
};

/// One cell of the conditional-risk minimization check: the minimizers of
/// the separable risk in f (hinge part) and f0 (DWD part) at conditional
/// probability q, and whether sign(f*) matched sign(q - 1/2).
struct RiskPoint {
  double q = 0.0;
  double alpha = 0.0;
  double c_svm = 0.0;
  double c_dwd = 0.0;
  double f_star = 0.0;
  double f0_star = 0.0;
  double hinge_risk = 0.0;  // q H(f*) + (1-q) H(-f*), unweighted by alpha
  double dwd_risk = 0.0;    // q V(f0*) + (1-q) V(-f0*)
  double total_risk = 0.0;
  bool sign_ok = false;
  bool bracket_widened = false;
};

/// Simulation study over (dims x replications): train/tuning/test draws,
/// tuned SVM, DWD and DWSVM/nDWSVM at fixed hyperparameters; writes
/// metrics.csv, summary.csv, timings.csv and manifest.txt under out_dir.
std::vector<MetricRecord> run_simulation_study(const ExperimentConfig& config,
                                               const std::filesystem::path& out_dir,
                                               int workers = 0);

/// DWSVM test error per grid point (c_svm or alpha sweep) per replication.
std::vector<SensitivityRecord> run_sensitivity(const ExperimentConfig& config,
                                               const std::filesystem::path& out_dir,
                                               int workers = 0);

/// d=1 extreme-imbalance experiment: one positive at x0, n_minus negatives
/// uniform on [-M, 0]; records the fitted intercept per method and n_minus.
std::vector<ImbalanceRecord> run_imbalance_sweep(const ExperimentConfig& config,
                                                 const std::filesystem::path& out_dir,
                                                 int workers = 0);

/// Label-perturbation robustness: for each k and folding, swap the labels of
/// k observations per class, tune c_svm by CV on the perturbed data, then
/// score k-fold CV counts against the true labels.
std::vector<PerturbRecord> run_perturbation(const ExperimentConfig& config,
                                            const std::filesystem::path& out_dir,
                                            int workers = 0);

/// Minimizes the conditional surrogate risk over (f, f0) by golden-section
/// search per cell and checks sign(f*) = sign(q - 1/2).
std::vector<RiskPoint> run_fisher_check(const ExperimentConfig& config,
                                        const std::filesystem::path& out_dir);

/// Config-driven fit / predict (the CLI subcommands share these).
FittedClassifier run_fit(const ExperimentConfig& config, const std::filesystem::path& out_dir);
void run_predict(const ExperimentConfig& config, const std::filesystem::path& out_dir);

/// The simulated HDLSS stand-in used by the perturbation protocol when no
/// CSV is supplied.
LabeledDataset make_perturb_standin(const ExperimentConfig& config);

}  // namespace dwsvm
