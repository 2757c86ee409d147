#include "dwsvm/model_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "dwsvm/csv.hpp"
#include "dwsvm/errors.hpp"

namespace dwsvm {

namespace {

constexpr const char* kMagic = "dwsvm model v1";

double parse_double_field(const std::string& value, const std::string& key,
                          const std::string& file) {
  double out = 0.0;
  const char* begin = value.data();
  const char* end = value.data() + value.size();
  if (!value.empty() && value.front() == '+') ++begin;
  const auto res = std::from_chars(begin, end, out);
  if (res.ec != std::errc() || res.ptr != end)
    throw DataError(file + ": bad value for '" + key + "'");
  return out;
}

}  // namespace

void save_model(const std::filesystem::path& path, const FittedClassifier& fitted) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write model file " + path.string());
  out << kMagic << "\n";
  out << "method " << method_name(fitted.method) << "\n";
  out << "d " << fitted.model.direction.size() << "\n";
  out << "c_svm " << format_double(fitted.hyperparams.c_svm) << "\n";
  out << "c_dwd " << format_double(fitted.hyperparams.c_dwd) << "\n";
  out << "alpha " << format_double(fitted.hyperparams.alpha) << "\n";
  out << "lambda " << format_double(fitted.hyperparams.lambda) << "\n";
  out << "beta " << format_double(fitted.model.intercept) << "\n";
  if (fitted.model.axillary_intercept)
    out << "beta0 " << format_double(*fitted.model.axillary_intercept) << "\n";
  out << "converged " << (fitted.diagnostics.converged ? 1 : 0) << "\n";
  out << "iterations " << fitted.diagnostics.iterations << "\n";
  out << "objective " << format_double(fitted.diagnostics.objective) << "\n";
  out << "renormalized " << (fitted.diagnostics.renormalized ? 1 : 0) << "\n";
  out << "omega";
  for (Eigen::Index j = 0; j < fitted.model.direction.size(); ++j)
    out << " " << format_double(fitted.model.direction[j]);
  out << "\n";
  if (!out) throw DataError("failed writing model file " + path.string());
}

FittedClassifier load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open model file " + path.string());
  const std::string file = path.string();
  std::string line;
  if (!std::getline(in, line) || line != kMagic)
    throw DataError(file + ": not a '" + kMagic + "' file");

  std::map<std::string, std::string> fields;
  std::string omega_line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto space = line.find(' ');
    if (space == std::string::npos) throw DataError(file + ": malformed line '" + line + "'");
    const std::string key = line.substr(0, space);
    const std::string value = line.substr(space + 1);
    if (key == "omega")
      omega_line = value;
    else
      fields[key] = value;
  }
  auto require = [&](const std::string& key) -> const std::string& {
    auto it = fields.find(key);
    if (it == fields.end()) throw DataError(file + ": missing field '" + key + "'");
    return it->second;
  };

  FittedClassifier fitted;
  try {
    fitted.method = method_from_name(require("method"));
  } catch (const std::invalid_argument& e) {
    throw DataError(file + ": " + e.what());
  }
  const auto d = static_cast<Eigen::Index>(parse_double_field(require("d"), "d", file));
  if (d < 1) throw DataError(file + ": d must be >= 1");
  fitted.hyperparams.c_svm = parse_double_field(require("c_svm"), "c_svm", file);
  fitted.hyperparams.c_dwd = parse_double_field(require("c_dwd"), "c_dwd", file);
  fitted.hyperparams.alpha = parse_double_field(require("alpha"), "alpha", file);
  fitted.hyperparams.lambda = parse_double_field(require("lambda"), "lambda", file);
  fitted.model.intercept = parse_double_field(require("beta"), "beta", file);
  if (fields.count("beta0"))
    fitted.model.axillary_intercept = parse_double_field(fields["beta0"], "beta0", file);
  fitted.diagnostics.converged = require("converged") == "1";
  fitted.diagnostics.iterations =
      static_cast<int>(parse_double_field(require("iterations"), "iterations", file));
  fitted.diagnostics.objective = parse_double_field(require("objective"), "objective", file);
  fitted.diagnostics.renormalized = require("renormalized") == "1";

  if (omega_line.empty()) throw DataError(file + ": missing field 'omega'");
  std::istringstream om(omega_line);
  fitted.model.direction.resize(d);
  std::string token;
  for (Eigen::Index j = 0; j < d; ++j) {
    if (!(om >> token)) throw DataError(file + ": omega has fewer than d entries");
    fitted.model.direction[j] = parse_double_field(token, "omega", file);
  }
  if (om >> token) throw DataError(file + ": omega has more than d entries");
  return fitted;
}

}  // namespace dwsvm
