#include "dwsvm/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "dwsvm/csv.hpp"
#include "dwsvm/errors.hpp"

namespace dwsvm {

std::string kind_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::Example1: return "example1";
    case ExperimentKind::Example2: return "example2";
    case ExperimentKind::SensitivityC: return "sensitivity_c";
    case ExperimentKind::SensitivityAlpha: return "sensitivity_alpha";
    case ExperimentKind::Imbalance: return "imbalance";
    case ExperimentKind::Perturb: return "perturb";
    case ExperimentKind::Fisher: return "fisher";
    case ExperimentKind::Fit: return "fit";
    case ExperimentKind::Predict: return "predict";
  }
  return "unknown";
}

ExperimentKind kind_from_name(const std::string& name) {
  static const std::map<std::string, ExperimentKind> kinds = {
      {"example1", ExperimentKind::Example1},
      {"example2", ExperimentKind::Example2},
      {"sensitivity_c", ExperimentKind::SensitivityC},
      {"sensitivity_alpha", ExperimentKind::SensitivityAlpha},
      {"imbalance", ExperimentKind::Imbalance},
      {"perturb", ExperimentKind::Perturb},
      {"fisher", ExperimentKind::Fisher},
      {"fit", ExperimentKind::Fit},
      {"predict", ExperimentKind::Predict},
  };
  const auto it = kinds.find(name);
  if (it == kinds.end()) throw ConfigError("unknown experiment kind '" + name + "'");
  return it->second;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& value, const std::string& key) {
  const std::string t = trim(value);
  double out = 0.0;
  const char* begin = t.data();
  const char* end = t.data() + t.size();
  if (!t.empty() && t.front() == '+') ++begin;
  const auto res = std::from_chars(begin, end, out);
  if (res.ec != std::errc() || res.ptr != end || !std::isfinite(out))
    throw ConfigError("key '" + key + "': cannot parse number '" + value + "'");
  return out;
}

long parse_int(const std::string& value, const std::string& key) {
  const double v = parse_double(value, key);
  const long i = static_cast<long>(v);
  if (static_cast<double>(i) != v)
    throw ConfigError("key '" + key + "': expected an integer, got '" + value + "'");
  return i;
}

std::vector<std::string> split_commas(const std::string& value) {
  std::vector<std::string> out;
  std::string::size_type start = 0;
  while (true) {
    const auto comma = value.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(trim(value.substr(start)));
      break;
    }
    out.push_back(trim(value.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

std::vector<double> parse_double_list(const std::string& value, const std::string& key) {
  std::vector<double> out;
  for (const auto& tok : split_commas(value)) out.push_back(parse_double(tok, key));
  if (out.empty()) throw ConfigError("key '" + key + "': empty list");
  return out;
}

std::vector<int> parse_int_list(const std::string& value, const std::string& key) {
  std::vector<int> out;
  for (const auto& tok : split_commas(value)) out.push_back(static_cast<int>(parse_int(tok, key)));
  if (out.empty()) throw ConfigError("key '" + key + "': empty list");
  return out;
}

template <typename T>
std::string join_list(const std::vector<T>& values, const std::function<std::string(T)>& fmt) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += fmt(values[i]);
  }
  return out;
}

}  // namespace

ExperimentConfig ExperimentConfig::parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str(), path.string());
}

ExperimentConfig ExperimentConfig::parse_text(const std::string& text, const std::string& origin) {
  ExperimentConfig cfg;
  std::istringstream in(text);
  std::string line;
  bool saw_kind = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected 'key = value'");

    try {
      if (key == "kind") {
        cfg.kind = kind_from_name(value);
        saw_kind = true;
      } else if (key == "seed") {
        cfg.seed = static_cast<std::uint64_t>(parse_int(value, key));
      } else if (key == "replications") {
        cfg.replications = static_cast<int>(parse_int(value, key));
        if (cfg.replications < 1) throw ConfigError("replications must be >= 1");
      } else if (key == "dims") {
        cfg.dims = parse_int_list(value, key);
      } else if (key == "n_plus") {
        cfg.n_plus = static_cast<int>(parse_int(value, key));
      } else if (key == "n_minus") {
        cfg.n_minus = static_cast<int>(parse_int(value, key));
      } else if (key == "n_test_per_class") {
        cfg.n_test_per_class = static_cast<int>(parse_int(value, key));
      } else if (key == "methods") {
        cfg.methods.clear();
        for (const auto& tok : split_commas(value)) cfg.methods.push_back(method_from_name(tok));
      } else if (key == "c_svm_grid") {
        cfg.c_svm_grid = parse_double_list(value, key);
      } else if (key == "c_svm_fixed") {
        cfg.c_svm_fixed = parse_double(value, key);
      } else if (key == "alpha") {
        cfg.alpha = parse_double(value, key);
      } else if (key == "c_dwd") {
        if (value == "auto")
          cfg.c_dwd.reset();
        else
          cfg.c_dwd = parse_double(value, key);
      } else if (key == "example") {
        cfg.example = static_cast<int>(parse_int(value, key));
        if (cfg.example != 1 && cfg.example != 2) throw ConfigError("example must be 1 or 2");
      } else if (key == "d") {
        cfg.d = static_cast<int>(parse_int(value, key));
      } else if (key == "alpha_grid") {
        cfg.alpha_grid = parse_double_list(value, key);
      } else if (key == "support_bound") {
        cfg.support_bound = parse_double(value, key);
      } else if (key == "x0") {
        cfg.x0 = parse_double(value, key);
      } else if (key == "n_minus_list") {
        cfg.n_minus_list = parse_int_list(value, key);
      } else if (key == "imbalance_c_svm") {
        cfg.imbalance_c_svm = parse_double(value, key);
      } else if (key == "data") {
        cfg.data_path = value;
      } else if (key == "standin_d") {
        cfg.standin_d = static_cast<int>(parse_int(value, key));
      } else if (key == "standin_n_plus") {
        cfg.standin_n_plus = static_cast<int>(parse_int(value, key));
      } else if (key == "standin_n_minus") {
        cfg.standin_n_minus = static_cast<int>(parse_int(value, key));
      } else if (key == "k_list") {
        cfg.k_list = parse_int_list(value, key);
      } else if (key == "cv_folds") {
        cfg.cv_folds = static_cast<int>(parse_int(value, key));
      } else if (key == "q_grid") {
        cfg.q_grid = parse_double_list(value, key);
      } else if (key == "fisher_alpha_grid") {
        cfg.fisher_alpha_grid = parse_double_list(value, key);
      } else if (key == "fisher_c_grid") {
        cfg.fisher_c_grid = parse_double_list(value, key);
      } else if (key == "method") {
        cfg.method = value;
      } else if (key == "model") {
        cfg.model_path = value;
      } else if (key == "out") {
        cfg.output_path = value;
      } else if (key == "c_svm") {
        cfg.fit_c_svm = parse_double(value, key);
      } else if (key == "tol") {
        cfg.tol = parse_double(value, key);
      } else if (key == "max_iters") {
        cfg.max_iters = static_cast<int>(parse_int(value, key));
      } else {
        throw ConfigError("unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument& e) {
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": " + e.what());
    } catch (const ConfigError& e) {
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!saw_kind) throw ConfigError(origin + ": missing required key 'kind'");
  return cfg;
}

std::vector<double> ExperimentConfig::effective_c_svm_grid() const {
  if (!c_svm_grid.empty()) return c_svm_grid;
  std::vector<double> grid;
  for (int e = -5; e <= 12; ++e) grid.push_back(std::ldexp(1.0, e));
  return grid;
}

std::vector<double> ExperimentConfig::effective_alpha_grid() const {
  if (!alpha_grid.empty()) return alpha_grid;
  std::vector<double> grid;
  for (int i = 1; i <= 19; ++i) grid.push_back(0.05 * i);
  return grid;
}

std::vector<double> ExperimentConfig::effective_q_grid() const {
  if (!q_grid.empty()) return q_grid;
  return {0.1, 0.2, 0.3, 0.4, 0.6, 0.7, 0.8, 0.9};
}

std::string ExperimentConfig::echo() const {
  const std::function<std::string(double)> fd = [](double v) { return format_double(v); };
  const std::function<std::string(int)> fi = [](int v) { return std::to_string(v); };
  const std::function<std::string(Method)> fm = [](Method m) { return method_name(m); };
  std::map<std::string, std::string> kv;
  kv["kind"] = kind_name(kind);
  kv["seed"] = std::to_string(seed);
  kv["replications"] = std::to_string(replications);
  kv["dims"] = join_list(dims, fi);
  kv["n_plus"] = std::to_string(n_plus);
  kv["n_minus"] = std::to_string(n_minus);
  kv["n_test_per_class"] = std::to_string(n_test_per_class);
  kv["methods"] = join_list(methods, fm);
  kv["c_svm_grid"] = join_list(effective_c_svm_grid(), fd);
  kv["c_svm_fixed"] = format_double(c_svm_fixed);
  kv["alpha"] = format_double(alpha);
  kv["c_dwd"] = c_dwd ? format_double(*c_dwd) : "auto";
  kv["example"] = std::to_string(example);
  kv["d"] = std::to_string(d);
  kv["alpha_grid"] = join_list(effective_alpha_grid(), fd);
  kv["support_bound"] = format_double(support_bound);
  kv["x0"] = format_double(x0);
  kv["n_minus_list"] = join_list(n_minus_list, fi);
  kv["imbalance_c_svm"] = format_double(imbalance_c_svm);
  kv["data"] = data_path.empty() ? "(standin)" : data_path;
  kv["standin_d"] = std::to_string(standin_d);
  kv["standin_n_plus"] = std::to_string(standin_n_plus);
  kv["standin_n_minus"] = std::to_string(standin_n_minus);
  kv["k_list"] = join_list(k_list, fi);
  kv["cv_folds"] = std::to_string(cv_folds);
  kv["q_grid"] = join_list(effective_q_grid(), fd);
  kv["fisher_alpha_grid"] = join_list(fisher_alpha_grid, fd);
  kv["fisher_c_grid"] = join_list(fisher_c_grid, fd);
  kv["method"] = method;
  kv["model"] = model_path.empty() ? "(none)" : model_path;
  kv["out"] = output_path.empty() ? "(none)" : output_path;
  kv["c_svm"] = fit_c_svm ? format_double(*fit_c_svm) : "(default)";
  kv["tol"] = format_double(tol);
  kv["max_iters"] = std::to_string(max_iters);
  std::string out;
  for (const auto& [key, value] : kv) out += key + " = " + value + "\n";
  return out;
}

}  // namespace dwsvm
