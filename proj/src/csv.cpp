#include "dwsvm/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include "dwsvm/errors.hpp"

namespace dwsvm {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string format_label(int label) { return label == 1 ? "+1" : "-1"; }

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string::size_type start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& token, const std::string& where) {
  const std::string t = trim(token);
  double value = 0.0;
  const char* begin = t.data();
  const char* end = t.data() + t.size();
  if (!t.empty() && t.front() == '+') ++begin;  // from_chars rejects leading '+'
  const auto res = std::from_chars(begin, end, value);
  if (res.ec != std::errc() || res.ptr != end)
    throw DataError(where + ": cannot parse number '" + token + "'");
  return value;
}

int parse_label(const std::string& token, const std::string& where) {
  const std::string t = trim(token);
  if (t == "+1" || t == "1") return +1;
  if (t == "-1") return -1;
  throw DataError(where + ": label must be +1 or -1, got '" + token + "'");
}

}  // namespace

LabeledDataset read_dataset_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open dataset file " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw DataError(path.string() + ": empty file");
  const auto header = split_line(line);
  if (header.size() < 2 || trim(header.back()) != "y")
    throw DataError(path.string() + ": header must be x1,...,xd,y");
  const std::size_t d = header.size() - 1;
  for (std::size_t j = 0; j < d; ++j)
    if (trim(header[j]) != "x" + std::to_string(j + 1))
      throw DataError(path.string() + ": feature column " + std::to_string(j + 1) +
                      " must be named x" + std::to_string(j + 1));

  std::vector<double> values;
  std::vector<int> labels;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto tokens = split_line(line);
    const std::string where = path.string() + ":" + std::to_string(lineno);
    if (tokens.size() != d + 1)
      throw DataError(where + ": expected " + std::to_string(d + 1) + " columns, got " +
                      std::to_string(tokens.size()));
    for (std::size_t j = 0; j < d; ++j) values.push_back(parse_double(tokens[j], where));
    labels.push_back(parse_label(tokens.back(), where));
  }
  if (labels.empty()) throw DataError(path.string() + ": no data rows");

  const Eigen::Index n = static_cast<Eigen::Index>(labels.size());
  Eigen::MatrixXd x(n, static_cast<Eigen::Index>(d));
  Eigen::VectorXi y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    y[i] = labels[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(d); ++j)
      x(i, j) = values[static_cast<std::size_t>(i) * d + static_cast<std::size_t>(j)];
  }
  try {
    return LabeledDataset(std::move(x), std::move(y));
  } catch (const std::invalid_argument& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

void write_dataset_csv(const std::filesystem::path& path, const LabeledDataset& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write dataset file " + path.string());
  std::ostringstream header;
  for (Eigen::Index j = 0; j < data.dim(); ++j) header << "x" << (j + 1) << ",";
  header << "y\n";
  out << header.str();
  for (Eigen::Index i = 0; i < data.n(); ++i) {
    std::string row;
    for (Eigen::Index j = 0; j < data.dim(); ++j) {
      row += format_double(data.features()(i, j));
      row += ',';
    }
    row += format_label(data.labels()[i]);
    row += '\n';
    out << row;
  }
  if (!out) throw DataError("failed writing dataset file " + path.string());
}

}  // namespace dwsvm
