#pragma once

#include <filesystem>
#include <string>

#include "dwsvm/dataset.hpp"

namespace dwsvm {

/// Shortest round-trip decimal text for a double (to_chars), "+1"/"-1" for
/// labels. Deterministic: identical values give identical bytes.
std::string format_double(double v);
std::string format_label(int label);

/// Dataset CSV schema: header "x1,...,xd,y"; features as decimal text;
/// label column y in {+1, -1}; UTF-8, comma-separated, no quoting.
LabeledDataset read_dataset_csv(const std::filesystem::path& path);
void write_dataset_csv(const std::filesystem::path& path, const LabeledDataset& data);

}  // namespace dwsvm
