#pragma once

#include <filesystem>

#include "dwsvm/classifiers.hpp"

namespace dwsvm {

/// Versioned plain-text model file ("dwsvm model v1"): method, hyperparams,
/// omega, beta, beta0 when present, and fit diagnostics. Values round-trip
/// exactly (shortest round-trip decimal text).
void save_model(const std::filesystem::path& path, const FittedClassifier& fitted);

/// Throws DataError on unknown version, missing fields, or malformed values.
FittedClassifier load_model(const std::filesystem::path& path);

}  // namespace dwsvm
