// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace gpnaqc {

// Malformed input text (unparseable CSV cell, bad matrix file, ...).
struct FormatError : std::runtime_error {
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// Input parsed fine but the data itself is unusable (empty series, ...).
struct DataError : std::runtime_error {
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Fewer observations than the estimator needs.
struct InsufficientDataError : DataError {
  explicit InsufficientDataError(const std::string& what) : DataError(what) {}
};

}  // namespace gpnaqc
