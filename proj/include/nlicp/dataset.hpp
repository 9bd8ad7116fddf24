#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

namespace nlicp {

/// Multi-environment sample: predictor matrix, target vector and integer
/// environment labels, plus optional panel indices for the block bootstrap.
struct Dataset {
  Eigen::MatrixXd X;                 // n x p
  Eigen::VectorXd y;                 // n
  std::vector<int> env;              // n integer labels
  std::vector<std::string> x_names;  // p column names
  std::string y_name = "Y";
  std::vector<int> unit;  // optional, size n when present
  std::vector<int> time;  // optional, size n when present

  int n() const { return static_cast<int>(y.size()); }
  int p() const { return static_cast<int>(X.cols()); }

  /// Distinct environment labels in order of first appearance.
  std::vector<int> env_levels() const;
};

struct IngestOptions {
  std::string target_column;
  std::string env_column = "env";
  std::optional<std::string> unit_column;
  std::optional<std::string> time_column;
  /// Enforce the invariants needed by the invariance tests
  /// (>= 2 environments, n >= 20). Disable for raw round-trips.
  bool require_test_ready = true;
};

/// Parse a comma-separated file with a header row. All non-target,
/// non-env (non-unit/time) columns become predictors. Unparsable cells
/// abort with the offending row number in the message.
Dataset ingest_csv(const std::string& path, const IngestOptions& options);

/// Write a dataset as comma-separated text, 17 significant digits, so a
/// write/ingest round trip is value-exact.
void write_csv(const Dataset& data, const std::string& path);
std::string to_csv(const Dataset& data);

std::string format_double(double v);

}  // namespace nlicp
