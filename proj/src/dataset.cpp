#include "nlicp/dataset.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nlicp {

std::vector<int> Dataset::env_levels() const {
  std::vector<int> levels;
  for (int e : env) {
    bool known = false;
    for (int l : levels) {
      if (l == e) {
        known = true;
        break;
      }
    }
    if (!known) levels.push_back(e);
  }
  return levels;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

double parse_double(const std::string& cell, int row, const std::string& column) {
  const char* begin = cell.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  while (end && *end == ' ') ++end;
  if (end == begin || (end && *end != '\0')) {
    throw std::runtime_error("ingest: non-numeric cell in column '" + column + "' at row " +
                             std::to_string(row));
  }
  return v;
}

int parse_int(const std::string& cell, int row, const std::string& column) {
  const double v = parse_double(cell, row, column);
  const int i = static_cast<int>(v);
  if (static_cast<double>(i) != v) {
    throw std::runtime_error("ingest: column '" + column + "' must hold integer labels, row " +
                             std::to_string(row));
  }
  return i;
}

}  // namespace

Dataset ingest_csv(const std::string& path, const IngestOptions& options) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("ingest: cannot open '" + path + "'");

  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("ingest: empty file '" + path + "'");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const std::vector<std::string> header = split_line(line);

  auto column_index = [&](const std::string& name) -> int {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return static_cast<int>(i);
    return -1;
  };

  const int target_idx = column_index(options.target_column);
  if (target_idx < 0)
    throw std::runtime_error("ingest: missing target column '" + options.target_column + "'");
  const int env_idx = column_index(options.env_column);
  if (env_idx < 0)
    throw std::runtime_error("ingest: missing env column '" + options.env_column + "'");
  int unit_idx = -1, time_idx = -1;
  if (options.unit_column) {
    unit_idx = column_index(*options.unit_column);
    if (unit_idx < 0)
      throw std::runtime_error("ingest: missing unit column '" + *options.unit_column + "'");
  }
  if (options.time_column) {
    time_idx = column_index(*options.time_column);
    if (time_idx < 0)
      throw std::runtime_error("ingest: missing time column '" + *options.time_column + "'");
  }

  std::vector<int> x_cols;
  for (int i = 0; i < static_cast<int>(header.size()); ++i) {
    if (i != target_idx && i != env_idx && i != unit_idx && i != time_idx) x_cols.push_back(i);
  }

  std::vector<std::vector<double>> x_rows;
  std::vector<double> y_vals;
  std::vector<int> env_vals, unit_vals, time_vals;
  int row = 1;  // header is row 1
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> cells = split_line(line);
    if (cells.size() != header.size()) {
      throw std::runtime_error("ingest: row " + std::to_string(row) + " has " +
                               std::to_string(cells.size()) + " cells, expected " +
                               std::to_string(header.size()));
    }
    y_vals.push_back(parse_double(cells[target_idx], row, header[target_idx]));
    env_vals.push_back(parse_int(cells[env_idx], row, header[env_idx]));
    if (unit_idx >= 0) unit_vals.push_back(parse_int(cells[unit_idx], row, header[unit_idx]));
    if (time_idx >= 0) time_vals.push_back(parse_int(cells[time_idx], row, header[time_idx]));
    std::vector<double> xs;
    xs.reserve(x_cols.size());
    for (int c : x_cols) xs.push_back(parse_double(cells[c], row, header[c]));
    x_rows.push_back(std::move(xs));
  }

  const int n = static_cast<int>(y_vals.size());
  const int p = static_cast<int>(x_cols.size());
  if (n == 0) throw std::runtime_error("ingest: no data rows in '" + path + "'");

  Dataset data;
  data.X.resize(n, p);
  data.y.resize(n);
  for (int i = 0; i < n; ++i) {
    data.y[i] = y_vals[i];
    for (int j = 0; j < p; ++j) data.X(i, j) = x_rows[i][j];
  }
  data.env = std::move(env_vals);
  data.unit = std::move(unit_vals);
  data.time = std::move(time_vals);
  data.y_name = header[target_idx];
  for (int c : x_cols) data.x_names.push_back(header[c]);

  if (options.require_test_ready) {
    const std::set<int> levels(data.env.begin(), data.env.end());
    if (levels.size() < 2) throw std::runtime_error("ingest: need >= 2 environments");
    if (n < 20) throw std::runtime_error("ingest: need n >= 20 rows, got " + std::to_string(n));
  }
  return data;
}

std::string to_csv(const Dataset& data) {
  std::ostringstream out;
  const bool has_unit = !data.unit.empty();
  const bool has_time = !data.time.empty();
  for (int j = 0; j < data.p(); ++j) out << data.x_names[j] << ',';
  out << data.y_name << ",env";
  if (has_unit) out << ",unit";
  if (has_time) out << ",time";
  out << '\n';
  for (int i = 0; i < data.n(); ++i) {
    for (int j = 0; j < data.p(); ++j) out << format_double(data.X(i, j)) << ',';
    out << format_double(data.y[i]) << ',' << data.env[i];
    if (has_unit) out << ',' << data.unit[i];
    if (has_time) out << ',' << data.time[i];
    out << '\n';
  }
  return out.str();
}

void write_csv(const Dataset& data, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << to_csv(data);
}

}  // namespace nlicp
