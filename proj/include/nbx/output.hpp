#pragma once

#include "json.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace nbx {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

/// Numeric table with a header; serialized to CSV or to a JSON mirror.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_row(std::vector<double> row);
};

std::string to_csv(const Table& table);

/// {"columns": [...], "rows": [[...], ...], "meta": meta}
std::string to_json(const Table& table, const nlohmann::json& meta);

/// Writes via a sibling temporary file and rename, so `path` holds either
/// the old contents or the complete new contents. Throws IoError.
void write_atomic(const std::string& path, const std::string& contents);

}  // namespace nbx
