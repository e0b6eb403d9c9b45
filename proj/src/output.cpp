#include "nbx/output.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <unistd.h>

namespace nbx {

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // folds -0 into 0
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  if (res.ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
  return {buf, res.ptr};
}

void Table::add_row(std::vector<double> row) {
  if (row.size() != columns.size())
    throw std::logic_error("table row has " + std::to_string(row.size()) + " cells, expected " +
                           std::to_string(columns.size()));
  rows.push_back(std::move(row));
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += format_double(row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& table, const nlohmann::json& meta) {
  nlohmann::json j;
  j["columns"] = table.columns;
  j["rows"] = table.rows;
  j["meta"] = meta;
  return j.dump(1) + '\n';
}

void write_atomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  if (path.empty()) throw IoError("output path is empty");
  const fs::path target(path);
  const fs::path tmp = target.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open '" + tmp.string() + "' for writing");
    f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    f.flush();
    if (!f) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw IoError("write to '" + tmp.string() + "' failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    std::error_code ignore;
    fs::remove(tmp, ignore);
    throw IoError("cannot rename to '" + target.string() + "': " + ec.message());
  }
}

}  // namespace nbx
