#include "entnet/sweep.hpp"

#include <algorithm>
#include <cmath>

#include "entnet/error.hpp"

namespace entnet {

SweepResult::SweepResult(std::vector<std::string> value_columns) {
  columns_.reserve(value_columns.size() + 1);
  columns_.emplace_back("t");
  for (auto& name : value_columns) {
    if (name.empty() || name == "t") {
      throw ArgumentError("invalid column name '" + name + "'");
    }
    columns_.push_back(std::move(name));
  }
}

void SweepResult::add_row(double t, std::vector<double> values) {
  if (values.size() + 1 != columns_.size()) {
    throw DimensionError("row has " + std::to_string(values.size()) + " values for " +
                         std::to_string(columns_.size() - 1) + " columns");
  }
  if (!std::isfinite(t)) {
    throw ArgumentError("non-finite time");
  }
  if (!rows_.empty() && !(t > rows_.back().front())) {
    throw ArgumentError("time column must be strictly increasing");
  }
  std::vector<double> row;
  row.reserve(columns_.size());
  row.push_back(t);
  row.insert(row.end(), values.begin(), values.end());
  rows_.push_back(std::move(row));
}

std::size_t SweepResult::column_index(std::string_view name) const {
  const auto it = std::find(columns_.begin(), columns_.end(), name);
  if (it == columns_.end()) {
    throw ArgumentError("no column named '" + std::string(name) + "'");
  }
  return static_cast<std::size_t>(it - columns_.begin());
}

std::vector<double> SweepResult::column(std::string_view name) const {
  const std::size_t k = column_index(name);
  std::vector<double> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) out.push_back(row[k]);
  return out;
}

std::string SweepResult::manifest_value(std::string_view key) const {
  for (const auto& [k, v] : manifest_) {
    if (k == key) return v;
  }
  return {};
}

void SweepResult::set_manifest(std::string key, std::string value) {
  for (auto& [k, v] : manifest_) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  manifest_.emplace_back(std::move(key), std::move(value));
}

}  // namespace entnet
