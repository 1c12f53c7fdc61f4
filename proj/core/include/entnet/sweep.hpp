#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace entnet {

/// Ordered key/value parameter echo written alongside every table.
using Manifest = std::vector<std::pair<std::string, std::string>>;

/// Rectangular time-series table. Column 0 is always "t" and strictly
/// increasing down the rows.
class SweepResult {
 public:
  /// `value_columns` excludes "t".
  explicit SweepResult(std::vector<std::string> value_columns);

  void add_row(double t, std::vector<double> values);

  const std::vector<std::string>& columns() const noexcept { return columns_; }
  const std::vector<std::vector<double>>& rows() const noexcept { return rows_; }
  std::size_t row_count() const noexcept { return rows_.size(); }

  /// Whole column by name; throws ArgumentError if absent.
  std::vector<double> column(std::string_view name) const;
  std::size_t column_index(std::string_view name) const;

  Manifest& manifest() noexcept { return manifest_; }
  const Manifest& manifest() const noexcept { return manifest_; }
  /// Value for `key`, or empty string.
  std::string manifest_value(std::string_view key) const;
  void set_manifest(std::string key, std::string value);

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<double>> rows_;
  Manifest manifest_;
};

}  // namespace entnet
