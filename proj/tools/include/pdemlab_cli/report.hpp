#pragma once

#include <complex>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace pdemlab::cli {

/// 17 significant digits, locale-independent; "nan", "inf", "-inf" otherwise.
std::string format_number(double value);

/// Ordered key=value report. `meta.timestamp` is the only non-deterministic
/// entry and is always written first.
class KeyValueReport {
 public:
  void set(const std::string& key, double value);
  void set(const std::string& key, std::complex<double> value);
  void set(const std::string& key, bool value);
  void set(const std::string& key, int value);
  void set(const std::string& key, std::size_t value);
  void set(const std::string& key, std::string_view value);
  void set(const std::string& key, const char* value) { set(key, std::string_view(value)); }
  /// Flat dotted configuration keys under `prefix.`; arrays and objects are
  /// written as compact JSON.
  void set_config(const std::string& prefix, const nlohmann::json& flat);

  const std::vector<std::pair<std::string, std::string>>& entries() const noexcept { return entries_; }
  /// Value of `key`, or an empty string.
  std::string get(std::string_view key) const;

  void write(const std::filesystem::path& path, std::string_view timestamp) const;

 private:
  void put(const std::string& key, std::string value);

  std::vector<std::pair<std::string, std::string>> entries_;
};

/// Column-oriented CSV with a header row.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

  void add_row(std::vector<std::string> cells);
  void add_row(const std::vector<double>& values);
  std::size_t rows() const noexcept { return rows_.size(); }

  void write(const std::filesystem::path& path) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Two-column series for external plotting.
void write_plotdata(const std::filesystem::path& path, std::string_view x_name, std::string_view y_name,
                    const std::vector<double>& xs, const std::vector<double>& ys);

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

}  // namespace pdemlab::cli
