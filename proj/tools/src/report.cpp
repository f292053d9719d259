#include "pdemlab_cli/report.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>

#include "pdemlab/error.hpp"

namespace pdemlab::cli {

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

void KeyValueReport::put(const std::string& key, std::string value) {
  for (auto& [k, v] : entries_) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  entries_.emplace_back(key, std::move(value));
}

void KeyValueReport::set(const std::string& key, double value) { put(key, format_number(value)); }

void KeyValueReport::set(const std::string& key, std::complex<double> value) {
  put(key + ".re", format_number(value.real()));
  put(key + ".im", format_number(value.imag()));
}

void KeyValueReport::set(const std::string& key, bool value) { put(key, value ? "true" : "false"); }
void KeyValueReport::set(const std::string& key, int value) { put(key, std::to_string(value)); }
void KeyValueReport::set(const std::string& key, std::size_t value) { put(key, std::to_string(value)); }
void KeyValueReport::set(const std::string& key, std::string_view value) { put(key, std::string(value)); }

void KeyValueReport::set_config(const std::string& prefix, const nlohmann::json& flat) {
  for (auto it = flat.begin(); it != flat.end(); ++it) {
    const std::string key = prefix + "." + it.key();
    const auto& v = *it;
    if (v.is_number_float())
      set(key, v.get<double>());
    else if (v.is_number_integer())
      put(key, std::to_string(v.get<long long>()));
    else if (v.is_string())
      put(key, v.get<std::string>());
    else if (v.is_boolean())
      set(key, v.get<bool>());
    else
      put(key, v.dump());
  }
}

std::string KeyValueReport::get(std::string_view key) const {
  for (const auto& [k, v] : entries_)
    if (k == key) return v;
  return {};
}

void KeyValueReport::write(const std::filesystem::path& path, std::string_view timestamp) const {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ConfigError, "cannot write '" + path.string() + "'");
  out << "meta.timestamp=" << timestamp << '\n';
  for (const auto& [k, v] : entries_) out << k << '=' << v << '\n';
}

void CsvTable::add_row(std::vector<std::string> cells) {
  if (cells.size() != header_.size()) throw Error(ErrorCode::InvalidArgument, "CSV row width differs from header");
  rows_.push_back(std::move(cells));
}

void CsvTable::add_row(const std::vector<double>& values) {
  std::vector<std::string> cells;
  cells.reserve(values.size());
  for (double v : values) cells.push_back(format_number(v));
  add_row(std::move(cells));
}

void CsvTable::write(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ConfigError, "cannot write '" + path.string() + "'");
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << '\n';
  };
  line(header_);
  for (const auto& r : rows_) line(r);
}

void write_plotdata(const std::filesystem::path& path, std::string_view x_name, std::string_view y_name,
                    const std::vector<double>& xs, const std::vector<double>& ys) {
  CsvTable t({std::string(x_name), std::string(y_name)});
  for (std::size_t i = 0; i < xs.size(); ++i) t.add_row(std::vector<double>{xs[i], ys[i]});
  t.write(path);
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace pdemlab::cli
