#include "pdemlab_cli/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>

#include "pdemlab/error.hpp"

namespace pdemlab::cli {

using nlohmann::json;

namespace {

[[noreturn]] void config_error(const std::string& message) { throw Error(ErrorCode::ConfigError, message); }

void flatten(const json& node, const std::string& prefix, json& out) {
  for (auto it = node.begin(); it != node.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    const bool params = key.size() >= 6 && key.compare(key.size() - 6, 6, "params") == 0;
    if (it->is_object() && !params)
      flatten(*it, key, out);
    else
      out[key] = *it;
  }
}

double number(const json& params, const char* key, const std::string& where) {
  if (!params.contains(key)) config_error(where + " needs parameter '" + key + "'");
  const json& v = params.at(key);
  if (!v.is_number()) config_error(where + "." + key + " must be a number");
  return v.get<double>();
}

double number_or(const json& params, const char* key, double fallback, const std::string& where) {
  return params.contains(key) ? number(params, key, where) : fallback;
}

std::vector<double> numbers(const json& params, const char* key, const std::string& where) {
  if (!params.contains(key) || !params.at(key).is_array()) config_error(where + " needs an array '" + key + "'");
  std::vector<double> out;
  for (const auto& v : params.at(key)) {
    if (!v.is_number()) config_error(where + "." + key + " must contain only numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

double mass_scale(const ProfileConfig& config) {
  if (config.mass_kind == "constant" || config.mass_kind == "rational")
    return number_or(config.mass_params, "m0", 1.0, "mass.params");
  return 1.0;
}

}  // namespace

std::string_view to_string(Subcommand s) noexcept {
  switch (s) {
    case Subcommand::metric: return "metric";
    case Subcommand::susy: return "susy";
    case Subcommand::factorize: return "factorize";
    case Subcommand::coherent: return "coherent";
    case Subcommand::uncertainty: return "uncertainty";
    case Subcommand::verify: return "verify";
    case Subcommand::demo: return "demo";
  }
  return "unknown";
}

Subcommand parse_subcommand(std::string_view text) {
  for (auto s : {Subcommand::metric, Subcommand::susy, Subcommand::factorize, Subcommand::coherent,
                 Subcommand::uncertainty, Subcommand::verify, Subcommand::demo})
    if (to_string(s) == text) return s;
  config_error("unknown subcommand '" + std::string(text) + "'");
}

SweepSpec parse_sweep(std::string_view text) {
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos) config_error("sweep must look like lo:hi:n");
  SweepSpec s;
  auto parse = [&](std::string_view part, auto& value) {
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size())
      config_error("cannot parse '" + std::string(part) + "' in sweep");
  };
  parse(text.substr(0, first), s.lo);
  parse(text.substr(first + 1, second - first - 1), s.hi);
  parse(text.substr(second + 1), s.n);
  if (s.n < 2) config_error("sweep needs n >= 2");
  if (!std::isfinite(s.lo) || !std::isfinite(s.hi)) config_error("sweep bounds must be finite");
  return s;
}

ProfileConfig parse_profile_config(const json& document) {
  if (!document.is_object()) config_error("configuration must be a JSON object");
  json flat = json::object();
  flatten(document, "", flat);
  static const std::set<std::string> known{"mass.kind", "mass.params", "potential.kind", "potential.params",
                                           "beta1",     "beta2",       "hbar",           "grid.L",
                                           "grid.N"};
  for (auto it = flat.begin(); it != flat.end(); ++it)
    if (!known.count(it.key())) config_error("unknown configuration key '" + it.key() + "'");

  ProfileConfig c;
  auto text = [&](const char* key) {
    if (!flat.at(key).is_string()) config_error(std::string(key) + " must be a string");
    return flat.at(key).get<std::string>();
  };
  auto real = [&](const char* key) {
    if (!flat.at(key).is_number()) config_error(std::string(key) + " must be a number");
    return flat.at(key).get<double>();
  };
  auto object = [&](const char* key) {
    if (!flat.at(key).is_object()) config_error(std::string(key) + " must be an object");
    return flat.at(key);
  };
  if (flat.contains("mass.kind")) {
    c.mass_kind = text("mass.kind");
    if (!flat.contains("mass.params")) c.mass_params = json::object();
  }
  if (flat.contains("mass.params")) c.mass_params = object("mass.params");
  if (flat.contains("potential.kind")) c.potential_kind = text("potential.kind");
  if (flat.contains("potential.params")) {
    if (!c.potential_kind) config_error("potential.params given without potential.kind");
    c.potential_params = object("potential.params");
  }
  if (flat.contains("beta1")) c.beta1 = real("beta1");
  if (flat.contains("beta2")) c.beta2 = real("beta2");
  if (flat.contains("hbar")) c.hbar = real("hbar");
  if (flat.contains("grid.L")) c.grid_L = real("grid.L");
  if (flat.contains("grid.N")) {
    const json& n = flat.at("grid.N");
    if (!n.is_number_integer() || n.get<long long>() < 0) config_error("grid.N must be a non-negative integer");
    c.grid_N = n.get<std::size_t>();
  }
  return c;
}

ProfileConfig load_profile_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) config_error("cannot open configuration file '" + path.string() + "'");
  json document;
  try {
    document = json::parse(in);
  } catch (const json::exception& e) {
    config_error("cannot parse '" + path.string() + "': " + e.what());
  }
  return parse_profile_config(document);
}

json to_json(const ProfileConfig& config) {
  json out = json::object();
  out["mass.kind"] = config.mass_kind;
  out["mass.params"] = config.mass_params;
  if (config.potential_kind) {
    out["potential.kind"] = *config.potential_kind;
    out["potential.params"] = config.potential_params;
  } else {
    out["potential.kind"] = "harmonic";
    out["potential.params"] = json{{"omega", 2.0 * std::sqrt(std::max(config.beta2, 0.0))}, {"m", mass_scale(config)}};
  }
  out["beta1"] = config.beta1;
  out["beta2"] = config.beta2;
  out["hbar"] = config.hbar;
  out["grid.L"] = config.grid_L;
  out["grid.N"] = config.grid_N;
  return out;
}

GridSpec make_grid(const ProfileConfig& config) { return GridSpec(config.grid_L, config.grid_N); }

MassProfile make_mass(const ProfileConfig& config) {
  const json& p = config.mass_params;
  if (config.mass_kind == "constant") return constant_mass(number_or(p, "m0", 1.0, "mass.params"));
  if (config.mass_kind == "rational")
    return rational_mass(number_or(p, "m0", 1.0, "mass.params"), number(p, "k", "mass.params"));
  if (config.mass_kind == "table") return table_mass(numbers(p, "x", "mass.params"), numbers(p, "m", "mass.params"));
  config_error("unknown mass.kind '" + config.mass_kind + "'");
}

PotentialProfile make_potential(const ProfileConfig& config) {
  if (!config.potential_kind) {
    if (config.beta2 < 0.0) config_error("the default oscillator needs beta2 >= 0");
    return harmonic_potential(mass_scale(config), 2.0 * std::sqrt(config.beta2));
  }
  const std::string& kind = *config.potential_kind;
  const json& p = config.potential_params;
  if (kind == "harmonic")
    return harmonic_potential(number_or(p, "m", mass_scale(config), "potential.params"),
                              number(p, "omega", "potential.params"));
  if (kind == "zero") return zero_potential();
  if (kind == "table")
    return table_potential(numbers(p, "x", "potential.params"), numbers(p, "v", "potential.params"));
  config_error("unknown potential.kind '" + kind + "'");
}

PTParameters make_parameters(const ProfileConfig& config) { return {config.beta1, config.beta2, config.hbar}; }

Profile build_profile(const ProfileConfig& config) {
  return make_profile(make_mass(config), make_potential(config), make_parameters(config), make_grid(config));
}

}  // namespace pdemlab::cli
