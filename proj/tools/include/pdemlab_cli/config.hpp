#pragma once

#include <complex>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "pdemlab/grid.hpp"
#include "pdemlab/metric.hpp"
#include "pdemlab/profiles.hpp"

namespace pdemlab::cli {

enum class Subcommand { metric, susy, factorize, coherent, uncertainty, verify, demo };

std::string_view to_string(Subcommand s) noexcept;
Subcommand parse_subcommand(std::string_view text);

/// Profile description with the configuration-file key names:
/// mass.kind, mass.params, potential.kind, potential.params, beta1, beta2,
/// hbar, grid.L, grid.N. An absent potential means the oscillator
/// omega^2 = 4 beta2 with the mass scale m0.
struct ProfileConfig {
  std::string mass_kind = "constant";
  nlohmann::json mass_params = nlohmann::json{{"m0", 1.0}};
  std::optional<std::string> potential_kind;
  nlohmann::json potential_params = nlohmann::json::object();
  double beta1 = -1.0;
  double beta2 = 0.0;
  double hbar = 1.0;
  double grid_L = kDefaultHalfWidth;
  std::size_t grid_N = kDefaultPointCount;
};

struct SweepSpec {
  double lo = 0.0;
  double hi = 0.0;
  int n = 2;
};

/// "lo:hi:n" with n >= 2; throws ConfigError.
SweepSpec parse_sweep(std::string_view text);

struct RunConfig {
  Subcommand subcommand = Subcommand::demo;
  ProfileConfig profile;
  std::filesystem::path output_dir = ".";
  Convention convention = Convention::eta;
  std::optional<SweepSpec> sweep;
  std::complex<double> alpha{0.0, 0.0};
  double mu = 0.0;
  double ic = 0.0;
  double a0 = 1.0;
  int stencil_order = 4;
  std::size_t boundary_layers = 8;
  std::size_t eigenvalue_count = 10;
  bool spectrum = true;
};

/// Reads a JSON profile file. Nested objects and dotted keys are both
/// accepted ({"grid": {"N": 801}} or {"grid.N": 801}); unknown keys are a
/// ConfigError.
ProfileConfig load_profile_config(const std::filesystem::path& path);
ProfileConfig parse_profile_config(const nlohmann::json& document);

/// Resolved configuration as flat dotted keys, for report headers.
nlohmann::json to_json(const ProfileConfig& config);

GridSpec make_grid(const ProfileConfig& config);
MassProfile make_mass(const ProfileConfig& config);
PotentialProfile make_potential(const ProfileConfig& config);
PTParameters make_parameters(const ProfileConfig& config);
/// Validated profile on the configured grid.
Profile build_profile(const ProfileConfig& config);

}  // namespace pdemlab::cli
