#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "pdemlab/error.hpp"
#include "pdemlab_cli/config.hpp"
#include "pdemlab_cli/report.hpp"
#include "pdemlab_cli/run.hpp"

using namespace pdemlab;
using namespace pdemlab::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "pdemlab_cli_tests" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

int invoke(std::vector<std::string> args, std::string* err_text = nullptr) {
  args.insert(args.begin(), "pdemlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = run_command_line(static_cast<int>(argv.size()), argv.data(), out, err);
  if (err_text) *err_text = err.str();
  return status;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// report.kv as key -> value
std::map<std::string, std::string> read_report(const fs::path& p) {
  std::map<std::string, std::string> out;
  std::ifstream in(p);
  for (std::string line; std::getline(in, line);) {
    const auto eq = line.find('=');
    if (eq != std::string::npos) out[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return out;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  throw std::runtime_error("expected a pdemlab::Error");
}

void write_file(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("sweep specification") {
  const SweepSpec s = parse_sweep("0:2:5");
  CHECK(s.lo == 0.0);
  CHECK(s.hi == 2.0);
  CHECK(s.n == 5);
  CHECK(parse_sweep("-0.5:1.5:2").lo == -0.5);
  for (const char* bad : {"0:1", "0:1:1", "a:1:3", "0:1:3:4", ""})
    CHECK(code_of([&] { parse_sweep(bad); }) == ErrorCode::ConfigError);
}

TEST_CASE("profile configuration accepts nested and dotted keys") {
  const auto nested = parse_profile_config(nlohmann::json::parse(
      R"({"mass": {"kind": "rational", "params": {"m0": 2.0, "k": 0.5}}, "beta2": 0.3, "grid": {"N": 801, "L": 6}})"));
  const auto dotted = parse_profile_config(nlohmann::json::parse(
      R"({"mass.kind": "rational", "mass.params": {"m0": 2.0, "k": 0.5}, "beta2": 0.3, "grid.N": 801, "grid.L": 6})"));
  for (const ProfileConfig& c : {nested, dotted}) {
    CHECK(c.mass_kind == "rational");
    CHECK(c.beta2 == 0.3);
    CHECK(c.grid_N == 801);
    CHECK(c.grid_L == 6.0);
    CHECK(make_mass(c).m(0.0) == 2.0);
  }
  CHECK(to_json(nested) == to_json(dotted));
  CHECK(code_of([] { parse_profile_config(nlohmann::json::parse(R"({"beta3": 1})")); }) == ErrorCode::ConfigError);
  CHECK(code_of([] { parse_profile_config(nlohmann::json::parse(R"({"grid": {"M": 3}})")); }) ==
        ErrorCode::ConfigError);
  CHECK(code_of([] { load_profile_config("/nonexistent/profile.json"); }) == ErrorCode::ConfigError);
}

TEST_CASE("numbers are written with 17 significant digits") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(std::nan("")) == "nan");
  CHECK(format_number(-INFINITY) == "-inf");
  CHECK(std::stod(format_number(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("demo at the hermitian point") {
  const fs::path dir = scratch("demo");
  CHECK(invoke({"demo", "--beta2", "1", "--output-dir", dir.string()}) == 0);
  const auto r = read_report(dir / "report.kv");
  CHECK(r.at("status") == "ok");
  CHECK(r.at("violated_paper_convention") == "true");
  CHECK(r.at("violated_standard_convention") == "false");
  CHECK(r.at("exit_status") == "0");
  CHECK(fs::exists(dir / "demo.csv"));
}

TEST_CASE("odd potential is a validation error") {
  const fs::path dir = scratch("odd");
  write_file(dir / "odd.json",
             R"({"potential": {"kind": "table", "params": {"x": [-8, -4, 0, 4, 8], "v": [-2, -1, 0, 1, 2]}},
                 "grid": {"N": 401}})");
  CHECK(invoke({"metric", "--config", (dir / "odd.json").string(), "--output-dir", (dir / "out").string()}) == 2);
  const auto r = read_report(dir / "out" / "report.kv");
  CHECK(r.at("status") == "error");
  CHECK(r.at("error.code") == "ParityViolation");
}

TEST_CASE("factorize writes phi_minus") {
  const fs::path dir = scratch("factorize");
  CHECK(invoke({"factorize", "--beta2", "0.5", "--grid-n", "801", "--output-dir", dir.string()}) == 0);
  std::ifstream in(dir / "factorize.csv");
  std::string line;
  std::getline(in, line);
  CHECK(line == "x,a_minus,u0,phi_minus,phi_plus,Phi,commutator_field");
  double worst = 0.0;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    std::stringstream s(line);
    std::vector<double> cells;
    for (std::string cell; std::getline(s, cell, ',');) cells.push_back(std::stod(cell));
    REQUIRE(cells.size() == 7);
    worst = std::max(worst, std::abs(cells[3] - 2.0 * cells[0]));
    ++rows;
  }
  CHECK(rows == 801);
  CHECK(worst < 1e-6);
  const auto r = read_report(dir / "report.kv");
  CHECK(std::stod(r.at("residual.factorization")) < 1e-6);
}

TEST_CASE("negative mu runs into a pole") {
  const fs::path dir = scratch("pole");
  write_file(dir / "free.json", R"({"potential": {"kind": "zero"}, "beta1": -1, "beta2": 0})");
  CHECK(invoke({"susy", "--config", (dir / "free.json").string(), "--mu", "-0.1", "--output-dir",
                (dir / "out").string()}) == 3);
  const auto r = read_report(dir / "out" / "report.kv");
  CHECK(r.at("error.code") == "PoleDetected");
  CHECK(r.at("exit_status") == "3");
}

TEST_CASE("runs are reproducible") {
  const fs::path a = scratch("repro_a");
  const fs::path b = scratch("repro_b");
  for (const fs::path& d : {a, b})
    REQUIRE(invoke({"demo", "--beta2-sweep", "0:2:3", "--grid-n", "801", "--output-dir", d.string()}) == 0);
  CHECK(slurp(a / "sweep.csv") == slurp(b / "sweep.csv"));
  auto ra = read_report(a / "report.kv");
  auto rb = read_report(b / "report.kv");
  ra.erase("meta.timestamp");
  rb.erase("meta.timestamp");
  ra.erase("run.output_dir");
  rb.erase("run.output_dir");
  CHECK(ra == rb);
  CHECK(ra.at("config.beta2") == "0");
  CHECK(ra.count("config.grid.N") == 1);
  CHECK(ra.at("sweep.points") == "3");
}

TEST_CASE("usage errors") {
  std::string err;
  CHECK(invoke({}, &err) == 2);
  CHECK(invoke({"bogus"}) == 2);
  CHECK(invoke({"verify", "--stencil-order", "3"}) == 2);
  CHECK(invoke({"demo", "--beta2-sweep", "1:2"}, &err) == 2);
  CHECK(err.find("ConfigError") != std::string::npos);
}

TEST_CASE("executable runs end to end") {
  const fs::path dir = scratch("exe");
  const std::string cmd = std::string("\"") + PDEMLAB_EXE + "\" demo --beta2 0 --grid-n 801 --output-dir \"" +
                          dir.string() + "\" > \"" + (dir / "stdout.txt").string() + "\"";
  const int raw = std::system(cmd.c_str());
  REQUIRE(raw != -1);
  CHECK(WEXITSTATUS(raw) == 0);
  CHECK(slurp(dir / "stdout.txt").find("status=ok exit=0") != std::string::npos);
  const auto r = read_report(dir / "report.kv");
  CHECK(r.at("violated_standard_convention") == "true");
  CHECK(r.at("non_physical_closed_form") == "true");
}
