#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "pdemlab/error.hpp"
#include "pdemlab_cli/run.hpp"

namespace pdemlab::cli {

namespace {

struct Flags {
  std::string config_path;
  std::optional<double> beta2;
  double alpha_re = 0.0;
  double alpha_im = 0.0;
  std::string convention = "eta";
  std::optional<std::size_t> grid_n;
  std::optional<double> grid_l;
  std::string sweep;
  std::string output_dir = ".";
  double mu = 0.0;
  double ic = 0.0;
  double a0 = 1.0;
  int stencil_order = 4;
  std::size_t layers = 8;
  std::size_t eigenvalue_count = 10;
  bool no_spectrum = false;
};

void add_common(CLI::App* app, Flags& f) {
  app->add_option("--config", f.config_path, "JSON profile configuration")->check(CLI::ExistingFile);
  app->add_option("--beta2", f.beta2, "override beta2");
  app->add_option("--convention", f.convention, "inner product: eta or flat")
      ->check(CLI::IsMember({"eta", "flat"}));
  app->add_option("--grid-n", f.grid_n, "number of grid points (odd)");
  app->add_option("--grid-l", f.grid_l, "grid half width L");
  app->add_option("--output-dir", f.output_dir, "directory for report.kv and tables");
  app->add_option("--ic", f.ic, "Riccati initial value at x = 0");
}

RunConfig resolve(Subcommand sub, const Flags& f) {
  RunConfig c;
  c.subcommand = sub;
  if (!f.config_path.empty()) c.profile = load_profile_config(f.config_path);
  if (f.beta2) c.profile.beta2 = *f.beta2;
  if (f.grid_n) c.profile.grid_N = *f.grid_n;
  if (f.grid_l) c.profile.grid_L = *f.grid_l;
  c.output_dir = f.output_dir;
  c.convention = parse_convention(f.convention);
  if (!f.sweep.empty()) c.sweep = parse_sweep(f.sweep);
  c.alpha = {f.alpha_re, f.alpha_im};
  c.mu = f.mu;
  c.ic = f.ic;
  c.a0 = f.a0;
  c.stencil_order = f.stencil_order;
  c.boundary_layers = f.layers;
  c.eigenvalue_count = f.eigenvalue_count;
  c.spectrum = !f.no_spectrum;
  return c;
}

}  // namespace

int run_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"pdemlab: PT-symmetric position-dependent-mass toolkit"};
  app.require_subcommand(1);
  Flags f;

  auto* metric = app.add_subcommand("metric", "metric Lambda and eta on the grid");
  auto* susy = app.add_subcommand("susy", "intertwining Riccati solution and partner potential");
  auto* factorize = app.add_subcommand("factorize", "ladder factorisation H = A+ A-");
  auto* coherent = app.add_subcommand("coherent", "coherent state and its moments");
  auto* uncertainty = app.add_subcommand("uncertainty", "closed-form variance chain against quadrature");
  auto* verify = app.add_subcommand("verify", "lattice residuals, oracle identities and spectrum");
  auto* demo = app.add_subcommand("demo", "constant-mass oscillator case study");
  for (auto* s : {metric, susy, factorize, coherent, uncertainty, verify, demo}) add_common(s, f);

  susy->add_option("--mu", f.mu, "spectral parameter mu");
  susy->add_option("--a0", f.a0, "scale a0 of a = a0 m^(-1/4)");
  for (auto* s : {coherent, uncertainty, demo}) {
    s->add_option("--alpha-re", f.alpha_re, "Re alpha");
    s->add_option("--alpha-im", f.alpha_im, "Im alpha");
  }
  demo->add_option("--beta2-sweep", f.sweep, "sweep beta2 as lo:hi:n");
  verify->add_option("--stencil-order", f.stencil_order, "2 or 4")->check(CLI::IsMember({2, 4}));
  verify->add_option("--layers", f.layers, "boundary layers excluded from residuals");
  verify->add_option("--eigenvalues", f.eigenvalue_count, "eigenvalues summarised by smallest modulus");
  verify->add_flag("--no-spectrum", f.no_spectrum, "skip the dense eigensolve");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? 0 : exit_status_for(ErrorCode::InvalidArgument);
  }

  Subcommand sub = Subcommand::demo;
  for (auto* s : app.get_subcommands()) sub = parse_subcommand(s->get_name());
  RunConfig config;
  try {
    config = resolve(sub, f);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_status_for(e.code());
  }
  const RunResult result = run(config, err);
  out << "status=" << result.report.get("status") << " exit=" << result.exit_status << " report="
      << (config.output_dir / "report.kv").string() << '\n';
  return result.exit_status;
}

}  // namespace pdemlab::cli
