#include "pdemlab_cli/run.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "pdemlab/error.hpp"
#include "pdemlab/ladder.hpp"
#include "pdemlab/lattice.hpp"
#include "pdemlab/metric.hpp"
#include "pdemlab/oracles.hpp"
#include "pdemlab/states.hpp"
#include "pdemlab/susy.hpp"
#include "pdemlab/uncertainty.hpp"

namespace pdemlab::cli {

namespace {

namespace fs = std::filesystem;

struct Context {
  const RunConfig& config;
  std::ostream& log;
  RunResult& result;
  std::string stage = "setup";

  fs::path path(const char* name) const { return config.output_dir / name; }

  void table(const CsvTable& t, const char* name) {
    t.write(path(name));
    result.files.push_back(path(name));
  }

  void plot(const char* name, std::string_view xn, std::string_view yn, const std::vector<double>& xs,
            const std::vector<double>& ys) {
    write_plotdata(path(name), xn, yn, xs, ys);
    result.files.push_back(path(name));
  }
};

void report_header(const RunConfig& c, KeyValueReport& r) {
  r.set("run.subcommand", to_string(c.subcommand));
  r.set("run.convention", to_string(c.convention));
  r.set("run.alpha", c.alpha);
  r.set("run.mu", c.mu);
  r.set("run.ic", c.ic);
  r.set("run.a0", c.a0);
  r.set("run.stencil_order", c.stencil_order);
  r.set("run.boundary_layers", c.boundary_layers);
  r.set("run.eigenvalue_count", c.eigenvalue_count);
  r.set("run.spectrum", c.spectrum);
  if (c.sweep) {
    r.set("run.sweep.lo", c.sweep->lo);
    r.set("run.sweep.hi", c.sweep->hi);
    r.set("run.sweep.n", c.sweep->n);
  }
  r.set_config("config", to_json(c.profile));
}

void set_expectations(KeyValueReport& r, const std::string& prefix, const ExpectationReport& e) {
  r.set(prefix + ".mean_Phi", e.mean_Phi);
  r.set(prefix + ".mean_Pi", e.mean_Pi);
  r.set(prefix + ".var_Phi", e.var_Phi);
  r.set(prefix + ".var_Pi", e.var_Pi);
  r.set(prefix + ".mean_commutator", e.mean_commutator);
  r.set(prefix + ".mean_x", e.mean_x);
  r.set(prefix + ".var_x", e.var_x);
}

void set_chain(KeyValueReport& r, const std::string& prefix, const ClosedFormChain& c) {
  r.set(prefix + ".source", to_string(c.source));
  r.set(prefix + ".var_Phi_cf", c.var_Phi_cf);
  r.set(prefix + ".var_Pi_cf", c.var_Pi_cf);
  r.set(prefix + ".du0_var", c.du0_var);
  r.set(prefix + ".commutator_sq", c.commutator_sq);
  r.set(prefix + ".bound_paper_sq", c.bound_paper_sq);
  r.set(prefix + ".bound_standard_sq", c.bound_standard_sq);
  r.set(prefix + ".product_cf", c.product_cf);
  r.set(prefix + ".decomposition.commutator_term", c.decomposition_commutator_term);
  r.set(prefix + ".decomposition.du0_term", c.decomposition_du0_term);
  r.set(prefix + ".decomposition.u0_prime_term", c.decomposition_u0_prime_term);
  r.set(prefix + ".decomposition.value", c.decomposition_value);
  r.set(prefix + ".non_physical", c.non_physical);
}

void set_uncertainty(KeyValueReport& r, const UncertaintyReport& u) {
  set_chain(r, "chain", u.chain);
  set_chain(r, "quadrature_chain", u.quadrature_chain);
  set_expectations(r, "quadrature", u.quadrature);
  r.set("quadrature.commutator_sq", u.quad_commutator_sq);
  r.set("quadrature.bound_sq", u.quad_bound_sq);
  r.set("quadrature.product", u.product_quad);
  r.set("delta_Phi", u.delta_Phi);
  r.set("delta_Pi", u.delta_Pi);
  r.set("beta0", u.beta0);
  r.set("violated_paper_convention", u.violated_paper_convention);
  r.set("violated_standard_convention", u.violated_standard_convention);
  r.set("violated", u.violated_standard_convention);
  r.set("inequality_74_holds", u.inequality_74_holds);
  r.set("non_physical_closed_form", u.non_physical_closed_form);
}

void note_pi_definition(KeyValueReport& r) {
  // Pi uses the flat adjoint form, which carries u0 with weight 1/sqrt2.
  r.set("note.pi_definition", "Pi=(i/sqrt2)(A_minus_adjoint-A_minus)=-i*a_minus*d/dx*a_minus");
}

void warn_truncation(Context& ctx, const CoherentState& state, const MetricWeight& metric) {
  RealField density(state.samples.size());
  for (std::size_t k = 0; k < density.size(); ++k)
    density[k] = (state.convention == Convention::eta ? metric.eta[k] : 1.0) * std::norm(state.samples[k]);
  const double ratio = boundary_mass_ratio(density);
  ctx.result.report.set("warning.boundary_mass_ratio", ratio);
  ctx.result.report.set("warning.truncation", ratio > kTruncationWarning);
  if (ratio > kTruncationWarning)
    ctx.log << "warning: weighted density at the domain edge is " << format_number(ratio) << " of its maximum\n";
}

void run_metric(Context& ctx) {
  auto& r = ctx.result.report;
  ctx.stage = "profile";
  const Profile profile = build_profile(ctx.config.profile);
  const GridSpec grid = make_grid(ctx.config.profile);
  ctx.stage = "metric";
  const MetricWeight metric = build_metric(profile, grid);
  CsvTable t({"x", "lambda", "eta"});
  for (std::size_t k = 0; k < grid.size(); ++k) t.add_row(std::vector<double>{grid.x(k), metric.lambda[k], metric.eta[k]});
  ctx.table(t, "metric.csv");
  ctx.plot("plotdata_eta.csv", "x", "eta", grid.nodes(), metric.eta);
  r.set("metric.hermitian", is_hermitian(profile));
  r.set("metric.lambda_at_L", metric.lambda.back());
  r.set("metric.eta_at_L", metric.eta.back());
  r.set("metric.eta_min", *std::min_element(metric.eta.begin(), metric.eta.end()));
  r.set("metric.eta_max", *std::max_element(metric.eta.begin(), metric.eta.end()));
}

void run_susy(Context& ctx) {
  auto& r = ctx.result.report;
  ctx.stage = "profile";
  const Profile profile = build_profile(ctx.config.profile);
  const GridSpec grid = make_grid(ctx.config.profile);
  ctx.stage = "susy";
  const EffectiveFields fields = effective_fields(profile, grid);
  const RiccatiSolution K = solve_K_riccati(fields, profile, ctx.config.mu, ctx.config.ic, grid);
  const SusyPackage pkg = susy_package(fields, K, ctx.config.a0, profile);
  const SusyConsistency c = susy_consistency(profile, fields, K, pkg);
  CsvTable t({"x", "u", "V_e", "K", "phi", "V_partner"});
  for (std::size_t k = 0; k < grid.size(); ++k)
    t.add_row(std::vector<double>{grid.x(k), fields.u[k], fields.V_e[k], K.field_samples[k], pkg.phi[k],
                                  pkg.partner_potential[k]});
  ctx.table(t, "susy.csv");
  ctx.plot("plotdata_K.csv", "x", "K", grid.nodes(), K.field_samples);
  r.set("susy.route", to_string(K.route));
  r.set("susy.residual_norm", K.residual_norm);
  r.set("susy.consistency.scale_equation", c.scale_equation);
  r.set("susy.consistency.superpotential", c.superpotential);
  r.set("susy.consistency.partner_equation", c.partner_equation);
  r.set("susy.consistency.phi_a_equation", c.phi_a_equation);
}

void run_factorize(Context& ctx) {
  auto& r = ctx.result.report;
  ctx.stage = "profile";
  const Profile profile = build_profile(ctx.config.profile);
  const GridSpec grid = make_grid(ctx.config.profile);
  ctx.stage = "ladder";
  const LadderPackage pkg = build_ladder(profile, grid, ctx.config.ic);
  const DeformedObservables obs = deformed_observables(pkg);
  CsvTable t({"x", "a_minus", "u0", "phi_minus", "phi_plus", "Phi", "commutator_field"});
  for (std::size_t k = 0; k < grid.size(); ++k)
    t.add_row(std::vector<double>{grid.x(k), pkg.a_minus[k], pkg.u0[k], pkg.phi_minus.field_samples[k],
                                  pkg.phi_plus[k], obs.Phi[k], obs.commutator_field[k]});
  ctx.table(t, "factorize.csv");
  ctx.plot("plotdata_phi_minus.csv", "x", "phi_minus", grid.nodes(), pkg.phi_minus.field_samples);

  ctx.stage = "factorization check";
  const auto basket = test_function_basket(grid, 16);
  double commutator = 0.0;
  for (const auto& psi : basket) {
    const ComplexField lhs = apply_Phi_Pi_commutator(pkg, obs, psi);
    ComplexField rhs(psi.size());
    for (std::size_t k = 0; k < psi.size(); ++k) rhs[k] = std::complex<double>(0.0, obs.commutator_field[k]) * psi[k];
    commutator = std::max(commutator, interior_relative_error(lhs, rhs, ctx.config.boundary_layers));
  }
  r.set("ladder.route", to_string(pkg.phi_minus.route));
  r.set("ladder.riccati_residual", pkg.phi_minus.residual_norm);
  r.set("ladder.lambda0", pkg.lambda0);
  r.set("ladder.a_plus", kAPlusTag);
  r.set("residual.factorization", factorization_residual(pkg, profile, basket, ctx.config.boundary_layers));
  r.set("residual.commutator", commutator);
  r.set("residual.test_functions", basket.size());
  note_pi_definition(r);
}

struct StatePipeline {
  Profile profile;
  GridSpec grid;
  MetricWeight metric;
  LadderPackage pkg;
  CoherentState state;
};

StatePipeline state_pipeline(Context& ctx) {
  ctx.stage = "profile";
  Profile profile = build_profile(ctx.config.profile);
  const GridSpec grid = make_grid(ctx.config.profile);
  ctx.stage = "metric";
  MetricWeight metric = build_metric(profile, grid);
  ctx.stage = "ladder";
  LadderPackage pkg = build_ladder(profile, grid, ctx.config.ic);
  ctx.stage = "coherent state";
  CoherentState state = coherent_state(pkg, ctx.config.alpha, metric, ctx.config.convention);
  warn_truncation(ctx, state, metric);
  return {std::move(profile), grid, std::move(metric), std::move(pkg), std::move(state)};
}

void run_coherent(Context& ctx) {
  auto& r = ctx.result.report;
  const StatePipeline p = state_pipeline(ctx);
  ctx.stage = "expectations";
  const ExpectationReport e = variance_report(p.state, p.pkg, p.metric);
  const LadderIdentityResiduals id = ladder_identity_residuals(p.state, p.pkg, p.metric);
  CsvTable t({"x", "re_psi", "im_psi", "weighted_density"});
  RealField density(p.grid.size());
  for (std::size_t k = 0; k < p.grid.size(); ++k) {
    const double w = p.state.convention == Convention::eta ? p.metric.eta[k] : 1.0;
    density[k] = w * std::norm(p.state.samples[k]);
    t.add_row(std::vector<double>{p.grid.x(k), p.state.samples[k].real(), p.state.samples[k].imag(), density[k]});
  }
  ctx.table(t, "coherent.csv");
  ctx.plot("plotdata_density.csv", "x", "weighted_density", p.grid.nodes(), density);
  r.set("state.c0", p.state.c0);
  r.set("state.abs_c0", std::abs(p.state.c0));
  r.set("state.beta_weight", beta_weight(p.profile.m(0.0), p.profile.hbar(), p.profile.params().beta2));
  set_expectations(r, "expectation", e);
  r.set("identity.a_minus", id.a_minus);
  r.set("identity.a_minus_adjoint", id.a_minus_adjoint);
  r.set("identity.a_plus", id.a_plus);
  r.set("identity.mean_Phi", id.mean_Phi);
  r.set("identity.mean_Pi", id.mean_Pi);
  note_pi_definition(r);
}

void run_uncertainty(Context& ctx) {
  auto& r = ctx.result.report;
  const StatePipeline p = state_pipeline(ctx);
  ctx.stage = "uncertainty";
  const ExpectationReport e = variance_report(p.state, p.pkg, p.metric);
  const ClosedFormChain chain = closed_form_chain(p.profile, p.pkg, p.state, p.metric);
  const UncertaintyReport u = make_uncertainty_report(chain, chain, e, ctx.config.profile.beta2);
  set_uncertainty(r, u);
  CsvTable t({"quantity", "closed_form", "quadrature"});
  auto row = [&](const char* name, double cf, double q) { t.add_row({name, format_number(cf), format_number(q)}); };
  row("var_Phi", chain.var_Phi_cf, e.var_Phi);
  row("var_Pi", chain.var_Pi_cf, e.var_Pi);
  row("product", chain.product_cf, u.product_quad);
  row("bound_paper", chain.bound_paper_sq, u.quad_commutator_sq);
  row("bound_standard", chain.bound_standard_sq, u.quad_bound_sq);
  ctx.table(t, "uncertainty.csv");
  note_pi_definition(r);
}

void run_verify(Context& ctx) {
  auto& r = ctx.result.report;
  ctx.stage = "profile";
  const Profile profile = build_profile(ctx.config.profile);
  const GridSpec grid = make_grid(ctx.config.profile);
  ctx.stage = "lattice";
  ResidualSettings settings;
  settings.stencil_order = ctx.config.stencil_order;
  settings.layers = ctx.config.boundary_layers;
  settings.eigenvalue_count = ctx.config.eigenvalue_count;
  settings.compute_spectrum = false;
  const ResidualReport rep = residual_report(profile, grid, settings);
  r.set("residual.pseudo_hermiticity", rep.pseudo_hermiticity_residual);
  r.set("residual.pt_commutator", rep.pt_commutator_residual);
  r.set("residual.adjoint_consistency", rep.adjoint_consistency_residual);
  r.set("residual.factorization", rep.factorization_residual);
  r.set("residual.boundary_layers_excluded", rep.boundary_layers_excluded);

  ctx.stage = "oracles";
  const LadderPackage pkg = build_ladder(profile, grid);
  const MetricWeight metric = build_metric(profile, grid);
  const auto basket = hermite_gaussian_basket(grid, 8, metric_envelope(metric));
  for (auto tag : {IdentityTag::eq48, IdentityTag::eq49, IdentityTag::eq50, IdentityTag::eq51, IdentityTag::eq52})
    r.set("oracle." + std::string(to_string(tag)),
          operator_identity_bruteforce(pkg, tag, basket, ctx.config.boundary_layers));

  if (ctx.config.spectrum) {
    ctx.stage = "spectrum";
    const LatticeOperator H = discretize_H(profile, grid, ctx.config.stencil_order);
    const auto values = eigenvalues(H);
    const SpectrumSummary s = summarize_spectrum(values, ctx.config.eigenvalue_count);
    r.set("spectrum.max_imag", s.max_imag);
    r.set("spectrum.count", s.lowest.size());
    for (std::size_t i = 0; i < s.lowest.size(); ++i) r.set("spectrum.lowest." + std::to_string(i), s.lowest[i]);
    CsvTable t({"index", "re", "im"});
    for (std::size_t i = 0; i < values.size(); ++i)
      t.add_row({std::to_string(i), format_number(values[i].real()), format_number(values[i].imag())});
    ctx.table(t, "eigenvalues.csv");
  }
}

double demo_mass(const RunConfig& c) {
  if (c.profile.mass_kind != "constant") throw Error(ErrorCode::ConfigError, "demo needs mass.kind = constant");
  if (c.profile.potential_kind) throw Error(ErrorCode::ConfigError, "demo fixes its own potential");
  if (c.profile.beta1 != -1.0) throw Error(ErrorCode::ConfigError, "demo fixes beta1 = -1");
  return make_mass(c.profile).m(0.0);
}

std::vector<std::string> sweep_row(const UncertaintyReport& u) {
  auto b = [](bool v) { return std::string(v ? "true" : "false"); };
  return {format_number(u.beta2),           format_number(u.chain.var_Phi_cf), format_number(u.chain.var_Pi_cf),
          format_number(u.quad_var_Phi),    format_number(u.quad_var_Pi),      format_number(u.chain.product_cf),
          format_number(u.product_quad),    format_number(u.chain.bound_paper_sq), format_number(u.quad_bound_sq),
          b(u.violated_paper_convention),   b(u.violated_standard_convention)};
}

const std::vector<std::string> kSweepHeader{"beta2",      "var_Phi_cf",   "var_Pi_cf",   "var_Phi_quad",
                                            "var_Pi_quad", "product_cf",  "product_quad", "bound_paper",
                                            "bound_standard", "violated_paper", "violated_standard"};

void run_demo(Context& ctx) {
  auto& r = ctx.result.report;
  const RunConfig& c = ctx.config;
  ctx.stage = "profile";
  const double m = demo_mass(c);
  const GridSpec grid = make_grid(c.profile);
  CsvTable table(kSweepHeader);
  if (!c.sweep) {
    ctx.stage = "case study beta2=" + format_number(c.profile.beta2);
    const UncertaintyReport u = ho_case_study(c.profile.beta2, m, c.profile.hbar, grid, c.convention);
    r.set("demo.beta2", c.profile.beta2);
    set_uncertainty(r, u);
    note_pi_definition(r);
    table.add_row(sweep_row(u));
    ctx.table(table, "demo.csv");
    return;
  }
  std::vector<double> b2s, products_cf, products_quad;
  int paper = 0, standard = 0;
  for (int i = 0; i < c.sweep->n; ++i) {
    const double b2 = c.sweep->lo + (c.sweep->hi - c.sweep->lo) * i / (c.sweep->n - 1);
    ctx.stage = "case study beta2=" + format_number(b2);
    const UncertaintyReport u = ho_case_study(b2, m, c.profile.hbar, grid, c.convention);
    table.add_row(sweep_row(u));
    b2s.push_back(b2);
    products_cf.push_back(u.chain.product_cf);
    products_quad.push_back(u.product_quad);
    paper += u.violated_paper_convention;
    standard += u.violated_standard_convention;
  }
  ctx.table(table, "sweep.csv");
  ctx.plot("plotdata_product_cf.csv", "beta2", "product_cf", b2s, products_cf);
  ctx.plot("plotdata_product_quad.csv", "beta2", "product_quad", b2s, products_quad);
  r.set("sweep.points", c.sweep->n);
  r.set("sweep.violated_paper_count", paper);
  r.set("sweep.violated_standard_count", standard);
  note_pi_definition(r);
}

}  // namespace

RunResult run(const RunConfig& config, std::ostream& log) {
  RunResult result;
  Context ctx{config, log, result};
  report_header(config, result.report);
  bool wrote_dir = false;
  try {
    ctx.stage = "output";
    fs::create_directories(config.output_dir);
    wrote_dir = true;
    switch (config.subcommand) {
      case Subcommand::metric: run_metric(ctx); break;
      case Subcommand::susy: run_susy(ctx); break;
      case Subcommand::factorize: run_factorize(ctx); break;
      case Subcommand::coherent: run_coherent(ctx); break;
      case Subcommand::uncertainty: run_uncertainty(ctx); break;
      case Subcommand::verify: run_verify(ctx); break;
      case Subcommand::demo: run_demo(ctx); break;
    }
    result.report.set("status", "ok");
  } catch (const Error& e) {
    result.exit_status = exit_status_for(e.code());
    result.report.set("status", "error");
    result.report.set("error.code", to_string(e.code()));
    result.report.set("error.stage", ctx.stage);
    result.report.set("error.message", e.what());
    log << "error [" << ctx.stage << "]: " << e.what() << '\n';
  } catch (const fs::filesystem_error& e) {
    result.exit_status = exit_status_for(ErrorCode::ConfigError);
    result.report.set("status", "error");
    result.report.set("error.code", to_string(ErrorCode::ConfigError));
    result.report.set("error.stage", ctx.stage);
    result.report.set("error.message", e.what());
    log << "error [" << ctx.stage << "]: " << e.what() << '\n';
  }
  result.report.set("exit_status", result.exit_status);
  if (wrote_dir) {
    const fs::path report_path = config.output_dir / "report.kv";
    result.report.write(report_path, utc_timestamp());
    result.files.push_back(report_path);
  }
  return result;
}

}  // namespace pdemlab::cli
