#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "bosegas/errors.hpp"
#include "bosegas/sweep.hpp"

namespace {

struct CliOverrides {
  std::string config_path;
  double beta = -1, rho = -1, omega = -1, delta = -1, h_omega = -1;
  int grid_n = -1;
  std::string L_list, gauge, out_dir;
  double tolerance_scale = 1.0;
};

void add_common(CLI::App* cmd, CliOverrides& o) {
  cmd->add_option("--config", o.config_path, "flat key = value config file");
  cmd->add_option("--beta", o.beta, "inverse temperature");
  cmd->add_option("--rho", o.rho, "bulk density");
  cmd->add_option("--omega", o.omega, "cyclotron parameter (e/c)B");
  cmd->add_option("--L", o.L_list, "comma-separated box sides");
  cmd->add_option("--grid-n", o.grid_n, "interior grid points per side");
  cmd->add_option("--gauge", o.gauge, "symmetric | landau");
  cmd->add_option("--delta", o.delta, "saddle window exponent, in (0, 0.5)");
  cmd->add_option("--h-omega", o.h_omega, "omega differencing step (0 = auto)");
  cmd->add_option("--out", o.out_dir, "output directory");
}

bosegas::SweepConfig resolve(const CliOverrides& o) {
  bosegas::SweepConfig cfg;
  if (!o.config_path.empty()) cfg = bosegas::parse_config_file(o.config_path);
  if (o.beta >= 0) cfg.beta = o.beta;
  if (o.rho >= 0) cfg.rho = o.rho;
  if (o.omega >= 0) cfg.omega = o.omega;
  if (o.delta >= 0) cfg.delta = o.delta;
  if (o.h_omega >= 0) cfg.h_omega = o.h_omega;
  if (o.grid_n >= 0) cfg.grid_n = o.grid_n;
  if (!o.L_list.empty()) bosegas::apply_config_line(cfg, "L", o.L_list);
  if (!o.gauge.empty()) bosegas::apply_config_line(cfg, "gauge", o.gauge);
  if (!o.out_dir.empty()) cfg.out_dir = o.out_dir;
  cfg.validate();
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"charged Bose gas in a magnetic Dirichlet box: tables, finite-size scaling, verification"};
  app.require_subcommand(1);

  CliOverrides o;
  auto* table = app.add_subcommand("table", "thermodynamic table over the L sweep");
  auto* scaling = app.add_subcommand("scaling", "finite-size gap columns and the surface-order slope fit");
  auto* verify = app.add_subcommand("verify", "run the cross-module invariant suite");
  add_common(table, o);
  add_common(scaling, o);
  add_common(verify, o);
  verify->add_option("--tolerance-scale", o.tolerance_scale,
                     "multiply every tolerance (testing hook)");

  CLI11_PARSE(app, argc, argv);

  try {
    const bosegas::SweepConfig cfg = resolve(o);
    if (table->parsed()) return bosegas::cmd_table(cfg);
    if (scaling->parsed()) return bosegas::cmd_scaling(cfg);
    return bosegas::cmd_verify(cfg, o.tolerance_scale);
  } catch (const bosegas::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const bosegas::NumericalError& e) {
    std::fprintf(stderr, "numerical error: %s (achieved %.3e)\n", e.what(),
                 e.achieved_error());
    return 3;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
}
