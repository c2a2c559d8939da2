#ifndef BOSEGAS_SWEEP_HPP
#define BOSEGAS_SWEEP_HPP

#include <optional>
#include <string>
#include <vector>

#include "bosegas/spectrum.hpp"

namespace bosegas {

struct SweepConfig {
  double beta = 1.0;
  double rho = 0.05;
  double omega = 1.0;
  std::vector<double> L_values = {6.0, 8.0, 10.0, 12.0};
  int grid_n = 48;
  Gauge gauge = Gauge::symmetric;
  double delta = 0.3;
  double h_omega = 0.0;  // 0 picks max(1e-4, 1e-3 omega)
  std::string out_dir = ".";

  double effective_h_omega() const;
  void validate() const;
};

// Flat "key = value" file; '#' starts a comment. Unknown keys are errors.
SweepConfig parse_config_file(const std::string& path);
void apply_config_line(SweepConfig& cfg, const std::string& key,
                       const std::string& value);

// One row of the thermodynamic table at box side L. The grand-canonical
// equation-of-state entries use the effective density N/L^3 so every column
// in a row refers to the same particle content.
struct TableRow {
  double L = 0.0;
  int N = 0;
  double x_L = 0.0, x_inf = 0.0;
  double P_L = 0.0, P_inf = 0.0;
  double rho_check = 0.0;
  double Gamma_L = 0.0, Gamma_inf = 0.0;
  double f_tilde_L = 0.0, f_inf = 0.0;
  double logZ_contour = 0.0, logZ_recursion = 0.0;
  double f_L = 0.0;
  double m_L = 0.0, m_tilde_L = 0.0, gap = 0.0;
  double A_L = 0.0, A_inf = 0.0;
};

// Finite-size gaps per L. The fixed-z entries (P, rho, Gamma) are taken at
// z = 0.5; x_L/x_inf at the exact configured rho; the canonical entries at
// the effective density, with their infinite-volume partners density-matched.
struct ScalingRow {
  double L = 0.0;
  int N = 0;
  double gap_m = 0.0;      // |m_L - m~_L|
  double gap_Gamma = 0.0;  // |Gamma_L(z) - Gamma_inf(z)|
  double gap_P = 0.0;      // |P_L(z) - P_inf(z)|
  double gap_rho = 0.0;    // |rho_L(z) - rho_inf(z)|
  double gap_x = 0.0;      // |x_L - x_inf|
  double gap_A = 0.0;      // |A_L - A_inf|
  double trace_scaled_gap = 0.0;  // L |tr W / L^3 - g(beta,omega)|
};

TableRow compute_table_row(const SweepConfig& cfg, double L);
ScalingRow compute_scaling_row(const SweepConfig& cfg, double L);

struct ScalingSummary {
  double slope_m = 0.0;  // least-squares slope of log |m_L - m~_L| vs log L
  bool pass = false;     // slope <= -1
};

// Least-squares slope of log(y) against log(x); refuses fewer than 3 points.
double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y);
ScalingSummary summarize_scaling(const std::vector<ScalingRow>& rows);

// CSV emission, deterministic: fixed column order, "# schema-version: 1"
// first line, 17 significant digits. cmd_table enforces the contour-vs-
// recursion self-check per row; failing rows go to <out>/table_errors.log and
// the command reports failure. Returns the process exit code.
int cmd_table(const SweepConfig& cfg);
int cmd_scaling(const SweepConfig& cfg);

struct CheckResult {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// Cross-module invariant suite (>= 20 named checks) at the configured
// parameters; tolerance_scale < 1 tightens every tolerance (test hook).
std::vector<CheckResult> verify_suite(const SweepConfig& cfg,
                                      double tolerance_scale = 1.0);
int cmd_verify(const SweepConfig& cfg, double tolerance_scale = 1.0);

std::string format_full(double v);  // %.17g

}  // namespace bosegas

#endif
