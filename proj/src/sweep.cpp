#include "bosegas/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "bosegas/canonical.hpp"
#include "bosegas/errors.hpp"
#include "bosegas/grand.hpp"
#include "bosegas/kernels.hpp"

namespace bosegas {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<double> parse_double_list(const std::string& value) {
  std::vector<double> out;
  std::string item;
  std::istringstream iss(value);
  while (std::getline(iss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    size_t pos = 0;
    const double v = std::stod(item, &pos);
    if (pos != item.size()) throw ConfigError("bad number in list: " + item);
    out.push_back(v);
  }
  return out;
}

double parse_double(const std::string& value) {
  size_t pos = 0;
  const double v = std::stod(value, &pos);
  if (pos != trim(value).size() && pos != value.size())
    throw ConfigError("bad number: " + value);
  return v;
}

int parse_int(const std::string& value) {
  size_t pos = 0;
  const int v = std::stoi(value, &pos);
  if (pos != value.size()) throw ConfigError("bad integer: " + value);
  return v;
}

}  // namespace

double SweepConfig::effective_h_omega() const {
  return h_omega > 0.0 ? h_omega : default_h_omega(omega);
}

void SweepConfig::validate() const {
  if (!(beta > 0.0)) throw ConfigError("beta must be > 0");
  if (!(rho > 0.0)) throw ConfigError("rho must be > 0");
  if (!(omega > 0.0)) throw ConfigError("omega must be > 0");
  if (grid_n < 8) throw ConfigError("grid_n must be >= 8");
  if (!(delta > 0.0 && delta < 0.5)) throw ConfigError("delta must be in (0, 0.5)");
  if (h_omega < 0.0) throw ConfigError("h_omega must be >= 0");
  for (double L : L_values)
    if (!(L >= 1.0)) throw ConfigError("every L must be >= 1");
  if (!std::is_sorted(L_values.begin(), L_values.end()))
    throw ConfigError("L values must be sorted ascending");
}

void apply_config_line(SweepConfig& cfg, const std::string& key,
                       const std::string& value) {
  if (key == "beta") cfg.beta = parse_double(value);
  else if (key == "rho") cfg.rho = parse_double(value);
  else if (key == "omega") cfg.omega = parse_double(value);
  else if (key == "L") cfg.L_values = parse_double_list(value);
  else if (key == "grid_n") cfg.grid_n = parse_int(value);
  else if (key == "gauge") cfg.gauge = gauge_from_string(value);
  else if (key == "delta") cfg.delta = parse_double(value);
  else if (key == "h_omega") cfg.h_omega = parse_double(value);
  else if (key == "out") cfg.out_dir = value;
  else throw ConfigError("unknown config key: " + key);
}

SweepConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  SweepConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
    try {
      apply_config_line(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    } catch (const std::exception& e) {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return cfg;
}

std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

struct RowContext {
  std::shared_ptr<const Spectrum> spec_c, spec_m, spec_p;
  int N = 0;
  double rho_eff = 0.0;
  double h = 0.0;
};

RowContext make_row_context(const SweepConfig& cfg, double L) {
  RowContext ctx;
  const GridSpec grid{cfg.grid_n, cfg.gauge};
  ctx.h = cfg.effective_h_omega();
  ctx.spec_c = cached_spectrum(L, cfg.omega, grid);
  ctx.spec_m = cached_spectrum(L, cfg.omega - ctx.h, grid);
  ctx.spec_p = cached_spectrum(L, cfg.omega + ctx.h, grid);
  const double vol = L * L * L;
  ctx.N = static_cast<int>(std::lround(cfg.rho * vol));
  if (ctx.N < 2) throw std::domain_error("round(rho L^3) must be >= 2");
  ctx.rho_eff = ctx.N / vol;
  return ctx;
}

double a_infinity(double beta, double rho, double omega) {
  const double x_inf = invert_fugacity_infinite(beta, rho, omega);
  const double p2 = -x_inf / beta * density_infinite_dx(beta, x_inf, omega);
  return std::sqrt(-rho / (2.0 * std::numbers::pi * beta * p2));
}

}  // namespace

TableRow compute_table_row(const SweepConfig& cfg, double L) {
  const RowContext ctx = make_row_context(cfg, L);
  const double beta = cfg.beta;
  const double vol = L * L * L;

  TableRow row;
  row.L = L;
  row.N = ctx.N;
  row.x_L = invert_fugacity_finite(*ctx.spec_c, beta, ctx.rho_eff);
  row.x_inf = invert_fugacity_infinite(beta, ctx.rho_eff, cfg.omega);
  row.P_L = pressure_finite(*ctx.spec_c, beta, row.x_L).real();
  row.P_inf = pressure_infinite(beta, row.x_inf, cfg.omega).real();
  row.rho_check = density_finite(*ctx.spec_c, beta, row.x_L).real();
  row.Gamma_L =
      magnetization_grand_finite(*ctx.spec_m, *ctx.spec_p, beta, row.x_L, ctx.h)
          .real();
  row.Gamma_inf =
      magnetization_grand_infinite(beta, row.x_inf, cfg.omega).real();
  row.f_tilde_L = legendre_free_energy(row.P_L, row.x_L, beta, ctx.rho_eff);
  row.f_inf = legendre_free_energy(row.P_inf, row.x_inf, beta, ctx.rho_eff);

  const ContourResult contour = partition_contour(*ctx.spec_c, beta, ctx.N);
  row.logZ_contour = contour.logZ;
  row.logZ_recursion = partition_recursion(*ctx.spec_c, beta, ctx.N).back();
  row.f_L = -contour.logZ / (beta * vol);
  row.A_L = contour.A_L;
  row.A_inf = a_infinity(beta, ctx.rho_eff, cfg.omega);

  const double f_plus = reduced_free_energy(*ctx.spec_p, beta, ctx.N);
  const double f_minus = reduced_free_energy(*ctx.spec_m, beta, ctx.N);
  row.m_L = (f_plus - f_minus) / (2.0 * ctx.h);
  row.m_tilde_L = row.Gamma_L;  // Gamma_L evaluated at x_L by construction
  row.gap = std::abs(row.m_L - row.m_tilde_L);
  return row;
}

ScalingRow compute_scaling_row(const SweepConfig& cfg, double L) {
  const RowContext ctx = make_row_context(cfg, L);
  const double beta = cfg.beta;
  const std::complex<double> z_fixed = 0.5;

  ScalingRow row;
  row.L = L;
  row.N = ctx.N;

  row.gap_P = std::abs(pressure_finite(*ctx.spec_c, beta, z_fixed) -
                       pressure_infinite(beta, z_fixed, cfg.omega));
  row.gap_rho = std::abs(density_finite(*ctx.spec_c, beta, z_fixed) -
                         density_infinite(beta, z_fixed, cfg.omega));
  row.gap_Gamma = std::abs(
      magnetization_grand_finite(*ctx.spec_m, *ctx.spec_p, beta, z_fixed, ctx.h) -
      magnetization_grand_infinite(beta, z_fixed, cfg.omega));

  // Fugacity convergence carries no particle-number rounding: exact rho.
  row.gap_x = std::abs(invert_fugacity_finite(*ctx.spec_c, beta, cfg.rho) -
                       invert_fugacity_infinite(beta, cfg.rho, cfg.omega));

  const ContourResult contour = partition_contour(*ctx.spec_c, beta, ctx.N);
  row.gap_A = std::abs(contour.A_L - a_infinity(beta, ctx.rho_eff, cfg.omega));

  GasParams params{beta, cfg.rho, cfg.omega, L};
  const MagnetizationResult mag = canonical_magnetization(
      params, GridSpec{cfg.grid_n, cfg.gauge}, cfg.delta, ctx.h);
  row.gap_m = mag.gap;

  row.trace_scaled_gap = trace_asymptote_check(*ctx.spec_c, beta).scaled_gap;
  return row;
}

double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 3)
    throw std::domain_error("fit_loglog_slope: need at least 3 points");
  const auto n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

ScalingSummary summarize_scaling(const std::vector<ScalingRow>& rows) {
  std::vector<double> Ls, gaps;
  for (const auto& r : rows) {
    Ls.push_back(r.L);
    gaps.push_back(r.gap_m);
  }
  ScalingSummary s;
  s.slope_m = fit_loglog_slope(Ls, gaps);
  s.pass = s.slope_m <= -1.0;
  return s;
}

namespace {

const char* kTableHeader =
    "L,N,x_L,x_inf,P_L,P_inf,rho_check,Gamma_L,Gamma_inf,f_tilde_L,f_inf,"
    "logZ_contour,logZ_recursion,f_L,m_L,m_tilde_L,gap,A_L,A_inf";

std::string table_row_csv(const TableRow& r) {
  std::ostringstream os;
  os << format_full(r.L) << ',' << r.N << ',' << format_full(r.x_L) << ','
     << format_full(r.x_inf) << ',' << format_full(r.P_L) << ','
     << format_full(r.P_inf) << ',' << format_full(r.rho_check) << ','
     << format_full(r.Gamma_L) << ',' << format_full(r.Gamma_inf) << ','
     << format_full(r.f_tilde_L) << ',' << format_full(r.f_inf) << ','
     << format_full(r.logZ_contour) << ',' << format_full(r.logZ_recursion)
     << ',' << format_full(r.f_L) << ',' << format_full(r.m_L) << ','
     << format_full(r.m_tilde_L) << ',' << format_full(r.gap) << ','
     << format_full(r.A_L) << ',' << format_full(r.A_inf);
  return os.str();
}

std::ofstream open_out(const std::filesystem::path& p) {
  std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p);
  if (!out) throw ConfigError("cannot write " + p.string());
  return out;
}

}  // namespace

int cmd_table(const SweepConfig& cfg) {
  cfg.validate();
  const std::filesystem::path dir(cfg.out_dir);
  std::filesystem::create_directories(dir);
  auto csv = open_out(dir / "table.csv");
  csv << "# schema-version: 1\n" << kTableHeader << "\n";

  int failures = 0;
  std::ofstream sidecar;
  for (double L : cfg.L_values) {
    try {
      const TableRow row = compute_table_row(cfg, L);
      const double scale = std::abs(row.logZ_contour);
      if (std::abs(row.logZ_contour - row.logZ_recursion) > 1e-8 * scale)
        throw NumericalError(
            "self-check failed: logZ contour vs recursion disagree",
            std::abs(row.logZ_contour - row.logZ_recursion) / scale);
      csv << table_row_csv(row) << "\n";
    } catch (const std::exception& e) {
      if (!sidecar.is_open()) sidecar = open_out(dir / "table_errors.log");
      sidecar << "L=" << format_full(L) << ": " << e.what() << "\n";
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}

int cmd_scaling(const SweepConfig& cfg) {
  cfg.validate();
  if (cfg.L_values.size() < 3)
    throw ConfigError("scaling needs at least 3 L values to fit a slope");
  const std::filesystem::path dir(cfg.out_dir);
  std::filesystem::create_directories(dir);

  std::vector<ScalingRow> rows;
  for (double L : cfg.L_values) rows.push_back(compute_scaling_row(cfg, L));

  auto csv = open_out(dir / "scaling.csv");
  csv << "# schema-version: 1\n"
      << "L,N,gap_m,gap_Gamma,gap_P,gap_rho,gap_x,gap_A,trace_scaled_gap\n";
  for (const auto& r : rows) {
    csv << format_full(r.L) << ',' << r.N << ',' << format_full(r.gap_m) << ','
        << format_full(r.gap_Gamma) << ',' << format_full(r.gap_P) << ','
        << format_full(r.gap_rho) << ',' << format_full(r.gap_x) << ','
        << format_full(r.gap_A) << ',' << format_full(r.trace_scaled_gap)
        << "\n";
  }

  const ScalingSummary summary = summarize_scaling(rows);
  auto sum_out = open_out(dir / "scaling_summary.txt");
  sum_out << "slope_m " << format_full(summary.slope_m) << "\n"
          << "pass " << (summary.pass ? 1 : 0) << "\n";
  std::printf("scaling: slope(log gap_m / log L) = %.6f -> %s\n", summary.slope_m,
              summary.pass ? "pass" : "fail");
  return summary.pass ? 0 : 1;
}

}  // namespace bosegas
