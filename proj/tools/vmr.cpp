#include <array>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vmr/vmr.hpp"

namespace {

struct ParamCli {
  std::string config_path;
  double m_perp = 0, m_par = 0, tau_perp = 0, tau_par = 0, n_total = 0;
  int n_valleys = 4;
  CLI::Option* opt_m_perp = nullptr;
  CLI::Option* opt_m_par = nullptr;
  CLI::Option* opt_tau_perp = nullptr;
  CLI::Option* opt_tau_par = nullptr;
  CLI::Option* opt_n_total = nullptr;
  CLI::Option* opt_n_valleys = nullptr;

  void attach(CLI::App& app) {
    app.add_option("--config", config_path, "key = value config file; flags override it");
    opt_m_perp = app.add_option("--m-perp-g", m_perp, "transverse effective mass (g)");
    opt_m_par = app.add_option("--m-par-g", m_par, "longitudinal effective mass (g)");
    opt_tau_perp = app.add_option("--tau-perp-s", tau_perp, "transverse relaxation time (s)");
    opt_tau_par = app.add_option("--tau-par-s", tau_par, "longitudinal relaxation time (s)");
    opt_n_total = app.add_option("--n-total-cm3", n_total, "total electron concentration (cm^-3)");
    opt_n_valleys = app.add_option("--n-valleys", n_valleys, "number of equivalent valleys");
  }

  vmr::MaterialParams<double> resolve() const {
    vmr::MaterialParams<double> p = vmr::default_material_params();
    if (!config_path.empty()) vmr::apply(vmr::load_config_file(config_path), p);
    if (opt_m_perp->count()) p.m_perp = m_perp;
    if (opt_m_par->count()) p.m_par = m_par;
    if (opt_tau_perp->count()) p.tau_perp = tau_perp;
    if (opt_tau_par->count()) p.tau_par = tau_par;
    if (opt_n_total->count()) p.n_total = n_total;
    if (opt_n_valleys->count()) p.n_valleys = n_valleys;
    vmr::validate(p);
    if (p.n_valleys != 4)
      throw vmr::InvalidInput("the longitudinal drivers model the fourfold <111> valley set; "
                              "n_valleys must be 4");
    return p;
  }
};

void print_params(const vmr::MaterialParams<double>& p) {
  std::cout << "operating point\n";
  std::cout << "  m_perp_g     = " << vmr::format_full(p.m_perp) << "\n";
  std::cout << "  m_par_g      = " << vmr::format_full(p.m_par) << "\n";
  std::cout << "  tau_perp_s   = " << vmr::format_full(p.tau_perp) << "\n";
  std::cout << "  tau_par_s    = " << vmr::format_full(p.tau_par) << "\n";
  std::cout << "  n_total_cm3  = " << vmr::format_full(p.n_total) << "\n";
  std::cout << "  n_valleys    = " << p.n_valleys << "\n";
}

int run_anchor(const ParamCli& param_cli, double e_vpcm, double h_gauss) {
  const auto params = param_cli.resolve();
  const auto valleys = vmr::standard_ge_valleys<double>();
  const vmr::Vec3d q = vmr::symmetric_axis(valleys);
  const double e_stat = vmr::volts_per_cm_to_statvolt(e_vpcm);
  const vmr::FieldPoint<double> fields{e_stat * q, h_gauss * q};
  const auto report = vmr::magnetoresistance_ratio<double>(fields, valleys, params);
  const double wt = vmr::dimensionless_hall_parameter(params, h_gauss);

  // All-orders change from the direct solve, for context next to the
  // quadratic-term ratio.
  double j_h = 0, j_0 = 0;
  const vmr::FieldPoint<double> no_field{fields.E, vmr::Vec3d::Zero()};
  for (const auto& frame : valleys) {
    j_h += q.dot(vmr::valley_current(vmr::drift_exact(fields, frame, params), params));
    j_0 += q.dot(vmr::valley_current(vmr::drift_exact(no_field, frame, params), params));
  }
  const double exact_ratio = j_0 == 0 ? 0 : (j_h - j_0) / j_0;

  print_params(params);
  std::cout << "fields\n";
  std::cout << "  e_vpcm       = " << vmr::format_full(e_vpcm) << "\n";
  std::cout << "  h_gauss      = " << vmr::format_full(h_gauss) << "\n";
  std::cout << "results\n";
  std::cout << "  omega_tau          = " << vmr::format_full(wt) << "\n";
  std::cout << "  weak_field_flag    = " << (wt > 1 ? 1 : 0) << "\n";
  std::cout << "  j0_statamp_cm2     = " << vmr::format_full(report.j0) << "\n";
  std::cout << "  dj2_statamp_cm2    = " << vmr::format_full(report.dj2) << "\n";
  std::cout << "  ratio              = " << vmr::format_full(report.ratio) << "\n";
  std::cout << "  ratio_analytic     = " << vmr::format_full(report.ratio_analytic) << "\n";
  std::cout << "  ratio_simplified   = " << vmr::format_full(report.ratio_simplified) << "\n";
  std::cout << "  ratio_exact_solver = " << vmr::format_full(exact_ratio) << "\n";
  char pct[32];
  std::snprintf(pct, sizeof(pct), "%.2f", 100.0 * std::abs(report.ratio));
  std::cout << "  dj_over_j_percent  = " << pct << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Drift magnetotransport in many-valley semiconductors: longitudinal "
               "magnetoresistance of the fourfold <111> valley set (n-Ge)"};
  app.require_subcommand(1);

  // --- sweep ---
  auto* sweep = app.add_subcommand("sweep", "magnetoresistance over an (E, H) grid");
  ParamCli sweep_params;
  sweep_params.attach(*sweep);
  std::vector<double> sweep_e = {15, 25, 200};
  std::vector<double> sweep_h = {0, 50, 100, 150, 200, 250, 300, 350, 400};
  std::string sweep_csv, sweep_svg;
  sweep->add_option("--e-vpcm", sweep_e, "electric-field magnitudes (V/cm)")->expected(-1);
  sweep->add_option("--h-gauss", sweep_h, "magnetic-field magnitudes (Gs)")->expected(-1);
  sweep->add_option("--out-csv", sweep_csv, "CSV output path (default: stdout)");
  sweep->add_option("--out-svg", sweep_svg, "SVG plot path (ratio vs H)");

  // --- iv ---
  auto* iv = app.add_subcommand("iv", "current-voltage reconstruction from the measured "
                                      "concentration table");
  ParamCli iv_params;
  iv_params.attach(*iv);
  std::string iv_table, iv_csv, iv_svg;
  std::vector<double> iv_volts;
  std::vector<double> iv_h = {300};
  double iv_length = 0.7;
  iv->add_option("--table", iv_table, "two-column (voltage, concentration) table file "
                                      "(default: bundled dataset)");
  iv->add_option("--volts", iv_volts, "sample voltages (default: table nodes)")->expected(-1);
  iv->add_option("--h-gauss", iv_h, "magnetic-field magnitudes (Gs)")->expected(-1);
  iv->add_option("--sample-length-cm", iv_length, "sample length for the V -> V/cm conversion");
  iv->add_option("--out-csv", iv_csv, "CSV output path (default: stdout)");
  iv->add_option("--out-svg", iv_svg, "SVG plot path (J vs V)");

  // --- anchor ---
  auto* anchor = app.add_subcommand("anchor", "one-shot estimate at the reference operating "
                                              "point (H = 300 Gs)");
  ParamCli anchor_params;
  anchor_params.attach(*anchor);
  double anchor_e = 200, anchor_h = 300;
  anchor->add_option("--e-vpcm", anchor_e, "electric-field magnitude (V/cm)");
  anchor->add_option("--h-gauss", anchor_h, "magnetic-field magnitude (Gs)");

  // --- validate ---
  auto* validate = app.add_subcommand("validate", "run the invariant self-test suite");
  std::uint64_t seed = 20260809;
  int trials = 200;
  validate->add_option("--seed", seed, "random seed");
  validate->add_option("--trials", trials, "draws per invariant")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);

    if (sweep->parsed()) {
      vmr::SweepSpec spec;
      spec.params = sweep_params.resolve();
      spec.e_vpcm = sweep_e;
      spec.h_gauss = sweep_h;
      const auto rows = vmr::sweep_magnetoresistance(spec);
      if (sweep_csv.empty())
        std::cout << vmr::csv_of(rows);
      else
        vmr::emit_artifacts(rows, sweep_csv, sweep_svg);
      if (sweep_csv.empty() && !sweep_svg.empty())
        vmr::write_text_file(sweep_svg, vmr::svg_of(rows));
      return 0;
    }
    if (iv->parsed()) {
      vmr::SweepSpec spec;
      spec.params = iv_params.resolve();
      spec.voltages = iv_volts;
      spec.h_gauss = iv_h;
      spec.sample_length_cm = iv_length;
      const vmr::ConcentrationTable table =
          iv_table.empty() ? vmr::ge_default_table() : vmr::load_concentration_table(iv_table);
      const auto rows = vmr::reconstruct_iv(table, spec);
      if (iv_csv.empty())
        std::cout << vmr::csv_of(rows);
      else
        vmr::emit_artifacts(rows, iv_csv, iv_svg);
      if (iv_csv.empty() && !iv_svg.empty()) vmr::write_text_file(iv_svg, vmr::svg_of(rows));
      return 0;
    }
    if (anchor->parsed()) return run_anchor(anchor_params, anchor_e, anchor_h);
    if (validate->parsed()) {
      const auto results = vmr::run_invariant_suite(seed, trials);
      bool all_pass = true;
      for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << "\n";
        all_pass = all_pass && r.pass;
      }
      std::cout << (all_pass ? "all invariants hold\n" : "invariant violations detected\n");
      return all_pass ? 0 : 2;
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const vmr::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const vmr::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
