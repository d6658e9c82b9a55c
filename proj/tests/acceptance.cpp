// Acceptance suite: end-to-end checks of the published behavior of the
// model, one printed line per criterion.  Exit code = number of failed
// criteria.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "vmr/vmr.hpp"

using namespace vmr;

namespace {

const PhysConstants<double> consts;
int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s — %s\n", pass ? "PASS" : "FAIL", number, name.c_str(),
              detail.c_str());
  if (!pass) ++failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

MaterialParams<double> anchor_params() { return {0.7e-28, 20 * 0.7e-28, 1e-11, 1e-11, 2.3e14, 4}; }

double h_for_omega_tau(const MaterialParams<double>& p, double wt) {
  return wt * p.m_perp * consts.c_light / (consts.e_charge * p.tau_perp);
}

// --- criterion 1: reference-point estimate through the `anchor` CLI ---
//
// The window [-0.10, -0.07] brackets the published rounded estimate
// -1/12.  The dual oracle (criterion 2 plus the direct-solve fit in the
// unit tests) fixes the true quadratic ratio at these parameters to
// -0.13838: the published closed-form estimate is low by a factor of 2
// relative to its own valley-sum algebra.  The window is kept as stated
// and this criterion records the discrepancy rather than hiding it.
void criterion_1() {
  const double lo = -0.10, hi = -0.07;
  double measured = std::numeric_limits<double>::quiet_NaN();
  double seconds = -1;
  std::string how;
#ifdef VMR_CLI_PATH
  const auto out_path = std::filesystem::temp_directory_path() / "vmr_acceptance_anchor.txt";
  const std::string cmd = std::string("\"") + VMR_CLI_PATH + "\" anchor > " + out_path.string();
  const auto t0 = std::chrono::steady_clock::now();
  const int rc = std::system(cmd.c_str());
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (rc == 0) {
    std::ifstream in(out_path);
    std::string line;
    while (std::getline(in, line)) {
      const auto pos = line.find("ratio              = ");
      if (pos != std::string::npos) measured = std::strtod(line.c_str() + pos + 21, nullptr);
    }
    how = "`anchor` CLI";
  } else {
    how = "`anchor` CLI failed with status " + std::to_string(rc);
  }
#else
  const auto valleys = standard_ge_valleys<double>();
  const Vec3d q = symmetric_axis(valleys);
  const auto t0 = std::chrono::steady_clock::now();
  measured = magnetoresistance_ratio<double>(
                 {volts_per_cm_to_statvolt(200.0) * q, 300.0 * q}, valleys, anchor_params())
                 .ratio;
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  how = "library call";
#endif
  const bool in_window = measured >= lo && measured <= hi;
  const bool fast = seconds >= 0 && seconds < 1.0;
  report(1, "reference-point ratio (m_perp=0.7e-28 g, tau=1e-11 s, m_par/m_perp=20, H=300 Oe)",
         in_window && fast,
         how + " reports dJ2/J0 = " + fmt(measured) + " vs required [" + fmt(lo) + ", " + fmt(hi) +
             "], runtime " + fmt(seconds) + " s" +
             (in_window ? ""
                        : "; the valley-sum ground truth is twice the published closed-form "
                          "estimate, so the published window cannot contain it"));
}

// --- criterion 2: numeric valley sum == closed-form ratio, 1e-10 ---
void criterion_2() {
  std::mt19937_64 rng(31415);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const auto valleys = standard_ge_valleys<double>();
  const Vec3d q = symmetric_axis(valleys);
  const int trials = 1200;
  double worst = 0;
  for (int t = 0; t < trials; ++t) {
    MaterialParams<double> p;
    // masses and times each span two decades, drawn independently
    p.m_perp = std::pow(10.0, -28.5 + 2.0 * u(rng));
    p.m_par = std::pow(10.0, -28.5 + 2.0 * u(rng));
    p.tau_perp = std::pow(10.0, -12.0 + 2.0 * u(rng));
    p.tau_par = std::pow(10.0, -12.0 + 2.0 * u(rng));
    p.n_total = std::pow(10.0, 12.0 + 3.0 * u(rng));
    p.n_valleys = 4;
    // skip the ulp-level isotropic sliver: both sides vanish there and
    // the comparison would measure rounding noise, not the coefficient
    const double b_perp = p.tau_perp / p.m_perp, b_par = p.tau_par / p.m_par;
    if (std::abs(b_par / b_perp - 1.0) < 1e-3) {
      --t;
      continue;
    }
    const double h = h_for_omega_tau(p, 0.5 * u(rng));
    const double e0 = 0.1 + u(rng);
    const double numeric =
        delta_j2_numeric<double>({e0 * q, h * q}, valleys, p) / baseline_current(e0, p);
    const double analytic = delta_j2_analytic(p, h);
    worst = std::max(worst,
                     std::abs(numeric - analytic) / std::max(std::abs(analytic), 1e-300));
  }
  report(2, "numeric valley-sum ratio equals the closed form to 1e-10", worst < 1e-10,
         "max relative difference " + fmt(worst) + " over " + std::to_string(trials) + " draws");
}

// --- criterion 3: three-term series vs direct solve ---
void criterion_3() {
  std::mt19937_64 rng(27182);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::normal_distribution<double> g;
  const auto valleys = standard_ge_valleys<double>();
  const int trials = 600;
  double worst_c = 0, ratio_lo = 8, ratio_hi = 8;
  for (int t = 0; t < trials; ++t) {
    MaterialParams<double> p;
    p.m_perp = std::pow(10.0, -28.5 + 2.0 * u(rng));
    p.m_par = p.m_perp * std::pow(10.0, 0.5 + 1.5 * u(rng));
    p.tau_perp = std::pow(10.0, -12.0 + 2.0 * u(rng));
    p.tau_par = p.tau_perp * std::pow(10.0, -0.7 + 0.7 * u(rng));
    p.n_total = 1e14;
    p.n_valleys = 4;
    const double wt = 0.02 + 0.28 * u(rng);
    const double h = h_for_omega_tau(p, wt);
    Vec3d dir(g(rng), g(rng), g(rng));
    dir.normalize();
    auto max_err = [&](double scale) {
      double err = 0;
      const FieldPoint<double> f{0.5 * dir, scale * h * dir};
      for (const auto& frame : valleys) {
        const auto d = drift_series(f, frame, p);
        err = std::max(err, (d.u0 + d.u1 + d.u2 - d.u_exact).norm() / d.u_exact.norm());
      }
      return err;
    };
    const double err_full = max_err(1.0);
    const double err_half = max_err(0.5);
    worst_c = std::max(worst_c, err_full / (wt * wt * wt));
    ratio_lo = std::min(ratio_lo, err_full / err_half);
    ratio_hi = std::max(ratio_hi, err_full / err_half);
  }
  const bool pass = worst_c <= series_error_constant && ratio_lo >= 6.0 && ratio_hi <= 10.0;
  report(3, "series truncation bounded by C (omega tau)^3 with cubic shrinkage", pass,
         "max err/(omega tau)^3 = " + fmt(worst_c) + " (C = " + fmt(series_error_constant) +
             "), halving ratios in [" + fmt(ratio_lo) + ", " + fmt(ratio_hi) + "] over " +
             std::to_string(trials) + " draws");
}

// --- criterion 4: symmetry suite ---
void criterion_4() {
  std::mt19937_64 rng(16180);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const auto valleys = standard_ge_valleys<double>();
  const Vec3d q = symmetric_axis(valleys);
  bool pass = true;
  std::string detail;

  double worst_hall = 0;
  for (int t = 0; t < 300; ++t) {
    MaterialParams<double> p;
    p.m_perp = std::pow(10.0, -28.5 + 2.0 * u(rng));
    p.m_par = std::pow(10.0, -28.5 + 2.0 * u(rng));
    p.tau_perp = std::pow(10.0, -12.0 + 2.0 * u(rng));
    p.tau_par = std::pow(10.0, -12.0 + 2.0 * u(rng));
    p.n_total = 1e14;
    p.n_valleys = 4;
    const double h = h_for_omega_tau(p, u(rng));
    const double e0 = 0.1 + u(rng);
    const FieldPoint<double> f{e0 * q, h * q};
    worst_hall = std::max(worst_hall,
                          hall_sum<double>(f, valleys, p).norm() / baseline_current(e0, p));
  }
  pass = pass && worst_hall < 1e-10;
  detail += "max |hall|/J0 = " + fmt(worst_hall);

  MaterialParams<double> iso{1e-28, 1e-28, 1e-11, 1e-11, 1e14, 4};
  const double dj2_iso = delta_j2_numeric<double>({0.4 * q, 300.0 * q}, valleys, iso);
  pass = pass && dj2_iso == 0.0;
  detail += "; isotropic dJ2 = " + fmt(dj2_iso);

  {
    const auto p = anchor_params();
    std::vector<double> xs, ys;
    for (int k = 0; k < 9; ++k) {
      const double h = 10.0 * std::pow(300.0 / 10.0, k / 8.0);
      const double r = std::abs(delta_j2_numeric<double>({0.4 * q, h * q}, valleys, p) /
                                baseline_current(0.4, p));
      xs.push_back(std::log(h));
      ys.push_back(std::log(r));
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = double(xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k) {
      sx += xs[k];
      sy += ys[k];
      sxx += xs[k] * xs[k];
      sxy += xs[k] * ys[k];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    pass = pass && std::abs(slope - 2.0) <= 1e-6;
    detail += "; fitted H-exponent = " + fmt(slope);
  }

  {
    double worst_rot = 0;
    for (int t = 0; t < 50; ++t) {
      MaterialParams<double> p;
      p.m_perp = std::pow(10.0, -28.5 + 2.0 * u(rng));
      p.m_par = p.m_perp * std::pow(10.0, 0.5 + 1.5 * u(rng));
      p.tau_perp = std::pow(10.0, -12.0 + 2.0 * u(rng));
      p.tau_par = p.tau_perp * std::pow(10.0, -0.7 + 0.7 * u(rng));
      p.n_total = 1e14;
      p.n_valleys = 4;
      const double h = h_for_omega_tau(p, 0.05 + 0.45 * u(rng));
      const FieldPoint<double> f{(0.1 + u(rng)) * q, h * q};
      const auto base = magnetoresistance_ratio<double>(f, valleys, p);
      const double angle = 6.283185307179586 * u(rng);
      auto rotated = valleys;
      for (auto& frame : rotated) {
        const Vec3d t1 = std::cos(angle) * frame.t1 + std::sin(angle) * frame.t2;
        frame.t2 = frame.axis.cross(t1);
        frame.t1 = t1;
      }
      const auto rot = magnetoresistance_ratio<double>(f, rotated, p);
      worst_rot = std::max(worst_rot, std::abs(rot.ratio - base.ratio) /
                                          std::max(std::abs(base.ratio), 1e-300));
      worst_rot = std::max(worst_rot, std::abs(rot.j0 - base.j0) / base.j0);
      for (std::size_t k = 0; k < 4; ++k) {
        const Vec3d ua = drift_exact(f, valleys[k], p);
        const Vec3d ub = drift_exact(f, rotated[k], p);
        worst_rot = std::max(worst_rot, (ua - ub).norm() / ua.norm());
      }
    }
    pass = pass && worst_rot < 1e-10;
    detail += "; max frame-rotation change = " + fmt(worst_rot);
  }

  report(4, "symmetry suite (Hall cancellation, isotropic zero, H^2 law, frame invariance)",
         pass, detail);
}

// --- criterion 5: data round trip and I-V reconstruction ---
void criterion_5() {
  bool pass = true;
  std::string detail;
  const auto& table = ge_default_table();

  {
    const std::string csv = csv_of(table);
    std::istringstream in(csv);
    const auto back = load_concentration_table(in, "roundtrip");
    bool exact = back.rows.size() == table.rows.size();
    for (std::size_t k = 0; exact && k < table.rows.size(); ++k)
      exact = back.rows[k].voltage == table.rows[k].voltage &&
              back.rows[k].concentration == table.rows[k].concentration;
    pass = pass && exact;
    detail += std::string("csv reload of all ") + std::to_string(table.rows.size()) +
              " nodes exact: " + (exact ? "yes" : "NO");
  }
  {
    bool exact = true;
    for (const auto& row : table.rows)
      exact = exact && interpolate_concentration(table, row.voltage) == row.concentration;
    pass = pass && exact;
    detail += std::string("; interpolation exact at nodes: ") + (exact ? "yes" : "NO");
  }
  {
    SweepSpec spec;
    spec.h_gauss = {300};
    const auto rows = reconstruct_iv(table, spec);
    const double high_v_ratio = std::abs(rows.back().ratio);
    // "of order 10%": within a half-decade of 0.1
    const bool order_ten_percent = high_v_ratio > 0.03 && high_v_ratio < 0.30;
    pass = pass && order_ten_percent;
    detail += "; |dJ/J| at 45 V = " + fmt(100 * high_v_ratio) + "%";
  }
  report(5, "table round trip and reconstructed I-V magnetoresistance scale", pass, detail);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  if (failures == 0)
    std::printf("acceptance: all criteria passed\n");
  else
    std::printf("acceptance: %d criterion(s) failed\n", failures);
  return failures;
}
