#ifndef VMR_VALIDATE_HPP
#define VMR_VALIDATE_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "vmr/current.hpp"
#include "vmr/drift.hpp"
#include "vmr/table.hpp"
#include "vmr/units.hpp"
#include "vmr/valley.hpp"

namespace vmr {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

namespace detail {

/// Random parameter set with the transverse channel dominating
/// (tau_par/m_par <= tau_perp/m_perp), the regime of the calibrated
/// series bound.  Anisotropy never degenerate.
inline MaterialParams<double> random_ge_like_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  MaterialParams<double> p;
  p.m_perp = std::pow(10.0, -28.5 + 2.0 * u(rng));
  p.m_par = p.m_perp * std::pow(10.0, 0.5 + 1.5 * u(rng));
  p.tau_perp = std::pow(10.0, -12.0 + 2.0 * u(rng));
  p.tau_par = p.tau_perp * std::pow(10.0, -0.7 + 0.7 * u(rng));
  p.n_total = std::pow(10.0, 12.0 + 3.0 * u(rng));
  p.n_valleys = 4;
  return p;
}

/// H magnitude giving the requested transverse Hall parameter.
inline double h_for_omega_tau(const MaterialParams<double>& p, double omega_tau) {
  const PhysConstants<double> consts;
  return omega_tau * p.m_perp * consts.c_light / (consts.e_charge * p.tau_perp);
}

}  // namespace detail

/// Self-contained invariant suite over randomized physical parameters.
/// Violations indicate a broken build, not bad input.
inline std::vector<CheckResult> run_invariant_suite(std::uint64_t seed = 20260809,
                                                    int trials = 200) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const auto valleys = standard_ge_valleys<double>();
  const Vec3d q = symmetric_axis(valleys);
  std::vector<CheckResult> out;
  auto add = [&](const std::string& name, bool pass, const std::string& detail) {
    out.push_back({name, pass, detail});
  };
  auto fmt = [](double v) {
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
  };

  {
    double worst = 0;
    for (int t = 0; t < trials; ++t) {
      const auto p = detail::random_ge_like_params(rng);
      const double h = detail::h_for_omega_tau(p, 0.05 + 0.45 * u(rng));
      const FieldPoint<double> f{(0.1 + u(rng)) * q, h * q};
      const auto report = magnetoresistance_ratio<double>(f, valleys, p);
      worst = std::max(worst, report.j1_total.norm() / std::abs(report.j0));
    }
    add("hall-cancellation", worst < 1e-10, "max |J1|/J0 = " + fmt(worst));
  }
  {
    double worst = 0;
    for (int t = 0; t < trials; ++t) {
      const auto p = detail::random_ge_like_params(rng);
      const double h = detail::h_for_omega_tau(p, 0.05 + 0.45 * u(rng));
      const FieldPoint<double> f{(0.1 + u(rng)) * q, h * q};
      const double numeric = delta_j2_numeric<double>(f, valleys, p) /
                             baseline_current(f.E.norm(), p);
      const double analytic = delta_j2_analytic(p, h);
      worst = std::max(worst, std::abs(numeric - analytic) /
                                  std::max(std::abs(analytic), 1e-300));
    }
    add("numeric-analytic-equivalence", worst < 1e-10, "max rel diff = " + fmt(worst));
  }
  {
    double worst_c = 0, worst_ratio_lo = 8, worst_ratio_hi = 8;
    for (int t = 0; t < trials; ++t) {
      const auto p = detail::random_ge_like_params(rng);
      const double wt = 0.02 + 0.28 * u(rng);
      const double h = detail::h_for_omega_tau(p, wt);
      Vec3d dir(u(rng) - 0.5, u(rng) - 0.5, u(rng) - 0.5);
      dir.normalize();
      const double e_mag = 0.1 + u(rng);
      auto series_err = [&](double scale) {
        double err = 0;
        const FieldPoint<double> f{e_mag * dir, scale * h * dir};
        for (const auto& frame : valleys) {
          const auto d = drift_series(f, frame, p);
          err = std::max(err, (d.u0 + d.u1 + d.u2 - d.u_exact).norm() / d.u_exact.norm());
        }
        return err;
      };
      const double err_full = series_err(1.0);
      const double err_half = series_err(0.5);
      worst_c = std::max(worst_c, err_full / (wt * wt * wt));
      const double ratio = err_full / err_half;
      worst_ratio_lo = std::min(worst_ratio_lo, ratio);
      worst_ratio_hi = std::max(worst_ratio_hi, ratio);
    }
    add("series-truncation-bound", worst_c <= series_error_constant,
        "max err/(omega tau)^3 = " + fmt(worst_c) + " (bound " + fmt(series_error_constant) + ")");
    add("series-cubic-shrinkage", worst_ratio_lo >= 6 && worst_ratio_hi <= 10,
        "halving ratios in [" + fmt(worst_ratio_lo) + ", " + fmt(worst_ratio_hi) + "]");
  }
  {
    double worst = 0;
    for (int t = 0; t < trials; ++t) {
      const auto p = detail::random_ge_like_params(rng);
      const double h = detail::h_for_omega_tau(p, 0.05 + 0.45 * u(rng));
      const FieldPoint<double> f{(0.1 + u(rng)) * q, h * q};
      const FieldPoint<double> f2{f.E, 2 * f.H};
      const double r1 = delta_j2_numeric<double>(f, valleys, p);
      const double r2 = delta_j2_numeric<double>(f2, valleys, p);
      worst = std::max(worst, std::abs(r2 / r1 - 4.0));
    }
    add("quadratic-h-scaling", worst < 1e-8, "max |ratio(2H)/ratio(H) - 4| = " + fmt(worst));
  }
  {
    double worst = 0;
    for (int t = 0; t < trials / 4; ++t) {
      const auto p = detail::random_ge_like_params(rng);
      const double h = detail::h_for_omega_tau(p, 0.05 + 0.45 * u(rng));
      const FieldPoint<double> f{(0.1 + u(rng)) * q, h * q};
      const auto base = magnetoresistance_ratio<double>(f, valleys, p);
      const double angle = 6.283185307179586 * u(rng);
      std::array<ValleyFrame<double>, 4> rotated = valleys;
      for (auto& frame : rotated) {
        const Vec3d t1 = std::cos(angle) * frame.t1 + std::sin(angle) * frame.t2;
        const Vec3d t2 = frame.axis.cross(t1);
        frame.t1 = t1;
        frame.t2 = t2;
      }
      const auto rot = magnetoresistance_ratio<double>(f, rotated, p);
      worst = std::max(worst, std::abs(rot.ratio - base.ratio) /
                                  std::max(std::abs(base.ratio), 1e-300));
      for (std::size_t k = 0; k < 4; ++k) {
        const auto ua = drift_exact(f, valleys[k], p);
        const auto ub = drift_exact(f, rotated[k], p);
        worst = std::max(worst, (ua - ub).norm() / ua.norm());
      }
    }
    add("transverse-frame-invariance", worst < 1e-10, "max rel change = " + fmt(worst));
  }
  {
    bool pass = true;
    for (int t = 0; t < trials; ++t) {
      const auto p = detail::random_ge_like_params(rng);
      const double h = detail::h_for_omega_tau(p, u(rng));
      const FieldPoint<double> f{(0.1 + u(rng)) * q, h * q};
      if (magnetoresistance_ratio<double>(f, valleys, p).ratio > 0) pass = false;
    }
    MaterialParams<double> iso{1e-28, 1e-28, 1e-11, 1e-11, 1e14, 4};
    const FieldPoint<double> f{0.5 * q, 300.0 * q};
    if (delta_j2_numeric<double>(f, valleys, iso) != 0.0) pass = false;
    add("negative-sign-and-isotropic-zero", pass, "ratio <= 0 on all draws; isotropic dj2 == 0");
  }
  {
    const auto& table = ge_default_table();
    bool pass = true;
    for (const auto& row : table.rows)
      if (interpolate_concentration(table, row.voltage) != row.concentration) pass = false;
    add("interpolation-node-exactness", pass, "all table nodes exact");
  }
  return out;
}

}  // namespace vmr

#endif  // VMR_VALIDATE_HPP
