#ifndef VMR_SWEEP_HPP
#define VMR_SWEEP_HPP

#include <cmath>
#include <string>
#include <vector>

#include "vmr/current.hpp"
#include "vmr/error.hpp"
#include "vmr/table.hpp"
#include "vmr/units.hpp"
#include "vmr/valley.hpp"

namespace vmr {

/// Material defaults used by the CLI when neither a config file nor
/// flags say otherwise: n-Ge at helium temperature with m_par/m_perp =
/// 20, tau_par = tau_perp, and the concentration of the strong-field
/// plateau of the bundled table.
inline MaterialParams<double> default_material_params() {
  return {0.7e-28, 20 * 0.7e-28, 1e-11, 1e-11, 2.3e14, 4};
}

/// Field grid and material for a magnetoresistance sweep or an I-V
/// reconstruction.  Practical input units (V/cm, Gs); conversion to
/// Gaussian units happens inside the drivers.
struct SweepSpec {
  std::vector<double> e_vpcm;     ///< electric-field magnitudes (V/cm)
  std::vector<double> h_gauss;    ///< magnetic-field magnitudes (Gs = Oe here)
  std::vector<double> voltages;   ///< sample voltages for iv; empty = table nodes
  double sample_length_cm = 0.7;  ///< converts V to V/cm in the iv driver
  MaterialParams<double> params = default_material_params();
};

struct SweepRow {
  double e_vpcm;
  double h_gauss;
  double j0;         ///< statamp/cm^2
  double dj2;        ///< statamp/cm^2, signed
  double ratio;      ///< dj2 / j0
  double omega_tau;  ///< series parameter at this H
  bool weak_field;   ///< omega_tau > 1
};

struct IvRow {
  double voltage;  ///< V across the sample
  double n;        ///< interpolated concentration (cm^-3)
  double j0;       ///< current at H = 0 (statamp/cm^2)
  double j_h;      ///< j0 + dj2 at the given H (statamp/cm^2)
  double ratio;    ///< dj2 / j0
  double h_gauss;
};

namespace detail {

/// Per-row re-validation: sign of the ratio and the quadratic H-law
/// (dj2 at 2H must be 4x dj2 at H).
template <class Scalar>
void revalidate_row(const FieldPoint<Scalar>& fields, std::span<const ValleyFrame<Scalar>> valleys,
                    const MaterialParams<Scalar>& params, Scalar j0, Scalar dj2) {
  if (dj2 > Scalar(1e-12) * std::abs(j0))
    throw InvariantViolation("sweep row: dj2 must be <= 0 for physical parameters");
  FieldPoint<Scalar> doubled{fields.E, 2 * fields.H};
  const Scalar dj2_doubled = delta_j2_numeric(doubled, valleys, params);
  if (std::abs(dj2_doubled - 4 * dj2) > Scalar(1e-8) * std::abs(4 * dj2))
    throw InvariantViolation("sweep row: quadratic H-scaling spot check failed");
}

}  // namespace detail

/// Evaluates the longitudinal configuration over the (E, H) grid; one
/// row per pair, E outermost, in the order given by the spec.
inline std::vector<SweepRow> sweep_magnetoresistance(const SweepSpec& spec) {
  validate(spec.params);
  if (spec.e_vpcm.empty() || spec.h_gauss.empty())
    throw InvalidInput("sweep: E and H lists must be non-empty");
  for (double e : spec.e_vpcm)
    if (!std::isfinite(e) || e < 0) throw InvalidInput("sweep: E magnitudes must be >= 0");
  for (double h : spec.h_gauss)
    if (!std::isfinite(h) || h < 0) throw InvalidInput("sweep: H magnitudes must be >= 0");

  const auto valleys = standard_ge_valleys<double>();
  const Vec3d q = symmetric_axis(valleys);
  std::vector<SweepRow> rows;
  rows.reserve(spec.e_vpcm.size() * spec.h_gauss.size());
  for (double e_practical : spec.e_vpcm) {
    const double e_stat = volts_per_cm_to_statvolt(e_practical);
    for (double h : spec.h_gauss) {
      const FieldPoint<double> fields{e_stat * q, h * q};
      const auto report = magnetoresistance_ratio<double>(fields, valleys, spec.params);
      detail::revalidate_row<double>(fields, valleys, spec.params, report.j0, report.dj2);
      const double wt = dimensionless_hall_parameter(spec.params, h);
      rows.push_back({e_practical, h, report.j0, report.dj2, report.ratio, wt, wt > 1});
    }
  }
  return rows;
}

/// Reconstructs current-voltage rows by feeding the measured n(V) into
/// the baseline current and the quadratic addition.  The low-field
/// resistance jump of the underlying experiment is carried entirely by
/// the measured n(V) input; impurity-band conduction and breakdown are
/// not modeled here.
inline std::vector<IvRow> reconstruct_iv(const ConcentrationTable& table, const SweepSpec& spec) {
  validate(spec.params);
  if (spec.h_gauss.empty()) throw InvalidInput("iv: H list must be non-empty");
  if (!(spec.sample_length_cm > 0) || !std::isfinite(spec.sample_length_cm))
    throw InvalidInput("iv: sample length must be finite and > 0");
  std::vector<double> voltages = spec.voltages;
  if (voltages.empty())
    for (const auto& row : table.rows) voltages.push_back(row.voltage);

  const auto valleys = standard_ge_valleys<double>();
  const Vec3d q = symmetric_axis(valleys);
  std::vector<IvRow> rows;
  rows.reserve(voltages.size() * spec.h_gauss.size());
  for (double v : voltages) {
    const double n = interpolate_concentration(table, v);
    MaterialParams<double> params = spec.params;
    params.n_total = n;
    const double e_stat = volts_per_cm_to_statvolt(v / spec.sample_length_cm);
    for (double h : spec.h_gauss) {
      const FieldPoint<double> fields{e_stat * q, h * q};
      const auto report = magnetoresistance_ratio<double>(fields, valleys, params);
      detail::revalidate_row<double>(fields, valleys, params, report.j0, report.dj2);
      rows.push_back({v, n, report.j0, report.j0 + report.dj2, report.ratio, h});
    }
  }
  return rows;
}

}  // namespace vmr

#endif  // VMR_SWEEP_HPP
