#ifndef VMR_CURRENT_HPP
#define VMR_CURRENT_HPP

#include <cmath>
#include <span>

#include "vmr/drift.hpp"
#include "vmr/error.hpp"
#include "vmr/types.hpp"
#include "vmr/units.hpp"
#include "vmr/valley.hpp"

namespace vmr {

/// Aggregate longitudinal-magnetoresistance result for one field point.
/// Currents in statamp/cm^2; the three ratio fields agree to machine
/// precision for valid inputs (the numeric valley sum is the reference,
/// the analytic forms are its closed-form equivalents).
template <class Scalar = double>
struct CurrentReport {
  Scalar j0 = Scalar(0);                   ///< baseline current along the symmetric axis
  Vec3<Scalar> j1_total = Vec3<Scalar>::Zero();  ///< summed first-order (Hall) current
  Scalar dj2 = Scalar(0);                  ///< quadratic-in-H longitudinal addition (signed)
  Scalar ratio = Scalar(0);                ///< dj2 / j0 from the valley sum
  Scalar ratio_analytic = Scalar(0);       ///< closed-form ratio
  Scalar ratio_simplified = Scalar(0);     ///< large-anisotropy limit -(omega tau)^2 / 3
};

namespace detail {

/// Relative alignment tolerance for the longitudinal-configuration check.
inline constexpr double alignment_tol = 1e-10;

/// Verifies E || H || symmetric axis (either sign, zero vectors allowed)
/// and returns the symmetric axis.  The quadratic-response formulas hold
/// only in this configuration, so misaligned fields are rejected rather
/// than projected.
template <class Scalar>
Vec3<Scalar> require_longitudinal(const FieldPoint<Scalar>& fields,
                                  std::span<const ValleyFrame<Scalar>> valleys) {
  const Vec3<Scalar> q = symmetric_axis(valleys);
  const Scalar tol = Scalar(alignment_tol);
  if ((fields.E - fields.E.dot(q) * q).norm() > tol * fields.E.norm())
    throw InvalidInput("misaligned fields: E must lie along the symmetric valley axis");
  if ((fields.H - fields.H.dot(q) * q).norm() > tol * fields.H.norm())
    throw InvalidInput("misaligned fields: H must lie along the symmetric valley axis");
  return q;
}

}  // namespace detail

/// Current density carried by one valley's electrons, e (n/n_valleys) u.
/// Magnitude-level sign convention: e is the positive elementary charge.
template <class Scalar, class Derived>
Vec3<Scalar> valley_current(const Eigen::MatrixBase<Derived>& u, const MaterialParams<Scalar>& params,
                            const PhysConstants<Scalar>& consts = {}) {
  return consts.e_charge * (params.n_total / Scalar(params.n_valleys)) * u.derived();
}

/// Zero-field current density along the symmetric axis for a field of
/// magnitude e_mag (statvolt/cm):
///   J0 = (e^2 n / 3) (tau_par/m_par + 2 tau_perp/m_perp) E.
/// Equals the symmetric-axis projection of the summed per-valley
/// zero-order currents of the fourfold <111> set.
template <class Scalar>
Scalar baseline_current(Scalar e_mag, const MaterialParams<Scalar>& params,
                        const PhysConstants<Scalar>& consts = {}) {
  if (!std::isfinite(e_mag) || e_mag < Scalar(0))
    throw InvalidInput("baseline_current: E magnitude must be finite and >= 0");
  const Scalar b_perp = params.tau_perp / params.m_perp;
  const Scalar b_par = params.tau_par / params.m_par;
  const Scalar e = consts.e_charge;
  return e * e * params.n_total / Scalar(3) * (b_par + Scalar(2) * b_perp) * e_mag;
}

/// Sum of the first-order (Hall) currents over the valley set.  For the
/// longitudinal symmetric configuration the four contributions cancel
/// exactly; a single valley's contribution is nonzero.
template <class Scalar>
Vec3<Scalar> hall_sum(const FieldPoint<Scalar>& fields, std::span<const ValleyFrame<Scalar>> valleys,
                      const MaterialParams<Scalar>& params, const PhysConstants<Scalar>& consts = {}) {
  Vec3<Scalar> sum = Vec3<Scalar>::Zero();
  for (const auto& frame : valleys)
    sum += valley_current(drift_first_order(fields, frame, params, consts), params, consts);
  return sum;
}

/// Quadratic-in-H longitudinal current addition (statamp/cm^2, signed):
/// the symmetric-axis projection of the summed per-valley second-order
/// currents.  Negative for anisotropic physical parameters, zero for
/// isotropic ones.  Requires E || H || symmetric axis.
template <class Scalar>
Scalar delta_j2_numeric(const FieldPoint<Scalar>& fields, std::span<const ValleyFrame<Scalar>> valleys,
                        const MaterialParams<Scalar>& params, const PhysConstants<Scalar>& consts = {}) {
  const Vec3<Scalar> q = detail::require_longitudinal(fields, valleys);
  Scalar sum = Scalar(0);
  for (const auto& frame : valleys)
    sum += q.dot(valley_current(drift_second_order(fields, frame, params, consts), params, consts));
  return sum;
}

/// Closed-form ratio dJ2/J0 of the fourfold <111> set with collinear
/// fields along the symmetric axis:
///   -(2/3) (e^2 tau_perp / (m_perp c^2))
///          (tau_par/m_par - tau_perp/m_perp)^2 H^2
///          / (tau_par/m_par + 2 tau_perp/m_perp).
/// The leading coefficient is pinned by the numeric valley sum and
/// confirmed against the H^2 coefficient of the direct solve.
template <class Scalar>
Scalar delta_j2_analytic(const MaterialParams<Scalar>& params, Scalar h_oe,
                         const PhysConstants<Scalar>& consts = {}) {
  if (!std::isfinite(h_oe) || h_oe < Scalar(0))
    throw InvalidInput("delta_j2_analytic: H magnitude must be finite and >= 0");
  const Scalar b_perp = params.tau_perp / params.m_perp;
  const Scalar b_par = params.tau_par / params.m_par;
  const Scalar d = b_par - b_perp;
  const Scalar e = consts.e_charge;
  const Scalar c2 = consts.c_light * consts.c_light;
  return -Scalar(2) / Scalar(3) * (e * e * params.tau_perp / (params.m_perp * c2)) * d * d * h_oe *
         h_oe / (b_par + Scalar(2) * b_perp);
}

/// Large-anisotropy limit (m_perp << m_par, tau_perp ~ tau_par) of
/// delta_j2_analytic:
///   -(1/3) (e^2 tau_perp^2 / (m_perp^2 c^2)) H^2 = -(omega tau)^2 / 3.
template <class Scalar>
Scalar delta_j2_simplified(const MaterialParams<Scalar>& params, Scalar h_oe,
                           const PhysConstants<Scalar>& consts = {}) {
  const Scalar wt = dimensionless_hall_parameter(params, h_oe, consts);
  return -wt * wt / Scalar(3);
}

/// Validates the invariants every well-formed report satisfies: dj2 <= 0
/// (up to rounding) and Hall cancellation in the longitudinal setup.
template <class Scalar>
void validate(const CurrentReport<Scalar>& report) {
  const Scalar slack = Scalar(1e-12) * std::abs(report.j0);
  if (report.dj2 > slack)
    throw InvariantViolation("current report: dj2 must be <= 0 for physical parameters");
  if (report.j1_total.norm() > Scalar(1e-10) * std::abs(report.j0))
    throw InvariantViolation("current report: Hall currents failed to cancel");
}

/// Full longitudinal-magnetoresistance report for one field point: the
/// numeric valley sums plus both closed forms.  Requires the symmetric
/// longitudinal configuration.
template <class Scalar>
CurrentReport<Scalar> magnetoresistance_ratio(const FieldPoint<Scalar>& fields,
                                              std::span<const ValleyFrame<Scalar>> valleys,
                                              const MaterialParams<Scalar>& params,
                                              const PhysConstants<Scalar>& consts = {}) {
  validate(params);
  validate(fields);
  detail::require_longitudinal(fields, valleys);
  CurrentReport<Scalar> report;
  report.j0 = baseline_current(Scalar(fields.E.norm()), params, consts);
  report.j1_total = hall_sum(fields, valleys, params, consts);
  report.dj2 = delta_j2_numeric(fields, valleys, params, consts);
  report.ratio = report.j0 == Scalar(0) ? Scalar(0) : report.dj2 / report.j0;
  const Scalar h_mag = fields.H.norm();
  report.ratio_analytic = delta_j2_analytic(params, h_mag, consts);
  report.ratio_simplified = delta_j2_simplified(params, h_mag, consts);
  validate(report);
  return report;
}

}  // namespace vmr

#endif  // VMR_CURRENT_HPP
