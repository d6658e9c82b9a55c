#ifndef VMR_UNITS_HPP
#define VMR_UNITS_HPP

#include <cmath>
#include <string>

#include "vmr/error.hpp"
#include "vmr/types.hpp"

namespace vmr {

/// 1 statvolt/cm expressed in V/cm.
inline constexpr double volts_per_statvolt = 299.792458;

/// Physical constants in Gaussian CGS units.  Compiled in: every formula
/// in the library assumes exactly these values, so they are not exposed
/// through the configuration surface.
template <class Scalar = double>
struct PhysConstants {
  Scalar e_charge = Scalar(4.8032e-10);  ///< elementary charge (esu)
  Scalar c_light = Scalar(2.9979e10);    ///< speed of light (cm/s)
};

/// Effective-mass and relaxation-time data of an equivalent-valley
/// conduction band, plus the total carrier concentration shared by all
/// valleys.  Gaussian CGS throughout (g, s, cm^-3).
template <class Scalar = double>
struct MaterialParams {
  Scalar m_perp;    ///< transverse effective mass (g)
  Scalar m_par;     ///< longitudinal effective mass (g)
  Scalar tau_perp;  ///< transverse relaxation time (s)
  Scalar tau_par;   ///< longitudinal relaxation time (s)
  Scalar n_total;   ///< total electron concentration over all valleys (cm^-3)
  int n_valleys = 4;
};

/// Applied fields at one operating point, lab frame.  E in statvolt/cm,
/// H in Oe (numerically interchangeable with Gs for the applied field in
/// a non-magnetic sample).
template <class Scalar = double>
struct FieldPoint {
  Vec3<Scalar> E;
  Vec3<Scalar> H;
};

template <class Scalar>
void validate(const MaterialParams<Scalar>& p) {
  auto positive = [](Scalar v) { return std::isfinite(v) && v > Scalar(0); };
  if (!positive(p.m_perp) || !positive(p.m_par))
    throw InvalidInput("material parameters: effective masses must be finite and > 0");
  if (!positive(p.tau_perp) || !positive(p.tau_par))
    throw InvalidInput("material parameters: relaxation times must be finite and > 0");
  if (!std::isfinite(p.n_total) || p.n_total < Scalar(0))
    throw InvalidInput("material parameters: n_total must be finite and >= 0");
  if (p.n_valleys < 1)
    throw InvalidInput("material parameters: n_valleys must be >= 1");
}

template <class Scalar>
void validate(const FieldPoint<Scalar>& f) {
  if (!f.E.allFinite() || !f.H.allFinite())
    throw InvalidInput("field point: E and H components must all be finite");
}

/// Converts an electric-field magnitude from V/cm to statvolt/cm.
template <class Scalar>
Scalar volts_per_cm_to_statvolt(Scalar e_practical) {
  if (!std::isfinite(e_practical))
    throw InvalidInput("volts_per_cm_to_statvolt: non-finite input");
  return e_practical / Scalar(volts_per_statvolt);
}

/// Converts an electric-field magnitude from statvolt/cm to V/cm.
template <class Scalar>
Scalar statvolt_to_volts_per_cm(Scalar e_gaussian) {
  if (!std::isfinite(e_gaussian))
    throw InvalidInput("statvolt_to_volts_per_cm: non-finite input");
  return e_gaussian * Scalar(volts_per_statvolt);
}

/// Hall parameter of the transverse channel, omega*tau = e H tau_perp /
/// (m_perp c).  This is the expansion parameter of the weak-field drift
/// series; values approaching 1 mean the truncated series is unreliable
/// even though the direct solve stays valid.
template <class Scalar>
Scalar dimensionless_hall_parameter(const MaterialParams<Scalar>& params, Scalar h_oe,
                                    const PhysConstants<Scalar>& consts = {}) {
  if (!std::isfinite(h_oe) || h_oe < Scalar(0))
    throw InvalidInput("dimensionless_hall_parameter: H magnitude must be finite and >= 0");
  return consts.e_charge * h_oe * params.tau_perp / (params.m_perp * consts.c_light);
}

}  // namespace vmr

#endif  // VMR_UNITS_HPP
