#ifndef VMR_VALLEY_HPP
#define VMR_VALLEY_HPP

#include <array>
#include <cmath>
#include <span>

#include "vmr/error.hpp"
#include "vmr/types.hpp"

namespace vmr {

/// Right-handed orthonormal frame of one conduction-band valley:
/// `axis` points along the valley's longitudinal (heavy-mass) direction,
/// `t1`/`t2` span the isotropic transverse plane, and t1 x t2 = axis.
template <class Scalar = double>
struct ValleyFrame {
  Vec3<Scalar> axis;
  Vec3<Scalar> t1;
  Vec3<Scalar> t2;
  int valley_index = 1;
};

/// Largest deviation of the frame from a right-handed orthonormal triad
/// (pairwise dot products, unit norms, handedness residual).
template <class Scalar>
Scalar frame_orthonormality_error(const ValleyFrame<Scalar>& f) {
  using std::abs;
  Scalar err = abs(f.t1.dot(f.t2));
  err = std::max(err, abs(f.t1.dot(f.axis)));
  err = std::max(err, abs(f.t2.dot(f.axis)));
  err = std::max(err, abs(f.t1.norm() - Scalar(1)));
  err = std::max(err, abs(f.t2.norm() - Scalar(1)));
  err = std::max(err, abs(f.axis.norm() - Scalar(1)));
  err = std::max(err, Scalar((f.t1.cross(f.t2) - f.axis).norm()));
  return err;
}

/// Builds a valley frame around `axis` by Gram-Schmidt against a fixed
/// seed vector: (0,0,1), or (1,0,0) when the axis is (anti)parallel to
/// it.  The transverse pair is a convention only; all physical results
/// are invariant under its rotation about the axis.
template <class Derived>
ValleyFrame<typename Derived::Scalar> make_valley_frame(const Eigen::MatrixBase<Derived>& axis,
                                                        int valley_index = 1) {
  using Scalar = typename Derived::Scalar;
  const Vec3<Scalar> a = axis.normalized();
  if (!a.allFinite()) throw InvalidInput("make_valley_frame: axis must be a nonzero finite vector");
  Vec3<Scalar> seed = Vec3<Scalar>::UnitZ();
  if (std::abs(a.dot(seed)) > Scalar(1) - Scalar(1e-6)) seed = Vec3<Scalar>::UnitX();
  const Vec3<Scalar> t1 = (seed - a.dot(seed) * a).normalized();
  const Vec3<Scalar> t2 = a.cross(t1);
  return ValleyFrame<Scalar>{a, t1, t2, valley_index};
}

/// The four <111>-family valley orientations of n-Ge, all with the same
/// positive component along the symmetric axis, written internally as
/// the third coordinate:
///   (1,1,1)/sqrt3, (-1,1,1)/sqrt3, (1,-1,1)/sqrt3, (-1,-1,1)/sqrt3.
template <class Scalar = double>
std::array<ValleyFrame<Scalar>, 4> standard_ge_valleys() {
  const Scalar s = Scalar(1) / std::sqrt(Scalar(3));
  const std::array<Vec3<Scalar>, 4> axes = {
      Vec3<Scalar>(s, s, s),
      Vec3<Scalar>(-s, s, s),
      Vec3<Scalar>(s, -s, s),
      Vec3<Scalar>(-s, -s, s),
  };
  std::array<ValleyFrame<Scalar>, 4> frames;
  for (int i = 0; i < 4; ++i) frames[i] = make_valley_frame(axes[i], i + 1);
  return frames;
}

/// Components of a lab-frame vector along (t1, t2, axis).
template <class Scalar, class Derived>
Vec3<Scalar> to_valley_frame(const Eigen::MatrixBase<Derived>& v, const ValleyFrame<Scalar>& frame) {
  return Vec3<Scalar>(frame.t1.dot(v), frame.t2.dot(v), frame.axis.dot(v));
}

/// Inverse of to_valley_frame.
template <class Scalar, class Derived>
Vec3<Scalar> from_valley_frame(const Eigen::MatrixBase<Derived>& v, const ValleyFrame<Scalar>& frame) {
  return v(0) * frame.t1 + v(1) * frame.t2 + v(2) * frame.axis;
}

/// Unit vector of the direction symmetric with respect to the valley
/// set (normalized mean of the axes).  For standard_ge_valleys this is
/// exactly (0,0,1).
template <class Scalar>
Vec3<Scalar> symmetric_axis(std::span<const ValleyFrame<Scalar>> valleys) {
  if (valleys.empty()) throw InvalidInput("symmetric_axis: empty valley set");
  Vec3<Scalar> sum = Vec3<Scalar>::Zero();
  for (const auto& f : valleys) sum += f.axis;
  const Scalar norm = sum.norm();
  if (!(norm > Scalar(1e-12) * Scalar(valleys.size())))
    throw InvalidInput("symmetric_axis: valley axes have no common direction");
  return sum / norm;
}

template <class Scalar, std::size_t N>
Vec3<Scalar> symmetric_axis(const std::array<ValleyFrame<Scalar>, N>& valleys) {
  return symmetric_axis(std::span<const ValleyFrame<Scalar>>(valleys));
}

}  // namespace vmr

#endif  // VMR_VALLEY_HPP
