#ifndef VMR_TYPES_HPP
#define VMR_TYPES_HPP

#include <Eigen/Dense>

namespace vmr {

template <class Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;

template <class Scalar>
using Mat3 = Eigen::Matrix<Scalar, 3, 3>;

using Vec3d = Vec3<double>;
using Mat3d = Mat3<double>;

}  // namespace vmr

#endif  // VMR_TYPES_HPP
