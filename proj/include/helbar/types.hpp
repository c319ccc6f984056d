#pragma once

#include <Eigen/Dense>
#include <complex>

namespace helbar {

using complexd = std::complex<double>;

using Vec4 = Eigen::Vector4cd;
using Mat4 = Eigen::Matrix4cd;
using Vec8 = Eigen::Vector<complexd, 8>;
using Mat8 = Eigen::Matrix<complexd, 8, 8>;

}  // namespace helbar
