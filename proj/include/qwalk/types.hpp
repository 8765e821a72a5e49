#pragma once

#include <complex>
#include <numbers>

#include <Eigen/Dense>

namespace qwalk {

using Complex = std::complex<double>;

// Square complex matrix; used for coin matrices, full walk operators and
// channel/density matrices.
using DenseOperator = Eigen::MatrixXcd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

} // namespace qwalk
