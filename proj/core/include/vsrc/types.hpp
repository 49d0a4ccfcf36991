#pragma once

#include <complex>
#include <numbers>

#include <Eigen/Core>

namespace vsrc {

using Complex = std::complex<double>;
using Point = Eigen::Vector2d;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

}  // namespace vsrc
