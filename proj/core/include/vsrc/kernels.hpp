#pragma once

/// \file vsrc/kernels.hpp
/// \brief 2D Helmholtz fundamental solution Phi(x, z) = (i/4) H_0^{(1)}(k|x - z|)
///        and its derivative in the source point along a unit direction nu.
///
/// Both throw std::domain_error when |x - z| < kMinSeparation.

#include "vsrc/types.hpp"

namespace vsrc::kernels {

inline constexpr double kMinSeparation = 1e-14;

/// K_S: (i/4) H_0^{(1)}(k |x - z|).
Complex phi_2d(double k, const Point& x, const Point& z);

/// K_D: nu . grad_z Phi(x, z) = (ik/4) H_1^{(1)}(k r) nu.(x - z) / r, r = |x - z|.
Complex kernel_double(double k, const Point& x, const Point& z, const Point& nu);

struct KernelPair {
  Complex single;  ///< K_S
  Complex dbl;     ///< K_D
};

/// Both kernels sharing one Hankel evaluation.
KernelPair kernel_pair(double k, const Point& x, const Point& z, const Point& nu);

}  // namespace vsrc::kernels
