#pragma once

/// \file vsrc/specfun.hpp
/// \brief Integer-order Bessel functions J_n, Y_n and Hankel functions
///        H_n^{(1)} = J_n + iY_n for real positive arguments.
///
/// All routines are pure and thread-safe. Arguments must satisfy x > 0 and
/// 0 <= n <= kMaxOrder; violations throw std::domain_error. A result that
/// leaves the representable double range throws std::overflow_error.

#include <vector>

#include "vsrc/types.hpp"

namespace vsrc::specfun {

inline constexpr int kMaxOrder = 200;

struct BesselJY {
  double j = 0.0;
  double y = 0.0;
};

/// J_n(x) and Y_n(x).
BesselJY bessel_jy(int order, double x);

/// H_n^{(1)}(x) = J_n(x) + i Y_n(x).
Complex hankel1(int order, double x);

/// d/dx H_n^{(1)}(x) = H_{n-1}(x) - (n/x) H_n(x), with H_{-1} = -H_1.
Complex hankel1_derivative(int order, double x);

/// H_0^{(1)}(x) and H_1^{(1)}(x) in one pass; the kernel hot path.
struct Hankel01 {
  Complex h0;
  Complex h1;
};
Hankel01 hankel1_01(double x);

/// J_n(x), Y_n(x) for n = 0..max_order.
std::vector<BesselJY> bessel_jy_sequence(int max_order, double x);

}  // namespace vsrc::specfun
