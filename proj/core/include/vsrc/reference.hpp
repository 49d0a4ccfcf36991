#pragma once

/// \file vsrc/reference.hpp
/// \brief Closed-form exterior Helmholtz solutions used as ground truth.

#include <array>

#include "vsrc/types.hpp"

namespace vsrc::reference {

/// The four interior point sources of the manufactured field.
inline const std::array<Point, 4> kManufacturedSources = {
    Point(0.75, -0.5), Point(0.75, 0.5), Point(-0.75, 0.5), Point(-0.75, -0.5)};

/// F(x) = sum_j Phi(x, y_j) over kManufacturedSources. Throws std::domain_error
/// when x coincides with a source.
Complex manufactured_field(double k, const Point& x);

struct MieValue {
  Complex scattered;
  Complex total;
  int terms = 0;         ///< highest order used
  double tail_bound = 0.0;  ///< magnitude of the last series term
};

/// Plane wave e^{ikx} scattered by a sound-soft circle of radius R at the origin:
///   u_sc = -sum_{n>=0} eps_n i^n J_n(kR)/H_n(kR) H_n(kr) cos(n theta),
/// truncated at n_max = ceil(kR) + 40. Throws std::invalid_argument for |x| < R
/// and std::runtime_error if the terms are still growing at the cutoff.
MieValue mie_soft_circle(double k, double radius, const Point& x);

/// Jacobi-Anger partial sum of e^{ikr cos(theta)} up to order n_max.
Complex jacobi_anger(double k, const Point& x, int n_max);

/// Eigenvalue of the circle virtual-source operator with the exact DtN map,
/// H_|n|(ka) / H_|n|(k(a-h)). Requires 0 < h < a.
Complex circle_virtual_source_eigenvalue(double k, double a, double h, int n);

/// Eigenvalue of the continuous operator A on the circle when the exact DtN map
/// of the radius-a circle is used and the sources sit on radius b = a - h:
///   (i pi k b / 2) [J_n'(kb) H_n(ka) - J_n(kb) H_n'(ka)].
/// Equals 1 at h = 0 (Wronskian) and agrees with
/// circle_virtual_source_eigenvalue() only asymptotically in |n|.
Complex circle_operator_eigenvalue(double k, double a, double h, int n);

/// Exact DtN eigenvalue of the circle, k H_|n|'(ka) / H_|n|(ka). Valid for any
/// |n|: the Hankel ratio is carried by forward recurrence so it never overflows.
Complex circle_exact_dtn_eigenvalue(double k, double a, int n);

}  // namespace vsrc::reference
