#pragma once

/// \file vsrc/osrc.hpp
/// \brief On-surface radiation condition: Lambda_osrc = ik P_{M,theta}(Delta_Gamma / k^2),
///        with a rotated-branch Pade approximant of sqrt(1 + z) and the surface
///        Laplacian realized by periodic piecewise-linear finite elements.

#include <vector>

#include "vsrc/geometry.hpp"
#include "vsrc/linalg.hpp"
#include "vsrc/types.hpp"

namespace vsrc::osrc {

inline constexpr int kDefaultPadeTerms = 4;
inline constexpr double kDefaultPadeAngle = kPi / 2.0;

/// P(z) = a0 + sum_m a[m] / (z - b[m]).
///
/// The real base coefficients (angle 0) are always kept; the complex ones are
/// the rotated set, equal to the base set when angle == 0.
struct PadeCoefficients {
  int terms = 0;
  double angle = 0.0;

  double base_a0 = 0.0;
  std::vector<double> base_a;
  std::vector<double> base_b;

  Complex a0;
  std::vector<Complex> a;
  std::vector<Complex> b;

  Complex evaluate(Complex z) const;
};

/// [M/M] Pade approximant of sqrt(1 + z) about 0 in partial fractions, 1 <= M <= 16.
PadeCoefficients pade_base_coefficients(int terms);

/// Branch-cut rotation by theta:
///   a0 -> a0 e^{i theta/2},  a_m -> a_m e^{3 i theta/2},  b_m -> (1 + b_m) e^{i theta} - 1.
/// Throws std::invalid_argument if base is already rotated.
PadeCoefficients rotate_pade(const PadeCoefficients& base, double theta);

/// Periodic P1 mass and stiffness matrices on the closed boundary, both real
/// symmetric cyclic tridiagonal. Entry i of the *_off arrays couples node i
/// with node i+1 (mod N).
struct PeriodicFem {
  RVector mass_diag;
  RVector mass_off;
  RVector stiff_diag;
  RVector stiff_off;

  std::size_t size() const { return static_cast<std::size_t>(mass_diag.size()); }
  CVector apply_mass(const CVector& v) const;
  CVector apply_stiffness(const CVector& v) const;
  /// alpha K + beta M as a cyclic tridiagonal system.
  linalg::CyclicTridiagonal combine(Complex alpha, Complex beta) const;
};

/// Assembles from mesh.element_lengths. Requires N >= 3; throws
/// std::invalid_argument on an element shorter than 1e-12.
PeriodicFem build_periodic_fem(const Mesh& mesh);

/// Lambda_osrc for a fixed mesh, Pade set and wavenumber. Immutable; apply() is reentrant.
class OsrcOperator {
 public:
  /// damping eps gives k_eps = k + i eps k^{1/3} inside the Laplacian scaling.
  OsrcOperator(PeriodicFem fem, PadeCoefficients pade, double k, double damping = 0.0);

  /// ik (a0 v + sum_m a_m w_m), (-(1/k_eps^2) K - b_m M) w_m = M v.
  CVector apply(const CVector& v) const;
  /// v - h Lambda_osrc v.
  CVector apply_preconditioner(const CVector& v, double h) const;
  /// Dense N x N matrix of apply(); column j is the image of e_j.
  CMatrix dense() const;

  std::size_t size() const { return fem_.size(); }
  double wavenumber() const { return k_; }
  const PadeCoefficients& pade() const { return pade_; }
  const PeriodicFem& fem() const { return fem_; }

 private:
  PeriodicFem fem_;
  PadeCoefficients pade_;
  double k_;
  Complex k_eps_;
  std::vector<linalg::CyclicTridiagonal> resolvents_;
};

CVector apply_osrc(const PeriodicFem& fem, const PadeCoefficients& pade, double k,
                   const CVector& v);
CVector apply_preconditioner(const PeriodicFem& fem, const PadeCoefficients& pade, double k,
                             double h, const CVector& v);

}  // namespace vsrc::osrc
