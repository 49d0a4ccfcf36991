#pragma once

/// \file vsrc/operator.hpp
/// \brief Discrete virtual-source operator
///
///   (A v)_m = sum_n alpha_n (1 - h kappa_n) [K_D(x_m, z_n) v_n - K_S(x_m, z_n) (Lambda v)_n]
///
/// with collocation points x_m = y_m, sources z_n = y_n - h nu_n, and the
/// preconditioned operator B A with B = I - h Lambda_osrc.

#include <memory>
#include <vector>

#include "vsrc/geometry.hpp"
#include "vsrc/linalg.hpp"
#include "vsrc/osrc.hpp"
#include "vsrc/types.hpp"

namespace vsrc {

enum class DtnMode {
  Osrc,         ///< rotated Pade OSRC approximation
  ExactCircle,  ///< exact modal DtN of a circle; verification only
};

enum class OperatorKind { A, BA };

struct OperatorOptions {
  int pade_terms = osrc::kDefaultPadeTerms;
  double pade_angle = osrc::kDefaultPadeAngle;
  double damping = 0.0;
  /// Precompute the N x N kernel matrices. Without caching every apply
  /// re-evaluates the kernels (O(N) memory).
  bool cache_kernels = true;
};

class VirtualSourceOperator {
 public:
  /// Throws std::invalid_argument if mesh.h <= 0: the kernels are singular on the curve.
  explicit VirtualSourceOperator(Mesh mesh, const OperatorOptions& options = {});

  std::size_t size() const { return mesh_.size(); }
  const Mesh& mesh() const { return mesh_; }
  double h() const { return mesh_.h; }
  double wavenumber() const { return mesh_.k; }
  DtnMode dtn_mode() const { return mode_; }
  const osrc::OsrcOperator& osrc() const { return *osrc_; }

  /// alpha_n (1 - h kappa_n).
  const RVector& source_weights() const { return weights_; }

  /// Lambda v for the active DtN mode.
  CVector apply_dtn(const CVector& v) const;
  CVector apply_A(const CVector& v) const;
  /// B v = v - h Lambda_osrc v. Always uses the OSRC operator.
  CVector apply_B(const CVector& v) const;
  CVector apply_BA(const CVector& v) const;
  CVector apply(OperatorKind which, const CVector& v) const;

  /// Field of the density v at exterior points. Throws std::invalid_argument if
  /// a target is not strictly outside the boundary.
  CVector evaluate_field(const CVector& v, const std::vector<Point>& targets) const;

  /// Dense matrix of A or BA. Throws std::invalid_argument above linalg::kMaxDenseSize.
  CMatrix assemble_dense(OperatorKind which) const;

  /// Copy with a different DtN map. ExactCircle requires a circle mesh of the
  /// given radius (radius <= 0 takes the curve's own); otherwise throws
  /// std::invalid_argument.
  VirtualSourceOperator swap_dtn(DtnMode mode, double radius = 0.0) const;

  /// Matrix-free view for Krylov solvers; the operator must outlive the map.
  linalg::FunctionMap as_map(OperatorKind which) const;

 private:
  CVector kernel_sum(const CVector& v, const CVector& dtn_v,
                     const std::vector<Point>& targets) const;
  CVector exact_circle_dtn(const CVector& v) const;

  Mesh mesh_;
  OperatorOptions options_;
  std::shared_ptr<const osrc::OsrcOperator> osrc_;
  RVector weights_;
  // Weighted kernel matrices at the collocation nodes, shared between copies.
  std::shared_ptr<const CMatrix> single_;
  std::shared_ptr<const CMatrix> double_;

  DtnMode mode_ = DtnMode::Osrc;
  // First row of the circulant exact DtN matrix on a uniform circle mesh.
  std::vector<Complex> circle_row_;
};

}  // namespace vsrc
