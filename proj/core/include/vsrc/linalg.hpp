#pragma once

/// \file vsrc/linalg.hpp
/// \brief Matrix-free GMRES, periodic tridiagonal solves and dense spectra.

#include <cstddef>
#include <functional>
#include <vector>

#include "vsrc/types.hpp"

namespace vsrc::linalg {

/// y = A x for a square complex operator that is never formed explicitly.
class LinearMap {
 public:
  virtual ~LinearMap() = default;
  virtual std::size_t size() const = 0;
  virtual void apply(const CVector& x, CVector& y) const = 0;

  CVector operator()(const CVector& x) const {
    CVector y(static_cast<Eigen::Index>(size()));
    apply(x, y);
    return y;
  }
};

/// Adapts a callable (const CVector&, CVector&) -> void.
class FunctionMap final : public LinearMap {
 public:
  using Fn = std::function<void(const CVector&, CVector&)>;
  FunctionMap(std::size_t n, Fn fn) : n_(n), fn_(std::move(fn)) {}
  std::size_t size() const override { return n_; }
  void apply(const CVector& x, CVector& y) const override { fn_(x, y); }

 private:
  std::size_t n_;
  Fn fn_;
};

/// Wraps a dense matrix (held by reference; it must outlive the map).
class DenseMap final : public LinearMap {
 public:
  explicit DenseMap(const CMatrix& a) : a_(a) {}
  std::size_t size() const override { return static_cast<std::size_t>(a_.rows()); }
  void apply(const CVector& x, CVector& y) const override { y.noalias() = a_ * x; }

 private:
  const CMatrix& a_;
};

struct GmresOptions {
  double tol = 1e-10;      ///< on ||b - Ax|| / ||b||
  int max_iter = 500;      ///< total Arnoldi steps over all cycles
  int restart = 0;         ///< Krylov dimension per cycle; 0 disables restarting
};

struct GmresReport {
  CVector solution;
  /// Relative residual before the first step and after every Arnoldi step.
  std::vector<double> residuals;
  int iterations = 0;
  bool converged = false;
  double tolerance = 0.0;
  /// ||b - A x|| / ||b|| recomputed from the returned solution.
  double true_residual = 0.0;

  /// First iteration whose estimated residual is <= tol, or -1.
  int iterations_to(double tol) const;
};

/// GMRES with modified Gram-Schmidt Arnoldi and Givens rotations, x0 = 0.
/// Throws std::invalid_argument for a zero right-hand side or a size mismatch.
/// A happy breakdown ends the solve as converged; hitting max_iter returns with
/// converged = false.
GmresReport gmres(const LinearMap& a, const CVector& rhs, const GmresOptions& options = {});

/// Square cyclic tridiagonal matrix: row i has lower[i] at column i-1, diag[i]
/// at i and upper[i] at i+1, all indices mod n. lower[0] and upper[n-1] are
/// the two corner entries.
struct CyclicTridiagonal {
  CVector lower;
  CVector diag;
  CVector upper;

  std::size_t size() const { return static_cast<std::size_t>(diag.size()); }
  CVector multiply(const CVector& x) const;
  CMatrix dense() const;
};

/// Direct solve via Sherman-Morrison reduction to two tridiagonal systems.
/// Throws std::runtime_error if a pivot falls below 1e-14 times the matrix scale.
CVector solve_cyclic_tridiagonal(const CyclicTridiagonal& a, const CVector& rhs);

inline constexpr Eigen::Index kMaxDenseSize = 4096;

/// All eigenvalues of a dense complex matrix (Hessenberg reduction followed by
/// shifted QR to complex Schur form). Throws std::invalid_argument above
/// kMaxDenseSize and std::runtime_error if QR fails to converge.
std::vector<Complex> eigenvalues_dense(const CMatrix& a);

/// max|lambda| / min|lambda| over the spectrum; +inf if some eigenvalue is zero.
/// Throws std::invalid_argument for an empty list.
double condition_number(const std::vector<Complex>& eigenvalues);

/// sigma_max / sigma_min. A diagnostic, distinct from condition_number().
double singular_value_condition_number(const CMatrix& a);

}  // namespace vsrc::linalg
