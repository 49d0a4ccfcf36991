#include "vsrc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>

namespace vsrc::linalg {

int GmresReport::iterations_to(double tol) const {
  for (std::size_t i = 0; i < residuals.size(); ++i) {
    if (residuals[i] <= tol) return static_cast<int>(i);
  }
  return -1;
}

namespace {

// Givens rotation zeroing b in (a, b).
void make_rotation(const Complex& a, const Complex& b, double& c, Complex& s) {
  const double na = std::abs(a), nb = std::abs(b);
  if (nb == 0.0) {
    c = 1.0;
    s = 0.0;
    return;
  }
  if (na == 0.0) {
    c = 0.0;
    s = std::conj(b) / nb;
    return;
  }
  const double norm = std::hypot(na, nb);
  c = na / norm;
  s = (a / na) * std::conj(b) / norm;
}

}  // namespace

GmresReport gmres(const LinearMap& a, const CVector& rhs, const GmresOptions& options) {
  const Eigen::Index n = rhs.size();
  if (static_cast<std::size_t>(n) != a.size()) {
    throw std::invalid_argument("gmres: operator and right-hand side sizes differ");
  }
  const double bnorm = rhs.norm();
  if (!(bnorm > 0.0)) throw std::invalid_argument("gmres: right-hand side is zero");
  if (!(options.tol > 0.0)) throw std::invalid_argument("gmres: tolerance must be positive");

  GmresReport rep;
  rep.tolerance = options.tol;
  rep.solution = CVector::Zero(n);
  rep.residuals.push_back(1.0);

  const int m = options.restart > 0 ? std::min<int>(options.restart, static_cast<int>(n))
                                    : std::min<int>(options.max_iter, static_cast<int>(n));
  CMatrix v(n, m + 1);
  CMatrix h = CMatrix::Zero(m + 1, m);
  std::vector<double> cs(m);
  std::vector<Complex> sn(m);
  CVector g(m + 1);
  CVector r = rhs;
  CVector w(n);

  while (rep.iterations < options.max_iter && !rep.converged) {
    const double beta = r.norm();
    if (beta / bnorm <= options.tol) {
      rep.converged = true;
      break;
    }
    v.col(0) = r / beta;
    g.setZero();
    g(0) = beta;
    h.setZero();
    int j = 0;
    bool breakdown = false;
    for (; j < m && rep.iterations < options.max_iter; ++j) {
      a.apply(v.col(j), w);
      for (int i = 0; i <= j; ++i) {
        h(i, j) = v.col(i).dot(w);  // conjugates the left operand
        w.noalias() -= h(i, j) * v.col(i);
      }
      const double hnext = w.norm();
      h(j + 1, j) = hnext;
      for (int i = 0; i < j; ++i) {
        const Complex t = cs[i] * h(i, j) + sn[i] * h(i + 1, j);
        h(i + 1, j) = -std::conj(sn[i]) * h(i, j) + cs[i] * h(i + 1, j);
        h(i, j) = t;
      }
      make_rotation(h(j, j), h(j + 1, j), cs[j], sn[j]);
      h(j, j) = cs[j] * h(j, j) + sn[j] * h(j + 1, j);
      h(j + 1, j) = 0.0;
      g(j + 1) = -std::conj(sn[j]) * g(j);
      g(j) = cs[j] * g(j);
      ++rep.iterations;
      const double rel = std::abs(g(j + 1)) / bnorm;
      rep.residuals.push_back(rel);
      if (hnext <= 1e-14 * bnorm) breakdown = true;
      if (rel <= options.tol || breakdown) {
        ++j;
        break;
      }
      v.col(j + 1) = w / hnext;
    }
    // x += V_j y, with H_j y = g_j upper triangular
    CVector y = g.head(j);
    for (int i = j - 1; i >= 0; --i) {
      for (int l = i + 1; l < j; ++l) y(i) -= h(i, l) * y(l);
      y(i) /= h(i, i);
    }
    rep.solution.noalias() += v.leftCols(j) * y;
    a.apply(rep.solution, w);
    r = rhs - w;
    if (rep.residuals.back() <= options.tol || breakdown) rep.converged = true;
  }
  a.apply(rep.solution, w);
  rep.true_residual = (rhs - w).norm() / bnorm;
  return rep;
}

CVector CyclicTridiagonal::multiply(const CVector& x) const {
  const Eigen::Index n = diag.size();
  CVector y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    y(i) = diag(i) * x(i) + lower(i) * x((i + n - 1) % n) + upper(i) * x((i + 1) % n);
  }
  return y;
}

CMatrix CyclicTridiagonal::dense() const {
  const Eigen::Index n = diag.size();
  CMatrix a = CMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    a(i, i) += diag(i);
    a(i, (i + n - 1) % n) += lower(i);
    a(i, (i + 1) % n) += upper(i);
  }
  return a;
}

namespace {

// Thomas algorithm; sub(i) multiplies x(i-1), sup(i) multiplies x(i+1).
CVector solve_tridiagonal(const CVector& sub, const CVector& dia, const CVector& sup,
                          const CVector& rhs, double scale) {
  const Eigen::Index n = dia.size();
  CVector cprime(n), x(n);
  Complex piv = dia(0);
  if (std::abs(piv) < 1e-14 * scale) throw std::runtime_error("cyclic tridiagonal: singular pivot");
  x(0) = rhs(0) / piv;
  for (Eigen::Index i = 1; i < n; ++i) {
    cprime(i - 1) = sup(i - 1) / piv;
    piv = dia(i) - sub(i) * cprime(i - 1);
    if (std::abs(piv) < 1e-14 * scale) {
      throw std::runtime_error("cyclic tridiagonal: singular pivot");
    }
    x(i) = (rhs(i) - sub(i) * x(i - 1)) / piv;
  }
  for (Eigen::Index i = n - 2; i >= 0; --i) x(i) -= cprime(i) * x(i + 1);
  return x;
}

}  // namespace

CVector solve_cyclic_tridiagonal(const CyclicTridiagonal& a, const CVector& rhs) {
  const Eigen::Index n = a.diag.size();
  if (rhs.size() != n || a.lower.size() != n || a.upper.size() != n) {
    throw std::invalid_argument("cyclic tridiagonal: size mismatch");
  }
  if (n == 0) return {};
  const double scale = std::max({a.diag.cwiseAbs().maxCoeff(), a.lower.cwiseAbs().maxCoeff(),
                                 a.upper.cwiseAbs().maxCoeff()});
  if (!(scale > 0.0)) throw std::runtime_error("cyclic tridiagonal: zero matrix");
  if (n < 3) {
    Eigen::PartialPivLU<CMatrix> lu(a.dense());
    if (std::abs(lu.determinant()) < 1e-14 * std::pow(scale, double(n))) {
      throw std::runtime_error("cyclic tridiagonal: singular system");
    }
    return lu.solve(rhs);
  }

  // A = T + u v^T with u = (gamma, 0, ..., 0, beta), v = (1, 0, ..., 0, alpha/gamma).
  const Complex alpha = a.lower(0);     // A(0, n-1)
  const Complex beta = a.upper(n - 1);  // A(n-1, 0)
  const Complex gamma = std::abs(a.diag(0)) > 0.0 ? -a.diag(0) : Complex(-scale);
  CVector dia = a.diag;
  dia(0) -= gamma;
  dia(n - 1) -= alpha * beta / gamma;
  const CVector& sub = a.lower;  // sub(0) unused
  const CVector& sup = a.upper;  // sup(n-1) unused

  const CVector x = solve_tridiagonal(sub, dia, sup, rhs, scale);
  CVector u = CVector::Zero(n);
  u(0) = gamma;
  u(n - 1) = beta;
  const CVector z = solve_tridiagonal(sub, dia, sup, u, scale);
  const Complex vz = z(0) + alpha * z(n - 1) / gamma;
  const Complex denom = 1.0 + vz;
  if (std::abs(denom) < 1e-14) throw std::runtime_error("cyclic tridiagonal: singular system");
  const Complex fact = (x(0) + alpha * x(n - 1) / gamma) / denom;
  return x - fact * z;
}

std::vector<Complex> eigenvalues_dense(const CMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("eigenvalues_dense: matrix not square");
  if (a.rows() > kMaxDenseSize) {
    throw std::invalid_argument("eigenvalues_dense: matrix exceeds dense size limit");
  }
  if (a.rows() == 0) return {};
  Eigen::ComplexEigenSolver<CMatrix> solver(a, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigenvalues_dense: QR iteration did not converge");
  }
  const CVector& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double condition_number(const std::vector<Complex>& eigenvalues) {
  if (eigenvalues.empty()) throw std::invalid_argument("condition_number: empty spectrum");
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (const Complex& e : eigenvalues) {
    lo = std::min(lo, std::abs(e));
    hi = std::max(hi, std::abs(e));
  }
  if (lo == 0.0) return std::numeric_limits<double>::infinity();
  return hi / lo;
}

double singular_value_condition_number(const CMatrix& a) {
  Eigen::BDCSVD<CMatrix> svd(a);
  const auto& s = svd.singularValues();
  if (s.size() == 0) throw std::invalid_argument("singular_value_condition_number: empty matrix");
  const double lo = s(s.size() - 1);
  if (lo == 0.0) return std::numeric_limits<double>::infinity();
  return s(0) / lo;
}

}  // namespace vsrc::linalg
