#include "vsrc/osrc.hpp"

#include <cmath>
#include <stdexcept>

namespace vsrc::osrc {

Complex PadeCoefficients::evaluate(Complex z) const {
  Complex sum = a0;
  for (int m = 0; m < terms; ++m) sum += a[m] / (z - b[m]);
  return sum;
}

PadeCoefficients pade_base_coefficients(int terms) {
  if (terms < 1 || terms > 16) throw std::invalid_argument("Pade terms must be in [1, 16]");
  // sqrt(1+z) ~ 1 + sum_j A_j z / (1 + B_j z), then
  // A z / (1 + B z) = A/B - (A/B^2) / (z + 1/B).
  PadeCoefficients p;
  p.terms = terms;
  p.angle = 0.0;
  p.base_a0 = 1.0;
  const double denom = 2.0 * terms + 1.0;
  for (int j = 1; j <= terms; ++j) {
    const double s = std::sin(j * kPi / denom);
    const double c = std::cos(j * kPi / denom);
    const double aj = (2.0 / denom) * s * s;
    const double bj = c * c;
    p.base_a0 += aj / bj;
    p.base_a.push_back(-aj / (bj * bj));
    p.base_b.push_back(-1.0 / bj);
  }
  p.a0 = p.base_a0;
  p.a.assign(p.base_a.begin(), p.base_a.end());
  p.b.assign(p.base_b.begin(), p.base_b.end());
  return p;
}

PadeCoefficients rotate_pade(const PadeCoefficients& base, double theta) {
  if (base.angle != 0.0) throw std::invalid_argument("rotate_pade expects unrotated coefficients");
  PadeCoefficients p = base;
  p.angle = theta;
  const Complex half = std::polar(1.0, 0.5 * theta);
  const Complex three_half = std::polar(1.0, 1.5 * theta);
  const Complex full = std::polar(1.0, theta);
  p.a0 = base.base_a0 * half;
  for (int m = 0; m < base.terms; ++m) {
    p.a[m] = base.base_a[m] * three_half;
    p.b[m] = (1.0 + base.base_b[m]) * full - 1.0;
  }
  if (theta > 0.0 && theta < kPi) {
    for (const Complex& bm : p.b) {
      if (!(std::abs(bm.imag()) > 0.0)) throw std::logic_error("rotated Pade pole on real axis");
    }
  }
  return p;
}

CVector PeriodicFem::apply_mass(const CVector& v) const {
  const Eigen::Index n = mass_diag.size();
  CVector out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Index prev = (i + n - 1) % n, next = (i + 1) % n;
    out(i) = mass_diag(i) * v(i) + mass_off(prev) * v(prev) + mass_off(i) * v(next);
  }
  return out;
}

CVector PeriodicFem::apply_stiffness(const CVector& v) const {
  const Eigen::Index n = stiff_diag.size();
  CVector out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Index prev = (i + n - 1) % n, next = (i + 1) % n;
    out(i) = stiff_diag(i) * v(i) + stiff_off(prev) * v(prev) + stiff_off(i) * v(next);
  }
  return out;
}

linalg::CyclicTridiagonal PeriodicFem::combine(Complex alpha, Complex beta) const {
  const Eigen::Index n = mass_diag.size();
  linalg::CyclicTridiagonal t;
  t.diag = alpha * stiff_diag.cast<Complex>() + beta * mass_diag.cast<Complex>();
  t.upper = alpha * stiff_off.cast<Complex>() + beta * mass_off.cast<Complex>();
  t.lower.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) t.lower(i) = t.upper((i + n - 1) % n);
  return t;
}

PeriodicFem build_periodic_fem(const Mesh& mesh) {
  const std::size_t n = mesh.size();
  if (n < 3) throw std::invalid_argument("periodic FEM needs at least 3 nodes");
  if (mesh.element_lengths.size() != n) throw std::invalid_argument("mesh element lengths missing");
  PeriodicFem fem;
  fem.mass_diag = RVector::Zero(static_cast<Eigen::Index>(n));
  fem.mass_off = RVector::Zero(static_cast<Eigen::Index>(n));
  fem.stiff_diag = RVector::Zero(static_cast<Eigen::Index>(n));
  fem.stiff_off = RVector::Zero(static_cast<Eigen::Index>(n));
  for (std::size_t e = 0; e < n; ++e) {
    const double len = mesh.element_lengths[e];
    if (!(len >= 1e-12)) throw std::invalid_argument("degenerate FEM element");
    const auto i = static_cast<Eigen::Index>(e);
    const auto j = static_cast<Eigen::Index>((e + 1) % n);
    fem.mass_diag(i) += len / 3.0;
    fem.mass_diag(j) += len / 3.0;
    fem.mass_off(i) += len / 6.0;
    fem.stiff_diag(i) += 1.0 / len;
    fem.stiff_diag(j) += 1.0 / len;
    fem.stiff_off(i) -= 1.0 / len;
  }
  return fem;
}

OsrcOperator::OsrcOperator(PeriodicFem fem, PadeCoefficients pade, double k, double damping)
    : fem_(std::move(fem)), pade_(std::move(pade)), k_(k) {
  if (!(k > 0.0)) throw std::invalid_argument("OSRC wavenumber must be positive");
  if (pade_.terms < 1) throw std::invalid_argument("OSRC needs at least one Pade term");
  k_eps_ = Complex(k, damping * std::cbrt(k));
  const Complex inv_k2 = 1.0 / (k_eps_ * k_eps_);
  resolvents_.reserve(pade_.terms);
  for (int m = 0; m < pade_.terms; ++m) {
    resolvents_.push_back(fem_.combine(-inv_k2, -pade_.b[m]));
  }
}

CVector OsrcOperator::apply(const CVector& v) const {
  if (static_cast<std::size_t>(v.size()) != size()) {
    throw std::invalid_argument("OSRC apply: dimension mismatch");
  }
  const CVector mv = fem_.apply_mass(v);
  CVector out = pade_.a0 * v;
  for (int m = 0; m < pade_.terms; ++m) {
    out += pade_.a[m] * linalg::solve_cyclic_tridiagonal(resolvents_[m], mv);
  }
  return (kI * k_) * out;
}

CVector OsrcOperator::apply_preconditioner(const CVector& v, double h) const {
  if (h == 0.0) return v;
  return v - h * apply(v);
}

CMatrix OsrcOperator::dense() const {
  const auto n = static_cast<Eigen::Index>(size());
  CMatrix out(n, n);
  CVector e = CVector::Zero(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    e(j) = 1.0;
    out.col(j) = apply(e);
    e(j) = 0.0;
  }
  return out;
}

CVector apply_osrc(const PeriodicFem& fem, const PadeCoefficients& pade, double k,
                   const CVector& v) {
  return OsrcOperator(fem, pade, k).apply(v);
}

CVector apply_preconditioner(const PeriodicFem& fem, const PadeCoefficients& pade, double k,
                             double h, const CVector& v) {
  return OsrcOperator(fem, pade, k).apply_preconditioner(v, h);
}

}  // namespace vsrc::osrc
