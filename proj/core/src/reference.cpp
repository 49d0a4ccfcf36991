#include "vsrc/reference.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "vsrc/kernels.hpp"
#include "vsrc/specfun.hpp"

namespace vsrc::reference {

namespace {

// H_n(x) / H_{n-1}(x) for n = 1..n_max by the forward recurrence
// H_{n+1} / H_n = 2n/x - H_{n-1} / H_n.
std::vector<Complex> hankel_ratios(int n_max, double x) {
  std::vector<Complex> r(static_cast<std::size_t>(std::max(n_max, 0)) + 1);
  if (n_max < 1) return r;
  const specfun::Hankel01 h = specfun::hankel1_01(x);
  r[1] = h.h1 / h.h0;
  for (int n = 1; n < n_max; ++n) r[n + 1] = 2.0 * n / x - 1.0 / r[n];
  return r;
}

}  // namespace

Complex manufactured_field(double k, const Point& x) {
  Complex sum = 0.0;
  for (const Point& y : kManufacturedSources) sum += kernels::phi_2d(k, x, y);
  return sum;
}

MieValue mie_soft_circle(double k, double radius, const Point& x) {
  if (!(k > 0.0) || !(radius > 0.0)) throw std::invalid_argument("Mie: k and R must be positive");
  const double r = x.norm();
  if (r < radius * (1.0 - 1e-12)) throw std::invalid_argument("Mie: point inside the scatterer");
  const double theta = std::atan2(x.y(), x.x());
  const double ka = k * radius;
  const int n_max = static_cast<int>(std::ceil(ka)) + 40;
  if (n_max > specfun::kMaxOrder) throw std::invalid_argument("Mie: kR too large for series");

  const auto at_boundary = specfun::bessel_jy_sequence(n_max, ka);
  const auto at_point = specfun::bessel_jy_sequence(n_max, std::max(k * r, ka));

  MieValue out;
  Complex sum = 0.0;
  Complex i_pow = 1.0;
  double largest = 0.0, last = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    const Complex hb(at_boundary[n].j, at_boundary[n].y);
    const Complex hp(at_point[n].j, at_point[n].y);
    const double eps = n == 0 ? 1.0 : 2.0;
    const Complex term = eps * i_pow * (at_boundary[n].j / hb) * hp * std::cos(n * theta);
    sum -= term;
    const double mag = std::abs(eps * (at_boundary[n].j / hb) * hp);
    largest = std::max(largest, mag);
    last = mag;
    i_pow *= kI;
  }
  if (last > 1e-8 * largest) throw std::runtime_error("Mie: series has not converged at cutoff");
  out.scattered = sum;
  out.total = std::exp(kI * (k * x.x())) + sum;
  out.terms = n_max;
  out.tail_bound = last;
  return out;
}

Complex jacobi_anger(double k, const Point& x, int n_max) {
  const double r = x.norm();
  const double theta = std::atan2(x.y(), x.x());
  if (r == 0.0) return 1.0;
  const auto jy = specfun::bessel_jy_sequence(n_max, k * r);
  Complex sum = 0.0;
  Complex i_pow = 1.0;
  for (int n = 0; n <= n_max; ++n) {
    sum += (n == 0 ? 1.0 : 2.0) * i_pow * jy[n].j * std::cos(n * theta);
    i_pow *= kI;
  }
  return sum;
}

Complex circle_virtual_source_eigenvalue(double k, double a, double h, int n) {
  if (!(h > 0.0) || !(h < a)) throw std::invalid_argument("circle eigenvalue needs 0 < h < a");
  const int m = std::abs(n);
  const double outer = k * a, inner = k * (a - h);
  const specfun::Hankel01 ho = specfun::hankel1_01(outer);
  const specfun::Hankel01 hi = specfun::hankel1_01(inner);
  Complex value = ho.h0 / hi.h0;
  if (m == 0) return value;
  const auto ro = hankel_ratios(m, outer);
  const auto ri = hankel_ratios(m, inner);
  for (int j = 1; j <= m; ++j) value *= ro[j] / ri[j];
  return value;
}

Complex circle_operator_eigenvalue(double k, double a, double h, int n) {
  if (!(h > 0.0) || !(h < a)) throw std::invalid_argument("circle eigenvalue needs 0 < h < a");
  const int m = std::abs(n);
  const double kb = k * (a - h);
  const auto jb = specfun::bessel_jy_sequence(m + 1, kb);
  // J_m' = (m/x) J_m - J_{m+1}
  const double jpb = double(m) / kb * jb[m].j - jb[m + 1].j;
  const Complex ha = specfun::hankel1(m, k * a);
  const Complex hpa = specfun::hankel1_derivative(m, k * a);
  return kI * (0.5 * kPi * kb) * (jpb * ha - jb[m].j * hpa);
}

Complex circle_exact_dtn_eigenvalue(double k, double a, int n) {
  if (!(k > 0.0) || !(a > 0.0)) throw std::invalid_argument("circle DtN needs k, a > 0");
  const int m = std::abs(n);
  const double x = k * a;
  if (m == 0) {
    const specfun::Hankel01 h = specfun::hankel1_01(x);
    return -k * h.h1 / h.h0;
  }
  // H_m' / H_m = H_{m-1}/H_m - m/x
  const auto r = hankel_ratios(m, x);
  return k * (1.0 / r[m] - double(m) / x);
}

}  // namespace vsrc::reference
