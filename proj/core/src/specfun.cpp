#include "vsrc/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace vsrc::specfun {

namespace {

constexpr double kEuler = 0.57721566490153286060651209008240243;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;
constexpr double kRescale = 1e250;

// Regime boundaries for the order 0/1 evaluation.
constexpr double kSeriesLimit = 2.0;
constexpr double kAsymptoticLimit = 25.0;

struct Jy01 {
  double j0, j1, y0, y1;
};

void check_args(int order, double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error("Bessel argument must be positive and finite, got " +
                            std::to_string(x));
  }
  if (order < 0 || order > kMaxOrder) {
    throw std::domain_error("Bessel order out of range [0, " + std::to_string(kMaxOrder) +
                            "]: " + std::to_string(order));
  }
}

// Ascending series, x < 2.
Jy01 series01(double x) {
  const double q = 0.25 * x * x;
  double term0 = 1.0;  // (-q)^k / (k!)^2
  double term1 = 1.0;  // (-q)^k / (k!(k+1)!)
  double harmonic = 0.0;
  double j0 = 1.0, j1 = 1.0;
  double y0sum = 0.0;
  double y1sum = -2.0 * kEuler + 1.0;  // k = 0: psi(1) + psi(2)
  for (int k = 1; k < 60; ++k) {
    term0 *= -q / (double(k) * k);
    term1 *= -q / (double(k) * (k + 1));
    harmonic += 1.0 / k;
    j0 += term0;
    j1 += term1;
    y0sum -= harmonic * term0;
    y1sum += (-2.0 * kEuler + harmonic + harmonic + 1.0 / (k + 1)) * term1;
    if (std::abs(term0) < kEps * 1e-3 && std::abs(term1) < kEps * 1e-3) break;
  }
  j1 *= 0.5 * x;
  const double log_half = std::log(0.5 * x);
  Jy01 r{};
  r.j0 = j0;
  r.j1 = j1;
  r.y0 = (2.0 / kPi) * ((log_half + kEuler) * j0 + y0sum);
  r.y1 = -2.0 / (kPi * x) + (2.0 / kPi) * log_half * j1 - (x / (2.0 * kPi)) * y1sum;
  return r;
}

// Steed's method for order zero (continued fractions CF1 and CF2), 2 <= x.
Jy01 steed01(double x) {
  const double xi = 1.0 / x;
  const double xi2 = 2.0 * xi;
  const double w = xi2 / kPi;

  // CF1: f = J0'/J0 = -J1/J0, sign of J0 tracked through the denominators.
  int isign = 1;
  double h = kTiny;
  double b = 0.0, d = 0.0, c = h;
  int it = 0;
  for (; it < 100000; ++it) {
    b += xi2;
    d = b - d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b - 1.0 / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = c * d;
    h *= del;
    if (d < 0.0) isign = -isign;
    if (std::abs(del - 1.0) <= kEps) break;
  }
  if (it == 100000) throw std::runtime_error("Bessel CF1 failed to converge");
  const double f = h;

  // CF2: p + iq = (J0' + iY0') / (J0 + iY0).
  double a = 0.25;
  double p = -0.5 * xi, q = 1.0;
  const double br = 2.0 * x;
  double bi = 2.0;
  double fact = a * xi / (p * p + q * q);
  double cr = br + q * fact, ci = bi + p * fact;
  double den = br * br + bi * bi;
  double dr = br / den, di = -bi / den;
  double dlr = cr * dr - ci * di, dli = cr * di + ci * dr;
  double temp = p * dlr - q * dli;
  q = p * dli + q * dlr;
  p = temp;
  for (int i = 1; i < 100000; ++i) {
    a += 2 * i;
    bi += 2.0;
    dr = a * dr + br;
    di = a * di + bi;
    if (std::abs(dr) + std::abs(di) < kTiny) dr = kTiny;
    fact = a / (cr * cr + ci * ci);
    cr = br + cr * fact;
    ci = bi - ci * fact;
    if (std::abs(cr) + std::abs(ci) < kTiny) cr = kTiny;
    den = dr * dr + di * di;
    dr /= den;
    di /= -den;
    dlr = cr * dr - ci * di;
    dli = cr * di + ci * dr;
    temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    if (std::abs(dlr - 1.0) + std::abs(dli) <= kEps) break;
  }

  const double gam = (p - f) / q;
  double j0 = std::sqrt(w / ((p - f) * gam + q));
  if (isign < 0) j0 = -j0;
  const double y0 = j0 * gam;
  const double y0p = y0 * p + j0 * q;
  Jy01 r{};
  r.j0 = j0;
  r.j1 = -f * j0;
  r.y0 = y0;
  r.y1 = -y0p;
  return r;
}

// Hankel asymptotic expansion for order 0 and 1, x >= 25.
void asymptotic_pq(double nu, double x, double& p, double& q) {
  const double mu = 4.0 * nu * nu;
  double term = 1.0;
  p = 1.0;
  q = 0.0;
  double prev = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (k * 8.0 * x);
    const double mag = std::abs(term);
    if (mag > prev) break;  // series is only asymptotic
    prev = mag;
    switch (k % 4) {
      case 0: p += term; break;
      case 1: q += term; break;
      case 2: p -= term; break;
      case 3: q -= term; break;
    }
    if (mag < 1e-3 * kEps) break;
  }
}

Jy01 asymptotic01(double x) {
  double p0, q0, p1, q1;
  asymptotic_pq(0.0, x, p0, q0);
  asymptotic_pq(1.0, x, p1, q1);
  const double s = std::sin(x), c = std::cos(x);
  const double r = std::sqrt(0.5);
  // chi_0 = x - pi/4, chi_1 = x - 3pi/4, expanded to avoid rounding x - phase.
  const double c0 = r * (c + s), s0 = r * (s - c);
  const double c1 = r * (s - c), s1 = -r * (c + s);
  const double amp = std::sqrt(2.0 / (kPi * x));
  Jy01 out{};
  out.j0 = amp * (p0 * c0 - q0 * s0);
  out.y0 = amp * (p0 * s0 + q0 * c0);
  out.j1 = amp * (p1 * c1 - q1 * s1);
  out.y1 = amp * (p1 * s1 + q1 * c1);
  return out;
}

Jy01 jy01(double x) {
  if (x < kSeriesLimit) return series01(x);
  if (x < kAsymptoticLimit) return steed01(x);
  return asymptotic01(x);
}

// J_n / J_{n-1} by the modified Lentz evaluation of the standard continued fraction.
double ratio_cf1(int n, double x) {
  const double xi2 = 2.0 / x;
  double f = n * xi2;
  if (std::abs(f) < kTiny) f = kTiny;
  double c = f, d = 0.0;
  for (int j = 1; j < 200000; ++j) {
    const double b = (n + j) * xi2;
    d = b - d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b - 1.0 / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = c * d;
    f *= del;
    if (std::abs(del - 1.0) <= kEps) return 1.0 / f;
  }
  throw std::runtime_error("Bessel ratio continued fraction failed to converge");
}

double j_series(int n, double x) {
  double pre = 1.0;
  const double half = 0.5 * x;
  for (int j = 1; j <= n; ++j) pre *= half / j;
  const double q = half * half;
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 500; ++k) {
    term *= -q / (double(k) * (n + k));
    sum += term;
    if (std::abs(term) < 1e-3 * kEps * std::abs(sum)) break;
  }
  return pre * sum;
}

// Backward recurrence from the exact ratio at order n, normalized against the
// better conditioned of J0, J1.
double j_backward(int n, double x, const Jy01& base) {
  double hi = ratio_cf1(n, x);  // scaled J_n
  double lo = 1.0;              // scaled J_{n-1}
  double jn = hi;
  for (int k = n - 1; k >= 1; --k) {
    const double next = (2.0 * k / x) * lo - hi;  // scaled J_{k-1}
    hi = lo;
    lo = next;
    if (std::abs(lo) > kRescale) {
      lo /= kRescale;
      hi /= kRescale;
      jn /= kRescale;
    }
  }
  // lo ~ J_0, hi ~ J_1
  if (std::abs(base.j0) >= std::abs(base.j1)) return jn * (base.j0 / lo);
  return jn * (base.j1 / hi);
}

double y_forward(int n, double x, const Jy01& base) {
  if (n == 0) return base.y0;
  double prev = base.y0, cur = base.y1;
  for (int k = 1; k < n; ++k) {
    const double next = (2.0 * k / x) * cur - prev;
    prev = cur;
    cur = next;
    if (!std::isfinite(cur)) break;
  }
  return cur;
}

double j_order(int n, double x, const Jy01& base) {
  if (n == 0) return base.j0;
  if (n == 1) return base.j1;
  if (x >= n) {
    double prev = base.j0, cur = base.j1;
    for (int k = 1; k < n; ++k) {
      const double next = (2.0 * k / x) * cur - prev;
      prev = cur;
      cur = next;
    }
    return cur;
  }
  if (0.25 * x * x <= n + 1.0) return j_series(n, x);
  return j_backward(n, x, base);
}

void check_range(const BesselJY& r, int order, double x) {
  if (!std::isfinite(r.y) || !std::isfinite(r.j) ||
      (r.j != 0.0 && std::abs(r.j) < std::numeric_limits<double>::min()) ||
      (r.j == 0.0 && order > 0)) {
    throw std::overflow_error("Bessel value out of double range at order " +
                              std::to_string(order) + ", x = " + std::to_string(x));
  }
}

}  // namespace

BesselJY bessel_jy(int order, double x) {
  check_args(order, x);
  const Jy01 base = jy01(x);
  BesselJY r{j_order(order, x, base), y_forward(order, x, base)};
  check_range(r, order, x);
  return r;
}

Complex hankel1(int order, double x) {
  const BesselJY r = bessel_jy(order, x);
  return {r.j, r.y};
}

Complex hankel1_derivative(int order, double x) {
  check_args(order, x);
  if (order == 0) return -hankel1(1, x);
  return hankel1(order - 1, x) - (double(order) / x) * hankel1(order, x);
}

Hankel01 hankel1_01(double x) {
  check_args(0, x);
  const Jy01 b = jy01(x);
  return {{b.j0, b.y0}, {b.j1, b.y1}};
}

std::vector<BesselJY> bessel_jy_sequence(int max_order, double x) {
  check_args(max_order, x);
  const Jy01 base = jy01(x);
  std::vector<BesselJY> out(static_cast<std::size_t>(max_order) + 1);
  out[0] = {base.j0, base.y0};
  if (max_order >= 1) out[1] = {base.j1, base.y1};

  for (int k = 1; k < max_order; ++k) {
    out[k + 1].y = (2.0 * k / x) * out[k].y - out[k - 1].y;
  }

  // Forward recurrence for J is stable up to the turning point; beyond it each
  // order is evaluated on its own path.
  const int forward_top = std::min(max_order, static_cast<int>(std::floor(x)));
  for (int k = 1; k < forward_top; ++k) {
    out[k + 1].j = (2.0 * k / x) * out[k].j - out[k - 1].j;
  }
  for (int k = std::max(2, forward_top + 1); k <= max_order; ++k) {
    out[k].j = j_order(k, x, base);
  }
  for (int k = 0; k <= max_order; ++k) check_range(out[k], k, x);
  return out;
}

}  // namespace vsrc::specfun
