#include "vsrc/kernels.hpp"

#include <stdexcept>

#include "vsrc/specfun.hpp"

namespace vsrc::kernels {

namespace {

double separation(const Point& x, const Point& z) {
  const double r = (x - z).norm();
  if (!(r >= kMinSeparation)) {
    throw std::domain_error("kernel evaluated at coincident target and source");
  }
  return r;
}

}  // namespace

Complex phi_2d(double k, const Point& x, const Point& z) {
  const double r = separation(x, z);
  return 0.25 * kI * specfun::hankel1(0, k * r);
}

Complex kernel_double(double k, const Point& x, const Point& z, const Point& nu) {
  const double r = separation(x, z);
  const double proj = nu.dot(x - z) / r;
  return (0.25 * k * proj) * kI * specfun::hankel1(1, k * r);
}

KernelPair kernel_pair(double k, const Point& x, const Point& z, const Point& nu) {
  const Point d = x - z;
  const double r = separation(x, z);
  const specfun::Hankel01 h = specfun::hankel1_01(k * r);
  const double proj = nu.dot(d) / r;
  return {0.25 * kI * h.h0, (0.25 * k * proj) * kI * h.h1};
}

}  // namespace vsrc::kernels
