#include "vsrc/operator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "vsrc/kernels.hpp"
#include "vsrc/reference.hpp"

namespace vsrc {

namespace {

void check_size(const CVector& v, std::size_t n, const char* what) {
  if (static_cast<std::size_t>(v.size()) != n) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (got " +
                                std::to_string(v.size()) + ", expected " + std::to_string(n) + ")");
  }
}

}  // namespace

VirtualSourceOperator::VirtualSourceOperator(Mesh mesh, const OperatorOptions& options)
    : mesh_(std::move(mesh)), options_(options) {
  if (!(mesh_.h > 0.0)) {
    throw std::invalid_argument("virtual-source operator needs h > 0 (kernels are singular at h = 0)");
  }
  auto pade = osrc::pade_base_coefficients(options_.pade_terms);
  if (options_.pade_angle != 0.0) pade = osrc::rotate_pade(pade, options_.pade_angle);
  osrc_ = std::make_shared<const osrc::OsrcOperator>(osrc::build_periodic_fem(mesh_), std::move(pade),
                                                     mesh_.k, options_.damping);

  const auto n = static_cast<Eigen::Index>(mesh_.size());
  weights_.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    weights_(i) = mesh_.weights[i] * surface_element_factor(mesh_.curvature[i], mesh_.h);
  }

  if (options_.cache_kernels) {
    auto single = std::make_shared<CMatrix>(n, n);
    auto dbl = std::make_shared<CMatrix>(n, n);
    const double k = mesh_.k;
#pragma omp parallel for schedule(static)
    for (Eigen::Index m = 0; m < n; ++m) {
      for (Eigen::Index j = 0; j < n; ++j) {
        const auto kp = kernels::kernel_pair(k, mesh_.nodes[m], mesh_.sources[j], mesh_.normals[j]);
        (*single)(m, j) = weights_(j) * kp.single;
        (*dbl)(m, j) = weights_(j) * kp.dbl;
      }
    }
    single_ = std::move(single);
    double_ = std::move(dbl);
  }
}

CVector VirtualSourceOperator::apply_dtn(const CVector& v) const {
  check_size(v, size(), "apply_dtn");
  if (mode_ == DtnMode::ExactCircle) return exact_circle_dtn(v);
  return osrc_->apply(v);
}

CVector VirtualSourceOperator::apply_A(const CVector& v) const {
  check_size(v, size(), "apply_A");
  const CVector dtn_v = apply_dtn(v);
  if (single_) return (*double_) * v - (*single_) * dtn_v;
  return kernel_sum(v, dtn_v, mesh_.nodes);
}

CVector VirtualSourceOperator::apply_B(const CVector& v) const {
  check_size(v, size(), "apply_B");
  return osrc_->apply_preconditioner(v, mesh_.h);
}

CVector VirtualSourceOperator::apply_BA(const CVector& v) const { return apply_B(apply_A(v)); }

CVector VirtualSourceOperator::apply(OperatorKind which, const CVector& v) const {
  return which == OperatorKind::A ? apply_A(v) : apply_BA(v);
}

CVector VirtualSourceOperator::kernel_sum(const CVector& v, const CVector& dtn_v,
                                          const std::vector<Point>& targets) const {
  const auto n = static_cast<Eigen::Index>(size());
  const auto count = static_cast<Eigen::Index>(targets.size());
  CVector out(count);
  const double k = mesh_.k;
#pragma omp parallel for schedule(static)
  for (Eigen::Index m = 0; m < count; ++m) {
    Complex sum = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto kp = kernels::kernel_pair(k, targets[m], mesh_.sources[j], mesh_.normals[j]);
      sum += weights_(j) * (kp.dbl * v(j) - kp.single * dtn_v(j));
    }
    out(m) = sum;
  }
  return out;
}

CVector VirtualSourceOperator::evaluate_field(const CVector& v,
                                              const std::vector<Point>& targets) const {
  check_size(v, size(), "evaluate_field");
  for (const Point& p : targets) {
    if (mesh_.curve.contains(p) || mesh_.curve.distance(p) < 1e-12) {
      throw std::invalid_argument("field target (" + std::to_string(p.x()) + ", " +
                                  std::to_string(p.y()) + ") is not outside the boundary");
    }
  }
  return kernel_sum(v, apply_dtn(v), targets);
}

CMatrix VirtualSourceOperator::assemble_dense(OperatorKind which) const {
  const auto n = static_cast<Eigen::Index>(size());
  if (n > linalg::kMaxDenseSize) {
    throw std::invalid_argument("dense assembly limited to N <= " +
                                std::to_string(linalg::kMaxDenseSize));
  }
  CMatrix dtn(n, n);
  if (mode_ == DtnMode::ExactCircle) {
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) dtn(i, j) = circle_row_[(j - i + n) % n];
  } else {
    dtn = osrc_->dense();
  }

  CMatrix a;
  if (single_) {
    a = *double_;
    a.noalias() -= (*single_) * dtn;
  } else {
    a.resize(n, n);
    CVector e = CVector::Zero(n);
    for (Eigen::Index j = 0; j < n; ++j) {
      e(j) = 1.0;
      a.col(j) = kernel_sum(e, dtn.col(j), mesh_.nodes);
      e(j) = 0.0;
    }
  }
  if (which == OperatorKind::A) return a;

  const CMatrix lambda = mode_ == DtnMode::Osrc ? dtn : osrc_->dense();
  CMatrix ba = a;
  ba.noalias() -= mesh_.h * (lambda * a);
  return ba;
}

VirtualSourceOperator VirtualSourceOperator::swap_dtn(DtnMode mode, double radius) const {
  VirtualSourceOperator out = *this;
  out.mode_ = mode;
  out.circle_row_.clear();
  if (mode == DtnMode::Osrc) return out;

  if (mesh_.curve.kind() != CurveKind::Circle) {
    throw std::invalid_argument("exact circle DtN requires a circle mesh");
  }
  const double a = mesh_.curve.radius();
  if (radius > 0.0 && std::abs(radius - a) > 1e-12 * a) {
    throw std::invalid_argument("exact circle DtN radius does not match the mesh circle");
  }

  // Circulant entry c_d = (1/N) sum_m gamma_|m| e^{i m 2 pi d / N}, m in (-N/2, N/2].
  const auto n = static_cast<long>(size());
  std::vector<Complex> symbols(static_cast<std::size_t>(n / 2) + 1);
  for (long m = 0; m <= n / 2; ++m) {
    symbols[m] = reference::circle_exact_dtn_eigenvalue(mesh_.k, a, static_cast<int>(m));
  }
  out.circle_row_.assign(static_cast<std::size_t>(n), Complex(0.0));
  for (long d = 0; d < n; ++d) {
    Complex sum = symbols[0];
    for (long m = 1; m <= n / 2; ++m) {
      const double angle = 2.0 * kPi * double(m * d % n) / double(n);
      // the Nyquist mode of an even mesh appears once
      const double mult = (2 * m == n) ? 1.0 : 2.0;
      sum += mult * symbols[m] * std::cos(angle);
    }
    out.circle_row_[d] = sum / double(n);
  }
  return out;
}

CVector VirtualSourceOperator::exact_circle_dtn(const CVector& v) const {
  const auto n = static_cast<Eigen::Index>(size());
  CVector out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    Complex sum = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) sum += circle_row_[(j - i + n) % n] * v(j);
    out(i) = sum;
  }
  return out;
}

linalg::FunctionMap VirtualSourceOperator::as_map(OperatorKind which) const {
  return linalg::FunctionMap(size(), [this, which](const CVector& x, CVector& y) {
    y = apply(which, x);
  });
}

}  // namespace vsrc
