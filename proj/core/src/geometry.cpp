#include "vsrc/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace vsrc {

namespace {

constexpr std::size_t kSampleCount = 4096;

// 8-point Gauss-Legendre on [-1, 1].
constexpr std::array<double, 8> kGaussNodes = {
    -0.9602898564975363, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
    0.1834346424956498,  0.5255324099163290,  0.7966664774136267,  0.9602898564975363};
constexpr std::array<double, 8> kGaussWeights = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873, 0.3626837833783620,
    0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};

double cross(const Point& a, const Point& b) { return a.x() * b.y() - a.y() * b.x(); }

double speed_at(const BoundaryCurve& c, double t) {
  return std::hypot(c.x_series().derivative(t, 1), c.y_series().derivative(t, 1));
}

double arclength(const BoundaryCurve& c, double t0, double t1, int pieces) {
  const double step = (t1 - t0) / pieces;
  double sum = 0.0;
  for (int p = 0; p < pieces; ++p) {
    const double mid = t0 + (p + 0.5) * step;
    for (std::size_t g = 0; g < kGaussNodes.size(); ++g) {
      sum += kGaussWeights[g] * speed_at(c, mid + 0.5 * step * kGaussNodes[g]);
    }
  }
  return 0.5 * step * sum;
}

bool segments_intersect(const Point& p1, const Point& p2, const Point& q1, const Point& q2) {
  const Point r = p2 - p1, s = q2 - q1;
  const double d1 = cross(r, q1 - p1), d2 = cross(r, q2 - p1);
  const double d3 = cross(s, p1 - q1), d4 = cross(s, p2 - q1);
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0)) && d1 != 0 && d2 != 0 && d3 != 0 &&
         d4 != 0;
}

std::vector<double> parse_numbers(std::istringstream& ss, const std::string& key) {
  std::vector<double> out;
  std::string tok;
  while (ss >> tok) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw std::invalid_argument("bad number '" + tok + "' in " + key);
    out.push_back(v);
  }
  return out;
}

}  // namespace

double TrigSeries::value(double t) const { return derivative(t, 0); }

double TrigSeries::derivative(double t, int order) const {
  // d^m/dt^m cos(jt) = j^m cos(jt + m pi/2), likewise for sin.
  double sum = 0.0;
  const std::size_t n = std::max(cos_coeffs.size(), sin_coeffs.size());
  const double shift = order * 0.5 * kPi;
  for (std::size_t j = 0; j < n; ++j) {
    const double scale = order == 0 ? 1.0 : std::pow(double(j), order);
    if (scale == 0.0) continue;
    const double arg = double(j) * t + shift;
    if (j < cos_coeffs.size()) sum += cos_coeffs[j] * scale * std::cos(arg);
    if (j < sin_coeffs.size()) sum += sin_coeffs[j] * scale * std::sin(arg);
  }
  return sum;
}

BoundaryCurve::BoundaryCurve(CurveKind kind, TrigSeries x, TrigSeries y, double radius)
    : kind_(kind), x_(std::move(x)), y_(std::move(y)), radius_(radius) {
  polygon_.resize(kSampleCount);
  const double dt = 2.0 * kPi / kSampleCount;
  double len = 0.0;
  double signed_area = 0.0;
  for (std::size_t i = 0; i < kSampleCount; ++i) {
    const double t = i * dt;
    polygon_[i] = position(t);
    const double dx = x_.derivative(t, 1), dy = y_.derivative(t, 1);
    const double sp = std::hypot(dx, dy);
    if (sp < 1e-12) throw std::invalid_argument("boundary curve is not regular");
    len += sp * dt;
    signed_area += 0.5 * (polygon_[i].x() * dy - polygon_[i].y() * dx) * dt;
    const double kappa =
        (dx * y_.derivative(t, 2) - dy * x_.derivative(t, 2)) / (sp * sp * sp);
    max_abs_curvature_ = std::max(max_abs_curvature_, std::abs(kappa));
  }
  if (signed_area <= 0.0) {
    throw std::invalid_argument("boundary curve must be counterclockwise");
  }
  length_ = len;
}

BoundaryCurve BoundaryCurve::flower() {
  // (1 + 0.2 cos 2t) cos t = 1.1 cos t + 0.1 cos 3t
  // (1 + 0.9 cos 2t) sin t = 0.55 sin t + 0.45 sin 3t
  TrigSeries x{{0.0, 1.1, 0.0, 0.1}, {}};
  TrigSeries y{{}, {0.0, 0.55, 0.0, 0.45}};
  return BoundaryCurve(CurveKind::Flower, std::move(x), std::move(y), 0.0);
}

BoundaryCurve BoundaryCurve::circle(double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("circle radius must be positive");
  return BoundaryCurve(CurveKind::Circle, TrigSeries{{0.0, radius}, {}},
                       TrigSeries{{}, {0.0, radius}}, radius);
}

BoundaryCurve BoundaryCurve::trigonometric(TrigSeries x, TrigSeries y) {
  BoundaryCurve c(CurveKind::Trigonometric, std::move(x), std::move(y), 0.0);
  if (polygon_self_intersects(c.polygon_)) {
    throw std::invalid_argument("boundary curve self-intersects");
  }
  return c;
}

std::string BoundaryCurve::describe() const {
  switch (kind_) {
    case CurveKind::Flower: return "flower";
    case CurveKind::Circle: {
      std::ostringstream os;
      os << "circle:" << radius_;
      return os.str();
    }
    case CurveKind::Trigonometric: return "trigonometric";
  }
  return "unknown";
}

Point BoundaryCurve::position(double t) const { return {x_.value(t), y_.value(t)}; }

CurvePoint BoundaryCurve::eval(double t) const {
  const double dx = x_.derivative(t, 1), dy = y_.derivative(t, 1);
  const double sp = std::hypot(dx, dy);
  if (sp < 1e-12) throw std::domain_error("degenerate tangent on boundary curve");
  CurvePoint cp;
  cp.point = position(t);
  cp.speed = sp;
  cp.tangent = Point(dx / sp, dy / sp);
  cp.normal = Point(cp.tangent.y(), -cp.tangent.x());
  cp.curvature = (dx * y_.derivative(t, 2) - dy * x_.derivative(t, 2)) / (sp * sp * sp);
  if (kind_ == CurveKind::Circle) {
    // exact values keep circle tests at round-off
    cp.normal = Point(std::cos(t), std::sin(t));
    cp.tangent = Point(-std::sin(t), std::cos(t));
    cp.curvature = 1.0 / radius_;
  }
  return cp;
}

BoundaryCurve::Projection BoundaryCurve::project(const Point& p) const {
  const std::size_t n = polygon_.size();
  double best = std::numeric_limits<double>::infinity(), t = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = polygon_[i];
    const Point ab = polygon_[(i + 1) % n] - a;
    const double s = std::clamp((p - a).dot(ab) / ab.squaredNorm(), 0.0, 1.0);
    const double d = (a + s * ab - p).norm();
    if (d < best) {
      best = d;
      t = (double(i) + s) * 2.0 * kPi / double(n);
    }
  }
  // minimize |gamma(t) - p|^2
  for (int it = 0; it < 20; ++it) {
    const Point r = position(t) - p;
    const Point d1(x_.derivative(t, 1), y_.derivative(t, 1));
    const Point d2(x_.derivative(t, 2), y_.derivative(t, 2));
    const double g = r.dot(d1), dg = d1.squaredNorm() + r.dot(d2);
    if (!(dg > 0.0)) break;
    const double step = g / dg;
    t -= step;
    if (std::abs(step) < 1e-15) break;
  }
  const CurvePoint cp = eval(t);
  const Point r = p - cp.point;
  return {r.norm(), r.dot(cp.normal)};
}

bool BoundaryCurve::contains(const Point& p) const {
  // the sampled polygon cuts chords through the curve; settle points in that band exactly
  const Projection pr = project(p);
  if (pr.distance < 1e-3 * length_) return pr.side < 0.0;
  return polygon_contains(polygon_, p);
}

double BoundaryCurve::distance(const Point& p) const { return project(p).distance; }

CurvePoint curve_eval(const BoundaryCurve& curve, double t) { return curve.eval(t); }

BoundaryCurve parse_curve(std::istream& in) {
  TrigSeries x, y;
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string key;
    if (!(ss >> key)) continue;
    std::vector<double> coeffs = parse_numbers(ss, key);
    if (key == "x.cos") x.cos_coeffs = std::move(coeffs);
    else if (key == "x.sin") x.sin_coeffs = std::move(coeffs);
    else if (key == "y.cos") y.cos_coeffs = std::move(coeffs);
    else if (key == "y.sin") y.sin_coeffs = std::move(coeffs);
    else throw std::invalid_argument("unknown curve row '" + key + "'");
    ++rows;
  }
  if (rows == 0) throw std::invalid_argument("curve file has no coefficient rows");
  return BoundaryCurve::trigonometric(std::move(x), std::move(y));
}

BoundaryCurve load_curve(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open curve file " + path);
  return parse_curve(in);
}

BoundaryCurve curve_from_spec(const std::string& spec) {
  if (spec == "flower") return BoundaryCurve::flower();
  if (spec.rfind("circle:", 0) == 0) {
    std::size_t used = 0;
    const std::string r = spec.substr(7);
    double radius = 0.0;
    try {
      radius = std::stod(r, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != r.size()) throw std::invalid_argument("bad circle radius in " + spec);
    return BoundaryCurve::circle(radius);
  }
  if (spec == "circle") return BoundaryCurve::circle(1.0);
  if (spec.rfind("file:", 0) == 0) return load_curve(spec.substr(5));
  throw std::invalid_argument("unknown geometry '" + spec + "' (flower | circle:R | file:PATH)");
}

double Mesh::element_ratio() const {
  if (element_lengths.empty()) return 1.0;
  const auto [lo, hi] = std::minmax_element(element_lengths.begin(), element_lengths.end());
  return *hi / *lo;
}

std::size_t node_count(const BoundaryCurve& curve, double k, double n_lambda) {
  if (!(k > 0.0)) throw std::invalid_argument("wavenumber must be positive");
  if (!(n_lambda >= 2.0)) throw std::invalid_argument("elements per wavelength must be >= 2");
  const double lambda = 2.0 * kPi / k;
  return static_cast<std::size_t>(std::ceil(n_lambda * curve.length() / lambda - 1e-9));
}

Mesh build_mesh(const BoundaryCurve& curve, double k, double n_lambda, double h) {
  Mesh m = build_mesh_with_nodes(curve, node_count(curve, k, n_lambda), k, h);
  m.n_lambda = n_lambda;
  return m;
}

Mesh build_mesh_with_nodes(const BoundaryCurve& curve, std::size_t n, double k, double h) {
  if (n < 3) throw std::invalid_argument("mesh needs at least 3 nodes");
  if (!(k > 0.0)) throw std::invalid_argument("wavenumber must be positive");
  if (!(h >= 0.0)) throw std::invalid_argument("displacement h must be nonnegative");
  if (h * curve.max_abs_curvature() >= 1.0) {
    throw std::invalid_argument("displacement h must be below 1/max|curvature|");
  }

  Mesh m;
  m.curve = curve;
  m.k = k;
  m.h = h;
  m.n_lambda = double(n) * (2.0 * kPi / k) / curve.length();
  m.t.resize(n);
  m.nodes.resize(n);
  m.normals.resize(n);
  m.curvature.resize(n);
  m.weights.resize(n);
  m.element_lengths.resize(n);
  m.sources.resize(n);

  const double dt = 2.0 * kPi / double(n);
  const int pieces = std::max(1, static_cast<int>(512 / n));
  for (std::size_t i = 0; i < n; ++i) {
    const double t = dt * double(i);
    const CurvePoint cp = curve.eval(t);
    m.t[i] = t;
    m.nodes[i] = cp.point;
    m.normals[i] = cp.normal;
    m.curvature[i] = cp.curvature;
    m.weights[i] = cp.speed * dt;
    m.element_lengths[i] = arclength(curve, t, t + dt, pieces);
    if (m.element_lengths[i] < 1e-12) throw std::invalid_argument("degenerate mesh element");
    m.sources[i] = cp.point - h * cp.normal;
  }

  if (h > 0.0) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!curve.contains(m.sources[i])) {
        throw std::invalid_argument("displacement h moves a virtual source outside the boundary");
      }
    }
    if (polygon_self_intersects(m.sources)) {
      throw std::invalid_argument("displacement h makes the source curve self-intersect");
    }
  }
  return m;
}

double displacement_h(double lambda, double n_lambda, double beta, double c) {
  if (!(lambda > 0.0)) throw std::invalid_argument("wavelength must be positive");
  if (!(n_lambda > 0.0)) throw std::invalid_argument("elements per wavelength must be positive");
  return c * lambda / std::pow(n_lambda, beta);
}

double displacement_constant_for_base(double base_n, double beta) {
  return std::pow(base_n, beta) / base_n;
}

double surface_element_factor(double curvature, double h) {
  const double f = 1.0 - h * curvature;
  if (!(f > 0.0)) throw std::domain_error("parallel curve folds over: 1 - h*kappa <= 0");
  return f;
}

bool polygon_contains(const std::vector<Point>& polygon, const Point& p) {
  // Sunday's crossing-direction winding number.
  int winding = 0;
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = polygon[i];
    const Point& b = polygon[(i + 1) % n];
    const double side = cross(b - a, p - a);
    if (a.y() <= p.y()) {
      if (b.y() > p.y() && side > 0) ++winding;
    } else if (b.y() <= p.y() && side < 0) {
      --winding;
    }
  }
  return winding != 0;
}

bool polygon_self_intersects(const std::vector<Point>& polygon) {
  const std::size_t n = polygon.size();
  if (n < 4) return false;
  // bounding boxes prune most pairs
  std::vector<Eigen::Vector4d> box(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = polygon[i];
    const Point& b = polygon[(i + 1) % n];
    box[i] = {std::min(a.x(), b.x()), std::max(a.x(), b.x()), std::min(a.y(), b.y()),
              std::max(a.y(), b.y())};
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent through the wrap
      if (box[i][1] < box[j][0] || box[j][1] < box[i][0] || box[i][3] < box[j][2] ||
          box[j][3] < box[i][2]) {
        continue;
      }
      if (segments_intersect(polygon[i], polygon[(i + 1) % n], polygon[j], polygon[(j + 1) % n])) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace vsrc
