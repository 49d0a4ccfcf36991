#pragma once

/// \file vsrc/geometry.hpp
/// \brief Closed parametric boundary curves, boundary meshes and the inward
///        parallel curve carrying the virtual sources.

#include <iosfwd>
#include <string>
#include <vector>

#include "vsrc/types.hpp"

namespace vsrc {

/// Coefficients of a real trigonometric polynomial
/// f(t) = sum_j cos_coeffs[j] cos(j t) + sin_coeffs[j] sin(j t).
struct TrigSeries {
  std::vector<double> cos_coeffs;
  std::vector<double> sin_coeffs;

  double value(double t) const;
  double derivative(double t, int order) const;
};

enum class CurveKind { Flower, Circle, Trigonometric };

/// Differential geometry of the curve at one parameter value.
struct CurvePoint {
  Point point;
  Point tangent;   ///< unit tangent along increasing t
  Point normal;    ///< outward unit normal (tangent rotated by -pi/2)
  double curvature = 0.0;  ///< signed, positive where the curve is convex
  double speed = 0.0;      ///< |gamma'(t)|
};

/// A smooth closed curve t -> (x(t), y(t)), t in [0, 2pi), traversed
/// counterclockwise. Every supported kind is a trigonometric polynomial, so
/// derivatives are exact.
class BoundaryCurve {
 public:
  /// x = (1 + 0.2 cos 2t) cos t, y = (1 + 0.9 cos 2t) sin t.
  static BoundaryCurve flower();
  static BoundaryCurve circle(double radius);
  /// Throws std::invalid_argument if the curve is not regular or is clockwise.
  static BoundaryCurve trigonometric(TrigSeries x, TrigSeries y);

  CurveKind kind() const { return kind_; }
  /// Radius for CurveKind::Circle, 0 otherwise.
  double radius() const { return radius_; }
  std::string describe() const;

  CurvePoint eval(double t) const;
  Point position(double t) const;

  /// Arclength, periodic trapezoid on a fine grid.
  double length() const { return length_; }
  /// Largest |curvature| over the sample grid.
  double max_abs_curvature() const { return max_abs_curvature_; }
  /// True if p lies strictly inside. Winding number about the sample polygon,
  /// refined against the exact curve close to the boundary.
  bool contains(const Point& p) const;
  /// Distance from p to the curve.
  double distance(const Point& p) const;

  const TrigSeries& x_series() const { return x_; }
  const TrigSeries& y_series() const { return y_; }

 private:
  BoundaryCurve(CurveKind kind, TrigSeries x, TrigSeries y, double radius);

  struct Projection {
    double distance;  ///< unsigned distance to the exact curve
    double side;      ///< (p - gamma(t)) . normal, positive outside
  };
  // Newton refinement of the nearest polygon segment onto the smooth curve.
  Projection project(const Point& p) const;

  CurveKind kind_;
  TrigSeries x_, y_;
  double radius_ = 0.0;
  double length_ = 0.0;
  double max_abs_curvature_ = 0.0;
  std::vector<Point> polygon_;
};

/// Point, tangent, outward normal and signed curvature at t.
/// Throws std::domain_error where |gamma'(t)| < 1e-12.
CurvePoint curve_eval(const BoundaryCurve& curve, double t);

/// Reads the coefficient format used by `--geometry file:<path>`:
///
///     # comment
///     x.cos  c0 c1 c2 ...
///     x.sin  s0 s1 s2 ...
///     y.cos  ...
///     y.sin  ...
///
/// Missing rows are zero. Throws std::invalid_argument on malformed input.
BoundaryCurve parse_curve(std::istream& in);
BoundaryCurve load_curve(const std::string& path);

/// Geometry selector: "flower", "circle:R" or "file:<path>".
BoundaryCurve curve_from_spec(const std::string& spec);

/// Collocation/quadrature nodes on the curve and the shifted source points.
struct Mesh {
  BoundaryCurve curve = BoundaryCurve::flower();
  double k = 0.0;
  double n_lambda = 0.0;
  double h = 0.0;

  std::vector<double> t;            ///< parameters, uniform step 2pi/N
  std::vector<Point> nodes;         ///< y_n on the curve
  std::vector<Point> normals;       ///< outward unit normals
  std::vector<double> curvature;    ///< signed curvature at y_n
  std::vector<double> weights;      ///< periodic trapezoid: |gamma'(t_n)| 2pi/N
  std::vector<double> element_lengths;  ///< arclength from node n to node n+1 (cyclic)
  std::vector<Point> sources;       ///< z_n = y_n - h nu_n

  std::size_t size() const { return nodes.size(); }
  double wavelength() const { return 2.0 * kPi / k; }
  /// max/min element arclength; meshes above 5 are flagged as not near-uniform.
  double element_ratio() const;
  bool near_uniform() const { return element_ratio() <= 5.0; }
};

/// Number of nodes giving n_lambda elements per wavelength: ceil(n_lambda |Gamma| / lambda).
std::size_t node_count(const BoundaryCurve& curve, double k, double n_lambda);

/// Builds the mesh with node_count() nodes. Throws std::invalid_argument on bad
/// k or n_lambda, and when h is negative, h >= 1/max|kappa|, a shifted source leaves
/// the interior, or the shifted polygon self-intersects.
Mesh build_mesh(const BoundaryCurve& curve, double k, double n_lambda, double h);

/// Same, with an explicit node count (N >= 3).
Mesh build_mesh_with_nodes(const BoundaryCurve& curve, std::size_t n, double k, double h);

/// Virtual source displacement c * lambda / n_lambda^beta.
double displacement_h(double lambda, double n_lambda, double beta, double c = 1.0);

/// Constant c that makes displacement_h(lambda, n, beta, c) equal lambda / base_n
/// at n = base_n, i.e. h = (lambda / base_n) (base_n / n)^beta.
double displacement_constant_for_base(double base_n, double beta);

/// Arclength ratio dS_h / dS = 1 - h kappa between the parallel curve and the curve.
/// Throws std::domain_error if 1 - h kappa <= 0 (the parallel curve folds over).
double surface_element_factor(double curvature, double h);

/// Winding-number containment test against an explicit closed polygon.
bool polygon_contains(const std::vector<Point>& polygon, const Point& p);

/// True if any two non-adjacent edges of the closed polygon intersect.
bool polygon_self_intersects(const std::vector<Point>& polygon);

}  // namespace vsrc
