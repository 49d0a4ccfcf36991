#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "vsrc/geometry.hpp"

namespace {

using namespace vsrc;

TEST(Geometry, FlowerPoints) {
  const BoundaryCurve flower = BoundaryCurve::flower();
  const Point p0 = curve_eval(flower, 0.0).point;
  EXPECT_NEAR(p0.x(), 1.2, 1e-15);
  EXPECT_NEAR(p0.y(), 0.0, 1e-15);
  const Point p1 = curve_eval(flower, kPi / 2).point;
  EXPECT_NEAR(p1.x(), 0.0, 1e-15);
  EXPECT_NEAR(p1.y(), 0.1, 1e-15);
}

TEST(Geometry, FlowerMatchesProductForm) {
  const BoundaryCurve flower = BoundaryCurve::flower();
  for (double t = 0.0; t < 2 * kPi; t += 0.137) {
    const Point p = flower.position(t);
    EXPECT_NEAR(p.x(), (1 + 0.2 * std::cos(2 * t)) * std::cos(t), 1e-14);
    EXPECT_NEAR(p.y(), (1 + 0.9 * std::cos(2 * t)) * std::sin(t), 1e-14);
  }
}

TEST(Geometry, CircleDifferentialGeometry) {
  const BoundaryCurve c = BoundaryCurve::circle(1.0);
  for (double t = 0.0; t < 2 * kPi; t += 0.3) {
    const CurvePoint cp = curve_eval(c, t);
    EXPECT_NEAR(cp.normal.x(), std::cos(t), 1e-14);
    EXPECT_NEAR(cp.normal.y(), std::sin(t), 1e-14);
    EXPECT_NEAR(cp.curvature, 1.0, 1e-12);
  }
}

// Finite differences of the parametrization give tangent, normal and curvature independently.
TEST(Geometry, FlowerCurvatureMatchesFiniteDifferences) {
  const BoundaryCurve flower = BoundaryCurve::flower();
  const double d = 1e-4;
  for (double t = 0.05; t < 2 * kPi; t += 0.41) {
    const Point p = flower.position(t), pp = flower.position(t + d), pm = flower.position(t - d);
    const Point d1 = (pp - pm) / (2 * d);
    const Point d2 = (pp - 2 * p + pm) / (d * d);
    const double kappa = (d1.x() * d2.y() - d1.y() * d2.x()) / std::pow(d1.norm(), 3);
    const CurvePoint cp = curve_eval(flower, t);
    EXPECT_NEAR(cp.curvature, kappa, 1e-5 * std::max(1.0, std::abs(kappa)));
    EXPECT_NEAR(cp.speed, d1.norm(), 1e-7);
    EXPECT_NEAR(cp.normal.dot(d1), 0.0, 1e-7);
    EXPECT_NEAR(cp.normal.norm(), 1.0, 1e-15);
  }
}

TEST(Geometry, NormalsPointOutward) {
  const BoundaryCurve flower = BoundaryCurve::flower();
  for (double t = 0.0; t < 2 * kPi; t += 0.1) {
    const CurvePoint cp = curve_eval(flower, t);
    EXPECT_FALSE(flower.contains(cp.point + 1e-3 * cp.normal));
    EXPECT_TRUE(flower.contains(cp.point - 1e-3 * cp.normal));
  }
}

TEST(Geometry, Lengths) {
  EXPECT_NEAR(BoundaryCurve::circle(1.0).length(), 2 * kPi, 1e-12);
  EXPECT_NEAR(BoundaryCurve::circle(2.5).length(), 5 * kPi, 5e-12);
  // independent estimate: fine polygon
  const BoundaryCurve flower = BoundaryCurve::flower();
  double poly = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    poly += (flower.position(2 * kPi * (i + 1) / n) - flower.position(2 * kPi * i / n)).norm();
  }
  EXPECT_NEAR(flower.length(), poly, 1e-6);
}

TEST(Geometry, CircleMeshCount) {
  const Mesh m = build_mesh(BoundaryCurve::circle(1.0), 4 * kPi, 12, 0.0);
  EXPECT_EQ(m.size(), 151u);
  double sum = 0.0;
  for (double w : m.weights) sum += w;
  EXPECT_NEAR(sum, 2 * kPi, 1e-12);
  for (std::size_t i = 0; i < m.size(); ++i) {
    EXPECT_NEAR((m.normals[i] - m.nodes[i]).norm(), 0.0, 1e-14);
    EXPECT_NEAR(m.curvature[i], 1.0, 1e-10);
  }
}

TEST(Geometry, CircleShift) {
  const Mesh m = build_mesh(BoundaryCurve::circle(1.0), 4 * kPi, 12, 0.25);
  for (const Point& z : m.sources) EXPECT_NEAR(z.norm(), 0.75, 1e-14);
}

TEST(Geometry, WeightsIntegrateSmoothFunctions) {
  const BoundaryCurve flower = BoundaryCurve::flower();
  for (std::size_t n : {64u, 128u, 256u}) {
    const Mesh m = build_mesh_with_nodes(flower, n, 4 * kPi, 0.0);
    double len = 0.0, cos_int = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      len += m.weights[i];
      cos_int += m.weights[i] * std::cos(m.t[i]);
    }
    EXPECT_NEAR(len, flower.length(), 1e-6 * flower.length());
    if (n >= 128) {
      // reference by a much finer trapezoid rule
      const Mesh fine = build_mesh_with_nodes(flower, 4096, 4 * kPi, 0.0);
      double ref = 0.0;
      for (std::size_t i = 0; i < fine.size(); ++i) ref += fine.weights[i] * std::cos(fine.t[i]);
      EXPECT_NEAR(cos_int, ref, 1e-8);
    }
  }
}

TEST(Geometry, ElementLengthsSumToLength) {
  const Mesh m = build_mesh_with_nodes(BoundaryCurve::flower(), 150, 4 * kPi, 0.0);
  double sum = 0.0;
  for (double l : m.element_lengths) sum += l;
  EXPECT_NEAR(sum, m.curve.length(), 1e-10);
  EXPECT_TRUE(m.near_uniform());
}

TEST(Geometry, SourcesInsideForValidShift) {
  const BoundaryCurve flower = BoundaryCurve::flower();
  for (double h : {0.01, 0.04, 0.08}) {
    const Mesh m = build_mesh_with_nodes(flower, 200, 4 * kPi, h);
    for (const Point& z : m.sources) EXPECT_TRUE(flower.contains(z));
  }
}

TEST(Geometry, InvalidShiftRejected) {
  const BoundaryCurve flower = BoundaryCurve::flower();
  EXPECT_THROW(build_mesh(flower, 4 * kPi, 12, -0.1), std::invalid_argument);
  EXPECT_THROW(build_mesh(flower, 4 * kPi, 12, 1.0 / flower.max_abs_curvature()),
               std::invalid_argument);
  EXPECT_THROW(build_mesh(BoundaryCurve::circle(1.0), 4 * kPi, 12, 1.0), std::invalid_argument);
  EXPECT_THROW(build_mesh(flower, 0.0, 12, 0.0), std::invalid_argument);
  EXPECT_THROW(build_mesh(flower, 4 * kPi, 1.0, 0.0), std::invalid_argument);
}

TEST(Geometry, Displacement) {
  EXPECT_DOUBLE_EQ(displacement_h(0.5, 12, 1.0), 1.0 / 24);
  EXPECT_DOUBLE_EQ(displacement_h(0.5, 12, 0.0, 0.3), displacement_h(0.5, 96, 0.0, 0.3));
  EXPECT_NEAR(displacement_h(0.5, 96, 0.5), 0.05103, 1e-5);
  for (double beta : {0.0, 0.5, 1.0}) {
    const double c = displacement_constant_for_base(12, beta);
    EXPECT_NEAR(displacement_h(0.5, 12, beta, c), 0.5 / 12, 1e-15);
  }
}

TEST(Geometry, SurfaceElementFactor) {
  EXPECT_DOUBLE_EQ(surface_element_factor(0.0, 0.3), 1.0);
  EXPECT_DOUBLE_EQ(surface_element_factor(1.0, 0.25), 0.75);
  EXPECT_DOUBLE_EQ(surface_element_factor(7.0, 0.0), 1.0);
  EXPECT_THROW(surface_element_factor(4.0, 0.25), std::domain_error);
  const Mesh m = build_mesh_with_nodes(BoundaryCurve::circle(1.0), 256, 4 * kPi, 0.25);
  double shifted = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    shifted += (m.sources[(i + 1) % m.size()] - m.sources[i]).norm();
  }
  EXPECT_NEAR(shifted / (2 * kPi), 0.75, 1e-4);
}

TEST(Geometry, ParseCurveFile) {
  std::istringstream in(
      "# ellipse\n"
      "x.cos 0 2\n"
      "y.sin 0 1\n");
  const BoundaryCurve e = parse_curve(in);
  EXPECT_EQ(e.kind(), CurveKind::Trigonometric);
  EXPECT_NEAR(e.position(0.0).x(), 2.0, 1e-15);
  EXPECT_NEAR(curve_eval(e, 0.0).curvature, 2.0 / 1.0, 1e-12);  // a / b^2
  std::istringstream bad("z.cos 1\n");
  EXPECT_THROW(parse_curve(bad), std::invalid_argument);
  std::istringstream clockwise("x.cos 0 1\ny.sin 0 -1\n");
  EXPECT_THROW(parse_curve(clockwise), std::invalid_argument);
}

TEST(Geometry, CurveSpecs) {
  EXPECT_EQ(curve_from_spec("flower").kind(), CurveKind::Flower);
  EXPECT_DOUBLE_EQ(curve_from_spec("circle:2").radius(), 2.0);
  EXPECT_THROW(curve_from_spec("square"), std::invalid_argument);
  EXPECT_THROW(curve_from_spec("circle:-1"), std::invalid_argument);
}

TEST(Geometry, Polygons) {
  const std::vector<Point> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  EXPECT_TRUE(polygon_contains(square, Point(0.5, 0.5)));
  EXPECT_FALSE(polygon_contains(square, Point(1.5, 0.5)));
  EXPECT_FALSE(polygon_self_intersects(square));
  const std::vector<Point> bowtie{{0, 0}, {1, 1}, {1, 0}, {0, 1}};
  EXPECT_TRUE(polygon_self_intersects(bowtie));
}

}  // namespace
