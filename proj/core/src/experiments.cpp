#include "vsrc/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "vsrc/reference.hpp"

namespace vsrc::experiments {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void fill_spectrum(const VirtualSourceOperator& op, SolveReport& report) {
  const auto start = Clock::now();
  const CMatrix ba = op.assemble_dense(OperatorKind::BA);
  report.eigenvalues = linalg::eigenvalues_dense(ba);
  report.max_abs_eig = 0.0;
  report.min_abs_eig = std::numeric_limits<double>::infinity();
  for (const Complex& z : report.eigenvalues) {
    report.max_abs_eig = std::max(report.max_abs_eig, std::abs(z));
    report.min_abs_eig = std::min(report.min_abs_eig, std::abs(z));
  }
  report.condition = linalg::condition_number(report.eigenvalues);
  report.svd_condition = linalg::singular_value_condition_number(ba);
  report.timings.spectrum = seconds_since(start);
}

// Shared body of the two solve experiments: boundary data f at the nodes,
// exact field at the probes.
SolveReport solve_and_compare(const ExperimentConfig& config, ExperimentKind kind,
                              const std::function<Complex(const Point&)>& boundary_data,
                              const std::function<Complex(const Point&)>& exact_field) {
  config.validate();
  SolveReport report;
  report.kind = kind;
  report.k = config.k;
  report.beta = config.beta;

  auto start = Clock::now();
  Mesh mesh = make_mesh(config);
  report.timings.mesh = seconds_since(start);
  report.n = mesh.size();
  report.n_lambda = config.n_lambda;
  report.h = mesh.h;

  start = Clock::now();
  const VirtualSourceOperator op(mesh, config.op);
  report.timings.assemble = seconds_since(start);

  start = Clock::now();
  CVector f(static_cast<Eigen::Index>(mesh.size()));
  for (std::size_t i = 0; i < mesh.size(); ++i) f(static_cast<Eigen::Index>(i)) = boundary_data(mesh.nodes[i]);
  const CVector rhs = op.apply_B(f);
  const auto map = op.as_map(OperatorKind::BA);
  report.gmres = linalg::gmres(map, rhs, config.gmres);
  report.density = report.gmres.solution;
  report.timings.solve = seconds_since(start);

  start = Clock::now();
  report.probes = probe_points(mesh, config.probe_distance * config.wavelength());
  report.numeric = op.evaluate_field(report.density, report.probes);
  report.exact.resize(static_cast<Eigen::Index>(report.probes.size()));
  for (std::size_t j = 0; j < report.probes.size(); ++j) {
    report.exact(static_cast<Eigen::Index>(j)) = exact_field(report.probes[j]);
  }
  report.rel_error = relative_error(report.numeric, report.exact);
  report.rel_error_l2 = std::sqrt(report.rel_error);
  report.timings.evaluate = seconds_since(start);

  if (config.with_spectrum) fill_spectrum(op, report);
  return report;
}

}  // namespace

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::Manufactured: return "manufactured";
    case ExperimentKind::Planewave: return "planewave";
    case ExperimentKind::Spectrum: return "spectrum";
    case ExperimentKind::Table: return "table";
    case ExperimentKind::MieCompare: return "mie-compare";
  }
  return "unknown";
}

ExperimentKind parse_kind(const std::string& name) {
  for (auto kind : {ExperimentKind::Manufactured, ExperimentKind::Planewave, ExperimentKind::Spectrum,
                    ExperimentKind::Table, ExperimentKind::MieCompare}) {
    if (to_string(kind) == name) return kind;
  }
  throw std::invalid_argument("unknown experiment kind '" + name + "'");
}

std::string to_string(MeshSizing sizing) {
  return sizing == MeshSizing::Arclength ? "arclength" : "parameter";
}

MeshSizing parse_sizing(const std::string& name) {
  if (name == "arclength") return MeshSizing::Arclength;
  if (name == "parameter") return MeshSizing::Parameter;
  throw std::invalid_argument("unknown mesh sizing '" + name + "' (arclength | parameter)");
}

void ExperimentConfig::validate() const {
  if (!(k > 0.0) || !std::isfinite(k)) throw std::invalid_argument("k must be positive");
  if (!(n_lambda >= 2.0)) throw std::invalid_argument("N_lambda must be >= 2");
  if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("beta must lie in [0, 1]");
  if (!(h_const >= 0.0)) throw std::invalid_argument("h constant must be nonnegative");
  if (!(h >= 0.0)) throw std::invalid_argument("h must be nonnegative");
  if (!(gmres.tol > 0.0)) throw std::invalid_argument("GMRES tolerance must be positive");
  if (gmres.max_iter < 1) throw std::invalid_argument("GMRES max iterations must be positive");
  if (gmres.restart < 0) throw std::invalid_argument("GMRES restart must be nonnegative");
  if (op.pade_terms < 1 || op.pade_terms > 16) throw std::invalid_argument("Pade terms must be in [1, 16]");
  if (!(probe_distance > 0.0)) throw std::invalid_argument("probe distance must be positive");
}

double ExperimentConfig::effective_h_const() const {
  return h_const > 0.0 ? h_const : displacement_constant_for_base(12.0, beta);
}

double ExperimentConfig::displacement() const {
  if (h > 0.0) return h;
  return displacement_h(wavelength(), n_lambda, beta, effective_h_const());
}

std::size_t mesh_nodes(const BoundaryCurve& curve, double k, double n_lambda, MeshSizing sizing) {
  if (sizing == MeshSizing::Arclength) return node_count(curve, k, n_lambda);
  if (!(k > 0.0)) throw std::invalid_argument("wavenumber must be positive");
  if (!(n_lambda >= 2.0)) throw std::invalid_argument("elements per wavelength must be >= 2");
  const double n = n_lambda * k;
  return static_cast<std::size_t>(std::max(4.0, 2.0 * std::round(0.5 * n)));
}

Mesh make_mesh(const ExperimentConfig& config) {
  const BoundaryCurve curve = curve_from_spec(config.geometry);
  const std::size_t n = mesh_nodes(curve, config.k, config.n_lambda, config.sizing);
  Mesh mesh = build_mesh_with_nodes(curve, n, config.k, config.displacement());
  mesh.n_lambda = config.n_lambda;
  return mesh;
}

double relative_error(const CVector& numeric, const CVector& exact) {
  if (numeric.size() != exact.size()) throw std::invalid_argument("relative error: length mismatch");
  const double denom = exact.squaredNorm();
  if (!(denom > 0.0)) throw std::invalid_argument("relative error: exact values are all zero");
  return (numeric - exact).squaredNorm() / denom;
}

double relative_error_l2(const CVector& numeric, const CVector& exact) {
  return std::sqrt(relative_error(numeric, exact));
}

std::vector<Point> probe_points(const Mesh& mesh, double distance) {
  std::vector<Point> out(mesh.size());
  for (std::size_t i = 0; i < mesh.size(); ++i) out[i] = mesh.nodes[i] + distance * mesh.normals[i];
  return out;
}

SolveReport run_manufactured(const ExperimentConfig& config) {
  const double k = config.k;
  auto field = [k](const Point& x) { return reference::manufactured_field(k, x); };
  return solve_and_compare(config, ExperimentKind::Manufactured, field, field);
}

SolveReport run_planewave(const ExperimentConfig& config) {
  const BoundaryCurve curve = curve_from_spec(config.geometry);
  if (curve.kind() != CurveKind::Circle) {
    throw std::invalid_argument("plane-wave benchmark needs a circle geometry (circle:R)");
  }
  const double k = config.k, radius = curve.radius();
  auto incident = [k](const Point& x) { return -std::exp(kI * (k * x.x())); };
  auto scattered = [k, radius](const Point& x) {
    return reference::mie_soft_circle(k, radius, x).scattered;
  };
  return solve_and_compare(config, ExperimentKind::Planewave, incident, scattered);
}

SolveReport run_spectrum(const ExperimentConfig& config) {
  config.validate();
  SolveReport report;
  report.kind = ExperimentKind::Spectrum;
  report.k = config.k;
  report.beta = config.beta;
  report.n_lambda = config.n_lambda;

  auto start = Clock::now();
  Mesh mesh = make_mesh(config);
  report.timings.mesh = seconds_since(start);
  report.n = mesh.size();
  report.h = mesh.h;

  start = Clock::now();
  const VirtualSourceOperator op(std::move(mesh), config.op);
  report.timings.assemble = seconds_since(start);
  fill_spectrum(op, report);
  return report;
}

std::vector<TableRow> run_table(const ExperimentConfig& config,
                                const std::function<void(const TableRow&)>& on_row) {
  config.validate();
  std::vector<TableRow> rows;
  for (double beta : config.sweep_beta) {
    for (double n_lambda : config.sweep_n_lambda) {
      ExperimentConfig run = config;
      run.beta = beta;
      run.n_lambda = n_lambda;
      run.with_spectrum = true;
      const SolveReport r = run_manufactured(run);
      TableRow row;
      row.n_lambda = n_lambda;
      row.beta = beta;
      row.h = r.h;
      row.n = r.n;
      row.condition = r.condition;
      row.rel_error = r.rel_error;
      row.rel_error_l2 = r.rel_error_l2;
      row.gmres_iters = r.gmres.iterations;
      row.converged = r.gmres.converged;
      row.seconds = r.timings.total();
      rows.push_back(row);
      if (on_row) on_row(row);
    }
  }
  return rows;
}

}  // namespace vsrc::experiments
