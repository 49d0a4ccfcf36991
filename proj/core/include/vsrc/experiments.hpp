#pragma once

/// \file vsrc/experiments.hpp
/// \brief Experiment drivers: manufactured radiating field, plane-wave circle
///        scattering, spectra of B A and refinement tables.

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "vsrc/geometry.hpp"
#include "vsrc/linalg.hpp"
#include "vsrc/operator.hpp"
#include "vsrc/types.hpp"

namespace vsrc::experiments {

enum class ExperimentKind { Manufactured, Planewave, Spectrum, Table, MieCompare };

/// How N follows from N_lambda.
///  - Arclength: ceil(N_lambda |Gamma| / lambda).
///  - Parameter: N_lambda * 2pi / lambda rounded to the nearest even integer,
///    i.e. N_lambda elements per wavelength of the parameter t in [0, 2pi).
///    This gives N = 150, 302, 604, 1206 for the flower at N_lambda = 12 and
///    k = 4pi..32pi.
enum class MeshSizing { Arclength, Parameter };

std::string to_string(ExperimentKind kind);
ExperimentKind parse_kind(const std::string& name);
std::string to_string(MeshSizing sizing);
MeshSizing parse_sizing(const std::string& name);

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::Manufactured;
  std::string geometry = "flower";
  double k = 4.0 * kPi;
  double n_lambda = 12.0;
  double beta = 0.0;
  /// c in h = c lambda / N_lambda^beta. 0 selects 12^beta / 12, so every beta
  /// gives h = lambda/12 at N_lambda = 12.
  double h_const = 0.0;
  /// Explicit displacement; overrides beta and h_const when > 0.
  double h = 0.0;
  MeshSizing sizing = MeshSizing::Parameter;
  OperatorOptions op;
  linalg::GmresOptions gmres;
  /// Also assemble B A densely and compute its spectrum (manufactured/planewave).
  bool with_spectrum = false;
  /// Probe distance outside Gamma in wavelengths.
  double probe_distance = 0.25;

  std::vector<double> sweep_n_lambda{12.0, 24.0, 48.0, 96.0};
  std::vector<double> sweep_beta{0.0, 0.5, 1.0};

  /// Throws std::invalid_argument on a nonpositive k, N_lambda < 2, beta outside
  /// [0, 1], negative h or h_const, nonpositive tol or max_iter, or bad Pade terms.
  void validate() const;
  double wavelength() const { return 2.0 * kPi / k; }
  double effective_h_const() const;
  /// h for this configuration.
  double displacement() const;
};

std::size_t mesh_nodes(const BoundaryCurve& curve, double k, double n_lambda, MeshSizing sizing);
Mesh make_mesh(const ExperimentConfig& config);

/// Ratio form sum |numeric - exact|^2 / sum |exact|^2.
/// Throws std::invalid_argument on a length mismatch or an all-zero exact vector.
double relative_error(const CVector& numeric, const CVector& exact);
/// Square root of relative_error(): the usual relative l2 norm.
double relative_error_l2(const CVector& numeric, const CVector& exact);

/// y_n + d nu_n for every node: the outward parallel curve at distance d.
std::vector<Point> probe_points(const Mesh& mesh, double distance);

struct PhaseTimings {
  double mesh = 0.0;
  double assemble = 0.0;
  double solve = 0.0;
  double evaluate = 0.0;
  double spectrum = 0.0;
  double total() const { return mesh + assemble + solve + evaluate + spectrum; }
};

struct SolveReport {
  ExperimentKind kind = ExperimentKind::Manufactured;
  double k = 0.0;
  double n_lambda = 0.0;
  double beta = 0.0;
  double h = 0.0;
  std::size_t n = 0;

  CVector density;
  std::vector<Point> probes;
  CVector numeric;
  CVector exact;
  double rel_error = std::numeric_limits<double>::quiet_NaN();
  double rel_error_l2 = std::numeric_limits<double>::quiet_NaN();

  std::vector<Complex> eigenvalues;
  double max_abs_eig = std::numeric_limits<double>::quiet_NaN();
  double min_abs_eig = std::numeric_limits<double>::quiet_NaN();
  /// max|lambda| / min|lambda| of B A.
  double condition = std::numeric_limits<double>::quiet_NaN();
  /// sigma_max / sigma_min of B A, diagnostic only.
  double svd_condition = std::numeric_limits<double>::quiet_NaN();

  linalg::GmresReport gmres;
  PhaseTimings timings;
};

/// f = F on Gamma, solve B A v = B f, compare the field with F at the probes.
SolveReport run_manufactured(const ExperimentConfig& config);
/// Circle geometry, f = -e^{ikx}, compare the scattered field with the Mie series.
SolveReport run_planewave(const ExperimentConfig& config);
/// Dense B A, its eigenvalues and condition numbers; no solve.
SolveReport run_spectrum(const ExperimentConfig& config);

struct TableRow {
  double n_lambda = 0.0;
  double beta = 0.0;
  double h = 0.0;
  std::size_t n = 0;
  double condition = 0.0;
  double rel_error = 0.0;
  double rel_error_l2 = 0.0;
  int gmres_iters = 0;
  bool converged = false;
  double seconds = 0.0;
};

/// Manufactured runs with spectra over sweep_beta x sweep_n_lambda. on_row is
/// called after each row so a caller can flush partial results.
std::vector<TableRow> run_table(const ExperimentConfig& config,
                                const std::function<void(const TableRow&)>& on_row = {});

}  // namespace vsrc::experiments
