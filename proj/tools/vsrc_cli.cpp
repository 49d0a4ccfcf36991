// vsrc: experiment driver for the virtual-source Helmholtz solver.
//
//   vsrc solve        manufactured radiating field on the flower curve (default)
//   vsrc mie-compare  plane wave scattered by a sound-soft circle vs the Mie series
//   vsrc spectrum     eigenvalues of the dense preconditioned matrix B A
//   vsrc table        condition number / error sweep over N_lambda and beta

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "vsrc/experiments.hpp"
#include "vsrc/operator.hpp"
#include "vsrc/report_io.hpp"

namespace {

using namespace vsrc;
using experiments::ExperimentConfig;
using experiments::ExperimentKind;

// Accepts plain numbers and multiples of pi: "12.566", "4pi", "pi", "0.5*pi".
double parse_scalar(std::string s) {
  double factor = 1.0;
  if (s.size() >= 2 && s.compare(s.size() - 2, 2, "pi") == 0) {
    factor = kPi;
    s.erase(s.size() - 2);
    if (!s.empty() && s.back() == '*') s.pop_back();
    if (s.empty()) return factor;
  }
  std::size_t used = 0;
  const double x = std::stod(s, &used);
  if (used != s.size()) throw std::invalid_argument("not a number: " + s);
  return x * factor;
}

struct Cli {
  ExperimentConfig config;
  std::string k = "4pi";
  std::string pade_angle = "0.5pi";
  std::string sizing = "parameter";
  std::string out;
  std::string format = "csv";
  bool spectrum = false;
  int grid = 0;
  double grid_margin = 1.0;
};

void add_common(CLI::App* app, Cli& cli) {
  auto& c = cli.config;
  app->add_option("--geometry", c.geometry, "flower | circle:R | file:PATH")->capture_default_str();
  app->add_option("--k", cli.k, "wavenumber, e.g. 12.566 or 4pi")->capture_default_str();
  app->add_option("--nlambda", c.n_lambda, "elements per wavelength")->capture_default_str();
  app->add_option("--beta", c.beta, "h = c lambda / N_lambda^beta")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  app->add_option("--h-const", c.h_const, "c in the h rule; 0 picks 12^beta/12")->capture_default_str();
  app->add_option("--displacement", c.h, "explicit displacement, overrides --beta/--h-const")->capture_default_str();
  app->add_option("--sizing", cli.sizing, "node count rule: parameter | arclength")->capture_default_str();
  app->add_option("--pade-terms", c.op.pade_terms, "Pade terms M")->check(CLI::Range(1, 16))->capture_default_str();
  app->add_option("--pade-angle", cli.pade_angle, "branch rotation angle, e.g. 0.5pi")->capture_default_str();
  app->add_option("--damping", c.op.damping, "OSRC damping eps in k + i eps k^(1/3)")->capture_default_str();
  app->add_option("--tol", c.gmres.tol, "GMRES relative residual tolerance")->capture_default_str();
  app->add_option("--max-iter", c.gmres.max_iter, "GMRES iteration cap")->capture_default_str();
  app->add_option("--restart", c.gmres.restart, "GMRES restart length, 0 = none")->capture_default_str();
  app->add_option("--probe-distance", c.probe_distance, "probe offset outside the boundary, in wavelengths")->capture_default_str();
  app->add_option("--out", cli.out, "output path prefix; stdout if empty");
  app->add_option("--format", cli.format, "csv | json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
}

void finalize(Cli& cli) {
  cli.config.k = parse_scalar(cli.k);
  cli.config.op.pade_angle = parse_scalar(cli.pade_angle);
  cli.config.sizing = experiments::parse_sizing(cli.sizing);
  cli.config.validate();
}

std::ofstream open_file(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  return f;
}

// Field of the computed density on a regular grid around the boundary; interior points skipped.
void write_field_grid(const Cli& cli, const experiments::SolveReport& report, std::ostream& out) {
  const Mesh mesh = experiments::make_mesh(cli.config);
  const VirtualSourceOperator op(mesh, cli.config.op);
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (const Point& p : mesh.nodes) {
    x0 = std::min(x0, p.x()); x1 = std::max(x1, p.x());
    y0 = std::min(y0, p.y()); y1 = std::max(y1, p.y());
  }
  const double pad = cli.grid_margin;
  x0 -= pad; x1 += pad; y0 -= pad; y1 += pad;
  std::vector<Point> points;
  const double gap = 0.5 * mesh.h;
  for (int i = 0; i < cli.grid; ++i) {
    for (int j = 0; j < cli.grid; ++j) {
      const Point p(x0 + (x1 - x0) * i / (cli.grid - 1), y0 + (y1 - y0) * j / (cli.grid - 1));
      if (!mesh.curve.contains(p) && mesh.curve.distance(p) > gap) points.push_back(p);
    }
  }
  io::write_field_grid_csv(out, points, op.evaluate_field(report.density, points));
}

void emit_report(const Cli& cli, const experiments::SolveReport& r) {
  if (cli.format == "json") {
    if (cli.out.empty()) {
      std::cout << io::report_to_json(r) << '\n';
    } else {
      open_file(cli.out + ".json") << io::report_to_json(r) << '\n';
    }
  } else if (cli.out.empty()) {
    io::write_summary_csv(std::cout, r);
  } else {
    auto summary = open_file(cli.out + ".csv");
    io::write_summary_csv(summary, r);
    if (!r.probes.empty()) {
      auto probes = open_file(cli.out + "_probes.csv");
      io::write_probes_csv(probes, r);
      auto residuals = open_file(cli.out + "_residuals.csv");
      io::write_residuals_csv(residuals, r.gmres);
    }
    if (!r.eigenvalues.empty()) {
      auto eigs = open_file(cli.out + "_eigenvalues.csv");
      io::write_eigenvalues_csv(eigs, r.eigenvalues);
    }
  }
  if (cli.grid > 1 && r.density.size() > 0) {
    if (cli.out.empty()) throw std::invalid_argument("--field-grid needs --out");
    auto grid = open_file(cli.out + "_field.csv");
    write_field_grid(cli, r, grid);
  }

  std::cerr << experiments::to_string(r.kind) << ": N = " << r.n << ", h = " << r.h;
  if (std::isfinite(r.rel_error)) {
    std::cerr << ", rel. error = " << r.rel_error << " (l2 " << r.rel_error_l2 << ")"
              << ", GMRES " << r.gmres.iterations << " its"
              << (r.gmres.converged ? "" : " (not converged)");
  }
  if (std::isfinite(r.condition)) std::cerr << ", cond = " << r.condition;
  std::cerr << '\n';
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_scalar(item));
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Virtual-source OSRC solver for exterior 2D Helmholtz problems"};
  app.require_subcommand(1);

  Cli solve_cli, mie_cli, spectrum_cli, table_cli;
  mie_cli.config.geometry = "circle:1";
  mie_cli.config.kind = ExperimentKind::MieCompare;
  spectrum_cli.config.kind = ExperimentKind::Spectrum;
  table_cli.config.kind = ExperimentKind::Table;

  auto* solve = app.add_subcommand("solve", "solve a scattering problem and compare with the exact field");
  add_common(solve, solve_cli);
  std::string experiment = "manufactured";
  solve->add_option("--experiment", experiment, "manufactured | planewave")
      ->check(CLI::IsMember({"manufactured", "planewave"}))->capture_default_str();
  solve->add_flag("--spectrum", solve_cli.spectrum, "also compute the spectrum of B A");
  solve->add_option("--field-grid", solve_cli.grid, "write the field on an n x n grid to <out>_field.csv");
  solve->add_option("--grid-margin", solve_cli.grid_margin, "grid extent beyond the boundary")->capture_default_str();

  auto* mie = app.add_subcommand("mie-compare", "plane wave on a sound-soft circle vs the Mie series");
  add_common(mie, mie_cli);
  mie->add_flag("--spectrum", mie_cli.spectrum, "also compute the spectrum of B A");
  mie->add_option("--field-grid", mie_cli.grid, "write the field on an n x n grid to <out>_field.csv");
  mie->add_option("--grid-margin", mie_cli.grid_margin, "grid extent beyond the boundary")->capture_default_str();

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of the dense preconditioned matrix B A");
  add_common(spectrum, spectrum_cli);

  auto* table = app.add_subcommand("table", "condition number and error over N_lambda x beta");
  add_common(table, table_cli);
  std::string nlambdas = "12,24,48,96", betas = "0,0.5,1";
  table->add_option("--nlambdas", nlambdas, "comma separated N_lambda values")->capture_default_str();
  table->add_option("--betas", betas, "comma separated beta values")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      finalize(solve_cli);
      solve_cli.config.with_spectrum = solve_cli.spectrum;
      if (experiment == "planewave") {
        solve_cli.config.kind = ExperimentKind::Planewave;
        emit_report(solve_cli, experiments::run_planewave(solve_cli.config));
      } else {
        emit_report(solve_cli, experiments::run_manufactured(solve_cli.config));
      }
    } else if (mie->parsed()) {
      finalize(mie_cli);
      mie_cli.config.with_spectrum = mie_cli.spectrum;
      auto report = experiments::run_planewave(mie_cli.config);
      report.kind = ExperimentKind::MieCompare;
      emit_report(mie_cli, report);
    } else if (spectrum->parsed()) {
      finalize(spectrum_cli);
      emit_report(spectrum_cli, experiments::run_spectrum(spectrum_cli.config));
    } else if (table->parsed()) {
      table_cli.config.sweep_n_lambda = parse_list(nlambdas);
      table_cli.config.sweep_beta = parse_list(betas);
      finalize(table_cli);
      std::unique_ptr<std::ofstream> file;
      std::ostream* out = &std::cout;
      const bool csv = table_cli.format == "csv";
      if (!table_cli.out.empty()) {
        file = std::make_unique<std::ofstream>(open_file(table_cli.out + (csv ? ".csv" : ".json")));
        out = file.get();
      }
      if (csv) io::write_table_header(*out);
      const auto rows = experiments::run_table(table_cli.config, [&](const experiments::TableRow& row) {
        if (csv) {
          io::write_table_row(*out, row);
          out->flush();
        }
        std::cerr << "N_lambda = " << row.n_lambda << ", beta = " << row.beta << ": N = " << row.n
                  << ", cond = " << row.condition << ", rel. error = " << row.rel_error << '\n';
      });
      if (!csv) *out << io::table_to_json(rows) << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
