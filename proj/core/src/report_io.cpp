#include "vsrc/report_io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace vsrc::io {

namespace {

using nlohmann::json;

json number_or_null(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

json complex_array(const CVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back({v(i).real(), v(i).imag()});
  return out;
}

json row_json(const experiments::TableRow& row) {
  return {{"n_lambda", row.n_lambda},
          {"beta", row.beta},
          {"h", row.h},
          {"N", row.n},
          {"condition", number_or_null(row.condition)},
          {"rel_error", number_or_null(row.rel_error)},
          {"rel_error_l2", number_or_null(row.rel_error_l2)},
          {"gmres_iters", row.gmres_iters},
          {"converged", row.converged},
          {"seconds", row.seconds}};
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void write_summary_csv(std::ostream& out, const experiments::SolveReport& r) {
  out << "kind,k,n_lambda,beta,h,N,rel_error,rel_error_l2,condition,svd_condition,"
         "max_abs_eig,min_abs_eig,gmres_iters,converged,true_residual,"
         "t_mesh,t_assemble,t_solve,t_evaluate,t_spectrum\n";
  out << experiments::to_string(r.kind) << ',' << format_double(r.k) << ','
      << format_double(r.n_lambda) << ',' << format_double(r.beta) << ',' << format_double(r.h)
      << ',' << r.n << ',' << format_double(r.rel_error) << ',' << format_double(r.rel_error_l2)
      << ',' << format_double(r.condition) << ',' << format_double(r.svd_condition) << ','
      << format_double(r.max_abs_eig) << ',' << format_double(r.min_abs_eig) << ','
      << r.gmres.iterations << ',' << (r.gmres.converged ? 1 : 0) << ','
      << format_double(r.gmres.true_residual) << ',' << format_double(r.timings.mesh) << ','
      << format_double(r.timings.assemble) << ',' << format_double(r.timings.solve) << ','
      << format_double(r.timings.evaluate) << ',' << format_double(r.timings.spectrum) << '\n';
}

void write_probes_csv(std::ostream& out, const experiments::SolveReport& r) {
  out << "x,y,re_u,im_u,re_exact,im_exact,abs_err\n";
  for (std::size_t j = 0; j < r.probes.size(); ++j) {
    const auto i = static_cast<Eigen::Index>(j);
    out << format_double(r.probes[j].x()) << ',' << format_double(r.probes[j].y()) << ','
        << format_double(r.numeric(i).real()) << ',' << format_double(r.numeric(i).imag()) << ','
        << format_double(r.exact(i).real()) << ',' << format_double(r.exact(i).imag()) << ','
        << format_double(std::abs(r.numeric(i) - r.exact(i))) << '\n';
  }
}

void write_residuals_csv(std::ostream& out, const linalg::GmresReport& gmres) {
  out << "iteration,rel_residual\n";
  for (std::size_t i = 0; i < gmres.residuals.size(); ++i) {
    out << i << ',' << format_double(gmres.residuals[i]) << '\n';
  }
}

void write_eigenvalues_csv(std::ostream& out, const std::vector<Complex>& eigenvalues) {
  out << "index,re,im,abs\n";
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
    out << i << ',' << format_double(eigenvalues[i].real()) << ','
        << format_double(eigenvalues[i].imag()) << ',' << format_double(std::abs(eigenvalues[i]))
        << '\n';
  }
}

void write_field_grid_csv(std::ostream& out, const std::vector<Point>& points,
                          const CVector& values) {
  if (static_cast<Eigen::Index>(points.size()) != values.size()) {
    throw std::invalid_argument("field grid: points and values differ in length");
  }
  out << "x,y,re_u,im_u,abs_u\n";
  for (std::size_t j = 0; j < points.size(); ++j) {
    const Complex u = values(static_cast<Eigen::Index>(j));
    out << format_double(points[j].x()) << ',' << format_double(points[j].y()) << ','
        << format_double(u.real()) << ',' << format_double(u.imag()) << ','
        << format_double(std::abs(u)) << '\n';
  }
}

void write_table_header(std::ostream& out) {
  out << "n_lambda,beta,h,N,condition,rel_error,rel_error_l2,gmres_iters,converged,seconds\n";
}

void write_table_row(std::ostream& out, const experiments::TableRow& row) {
  out << format_double(row.n_lambda) << ',' << format_double(row.beta) << ','
      << format_double(row.h) << ',' << row.n << ',' << format_double(row.condition) << ','
      << format_double(row.rel_error) << ',' << format_double(row.rel_error_l2) << ','
      << row.gmres_iters << ',' << (row.converged ? 1 : 0) << ',' << format_double(row.seconds)
      << '\n';
}

std::string report_to_json(const experiments::SolveReport& r, int indent) {
  json j;
  j["kind"] = experiments::to_string(r.kind);
  j["k"] = r.k;
  j["n_lambda"] = r.n_lambda;
  j["beta"] = r.beta;
  j["h"] = r.h;
  j["N"] = r.n;
  j["rel_error"] = number_or_null(r.rel_error);
  j["rel_error_l2"] = number_or_null(r.rel_error_l2);
  j["condition"] = number_or_null(r.condition);
  j["svd_condition"] = number_or_null(r.svd_condition);
  j["max_abs_eig"] = number_or_null(r.max_abs_eig);
  j["min_abs_eig"] = number_or_null(r.min_abs_eig);
  j["gmres"] = {{"iterations", r.gmres.iterations},
                {"converged", r.gmres.converged},
                {"tolerance", r.gmres.tolerance},
                {"true_residual", number_or_null(r.gmres.true_residual)},
                {"residuals", r.gmres.residuals}};
  j["timings"] = {{"mesh", r.timings.mesh},
                  {"assemble", r.timings.assemble},
                  {"solve", r.timings.solve},
                  {"evaluate", r.timings.evaluate},
                  {"spectrum", r.timings.spectrum}};
  json probes = json::array();
  for (const Point& p : r.probes) probes.push_back({p.x(), p.y()});
  j["probes"] = std::move(probes);
  j["numeric"] = complex_array(r.numeric);
  j["exact"] = complex_array(r.exact);
  j["density"] = complex_array(r.density);
  json eigs = json::array();
  for (const Complex& z : r.eigenvalues) eigs.push_back({z.real(), z.imag()});
  j["eigenvalues"] = std::move(eigs);
  return j.dump(indent);
}

std::string table_to_json(const std::vector<experiments::TableRow>& rows, int indent) {
  json j = json::array();
  for (const auto& row : rows) j.push_back(row_json(row));
  return j.dump(indent);
}

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw std::out_of_range("CSV has no column '" + name + "'");
}

double CsvTable::number(std::size_t row, const std::string& name) const {
  const std::string& cell = rows.at(row).at(column(name));
  if (cell == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (cell == "inf") return std::numeric_limits<double>::infinity();
  if (cell == "-inf") return -std::numeric_limits<double>::infinity();
  double x = 0.0;
  const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), x);
  if (res.ec != std::errc() || res.ptr != cell.data() + cell.size()) {
    throw std::invalid_argument("CSV cell '" + cell + "' is not a number");
  }
  return x;
}

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (first) {
      table.header = std::move(cells);
      first = false;
    } else {
      table.rows.push_back(std::move(cells));
    }
  }
  return table;
}

}  // namespace vsrc::io
