#pragma once

/// \file vsrc/report_io.hpp
/// \brief CSV and JSON output for experiment reports. Numbers are written in
///        shortest round-trip form, so parsing the files recovers them exactly.

#include <iosfwd>
#include <string>
#include <vector>

#include "vsrc/experiments.hpp"

namespace vsrc::io {

/// Shortest decimal string that parses back to the same double ("nan", "inf" otherwise).
std::string format_double(double x);

/// One header row and one value row with the scalar results of a run.
void write_summary_csv(std::ostream& out, const experiments::SolveReport& report);
/// x, y, re_u, im_u, re_exact, im_exact, abs_err per probe.
void write_probes_csv(std::ostream& out, const experiments::SolveReport& report);
/// iteration, rel_residual.
void write_residuals_csv(std::ostream& out, const linalg::GmresReport& gmres);
/// index, re, im, abs.
void write_eigenvalues_csv(std::ostream& out, const std::vector<Complex>& eigenvalues);
/// x, y, re_u, im_u, abs_u.
void write_field_grid_csv(std::ostream& out, const std::vector<Point>& points, const CVector& values);

void write_table_header(std::ostream& out);
void write_table_row(std::ostream& out, const experiments::TableRow& row);

/// Everything above as one JSON document.
std::string report_to_json(const experiments::SolveReport& report, int indent = 2);
std::string table_to_json(const std::vector<experiments::TableRow>& rows, int indent = 2);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Column index by name; throws std::out_of_range if absent.
  std::size_t column(const std::string& name) const;
  double number(std::size_t row, const std::string& name) const;
};

/// Plain comma-separated reader for the files written here (no quoting).
CsvTable read_csv(std::istream& in);

}  // namespace vsrc::io
