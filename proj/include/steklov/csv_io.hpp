#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "steklov/bie2d.hpp"
#include "steklov/bounds.hpp"
#include "steklov/oracle_radial.hpp"

namespace steklov {

/// Fixed 12-significant-digit rendering used for every emitted number.
std::string format_number(double v);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void write_csv(std::ostream& os, const Table& t);
Table read_csv(std::istream& is);
/// Array of objects keyed by column name; numeric cells are emitted as numbers.
std::string to_json(const Table& t);

// Typed row schemas and their table forms.  Each *_rows function validates the header.

struct SpectrumRow {
  int index = 0;
  double eigenvalue = 0.0;
  double residual = 0.0;
  int group = 0;
};
Table spectrum_table(const std::vector<SpectrumRow>& rows);
std::vector<SpectrumRow> spectrum_rows(const Spectrum& s);
std::vector<SpectrumRow> spectrum_rows(const Table& t);

struct TraceRow {
  int component = 0;
  double t = 0.0, x = 0.0, y = 0.0, value = 0.0;
};
Table trace_table(const std::vector<TraceRow>& rows);
std::vector<TraceRow> trace_rows(const Spectrum& s, std::size_t k);
std::vector<TraceRow> trace_rows(const Table& t);

struct FieldRow {
  double x = 0.0, y = 0.0, value = 0.0;
};
Table field_table(const std::vector<FieldRow>& rows);
std::vector<FieldRow> field_rows(const Table& t);

Table bound_table(const std::vector<BoundRow>& rows);
std::vector<BoundRow> bound_rows(const Table& t);

struct DomainBoundRow {
  std::string name;
  double beta = 0.0, beta_gm = 0.0, beta_xiong = 0.0;
};
Table domain_bound_table(const std::vector<DomainBoundRow>& rows);
std::vector<DomainBoundRow> domain_bound_rows(const Table& t);

struct CountRow {
  double sigma = 0.0;
  std::size_t count = 0;
};
Table count_table(const std::vector<CountRow>& rows);
std::vector<CountRow> count_rows(const Table& t);

struct OracleRow {
  int mode = 0;
  double eigenvalue = 0.0;
  std::uint64_t multiplicity = 0;
};
Table oracle_table(const std::vector<OracleRow>& rows);
std::vector<OracleRow> oracle_rows(const RadialSpectrum& s);
std::vector<OracleRow> oracle_rows(const Table& t);

}  // namespace steklov
