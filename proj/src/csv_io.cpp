#include "steklov/csv_io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "steklov/errors.hpp"

namespace steklov {

namespace {

void expect_header(const Table& t, const std::vector<std::string>& h) {
  if (t.header != h) throw Error("unexpected CSV header");
  for (const auto& r : t.rows)
    if (r.size() != h.size()) throw Error("CSV row has the wrong number of fields");
}

double num(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) throw Error("malformed number in CSV: " + s);
  return v;
}

long long integer(const std::string& s) {
  char* end = nullptr;
  errno = 0;
  const long long v = std::strtoll(s.c_str(), &end, 10);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE) throw Error("malformed integer in CSV: " + s);
  return v;
}

bool looks_numeric(const std::string& s) {
  if (s.empty()) return false;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size() && std::isfinite(v);
}

}  // namespace

std::string format_number(double v) {
  if (v == 0.0) return "0";  // also folds -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << t.header[i];
  os << '\n';
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << '\n';
  }
}

Table read_csv(std::istream& is) {
  Table t;
  std::string line;
  auto split = [](const std::string& l) {
    std::vector<std::string> f;
    std::stringstream ss(l);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (!l.empty() && l.back() == ',') f.emplace_back();
    return f;
  };
  if (!std::getline(is, line)) throw Error("empty CSV input");
  t.header = split(line);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    t.rows.push_back(split(line));
  }
  return t;
}

std::string to_json(const Table& t) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : t.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < t.header.size(); ++i) {
      // Re-parse the formatted cell so JSON and CSV carry identical digits.
      if (looks_numeric(r[i]))
        obj[t.header[i]] = nlohmann::ordered_json::parse(r[i]);
      else
        obj[t.header[i]] = r[i];
    }
    arr.push_back(std::move(obj));
  }
  return arr.dump(1) + "\n";
}

// ---------------------------------------------------------------------------

Table spectrum_table(const std::vector<SpectrumRow>& rows) {
  Table t{{"index", "eigenvalue", "residual", "group"}, {}};
  for (const auto& r : rows)
    t.rows.push_back({std::to_string(r.index), format_number(r.eigenvalue), format_number(r.residual),
                      std::to_string(r.group)});
  return t;
}

std::vector<SpectrumRow> spectrum_rows(const Spectrum& s) {
  std::vector<SpectrumRow> out;
  for (std::size_t k = 0; k < s.size(); ++k)
    out.push_back({static_cast<int>(k + 1), s.values[k], s.residuals[k], s.group[k]});
  return out;
}

std::vector<SpectrumRow> spectrum_rows(const Table& t) {
  expect_header(t, {"index", "eigenvalue", "residual", "group"});
  std::vector<SpectrumRow> out;
  for (const auto& r : t.rows)
    out.push_back({static_cast<int>(integer(r[0])), num(r[1]), num(r[2]), static_cast<int>(integer(r[3]))});
  return out;
}

Table trace_table(const std::vector<TraceRow>& rows) {
  Table t{{"component", "t", "x", "y", "value"}, {}};
  for (const auto& r : rows)
    t.rows.push_back({std::to_string(r.component), format_number(r.t), format_number(r.x),
                      format_number(r.y), format_number(r.value)});
  return t;
}

std::vector<TraceRow> trace_rows(const Spectrum& s, std::size_t k) {
  if (k >= s.size()) throw Error("eigenvector index out of range");
  std::vector<TraceRow> out;
  const auto& comps = s.curve->components();
  const std::size_t N = s.curve->nodes_per_component();
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (std::size_t i = 0; i < N; ++i)
      out.push_back({static_cast<int>(c), comps[c].t[i], comps[c].points[i].x, comps[c].points[i].y,
                     s.traces(static_cast<Eigen::Index>(c * N + i), static_cast<Eigen::Index>(k))});
  return out;
}

std::vector<TraceRow> trace_rows(const Table& t) {
  expect_header(t, {"component", "t", "x", "y", "value"});
  std::vector<TraceRow> out;
  for (const auto& r : t.rows)
    out.push_back({static_cast<int>(integer(r[0])), num(r[1]), num(r[2]), num(r[3]), num(r[4])});
  return out;
}

Table field_table(const std::vector<FieldRow>& rows) {
  Table t{{"x", "y", "value"}, {}};
  for (const auto& r : rows) t.rows.push_back({format_number(r.x), format_number(r.y), format_number(r.value)});
  return t;
}

std::vector<FieldRow> field_rows(const Table& t) {
  expect_header(t, {"x", "y", "value"});
  std::vector<FieldRow> out;
  for (const auto& r : t.rows) out.push_back({num(r[0]), num(r[1]), num(r[2])});
  return out;
}

Table bound_table(const std::vector<BoundRow>& rows) {
  Table t{{"a", "beta", "beta_gm", "beta_xiong", "beta_norm", "beta_xiong_norm"}, {}};
  for (const auto& r : rows)
    t.rows.push_back({format_number(r.a), format_number(r.beta), format_number(r.beta_gm),
                      format_number(r.beta_xiong), format_number(r.beta_norm),
                      format_number(r.beta_xiong_norm)});
  return t;
}

std::vector<BoundRow> bound_rows(const Table& t) {
  expect_header(t, {"a", "beta", "beta_gm", "beta_xiong", "beta_norm", "beta_xiong_norm"});
  std::vector<BoundRow> out;
  for (const auto& r : t.rows) out.push_back({num(r[0]), num(r[1]), num(r[2]), num(r[3]), num(r[4]), num(r[5])});
  return out;
}

Table domain_bound_table(const std::vector<DomainBoundRow>& rows) {
  Table t{{"name", "beta", "beta_gm", "beta_xiong"}, {}};
  for (const auto& r : rows)
    t.rows.push_back({r.name, format_number(r.beta), format_number(r.beta_gm), format_number(r.beta_xiong)});
  return t;
}

std::vector<DomainBoundRow> domain_bound_rows(const Table& t) {
  expect_header(t, {"name", "beta", "beta_gm", "beta_xiong"});
  std::vector<DomainBoundRow> out;
  for (const auto& r : t.rows) out.push_back({r[0], num(r[1]), num(r[2]), num(r[3])});
  return out;
}

Table count_table(const std::vector<CountRow>& rows) {
  Table t{{"sigma", "count"}, {}};
  for (const auto& r : rows) t.rows.push_back({format_number(r.sigma), std::to_string(r.count)});
  return t;
}

std::vector<CountRow> count_rows(const Table& t) {
  expect_header(t, {"sigma", "count"});
  std::vector<CountRow> out;
  for (const auto& r : t.rows) out.push_back({num(r[0]), static_cast<std::size_t>(integer(r[1]))});
  return out;
}

Table oracle_table(const std::vector<OracleRow>& rows) {
  Table t{{"mode", "eigenvalue", "multiplicity"}, {}};
  for (const auto& r : rows)
    t.rows.push_back({std::to_string(r.mode), format_number(r.eigenvalue), std::to_string(r.multiplicity)});
  return t;
}

std::vector<OracleRow> oracle_rows(const RadialSpectrum& s) {
  std::vector<OracleRow> out;
  for (const auto& e : s.entries) out.push_back({e.ell, e.value, e.multiplicity});
  return out;
}

std::vector<OracleRow> oracle_rows(const Table& t) {
  expect_header(t, {"mode", "eigenvalue", "multiplicity"});
  std::vector<OracleRow> out;
  for (const auto& r : t.rows)
    out.push_back({static_cast<int>(integer(r[0])), num(r[1]), static_cast<std::uint64_t>(integer(r[2]))});
  return out;
}

}  // namespace steklov
