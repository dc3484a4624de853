#include <cmath>
#include <fstream>
#include <iostream>
#include <mutex>
#include <numbers>
#include <sstream>

#include "steklov/asymptotics.hpp"
#include "steklov/bie2d.hpp"
#include "steklov/bounds.hpp"
#include "steklov/cli.hpp"
#include "steklov/csv_io.hpp"
#include "steklov/oracle_radial.hpp"

namespace steklov::cli {

namespace {

bool is_disk(const RunConfig& c) { return c.domain == "disk" || c.domain == "circle"; }
bool is_radial(const RunConfig& c) { return is_disk(c) || c.domain == "ball"; }

void write_table(const Table& t, const std::string& format, std::ostream& os) {
  if (format == "json")
    os << to_json(t);
  else
    write_csv(os, t);
}

void emit(const RunConfig& c, const Table& t, std::ostream& out) {
  if (c.out.empty()) {
    write_table(t, c.format, out);
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw Error("cannot open output file " + c.out);
  write_table(t, c.format, f);
}

void emit_to(const std::string& path, const std::string& format, const Table& t) {
  std::ofstream f(path);
  if (!f) throw Error("cannot open output file " + path);
  write_table(t, format, f);
}

Vec2 parse_point(const std::string& s) {
  const auto p = s.find(':');
  if (p == std::string::npos) throw PreconditionError("points must be given as x:y");
  return {std::stod(s.substr(0, p)), std::stod(s.substr(p + 1))};
}

int radial_dimension(const RunConfig& c) {
  if (c.domain == "ball" && c.dimension < 3) return 3;
  return c.dimension;
}

RadialSpectrum radial_exterior(const RunConfig& c, int ell_max) {
  const int n = radial_dimension(c);
  return n == 2 ? disk_exterior(c.radius, ell_max) : ball_exterior(n, c.radius, ell_max);
}

// Oracle eigenvalues as spectrum rows: zero residual, groups by exact equality.
std::vector<SpectrumRow> oracle_spectrum_rows(const RunConfig& c, std::size_t count) {
  int ell_max = 1;
  while (radial_exterior(c, ell_max).flattened().size() < count) ell_max *= 2;
  const auto v = radial_exterior(c, ell_max).flattened(count);
  std::vector<SpectrumRow> rows;
  int g = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k > 0 && v[k] != v[k - 1]) ++g;
    rows.push_back({static_cast<int>(k + 1), v[k], 0.0, g});
  }
  return rows;
}

Spectrum solve(const RunConfig& c, std::size_t count) {
  const DomainSpec spec = make_domain(c);
  const SolverOptions opt = solver_options(c);
  if (c.method == "bie-exterior") return exterior_spectrum(spec, c.nodes, count, opt);
  if (c.method == "bie-interior") return interior_spectrum(spec, c.nodes, count, opt);
  if (c.method == "conformal") {
    const BoundaryCurve curve = build_curve(spec, c.nodes);
    const Vec2 center = c.center.size() == 2 ? Vec2{c.center[0], c.center[1]} : default_center(curve);
    return conformal_exterior_spectrum(curve, center, count, opt);
  }
  throw UnsupportedCombinationError("unknown method " + c.method);
}

void write_extras(const RunConfig& c, const Spectrum& s, std::ostream& err) {
  if (!c.traces_out.empty()) emit_to(c.traces_out, c.format, trace_table(trace_rows(s, c.trace_index)));
  if (!c.field_out.empty()) {
    if (s.formulation == Formulation::InteriorBie)
      throw UnsupportedCombinationError("field evaluation needs an exterior method");
    std::vector<Vec2> pts;
    for (const auto& p : c.field_points) pts.push_back(parse_point(p));
    const auto vals = evaluate_field(s, c.trace_index, pts);
    std::vector<FieldRow> rows;
    for (std::size_t i = 0; i < pts.size(); ++i) rows.push_back({pts[i].x, pts[i].y, vals[i]});
    emit_to(c.field_out, c.format, field_table(rows));
    err << "far-field constant: " << format_number(far_field_constant(s, c.trace_index)) << '\n';
  }
}

}  // namespace

int cmd_spectrum(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.method == "oracle") {
    if (!is_radial(c)) throw UnsupportedCombinationError("the oracle method needs --domain disk or ball");
    emit(c, spectrum_table(oracle_spectrum_rows(c, c.k)), out);
    return kSuccess;
  }
  try {
    const Spectrum s = solve(c, c.k);
    emit(c, spectrum_table(spectrum_rows(s)), out);
    write_extras(c, s, err);
    return kSuccess;
  } catch (const PartialSpectrumError& e) {
    emit(c, spectrum_table(spectrum_rows(e.prefix())), out);
    err << "partial spectrum: " << e.what() << " (" << e.prefix().size() << " of " << c.k << " kept)\n";
    return kPartial;
  }
}

int cmd_converge(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (!is_radial(c))
    throw UnsupportedCombinationError("converge sweeps are available for the closed-form disk and ball only");
  const int n = radial_dimension(c);
  const int ell_max = c.ell_max < 0 ? 3 : c.ell_max;
  const auto limit = radial_exterior(c, ell_max);
  Table t;
  std::ostringstream summary;

  if (c.sweep == "truncation") {
    const auto& grid = c.r_grid;
    std::vector<RadialSpectrum> dir(grid.size()), neu(grid.size());
    parallel_for(grid.size(), c.jobs, [&](std::size_t i) {
      dir[i] = ball_trunc(n, c.radius, grid[i], ell_max, BoundaryCondition::Dirichlet);
      neu[i] = ball_trunc(n, c.radius, grid[i], ell_max, BoundaryCondition::Neumann);
    });
    t.header = {"R", "mode", "dirichlet", "neumann", "exterior"};
    for (std::size_t i = 0; i < grid.size(); ++i)
      for (int l = 0; l <= ell_max; ++l)
        t.rows.push_back({format_number(grid[i]), std::to_string(l), format_number(dir[i].entries[l].value),
                          format_number(neu[i].entries[l].value), format_number(limit.entries[l].value)});
    for (int l = 0; l <= ell_max; ++l) {
      std::vector<double> ed, en;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        ed.push_back(std::abs(dir[i].entries[l].value - limit.entries[l].value));
        en.push_back(std::abs(neu[i].entries[l].value - limit.entries[l].value));
      }
      if (grid.size() < 2) break;
      if (n == 2 && l == 0) {
        const auto f = fit_inverse_log(grid, ed);
        summary << "mode=0 dirichlet_inverse_log_constant=" << format_number(f.constant)
                << " relative_residual=" << format_number(f.relative_residual) << '\n';
      } else {
        summary << "mode=" << l << " dirichlet_rate=" << format_number(fit_power_law(grid, ed));
        if (l > 0) summary << " neumann_rate=" << format_number(fit_power_law(grid, en));
        summary << '\n';
      }
    }
  } else {
    const auto& grid = c.lambda_grid;
    std::vector<RadialSpectrum> h(grid.size());
    parallel_for(grid.size(), c.jobs, [&](std::size_t i) { h[i] = helmholtz_radial(n, c.radius, grid[i], ell_max); });
    t.header = {"lambda", "mode", "mu", "limit"};
    for (std::size_t i = 0; i < grid.size(); ++i)
      for (int l = 0; l <= ell_max; ++l)
        t.rows.push_back({format_number(grid[i]), std::to_string(l), format_number(h[i].entries[l].value),
                          format_number(limit.entries[l].value)});
    if (n == 2 && !grid.empty()) {
      std::vector<double> mu0;
      for (const auto& s : h) mu0.push_back(s.entries[0].value);
      const auto f = fit_inverse_log(grid, mu0);
      summary << "mode=0 inverse_log_constant=" << format_number(f.constant)
              << " relative_residual=" << format_number(f.relative_residual) << '\n';
    }
  }
  emit(c, t, out);
  err << summary.str();
  return kSuccess;
}

int cmd_bounds(const RunConfig& c, std::ostream& out, std::ostream& err) {
  (void)err;
  if (!c.family.empty()) {
    SpheroidFamily fam;
    fam.kind = c.family == "prolate" ? SpheroidKind::Prolate
               : c.family == "oblate" ? SpheroidKind::Oblate
                                      : SpheroidKind::Higher;
    fam.k = c.short_axes;
    fam.n = std::max(3, c.dimension);
    const auto grid = parse_grid(c.a_grid);
    std::vector<BoundRow> rows(grid.size());
    parallel_for(grid.size(), c.jobs, [&](std::size_t i) {
      SpheroidFamily one = fam;
      one.a_grid = {grid[i]};
      rows[i] = bound_curves(one).front();
    });
    emit(c, bound_table(rows), out);
    return kSuccess;
  }
  DomainBoundRow row;
  if (c.domain == "ball") {
    const int n = std::max(3, c.dimension);
    const auto f = sphere_curvatures(n, c.radius);
    std::vector<SurfaceSample> samples;
    for (int i = 0; i < n; ++i) {
      SurfaceSample s{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
      s.x[i] = c.radius;
      s.normal[i] = 1.0;
      samples.push_back(s);
    }
    row = {"ball", escobar_bound(f), geometric_mean_bound(f), xiong_bound(samples, n).value};
  } else if (c.domain == "prolate" || c.domain == "oblate") {
    SpheroidFamily fam;
    fam.kind = c.domain == "prolate" ? SpheroidKind::Prolate : SpheroidKind::Oblate;
    const auto f = spheroid_curvatures(c.aspect, fam);
    row = {c.domain, escobar_bound(f), geometric_mean_bound(f), spheroid_xiong(c.aspect, fam)};
  } else {
    throw UnsupportedCombinationError(
        "curvature bounds are stated for convex bodies in n >= 3: use --family, or --domain ball|prolate|oblate");
  }
  emit(c, domain_bound_table({row}), out);
  return kSuccess;
}

int cmd_weyl(const RunConfig& c, std::ostream& out, std::ostream& err) {
  std::vector<double> values;
  double boundary = 0.0;
  int n = 2;
  int code = kSuccess;
  if (c.method == "oracle") {
    if (!is_radial(c)) throw UnsupportedCombinationError("the oracle method needs --domain disk or ball");
    n = radial_dimension(c);
    for (const auto& r : oracle_spectrum_rows(c, c.k)) values.push_back(r.eigenvalue);
    const double area_unit_sphere = 2.0 * std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n);
    boundary = area_unit_sphere * std::pow(c.radius, n - 1);
  } else {
    const DomainSpec spec = make_domain(c);
    boundary = quantities(build_curve(spec, c.nodes)).perimeter;
    try {
      values = solve(c, c.k).values;
    } catch (const PartialSpectrumError& e) {
      values = e.prefix().values;
      err << "partial spectrum: " << e.what() << '\n';
      code = kPartial;
    }
  }
  const CountingFunction N(values);
  std::vector<CountRow> rows;
  for (double s : N.values()) rows.push_back({s, N(s)});
  emit(c, count_table(rows), out);
  if (n == 2) {
    const WeylFit f = weyl_fit_2d(values, boundary);
    err << "slope=" << format_number(f.slope) << " expected=" << format_number(f.expected)
        << " relative_error=" << format_number(f.relative_error) << " points=" << f.points << '\n';
    const PairGaps g = pair_gap_2d(values);
    err << "pair_gap_decay_exponent=" << format_number(g.decay_exponent) << '\n';
  } else {
    err << "remainder_ratio=" << format_number(weyl_remainder_ratio(N, n, boundary, N.values())) << '\n';
  }
  return code;
}

int cmd_compare(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const DomainSpec spec = make_domain(c);
  const BoundaryCurve curve = build_curve(spec, c.nodes);
  const Vec2 center = c.center.size() == 2 ? Vec2{c.center[0], c.center[1]} : default_center(curve);
  Spectrum a, b;
  parallel_for(2, c.jobs, [&](std::size_t i) {
    if (i == 0)
      a = exterior_spectrum(curve, c.k, solver_options(c));
    else
      b = conformal_exterior_spectrum(curve, center, c.k, solver_options(c));
  });
  Table t{{"index", "exterior", "conformal", "difference"}, {}};
  double worst = 0.0;
  for (std::size_t k = 0; k < c.k; ++k) {
    const double d = a.values[k] - b.values[k];
    worst = std::max(worst, std::abs(d));
    t.rows.push_back({std::to_string(k + 1), format_number(a.values[k]), format_number(b.values[k]), format_number(d)});
  }
  emit(c, t, out);
  err << "max_deviation=" << format_number(worst) << '\n';
  return kSuccess;
}

int cmd_capacity(const RunConfig& c, std::ostream& out, std::ostream& err) {
  (void)err;
  const double cap = capacity(build_curve(make_domain(c), c.nodes));
  emit(c, Table{{"capacity"}, {{format_number(cap)}}}, out);
  return kSuccess;
}

int cmd_oracle(const RunConfig& c, std::ostream& out, std::ostream& err) {
  (void)err;
  if (!is_radial(c)) throw UnsupportedCombinationError("oracle spectra exist for --domain disk or ball only");
  const int n = radial_dimension(c);
  const int ell_max = c.ell_max < 0 ? 40 : c.ell_max;
  RadialSpectrum s;
  if (c.formulation == "exterior")
    s = radial_exterior(c, ell_max);
  else if (c.formulation == "interior") {
    if (n != 2) throw UnsupportedCombinationError("the interior closed form is implemented for the disk");
    s = disk_interior(c.radius, ell_max);
  } else if (c.formulation == "truncD")
    s = ball_trunc(n, c.radius, c.outer_radius, ell_max, BoundaryCondition::Dirichlet);
  else if (c.formulation == "truncN")
    s = ball_trunc(n, c.radius, c.outer_radius, ell_max, BoundaryCondition::Neumann);
  else
    s = helmholtz_radial(n, c.radius, c.lambda, ell_max);
  emit(c, oracle_table(oracle_rows(s)), out);
  return kSuccess;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  bool finished = false;
  const int parsed = parse_args(argc, argv, cfg, out, err, finished);
  if (finished) return parsed;
  try {
    if (cfg.nodes == 0 || cfg.k == 0) throw PreconditionError("--nodes and --k must be positive");
    if (!(cfg.radius > 0)) throw PreconditionError("--radius must be positive");
    if (cfg.command == "spectrum") return cmd_spectrum(cfg, out, err);
    if (cfg.command == "converge") return cmd_converge(cfg, out, err);
    if (cfg.command == "bounds") return cmd_bounds(cfg, out, err);
    if (cfg.command == "weyl") return cmd_weyl(cfg, out, err);
    if (cfg.command == "compare") return cmd_compare(cfg, out, err);
    if (cfg.command == "capacity") return cmd_capacity(cfg, out, err);
    if (cfg.command == "oracle") return cmd_oracle(cfg, out, err);
    err << "unknown command\n";
    return kFailure;
  } catch (const PartialSpectrumError& e) {
    err << "partial spectrum: " << e.what() << '\n';
    return kPartial;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace steklov::cli
