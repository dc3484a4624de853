#include <algorithm>
#include <atomic>
#include <mutex>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include "steklov/cli.hpp"
#include "steklov/errors.hpp"

namespace steklov::cli {

namespace {

void add_domain_options(CLI::App* app, RunConfig& c) {
  app->add_option("--domain", c.domain, "disk|circle|ellipse|kite|three-disks|fourier|ball");
  app->add_option("--radius", c.radius, "disk or ball radius");
  app->add_option("--axis-a", c.axis_a, "ellipse semi-axis along x");
  app->add_option("--axis-b", c.axis_b, "ellipse semi-axis along y");
  app->add_option("--x-cos", c.x_cos, "fourier: cosine coefficients of x(t)")->delimiter(',');
  app->add_option("--x-sin", c.x_sin, "fourier: sine coefficients of x(t)")->delimiter(',');
  app->add_option("--y-cos", c.y_cos, "fourier: cosine coefficients of y(t)")->delimiter(',');
  app->add_option("--y-sin", c.y_sin, "fourier: sine coefficients of y(t)")->delimiter(',');
  app->add_option("--dimension,-n", c.dimension, "space dimension for disk/ball closed forms");
}

void add_common_options(CLI::App* app, RunConfig& c) {
  app->add_option("--nodes", c.nodes, "boundary nodes per component");
  app->add_option("--k", c.k, "number of eigenvalues");
  app->add_option("--out,-o", c.out, "output file (default: standard output)");
  app->add_option("--format", c.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  app->add_option("--jobs,-j", c.jobs, "concurrent sweep points")->check(CLI::PositiveNumber);
}

}  // namespace

int parse_args(int argc, const char* const* argv, RunConfig& c, std::ostream& out, std::ostream& err,
               bool& finished) {
  CLI::App app{"Exterior Steklov eigenvalue solver"};
  app.set_config("--config", "", "read options from a TOML or INI file (flags take precedence)");
  app.require_subcommand(1);

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of a planar domain");
  auto* converge = app.add_subcommand("converge", "truncation and Helmholtz limits on disks and balls");
  auto* bounds = app.add_subcommand("bounds", "curvature bounds for spheroid families or single bodies");
  auto* weyl = app.add_subcommand("weyl", "counting function and Weyl-law fit");
  auto* compare = app.add_subcommand("compare", "boundary-integral vs conformal exterior spectra");
  auto* cap = app.add_subcommand("capacity", "logarithmic capacity");
  auto* oracle = app.add_subcommand("oracle", "closed-form disk and ball spectra");

  for (auto* s : {spectrum, converge, bounds, weyl, compare, cap, oracle}) {
    add_domain_options(s, c);
    add_common_options(s, c);
    s->configurable();
  }
  for (auto* s : {spectrum, weyl}) {
    s->add_option("--method", c.method, "bie-exterior|bie-interior|conformal|oracle")
        ->check(CLI::IsMember({"bie-exterior", "bie-interior", "conformal", "oracle"}));
  }
  for (auto* s : {spectrum, compare}) s->add_option("--center", c.center, "inversion center x y")->expected(2);
  for (auto* s : {spectrum, weyl, compare}) {
    s->add_option("--residual-tol", c.residual_tol, "largest accepted eigenpair residual")->check(CLI::PositiveNumber);
    s->add_option("--reality-tol", c.reality_tol, "largest accepted relative imaginary part")->check(CLI::PositiveNumber);
  }
  spectrum->add_option("--traces", c.traces_out, "write the boundary trace of one eigenfunction");
  spectrum->add_option("--trace-index", c.trace_index, "0-based eigenfunction index for traces and field");
  spectrum->add_option("--field", c.field_out, "write exterior field values at --points");
  spectrum->add_option("--points", c.field_points, "evaluation points as x:y");

  converge->add_option("--sweep", c.sweep, "truncation|helmholtz")
      ->check(CLI::IsMember({"truncation", "helmholtz"}));
  converge->add_option("--r-grid", c.r_grid, "outer radii")->delimiter(',');
  converge->add_option("--lambda-grid", c.lambda_grid, "Helmholtz parameters")->delimiter(',');
  for (auto* s : {converge, oracle}) s->add_option("--ell-max", c.ell_max, "largest mode");

  oracle->add_option("--formulation", c.formulation, "exterior|interior|truncD|truncN|helmholtz")
      ->check(CLI::IsMember({"exterior", "interior", "truncD", "truncN", "helmholtz"}));
  oracle->add_option("--outer-radius", c.outer_radius, "outer radius R of truncated problems");
  oracle->add_option("--lambda", c.lambda, "Helmholtz parameter");

  bounds->add_option("--family", c.family, "prolate|oblate|higher")
      ->check(CLI::IsMember({"prolate", "oblate", "higher"}));
  bounds->add_option("--a-grid", c.a_grid, "aspect grid lo:hi:count");
  bounds->add_option("--aspect", c.aspect, "aspect ratio for a single spheroid");
  bounds->add_option("--short-axes", c.short_axes, "number of short semi-axes (higher family)");

  finished = false;
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    finished = true;
    return app.exit(e, out, err) == 0 ? kSuccess : kFailure;
  }
  for (auto* s : app.get_subcommands()) c.command = s->get_name();
  return kSuccess;
}

DomainSpec make_domain(const RunConfig& c) {
  if (c.domain == "disk" || c.domain == "circle") return DomainSpec::circle(c.radius);
  if (c.domain == "ellipse") return DomainSpec::ellipse(c.axis_a, c.axis_b);
  if (c.domain == "kite") return DomainSpec::kite();
  if (c.domain == "three-disks") return DomainSpec::three_disks();
  if (c.domain == "fourier") {
    if (c.x_cos.empty() && c.x_sin.empty()) throw InvalidDomainError("fourier domain needs coefficients");
    return DomainSpec::fourier({c.x_cos, c.x_sin, c.y_cos, c.y_sin});
  }
  throw InvalidDomainError("unknown planar domain: " + c.domain);
}

SolverOptions solver_options(const RunConfig& c) {
  SolverOptions o;
  o.residual_tol = c.residual_tol;
  o.reality_tol = c.reality_tol;
  return o;
}

std::vector<double> parse_grid(const std::string& spec) {
  const auto a = spec.find(':');
  const auto b = spec.find(':', a == std::string::npos ? a : a + 1);
  if (a == std::string::npos || b == std::string::npos)
    throw PreconditionError("grid must be given as lo:hi:count");
  const double lo = std::stod(spec.substr(0, a));
  const double hi = std::stod(spec.substr(a + 1, b - a - 1));
  const long n = std::stol(spec.substr(b + 1));
  if (n < 1 || !(hi >= lo)) throw PreconditionError("grid needs hi >= lo and count >= 1");
  std::vector<double> g(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) g[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return g;
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(std::max(1, jobs), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex m;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < count;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(m);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace steklov::cli
