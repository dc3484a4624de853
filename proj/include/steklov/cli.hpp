#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "steklov/bie2d.hpp"
#include "steklov/geometry.hpp"

namespace steklov::cli {

enum ExitCode { kSuccess = 0, kFailure = 1, kPartial = 2 };

struct RunConfig {
  std::string command;

  // Domain
  std::string domain = "disk";
  double radius = 1.0;
  double axis_a = 1.5;
  double axis_b = 0.7;
  std::vector<double> x_cos, x_sin, y_cos, y_sin;
  std::vector<double> center;  // empty: automatic interior point
  int dimension = 2;

  // Discretization and output
  std::string method = "bie-exterior";
  std::size_t nodes = 256;
  std::size_t k = 10;
  std::string out;  // empty: standard output
  std::string format = "csv";
  int jobs = 1;

  // spectrum extras
  std::string traces_out;
  std::size_t trace_index = 0;
  std::string field_out;
  std::vector<std::string> field_points;  // "x:y"
  double residual_tol = 1e-7;
  double reality_tol = 1e-8;

  // converge
  std::string sweep = "truncation";
  std::vector<double> r_grid{2, 4, 8, 16};
  std::vector<double> lambda_grid{1, 0.1, 0.01, 0.001};
  int ell_max = -1;  // per-command default when negative

  // oracle
  std::string formulation = "exterior";
  double outer_radius = 2.0;
  double lambda = 1.0;

  // bounds
  std::string family;
  std::string a_grid = "0.01:0.99:50";
  double aspect = 0.5;
  int short_axes = 2;
};

/// Parses argv into a config.  Returns an exit code when parsing ends the run (help, errors).
int parse_args(int argc, const char* const* argv, RunConfig& cfg, std::ostream& out, std::ostream& err,
               bool& finished);

/// Builds the planar domain named in the config.
DomainSpec make_domain(const RunConfig& cfg);

SolverOptions solver_options(const RunConfig& cfg);

/// Parses "lo:hi:count".
std::vector<double> parse_grid(const std::string& spec);

/// Runs fn(i) for i < count on up to `jobs` threads.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_converge(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bounds(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_weyl(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_capacity(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses and dispatches; every library error becomes a diagnostic on `err` and exit code 1,
/// partial spectra exit with 2.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace steklov::cli
