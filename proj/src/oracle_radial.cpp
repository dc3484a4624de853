#include "steklov/oracle_radial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>

#include "steklov/errors.hpp"
#include "steklov/specfun.hpp"

namespace steklov {

namespace {

void check_radius(double rho) {
  if (!(rho > 0)) throw DomainError("radius must be positive");
}

void check_dimension(int n, int lo) {
  if (n < lo) throw DomainError("unsupported dimension");
}

// Exterior eigenvalue of mode ell for the ball in R^n (the disk for n = 2).
double exterior_mode(int n, double rho, int ell) {
  return (n == 2 ? ell : n + ell - 2) / rho;
}

RadialSpectrum make(int n, double rho, RadialFormulation f, double param) {
  RadialSpectrum s;
  s.dimension = n;
  s.radius = rho;
  s.formulation = f;
  s.parameter = param;
  return s;
}

}  // namespace

std::string to_string(RadialFormulation f) {
  switch (f) {
    case RadialFormulation::Exterior: return "exterior";
    case RadialFormulation::Interior: return "interior";
    case RadialFormulation::TruncatedDirichlet: return "truncD";
    case RadialFormulation::TruncatedNeumann: return "truncN";
    case RadialFormulation::Helmholtz: return "helmholtz";
  }
  return "unknown";
}

std::vector<double> RadialSpectrum::flattened() const {
  std::vector<double> out;
  for (const auto& e : entries) out.insert(out.end(), e.multiplicity, e.value);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> RadialSpectrum::flattened(std::size_t count) const {
  auto all = flattened();
  if (all.size() > count) all.resize(count);
  return all;
}

RadialSpectrum disk_exterior(double rho, int ell_max) {
  check_radius(rho);
  auto s = make(2, rho, RadialFormulation::Exterior, 0.0);
  for (int l = 0; l <= ell_max; ++l) s.entries.push_back({l, l / rho, sph_mult(2, l)});
  return s;
}

RadialSpectrum disk_interior(double rho, int ell_max) {
  auto s = disk_exterior(rho, ell_max);
  s.formulation = RadialFormulation::Interior;
  return s;
}

RadialSpectrum ball_exterior(int n, double rho, int ell_max) {
  check_dimension(n, 3);
  check_radius(rho);
  auto s = make(n, rho, RadialFormulation::Exterior, 0.0);
  for (int l = 0; l <= ell_max; ++l) s.entries.push_back({l, exterior_mode(n, rho, l), sph_mult(n, l)});
  return s;
}

RadialSpectrum ball_trunc(int n, double rho, double R, int ell_max, BoundaryCondition bc) {
  check_dimension(n, 2);
  check_radius(rho);
  if (!(R > rho)) throw DomainError("outer radius must exceed the inner radius");
  const bool dir = bc == BoundaryCondition::Dirichlet;
  auto s = make(n, rho, dir ? RadialFormulation::TruncatedDirichlet : RadialFormulation::TruncatedNeumann, R);
  const double q = rho / R;
  for (int l = 0; l <= ell_max; ++l) {
    // u = r^{-m} + c r^ell with m the decay exponent of mode ell.
    const double m = (n == 2) ? l : n + l - 2;
    const double p = std::pow(q, m + l);
    double v;
    if (n == 2 && l == 0) {
      v = dir ? 1.0 / (rho * std::log(R / rho)) : 0.0;
    } else if (dir) {
      v = (m + l * p) / (rho * (1.0 - p));
    } else {
      v = l == 0 ? 0.0 : l * m * (1.0 - p) / (rho * (l + m * p));
    }
    s.entries.push_back({l, v, sph_mult(n, l)});
  }
  return s;
}

RadialSpectrum disk_trunc(double rho, double R, int ell_max, BoundaryCondition bc) {
  return ball_trunc(2, rho, R, ell_max, bc);
}

RadialSpectrum helmholtz_radial(int n, double rho, double lambda, int ell_max) {
  check_dimension(n, 2);
  check_radius(rho);
  if (!(lambda > 0)) throw DomainError("Helmholtz parameter must be positive");
  auto s = make(n, rho, RadialFormulation::Helmholtz, lambda);
  const double x = lambda * rho;
  for (int l = 0; l <= ell_max; ++l) {
    const double nu = l + 0.5 * n - 1.0;
    const double mu = lambda * bessel_k_ratio(nu, x) - l / rho;
    s.entries.push_back({l, mu, sph_mult(n, l)});
  }
  return s;
}

HarmonicCoefficients dtn_apply_sphere(int n, double rho, const HarmonicCoefficients& f) {
  check_dimension(n, 2);
  check_radius(rho);
  HarmonicCoefficients out = f;
  for (std::size_t l = 0; l < out.size(); ++l) {
    if (out[l].size() > sph_mult(n, static_cast<int>(l)))
      throw DomainError("more coefficients than spherical harmonics of this degree");
    const double sigma = exterior_mode(n, rho, static_cast<int>(l));
    for (double& c : out[l]) c *= sigma;
  }
  return out;
}

double grad_energy_sphere(int n, double rho, const HarmonicCoefficients& f) {
  const auto g = dtn_apply_sphere(n, rho, f);
  double e = 0.0;
  for (std::size_t l = 0; l < f.size(); ++l)
    for (std::size_t i = 0; i < f[l].size(); ++i) e += f[l][i] * g[l][i];
  return e;
}

InterlacingReport interlacing_check(int n, double rho, int k_max) {
  check_dimension(n, 3);
  check_radius(rho);
  InterlacingReport r;
  const std::size_t need = static_cast<std::size_t>(k_max) + 1;
  r.neumann_limit.push_back(0.0);
  for (int l = 0; r.dirichlet_limit.size() < need || r.neumann_limit.size() < need; ++l) {
    const double v = exterior_mode(n, rho, l);
    const auto d = sph_mult(n, l);
    r.dirichlet_limit.insert(r.dirichlet_limit.end(), d, v);
    if (l >= 1) r.neumann_limit.insert(r.neumann_limit.end(), d, v);
  }
  std::sort(r.neumann_limit.begin(), r.neumann_limit.end());
  std::sort(r.dirichlet_limit.begin(), r.dirichlet_limit.end());
  r.neumann_limit.resize(need);
  r.dirichlet_limit.resize(need - 1);
  for (int k = 0; k < k_max; ++k) {
    const bool ok = r.neumann_limit[k] <= r.dirichlet_limit[k] &&
                    r.dirichlet_limit[k] <= r.neumann_limit[k + 1];
    if (!ok && r.holds) {
      r.holds = false;
      r.first_violation = k + 1;
    }
  }
  return r;
}

std::vector<LayerSymbol> sphere_layer_symbols(double rho, int ell_max) {
  check_radius(rho);
  using boost::math::quadrature::gauss;
  const double pi = std::numbers::pi;
  std::vector<LayerSymbol> out;
  for (int l = 0; l <= ell_max; ++l) {
    // |x - y| = 2 rho sin(g/2) and dS = 2 pi rho^2 sin(g) dg on the sphere; both kernels
    // times the area element reduce to multiples of cos(g/2).
    auto single = [&](double g) {
      const double dist = 2.0 * rho * std::sin(0.5 * g);
      return 1.0 / (4.0 * pi * dist) * 2.0 * pi * rho * rho * std::sin(g) *
             std::legendre(l, std::cos(g));
    };
    auto dbl = [&](double g) {
      const double s = std::sin(0.5 * g);
      const double dist = 2.0 * rho * s;
      const double proj = 2.0 * rho * s * s;  // <y - x, nu_y>
      return proj / (4.0 * pi * dist * dist * dist) * 2.0 * pi * rho * rho * std::sin(g) *
             std::legendre(l, std::cos(g));
    };
    LayerSymbol sym;
    sym.ell = l;
    sym.single_layer = gauss<double, 60>::integrate(single, 0.0, pi);
    sym.double_layer = gauss<double, 60>::integrate(dbl, 0.0, pi);
    sym.tau = (l + 1) / rho;
    sym.defect = std::abs(0.5 + sym.double_layer - sym.tau * sym.single_layer);
    out.push_back(sym);
  }
  return out;
}

}  // namespace steklov
