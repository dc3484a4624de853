#include "steklov/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "steklov/errors.hpp"
#include "steklov/specfun.hpp"

namespace steklov {

namespace {

constexpr std::size_t kProfilePoints = 2048;

void check_field(const CurvatureField& f) {
  if (f.dimension < 3) throw DomainError("curvature bounds need n >= 3");
  if (f.samples.empty()) throw DomainError("empty curvature field");
  for (const auto& s : f.samples) {
    if (s.kappa.size() != static_cast<std::size_t>(f.dimension - 1))
      throw DomainError("each sample needs n-1 principal curvatures");
    for (double k : s.kappa)
      if (!(k >= 0)) throw DomainError("negative principal curvature: body is not convex");
  }
}

template <class Mean>
double min_mean(const CurvatureField& f, Mean mean) {
  check_field(f);
  double m = std::numeric_limits<double>::infinity();
  for (const auto& s : f.samples) m = std::min(m, mean(s.kappa));
  return (f.dimension - 2) * m;
}

void check_aspect(double a) {
  if (!(a > 0 && a < 1)) throw DomainError("aspect ratio must lie in (0, 1)");
}

int short_axes(const SpheroidFamily& f) {
  switch (f.kind) {
    case SpheroidKind::Prolate: return 2;
    case SpheroidKind::Oblate: return 1;
    case SpheroidKind::Higher: return f.k;
  }
  return 2;
}

int dimension_of(const SpheroidFamily& f) { return f.kind == SpheroidKind::Higher ? f.n : 3; }

std::vector<double> default_profile() {
  std::vector<double> p(kProfilePoints);
  for (std::size_t i = 0; i < kProfilePoints; ++i)
    p[i] = static_cast<double>(i) / static_cast<double>(kProfilePoints - 1);
  return p;
}

// <x, nu>/|x|^2 along the meridian (r1, r2) = (a sin th, cos th), th in [0, pi/2], where r1 is
// the distance along the short axes and r2 along the unit axes.  The value does not depend
// on how many axes of each kind there are.
double xiong_profile(double a, double th) {
  const double r1 = a * std::sin(th), r2 = std::cos(th);
  const double xn = 1.0 / std::sqrt(r1 * r1 / (a * a * a * a) + r2 * r2);
  return xn / (r1 * r1 + r2 * r2);
}

}  // namespace

double escobar_bound(const CurvatureField& field) {
  return min_mean(field, [](const std::vector<double>& k) { return log_mean(k); });
}

double geometric_mean_bound(const CurvatureField& field) {
  return min_mean(field, [](const std::vector<double>& k) { return geometric_mean(k); });
}

XiongResult xiong_bound(const std::vector<SurfaceSample>& samples, int n) {
  if (n < 2) throw DomainError("dimension must be at least 2");
  if (samples.empty()) throw DomainError("no boundary samples");
  double m = std::numeric_limits<double>::infinity();
  for (const auto& s : samples) {
    if (s.x.size() != s.normal.size()) throw DomainError("point and normal dimensions differ");
    double xn = 0.0, xx = 0.0;
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      xn += s.x[i] * s.normal[i];
      xx += s.x[i] * s.x[i];
    }
    if (!(xx > 0)) throw DomainError("the origin lies on the boundary");
    m = std::min(m, xn / xx);
  }
  return {(n - 2) * m, m > 0};
}

double K_quadrature(const std::vector<double>& kappa, int n) {
  if (n < 3) throw DomainError("K_quadrature needs n >= 3");
  if (kappa.size() < 2 || kappa.size() != static_cast<std::size_t>(n - 1))
    throw DomainError("K_quadrature needs n-1 >= 2 curvatures");
  for (double k : kappa)
    if (!(k > 0) || !std::isfinite(k)) throw DomainError("curvatures must be positive");
  const double kmin = *std::min_element(kappa.begin(), kappa.end());
  const int m = n - 1;

  auto body = [&](double t) {
    double p = 1.0;
    for (double k : kappa) p /= 1.0 + k * t;
    return p;
  };
  // With u = 1/t: prod (1 + k t)^{-1} dt = u^{m-2} / prod (u + k) du.
  auto tail = [&](double u) {
    double p = std::pow(u, m - 2);
    for (double k : kappa) p /= u + k;
    return p;
  };
  using boost::math::quadrature::gauss_kronrod;
  // Split at the knees 1/kappa_j so every piece is well resolved.
  std::vector<double> cuts{0.0};
  for (double k : kappa) cuts.push_back(1.0 / k);
  const double T = 9.0 / kmin;
  cuts.push_back(T);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    total += gauss_kronrod<double, 61>::integrate(body, cuts[i], cuts[i + 1], 15, 1e-13);
  total += gauss_kronrod<double, 61>::integrate(tail, 0.0, 1.0 / T, 15, 1e-13);
  return 1.0 / total;
}

std::vector<double> aspect_grid(double lo, double hi, std::size_t count) {
  if (!(lo > 0 && hi < 1 && lo <= hi) || count == 0)
    throw DomainError("aspect grid must satisfy 0 < lo <= hi < 1");
  std::vector<double> g(count);
  for (std::size_t i = 0; i < count; ++i)
    g[i] = count == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  return g;
}

CurvatureField spheroid_curvatures(double a, const SpheroidFamily& family,
                                   const std::vector<double>& profile) {
  check_aspect(a);
  CurvatureField f;
  f.dimension = dimension_of(family);
  const double b = 1.0 - a * a;
  for (double s : profile) {
    CurvatureSample cs;
    cs.label = s;
    switch (family.kind) {
      case SpheroidKind::Prolate: {
        const double D = (1.0 - s) * (1.0 + s) + a * a * s * s;
        cs.kappa = {a / std::pow(D, 1.5), 1.0 / (a * std::sqrt(D))};
        break;
      }
      case SpheroidKind::Oblate: {
        const double x1 = a * s;
        const double E = a * a * a * a + b * x1 * x1;
        cs.kappa = {a * a * a * a / std::pow(E, 1.5), a * a / std::sqrt(E)};
        break;
      }
      case SpheroidKind::Higher: {
        const int n = family.n, k = family.k;
        if (n < 3 || k < 2 || k > n - 1) throw DomainError("higher spheroid needs n >= 3 and 2 <= k <= n-1");
        const double D = (1.0 - s) * (1.0 + s) + a * a * s * s;
        for (int j = 1; j <= k - 1; ++j) cs.kappa.push_back(1.0 / (a * std::sqrt(D)));
        for (int j = k; j <= n - 2; ++j) cs.kappa.push_back(a / std::sqrt(D));
        cs.kappa.push_back(a / std::pow(D, 1.5));
        break;
      }
    }
    f.samples.push_back(std::move(cs));
  }
  return f;
}

CurvatureField spheroid_curvatures(double a, const SpheroidFamily& family) {
  return spheroid_curvatures(a, family, default_profile());
}

double spheroid_xiong(double a, const SpheroidFamily& family) {
  check_aspect(a);
  const double half_pi = 0.5 * std::numbers::pi;
  std::size_t best = 0;
  double bv = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < kProfilePoints; ++i) {
    const double th = half_pi * static_cast<double>(i) / static_cast<double>(kProfilePoints - 1);
    const double v = xiong_profile(a, th);
    if (v < bv) bv = v, best = i;
  }
  const double h = half_pi / static_cast<double>(kProfilePoints - 1);
  double lo = std::max(0.0, (static_cast<double>(best) - 1.0) * h);
  double hi = std::min(half_pi, (static_cast<double>(best) + 1.0) * h);
  const double r = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - r * (hi - lo), x2 = lo + r * (hi - lo);
  double f1 = xiong_profile(a, x1), f2 = xiong_profile(a, x2);
  for (int it = 0; it < 80; ++it) {
    if (f1 < f2) {
      hi = x2, x2 = x1, f2 = f1, x1 = hi - r * (hi - lo), f1 = xiong_profile(a, x1);
    } else {
      lo = x1, x1 = x2, f1 = f2, x2 = lo + r * (hi - lo), f2 = xiong_profile(a, x2);
    }
  }
  bv = std::min({bv, f1, f2});
  return (dimension_of(family) - 2) * bv;
}

CurvatureField sphere_curvatures(int n, double rho) {
  if (n < 3 || !(rho > 0)) throw DomainError("sphere needs n >= 3 and rho > 0");
  CurvatureField f;
  f.dimension = n;
  f.samples.push_back({0.0, std::vector<double>(n - 1, 1.0 / rho)});
  return f;
}

double prolate_beta_formula(double a) {
  check_aspect(a);
  return (1.0 - a * a) / (-2.0 * a * std::log(a));
}

double oblate_beta_formula(double a) {
  check_aspect(a);
  return a;
}

double spheroid_xiong_formula(double a) {
  check_aspect(a);
  if (a <= 1.0 / std::sqrt(2.0)) return 1.5 * std::sqrt(3.0) * a / std::pow(1.0 + a * a, 1.5);
  return 1.0;
}

std::vector<BoundRow> bound_curves(const SpheroidFamily& family) {
  const int n = dimension_of(family);
  const double expo = static_cast<double>(short_axes(family)) / n;
  std::vector<BoundRow> rows;
  for (double a : family.a_grid) {
    const CurvatureField f = spheroid_curvatures(a, family);
    BoundRow r;
    r.a = a;
    r.beta = escobar_bound(f);
    r.beta_gm = geometric_mean_bound(f);
    r.beta_xiong = spheroid_xiong(a, family);
    r.beta_norm = std::pow(a, expo) * r.beta;
    r.beta_xiong_norm = std::pow(a, expo) * r.beta_xiong;
    rows.push_back(r);
  }
  return rows;
}

WeinstockMargins weinstock_margin(const std::vector<double>& sigma, double perimeter, double area) {
  if (sigma.size() < 2) throw InsufficientDataError("need at least sigma_1 and sigma_2");
  const double tp = 2.0 * std::numbers::pi;
  WeinstockMargins m;
  m.weinstock = tp - sigma[1] * perimeter;
  for (std::size_t k = 1; k <= 5 && k < sigma.size(); ++k)
    m.hps.push_back(tp * static_cast<double>(k) - sigma[k] * perimeter);
  m.area_form = std::sqrt(std::numbers::pi) - sigma[1] * std::sqrt(area);
  return m;
}

PassageBound passage_bound(double length, double eps, int k) {
  if (!(eps > 0) || k < 1) throw DomainError("passage bound needs eps > 0 and k >= 1");
  const double lam = dirichlet_interval_eig(length, k);
  const double s = std::sqrt(lam);
  PassageBound p;
  p.channel = s * std::tanh(eps * s);
  p.bound = lam * eps;
  p.holds = p.channel < p.bound;
  return p;
}

std::string to_string(SpheroidKind kind) {
  switch (kind) {
    case SpheroidKind::Prolate: return "prolate";
    case SpheroidKind::Oblate: return "oblate";
    case SpheroidKind::Higher: return "higher";
  }
  return "unknown";
}

}  // namespace steklov
