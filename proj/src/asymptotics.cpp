#include "steklov/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "steklov/errors.hpp"

namespace steklov {

namespace {

struct Line {
  double slope, intercept;
};

Line least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double den = n * sxx - sx * sx;
  if (!(std::abs(den) > 0)) return {0.0, sy / n};
  const double b = (n * sxy - sx * sy) / den;
  return {b, (sy - b * sx) / n};
}

}  // namespace

CountingFunction::CountingFunction(std::vector<double> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
}

CountingFunction::CountingFunction(const RadialSpectrum& s) : values_(s.flattened()) {}

std::size_t CountingFunction::operator()(double sigma) const {
  return static_cast<std::size_t>(std::upper_bound(values_.begin(), values_.end(), sigma) - values_.begin());
}

std::uint64_t radial_count(const RadialSpectrum& s, double sigma) {
  std::uint64_t c = 0;
  for (const auto& e : s.entries)
    if (e.value <= sigma) c += e.multiplicity;
  return c;
}

WeylFit weyl_fit_2d(const std::vector<double>& values, double perimeter) {
  if (values.size() < 60) throw InsufficientDataError("Weyl fit needs at least 60 eigenvalues");
  if (!(perimeter > 0)) throw DomainError("perimeter must be positive");
  const CountingFunction N(values);
  const auto& v = N.values();
  // The largest computed cluster may be missing partners beyond the cutoff, so N is only
  // trusted below it.
  std::size_t end = v.size();
  while (end > 0 && v[end - 1] >= v.back() - 1e-6 * std::abs(v.back())) --end;
  std::vector<double> x, y;
  for (std::size_t k = v.size() / 2; k < end; ++k) {
    x.push_back(v[k]);
    y.push_back(static_cast<double>(N(v[k])));
  }
  const Line l = least_squares(x, y);
  WeylFit f;
  f.slope = l.slope;
  f.intercept = l.intercept;
  f.expected = perimeter / std::numbers::pi;
  f.relative_error = f.slope / f.expected - 1.0;
  f.points = x.size();
  return f;
}

double weyl_leading_term(int n, double boundary_measure, double sigma) {
  if (n < 2) throw DomainError("dimension must be at least 2");
  const int m = n - 1;
  // Volume of the unit ball in R^m.
  const double omega = std::pow(std::numbers::pi, 0.5 * m) / std::tgamma(0.5 * m + 1.0);
  return omega * boundary_measure * std::pow(sigma, m) / std::pow(2.0 * std::numbers::pi, m);
}

double weyl_remainder_ratio(const CountingFunction& N, int n, double boundary_measure,
                            const std::vector<double>& sigma_grid) {
  double worst = 0.0;
  for (double s : sigma_grid) {
    const double r = std::abs(static_cast<double>(N(s)) - weyl_leading_term(n, boundary_measure, s));
    worst = std::max(worst, r / std::max(1.0, std::pow(s, n - 2)));
  }
  return worst;
}

PairGaps pair_gap_2d(const std::vector<double>& values) {
  std::vector<double> v = values;
  std::sort(v.begin(), v.end());
  PairGaps p;
  std::vector<double> lx, ly;
  for (int k = 1; static_cast<std::size_t>(2 * k + 1) <= v.size(); ++k) {
    const double g = v[2 * k] - v[2 * k - 1];
    p.k.push_back(k);
    p.gaps.push_back(g);
    if (g > 0) {
      lx.push_back(std::log(static_cast<double>(k)));
      ly.push_back(std::log(g));
    }
  }
  if (lx.size() >= 2) p.decay_exponent = least_squares(lx, ly).slope;
  return p;
}


double fit_power_law(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw InsufficientDataError("power-law fit needs two points");
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0 && y[i] > 0)) throw DomainError("power-law fit needs positive data");
    lx.push_back(std::log(x[i]));
    ly.push_back(std::log(y[i]));
  }
  return least_squares(lx, ly).slope;
}

InverseLogFit fit_inverse_log(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw InsufficientDataError("inverse-log fit needs matching data");
  // Least squares for y = C g with g = 1/|log x|; x = 1 carries no information.
  double num = 0.0, den = 0.0;
  std::vector<std::pair<double, double>> used;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || std::log(x[i]) == 0.0) continue;
    const double g = 1.0 / std::abs(std::log(x[i]));
    num += g * y[i];
    den += g * g;
    used.emplace_back(g, y[i]);
  }
  if (used.empty()) throw InsufficientDataError("inverse-log fit needs points with x != 1");
  InverseLogFit f;
  f.constant = num / den;
  for (const auto& [g, v] : used)
    f.relative_residual = std::max(f.relative_residual, std::abs(v - f.constant * g) / std::abs(v));
  return f;
}

}  // namespace steklov
