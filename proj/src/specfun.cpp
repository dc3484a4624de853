#include "steklov/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <utility>

#include "steklov/errors.hpp"

namespace steklov {

namespace {

// Subranges whose spread is below this fraction of their midpoint are evaluated from a
// Taylor expansion; wider ones by the divided-difference recursion, which is then stable.
constexpr double kTightSpread = 0.3;
constexpr int kTaylorTerms = 48;

class DividedDifference {
 public:
  DividedDifference(std::vector<double> x, int q) : x_(std::move(x)), q_(q) {}

  double operator()(std::size_t i, std::size_t j) {
    auto key = std::make_pair(i, j);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    double v;
    const double lo = x_[i], hi = x_[j];
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= kTightSpread * mid) {
      v = taylor(i, j, mid);
    } else {
      v = ((*this)(i + 1, j) - (*this)(i, j - 1)) / (hi - lo);
    }
    memo_.emplace(key, v);
    return v;
  }

 private:
  // f(c+u) = (c+u)^q log(c+u) = sum_p a_p u^p; the divided difference of u^p over m nodes
  // is the complete homogeneous symmetric polynomial h_{p-m+1} of the shifted nodes.
  double taylor(std::size_t i, std::size_t j, double c) const {
    const int m = static_cast<int>(j - i + 1);
    const int P = kTaylorTerms + m;
    std::vector<double> pw(q_ + 1), lg(P + 1), a(P + 1, 0.0);
    double binom = 1.0;
    for (int r = 0; r <= q_; ++r) {
      pw[r] = binom * std::pow(c, q_ - r);
      binom = binom * (q_ - r) / (r + 1);
    }
    lg[0] = std::log(c);
    double cp = 1.0;
    for (int r = 1; r <= P; ++r) {
      cp *= c;
      lg[r] = ((r % 2) ? 1.0 : -1.0) / (r * cp);
    }
    for (int p = 0; p <= P; ++p)
      for (int r = 0; r <= std::min(p, q_); ++r) a[p] += pw[r] * lg[p - r];

    const int R = P - m + 1;
    std::vector<double> h(R + 1, 0.0);
    h[0] = 1.0;
    for (std::size_t s = i; s <= j; ++s) {
      const double d = x_[s] - c;
      for (int r = 1; r <= R; ++r) h[r] += d * h[r - 1];
    }
    double sum = 0.0;
    for (int r = R; r >= 0; --r) sum += a[r + m - 1] * h[r];
    return sum;
  }

  std::vector<double> x_;
  int q_;
  std::map<std::pair<std::size_t, std::size_t>, double> memo_;
};

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

}  // namespace

double log_mean(const std::vector<double>& values) {
  if (values.size() < 2) throw DomainError("log_mean needs at least two arguments");
  for (double v : values)
    if (!(v >= 0) || !std::isfinite(v)) throw DomainError("log_mean arguments must be finite and >= 0");
  std::vector<double> x = values;
  std::sort(x.begin(), x.end());
  if (x.front() == 0.0) return 0.0;
  const int k = static_cast<int>(x.size());
  DividedDifference dd(x, k - 2);
  return 1.0 / ((k - 1) * dd(0, x.size() - 1));
}

double geometric_mean(const std::vector<double>& values) {
  if (values.empty()) throw DomainError("geometric_mean of an empty list");
  double s = 0.0;
  for (double v : values) {
    if (!(v >= 0)) throw DomainError("geometric_mean arguments must be >= 0");
    if (v == 0.0) return 0.0;
    s += std::log(v);
  }
  return std::exp(s / static_cast<double>(values.size()));
}

double bessel_k(double order, double x) {
  if (!(x > 0)) throw DomainError("bessel_k requires x > 0");
  if (!(order >= 0)) throw DomainError("bessel_k requires order >= 0");
  return std::cyl_bessel_k(order, x);
}

double bessel_i(double order, double x) {
  if (!(x > 0)) throw DomainError("bessel_i requires x > 0");
  if (!(order >= 0)) throw DomainError("bessel_i requires order >= 0");
  return std::cyl_bessel_i(order, x);
}

double bessel_k_ratio(double nu, double x) {
  if (!(x > 0)) throw DomainError("bessel_k_ratio requires x > 0");
  if (!(nu >= 0)) throw DomainError("bessel_k_ratio requires order >= 0");
  double v = nu - std::floor(nu);
  double r = std::cyl_bessel_k(v + 1.0, x) / std::cyl_bessel_k(v, x);
  while (v + 0.5 < nu) {
    v += 1.0;
    r = 1.0 / r + 2.0 * v / x;
  }
  return r;
}

std::uint64_t sph_mult(int n, int ell) {
  if (n < 2) throw DomainError("sph_mult requires n >= 2");
  if (ell < 0) throw DomainError("sph_mult requires ell >= 0");
  if (n == 2) return ell == 0 ? 1 : 2;
  return binomial(n + ell - 1, n - 1) - binomial(n + ell - 3, n - 1);
}

double dirichlet_interval_eig(double length, int k) {
  if (!(length > 0) || k < 1) throw DomainError("interval eigenvalue needs L > 0 and k >= 1");
  const double s = k * std::numbers::pi / length;
  return s * s;
}

}  // namespace steklov
