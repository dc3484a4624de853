#pragma once

#include <cstdint>
#include <vector>

#include "steklov/oracle_radial.hpp"

namespace steklov {

/// N(sigma) = #{k : sigma_k <= sigma} for a finite list of eigenvalues.
class CountingFunction {
 public:
  explicit CountingFunction(std::vector<double> values);
  explicit CountingFunction(const RadialSpectrum& s);

  std::size_t operator()(double sigma) const;
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> values_;
};

/// Sum of multiplicities of the modes with sigma_ell <= sigma, counted mode by mode.
std::uint64_t radial_count(const RadialSpectrum& s, double sigma);

struct WeylFit {
  double slope = 0.0;
  double intercept = 0.0;
  double expected = 0.0;        // |dOmega| / pi
  double relative_error = 0.0;  // slope / expected - 1
  std::size_t points = 0;
};

/// Least-squares line through (sigma_k, N(sigma_k)) over the upper half of the eigenvalues.
/// Needs at least 60 eigenvalues.
WeylFit weyl_fit_2d(const std::vector<double>& values, double perimeter);

/// omega_{n-1} |dOmega| sigma^{n-1} / (2 pi)^{n-1}.
double weyl_leading_term(int n, double boundary_measure, double sigma);

/// max over the grid of |N(sigma) - leading(sigma)| / max(1, sigma^{n-2}).
double weyl_remainder_ratio(const CountingFunction& N, int n, double boundary_measure,
                            const std::vector<double>& sigma_grid);

struct PairGaps {
  std::vector<int> k;
  std::vector<double> gaps;  // sigma_{2k+1} - sigma_{2k}, 1-based indices
  double decay_exponent = 0.0;  // least-squares slope of log gap against log k (positive gaps only)
};

PairGaps pair_gap_2d(const std::vector<double>& values);


/// Exponent p of the least-squares fit y ~ C x^p on a log-log scale (all entries > 0).
double fit_power_law(const std::vector<double>& x, const std::vector<double>& y);

struct InverseLogFit {
  double constant = 0.0;           // C in y ~ C / |log x|
  double relative_residual = 0.0;  // max_i |y_i - C/|log x_i|| / y_i
};

InverseLogFit fit_inverse_log(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace steklov
