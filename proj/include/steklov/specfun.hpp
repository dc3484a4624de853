#pragma once

#include <cstdint>
#include <vector>

namespace steklov {

/// Logarithmic mean of k >= 2 nonnegative numbers,
///   L(a_1..a_k) = (k-1)^{-1} / f[a_1, ..., a_k],   f(x) = x^{k-2} log x,
/// where f[...] is the divided difference.  For k = 2 this is (a-b)/(log a - log b).
/// Repeated arguments use the continuous limit; any zero argument gives 0.
double log_mean(const std::vector<double>& values);

double geometric_mean(const std::vector<double>& values);

/// Modified Bessel functions of real order >= 0 and argument x > 0.
double bessel_k(double order, double x);
double bessel_i(double order, double x);

/// K_{nu+1}(x) / K_nu(x) by the forward recurrence r_{nu} = 1/r_{nu-1} + 2 nu / x started
/// from order nu0 = nu - floor(nu).  Stays finite where K_nu itself would overflow.
double bessel_k_ratio(double nu, double x);

/// Number of linearly independent spherical harmonics of degree ell on S^{n-1}.
std::uint64_t sph_mult(int n, int ell);

/// k-th Dirichlet eigenvalue (k pi / L)^2 of an interval of length L.
double dirichlet_interval_eig(double length, int k);

}  // namespace steklov
