#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace steklov {

enum class RadialFormulation { Exterior, Interior, TruncatedDirichlet, TruncatedNeumann, Helmholtz };

std::string to_string(RadialFormulation f);

enum class BoundaryCondition { Dirichlet, Neumann };

struct RadialEntry {
  int ell = 0;
  double value = 0.0;
  std::uint64_t multiplicity = 1;
};

/// Closed-form spectrum of a disk (n = 2) or ball (n >= 3) of radius rho.
/// `parameter` holds the outer radius R for truncated problems and Lambda for Helmholtz.
struct RadialSpectrum {
  int dimension = 2;
  double radius = 1.0;
  RadialFormulation formulation = RadialFormulation::Exterior;
  double parameter = 0.0;
  std::vector<RadialEntry> entries;

  /// Eigenvalues repeated by multiplicity, sorted ascending.
  std::vector<double> flattened() const;
  /// The first `count` flattened values.
  std::vector<double> flattened(std::size_t count) const;
};

RadialSpectrum disk_exterior(double rho, int ell_max = 40);
/// The interior Steklov spectrum of the disk, which coincides with the exterior one.
RadialSpectrum disk_interior(double rho, int ell_max = 40);
RadialSpectrum ball_exterior(int n, double rho, int ell_max = 40);

/// Steklov condition on |x| = rho and Dirichlet or Neumann condition on |x| = R.
RadialSpectrum disk_trunc(double rho, double R, int ell_max, BoundaryCondition bc);
RadialSpectrum ball_trunc(int n, double rho, double R, int ell_max, BoundaryCondition bc);

/// Exterior Steklov problem for -Delta + Lambda^2 outside the ball:
///   mu_ell = Lambda K_{ell+n/2}(Lambda rho) / K_{ell+n/2-1}(Lambda rho) - ell/rho.
RadialSpectrum helmholtz_radial(int n, double rho, double lambda, int ell_max = 40);

/// Coefficients of a boundary function in an L2(sphere of radius rho)-orthonormal basis of
/// spherical harmonics: coefficients[ell][i] for i < sph_mult(n, ell).
using HarmonicCoefficients = std::vector<std::vector<double>>;

/// Exterior Dirichlet-to-Neumann map of the ball: multiplies mode ell by (n + ell - 2)/rho
/// (by ell/rho for n = 2).
HarmonicCoefficients dtn_apply_sphere(int n, double rho, const HarmonicCoefficients& f);

/// Dirichlet energy of the decaying harmonic extension: sum_ell sigma_ell |f_ell|^2.
double grad_energy_sphere(int n, double rho, const HarmonicCoefficients& f);

struct InterlacingReport {
  bool holds = true;
  int first_violation = -1;
  std::vector<double> neumann_limit;    // lambda_k(A^N), k = 1..k_max+1
  std::vector<double> dirichlet_limit;  // lambda_k(A^D), k = 1..k_max
};

/// Checks lambda_k(A^N) <= lambda_k(A^D) <= lambda_{k+1}(A^N) for k <= k_max, where A^N and
/// A^D are the R -> infinity limits of the truncated Neumann and Dirichlet ball spectra.
InterlacingReport interlacing_check(int n, double rho, int k_max);

struct LayerSymbol {
  int ell = 0;
  double single_layer = 0.0;  // v_ell
  double double_layer = 0.0;  // k_ell
  double tau = 0.0;           // (ell + 1)/rho
  double defect = 0.0;        // |1/2 + k_ell - tau v_ell|
};

/// Eigenvalues of the single and double layer operators on the sphere of radius rho in R^3,
/// obtained by Gauss-Legendre quadrature of the kernels against Legendre polynomials.
std::vector<LayerSymbol> sphere_layer_symbols(double rho, int ell_max);

}  // namespace steklov
