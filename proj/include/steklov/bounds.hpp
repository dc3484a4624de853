#pragma once

#include <string>
#include <vector>

namespace steklov {

struct CurvatureSample {
  double label = 0.0;            // profile parameter of the sample point
  std::vector<double> kappa;     // principal curvatures kappa_1..kappa_{n-1}
};

struct CurvatureField {
  int dimension = 3;
  std::vector<CurvatureSample> samples;
};

/// (n-2) * min over samples of the logarithmic mean of the principal curvatures.
double escobar_bound(const CurvatureField& field);
/// Same with the geometric mean.
double geometric_mean_bound(const CurvatureField& field);

/// A boundary point with its outward unit normal, in any dimension.
struct SurfaceSample {
  std::vector<double> x;
  std::vector<double> normal;
};

struct XiongResult {
  double value = 0.0;
  bool star_shaped = true;  // false when the minimized quantity is not positive
};

/// (n-2) * min <x, nu_out> / |x|^2, with the origin assumed inside the body.
XiongResult xiong_bound(const std::vector<SurfaceSample>& samples, int n);

/// 1 / int_0^inf prod_j (1 + kappa_j t)^{-1} dt for the n-1 curvatures kappa_j > 0.
/// Adaptive Gauss-Kronrod on [0, T] plus the tail on [T, inf) mapped to (0, 1/T] by t = 1/u.
double K_quadrature(const std::vector<double>& kappa, int n);

enum class SpheroidKind { Prolate, Oblate, Higher };

struct SpheroidFamily {
  SpheroidKind kind = SpheroidKind::Prolate;
  int k = 2;  // number of short semi-axes (Higher only; prolate is k=2, oblate k=1 in n=3)
  int n = 3;
  std::vector<double> a_grid;
};

/// Uniform grid of `count` points on [lo, hi]; throws unless 0 < lo <= hi < 1.
std::vector<double> aspect_grid(double lo, double hi, std::size_t count);

/// Principal curvatures along the profile of a spheroid with aspect ratio a.
///   prolate  x1^2/a^2 + x2^2/a^2 + x3^2 = 1,  parameter x3 in [0, 1]
///   oblate   x1^2/a^2 + x2^2 + x3^2 = 1,      parameter x1/a in [0, 1]
///   higher   sum_{j<=k} x_j^2/a^2 + sum_{j>k} x_j^2 = 1 in R^n, parameter |x^(2)| in [0, 1]
CurvatureField spheroid_curvatures(double a, const SpheroidFamily& family,
                                   const std::vector<double>& profile);
/// Same on the default profile grid of 2048 points including both ends.
CurvatureField spheroid_curvatures(double a, const SpheroidFamily& family);

/// Xiong bound of the spheroid, minimized over the 2048-point profile and refined by
/// golden-section search.
double spheroid_xiong(double a, const SpheroidFamily& family);

/// Curvatures of a sphere of radius rho in R^n at a single sample.
CurvatureField sphere_curvatures(int n, double rho);

double prolate_beta_formula(double a);
double oblate_beta_formula(double a);
double spheroid_xiong_formula(double a);

struct BoundRow {
  double a = 0.0;
  double beta = 0.0;
  double beta_gm = 0.0;
  double beta_xiong = 0.0;
  double beta_norm = 0.0;        // bound for the volume-normalized spheroid a^{-k/n} e_a
  double beta_xiong_norm = 0.0;
};

std::vector<BoundRow> bound_curves(const SpheroidFamily& family);

struct WeinstockMargins {
  double weinstock = 0.0;        // 2 pi - sigma_2 |dOmega|
  std::vector<double> hps;       // 2 pi k - sigma_{k+1} |dOmega|, k = 1..5 (as available)
  double area_form = 0.0;        // sqrt(pi) - sigma_2 |Omega|^{1/2}
};

/// `sigma` holds sigma_1, sigma_2, ... of a simply connected planar exterior domain.
WeinstockMargins weinstock_margin(const std::vector<double>& sigma, double perimeter, double area);

struct PassageBound {
  double channel = 0.0;  // sqrt(Lambda_k) tanh(eps sqrt(Lambda_k))
  double bound = 0.0;    // Lambda_k eps
  bool holds = false;
};

PassageBound passage_bound(double length, double eps, int k);

std::string to_string(SpheroidKind kind);

}  // namespace steklov
