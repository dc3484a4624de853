#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "steklov/errors.hpp"
#include "steklov/geometry.hpp"

namespace steklov {

/// Dense Nystrom matrices of the Laplace layer operators on a closed curve set.
///
/// Kernels, with nu the outward normal of the bounded region:
///   Phi(x,y) = -log|x-y| / (2 pi)
///   k(x,y)   = <y - x, nu_y> / (2 pi |x-y|^2)        (K,  so that K 1 = 1/2)
///   k'(x,y)  = <x - y, nu_x> / (2 pi |x-y|^2)        (K', adjoint of K)
/// Matrix entries include the arc-length quadrature weight of the source node.
struct LayerSystem {
  BoundaryCurve curve;
  Eigen::VectorXd weights;
  Eigen::MatrixXd V;
  Eigen::MatrixXd K;
  Eigen::MatrixXd Kp;
  /// Only filled when the exterior operators are requested.
  Eigen::MatrixXd V0;
  Eigen::RowVectorXd K0;
  double capacity = 0.0;
  bool has_exterior = false;
};

/// Assembles V, K, K'.  With `exterior` set, also computes the logarithmic capacity, V0 and
/// the K0 row; this requires diameter < 1 and the origin strictly inside the region.
LayerSystem assemble(const BoundaryCurve& curve, bool exterior = true);

/// Logarithmic capacity; rescales internally when the diameter is not below 1.
double capacity(const BoundaryCurve& curve);

enum class Formulation { ExteriorBie, InteriorBie, ConformalExterior };

std::string to_string(Formulation f);

struct Spectrum {
  Formulation formulation = Formulation::ExteriorBie;
  std::vector<double> values;
  /// Column k is the boundary trace of eigenfunction k at the nodes of `curve`,
  /// with unit boundary-L2 norm.
  Eigen::MatrixXd traces;
  std::vector<double> residuals;
  /// group[k] is the index of the multiplicity group containing eigenvalue k.
  std::vector<int> group;
  std::shared_ptr<const BoundaryCurve> curve;
  double capacity = 0.0;
  Vec2 reference{};

  std::size_t size() const { return values.size(); }
  std::vector<std::vector<int>> groups() const;
};

/// Thrown when fewer eigenvalues than requested pass the reality and residual filters.
class PartialSpectrumError : public Error {
 public:
  PartialSpectrumError(const std::string& what, Spectrum prefix)
      : Error(what), prefix_(std::move(prefix)) {}
  const Spectrum& prefix() const { return prefix_; }

 private:
  Spectrum prefix_;
};

struct SolverOptions {
  double reality_tol = 1e-8;
  double residual_tol = 1e-7;
  double group_tol = 1e-6;
  double target_diameter = 0.8;
};

struct RawEigen {
  Eigen::VectorXcd values;
  Eigen::MatrixXcd vectors;
  Eigen::VectorXd residuals;
};

/// Eigenpairs of B^{-1} A; residuals are ||A u - tau B u|| / ||u||.
RawEigen solve_generalized(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B);

Spectrum exterior_spectrum(const DomainSpec& spec, std::size_t nodes, std::size_t count,
                           const SolverOptions& opt = {});
Spectrum exterior_spectrum(const BoundaryCurve& curve, std::size_t count,
                           const SolverOptions& opt = {});

Spectrum interior_spectrum(const DomainSpec& spec, std::size_t nodes, std::size_t count,
                           const SolverOptions& opt = {});
Spectrum interior_spectrum(const BoundaryCurve& curve, std::size_t count,
                           const SolverOptions& opt = {});

/// Exterior eigenvalues through inversion z -> 1/(z - center) and a weighted interior problem.
Spectrum conformal_exterior_spectrum(const DomainSpec& spec, Vec2 center, std::size_t nodes,
                                     std::size_t count, const SolverOptions& opt = {});
Spectrum conformal_exterior_spectrum(const BoundaryCurve& curve, Vec2 center, std::size_t count,
                                     const SolverOptions& opt = {});

/// Limit at infinity of the exterior eigenfunction with index `k`.
double far_field_constant(const Spectrum& s, std::size_t k);

/// Exterior eigenfunction `k` of an exterior spectrum at points of the unbounded component.
std::vector<double> evaluate_field(const Spectrum& s, std::size_t k, const std::vector<Vec2>& points);

}  // namespace steklov
