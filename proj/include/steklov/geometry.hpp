#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace steklov {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Vec2, Vec2) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline std::complex<double> to_complex(Vec2 a) { return {a.x, a.y}; }
inline Vec2 to_vec(std::complex<double> z) { return {z.real(), z.imag()}; }

// ---------------------------------------------------------------------------
// Domain specifications

struct CircleShape {
  double radius = 1.0;
};

struct EllipseShape {
  double a = 1.0;
  double b = 1.0;
};

/// x(t) = 1.5 cos t + 0.7 cos 2t - 0.4,  y(t) = 1.5 sin t - 0.3 cos t.
struct KiteShape {};

/// Truncated Fourier series per coordinate:
///   x(t) = sum_k x_cos[k] cos(kt) + x_sin[k] sin(kt), k = 0, 1, ...
/// and likewise for y.  Missing entries are zero.
struct FourierShape {
  std::vector<double> x_cos, x_sin, y_cos, y_sin;
};

using ShapeVariant = std::variant<CircleShape, EllipseShape, KiteShape, FourierShape>;

/// One closed component: scale * shape(t) + center.
struct CurveSpec {
  ShapeVariant shape;
  Vec2 center{};
  double scale = 1.0;
};

enum class DomainKind { Circle, Ellipse, Kite, ThreeDisks, Fourier, Scaled };

struct DomainSpec {
  DomainKind kind = DomainKind::Circle;
  std::vector<CurveSpec> components;

  static DomainSpec circle(double radius, Vec2 center = {});
  static DomainSpec ellipse(double a, double b, Vec2 center = {});
  static DomainSpec kite();
  /// Unit disk at the origin, radius 2/3 at (-2,0), radius 3/2 at (2,-2).
  static DomainSpec three_disks();
  static DomainSpec fourier(FourierShape shape);
  /// Star-shaped curve r(t)(cos t, sin t) with
  /// r(t) = r0 + sum_{k>=1} (a[k-1] cos kt + b[k-1] sin kt), expressed as a fourier spec.
  static DomainSpec star(double r0, const std::vector<double>& a, const std::vector<double>& b);
  static DomainSpec scaled(const DomainSpec& inner, double factor);
  DomainSpec translated(Vec2 offset) const;
};

std::string to_string(DomainKind kind);

// ---------------------------------------------------------------------------
// Sampled boundary

/// Position and first two parameter derivatives of a curve at one parameter value.
struct CurveJet {
  Vec2 position;
  Vec2 velocity;
  Vec2 acceleration;
};

using CurveEvaluator = std::function<CurveJet(double)>;

/// One closed component sampled at N uniform parameter nodes t_i = 2 pi i / N.
///
/// `orientation` fixes the normal convention: normal = orientation * (v_y, -v_x)/|v|.
/// Components of a domain given counterclockwise have orientation +1; images under
/// inversion keep their parametrization and carry orientation -1.  In both cases the
/// normal points out of the bounded region and `curvature` is positive where the
/// boundary bends away from the normal (convex side).
struct CurveComponent {
  CurveEvaluator evaluate;
  int orientation = 1;
  std::vector<double> t;
  std::vector<Vec2> points;
  std::vector<Vec2> velocity;
  std::vector<Vec2> acceleration;
  std::vector<double> speed;
  std::vector<Vec2> normal;
  std::vector<double> curvature;

  std::size_t size() const { return points.size(); }
};

class BoundaryCurve {
 public:
  BoundaryCurve() = default;
  BoundaryCurve(std::vector<CurveEvaluator> evaluators, std::vector<int> orientations,
                std::size_t nodes_per_component);

  const std::vector<CurveComponent>& components() const { return components_; }
  std::size_t nodes_per_component() const { return nodes_; }
  std::size_t total_nodes() const { return nodes_ * components_.size(); }
  double parameter_step() const;

  /// Flattened node data in component-major order.
  Vec2 point(std::size_t global) const;
  Vec2 normal(std::size_t global) const;
  double speed(std::size_t global) const;
  double curvature(std::size_t global) const;
  /// Arc-length quadrature weight speed * 2pi/N at a node.
  double weight(std::size_t global) const;
  std::vector<double> weights() const;

  /// Maps every component through an affine map x -> factor * x + offset.
  BoundaryCurve affine(double factor, Vec2 offset) const;

  /// Winding-number count of components enclosing p, each weighted by its orientation:
  /// 1 inside the bounded region, 0 outside.
  double region_indicator(Vec2 p) const;
  double distance_to_nodes(Vec2 p) const;
  double max_node_spacing() const;

 private:
  std::vector<CurveComponent> components_;
  std::size_t nodes_ = 0;
};

struct CurveQuantities {
  double perimeter = 0.0;
  double area = 0.0;
  double diameter = 0.0;
};

/// Samples a domain spec.  N must be even and at least 16.
/// Throws InvalidDomainError for degenerate or (coarsely detected) self-intersecting input.
BoundaryCurve build_curve(const DomainSpec& spec, std::size_t nodes);

CurveQuantities quantities(const BoundaryCurve& curve);

/// Scales all coordinates by factor about the origin.
BoundaryCurve rescale(const BoundaryCurve& curve, double factor);
BoundaryCurve translate(const BoundaryCurve& curve, Vec2 offset);

struct InvertedBoundary {
  BoundaryCurve curve;
  /// 1/|phi'| = |z_i - center|^2 at each image node, phi(z) = 1/(z - center).  This is the
  /// density in the transformed Steklov condition d_nu v = sigma * weight * v.
  std::vector<double> weight;
};

/// Image of the boundary under z -> 1/(z - center).  The center must lie strictly inside.
InvertedBoundary invert_boundary(const BoundaryCurve& curve, Vec2 center);

/// Origin if it lies inside the first component, else that component's area centroid.
Vec2 default_center(const BoundaryCurve& curve);

bool point_inside(const BoundaryCurve& curve, Vec2 p);

}  // namespace steklov
