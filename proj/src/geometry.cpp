#include "steklov/geometry.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

#include "steklov/errors.hpp"

namespace steklov {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

CurveJet eval_shape(const ShapeVariant& shape, double t) {
  const double c = std::cos(t), s = std::sin(t);
  if (auto* p = std::get_if<CircleShape>(&shape)) {
    const double r = p->radius;
    return {{r * c, r * s}, {-r * s, r * c}, {-r * c, -r * s}};
  }
  if (auto* p = std::get_if<EllipseShape>(&shape)) {
    return {{p->a * c, p->b * s}, {-p->a * s, p->b * c}, {-p->a * c, -p->b * s}};
  }
  if (std::holds_alternative<KiteShape>(shape)) {
    const double c2 = std::cos(2 * t), s2 = std::sin(2 * t);
    return {{1.5 * c + 0.7 * c2 - 0.4, 1.5 * s - 0.3 * c},
            {-1.5 * s - 1.4 * s2, 1.5 * c + 0.3 * s},
            {-1.5 * c - 2.8 * c2, -1.5 * s + 0.3 * c}};
  }
  const auto& f = std::get<FourierShape>(shape);
  auto series = [t](const std::vector<double>& ac, const std::vector<double>& as, int deriv) {
    double v = 0.0;
    const std::size_t m = std::max(ac.size(), as.size());
    for (std::size_t k = 0; k < m; ++k) {
      const double a = k < ac.size() ? ac[k] : 0.0;
      const double b = k < as.size() ? as[k] : 0.0;
      const double kk = static_cast<double>(k);
      const double ck = std::cos(kk * t), sk = std::sin(kk * t);
      switch (deriv) {
        case 0: v += a * ck + b * sk; break;
        case 1: v += kk * (-a * sk + b * ck); break;
        default: v += -kk * kk * (a * ck + b * sk); break;
      }
    }
    return v;
  };
  return {{series(f.x_cos, f.x_sin, 0), series(f.y_cos, f.y_sin, 0)},
          {series(f.x_cos, f.x_sin, 1), series(f.y_cos, f.y_sin, 1)},
          {series(f.x_cos, f.x_sin, 2), series(f.y_cos, f.y_sin, 2)}};
}

CurveEvaluator make_evaluator(const CurveSpec& spec) {
  return [shape = spec.shape, center = spec.center, scale = spec.scale](double t) {
    CurveJet j = eval_shape(shape, t);
    return CurveJet{scale * j.position + center, scale * j.velocity, scale * j.acceleration};
  };
}

// Signed area enclosed by a single sampled loop (trapezoid rule on x y' - y x').
double signed_area(const CurveEvaluator& f, std::size_t n) {
  double a = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    CurveJet j = f(kTwoPi * static_cast<double>(i) / static_cast<double>(n));
    a += cross(j.position, j.velocity);
  }
  return 0.5 * a * kTwoPi / static_cast<double>(n);
}

double winding_number(const CurveComponent& c, Vec2 p) {
  double total = 0.0;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    Vec2 a = c.points[i] - p;
    Vec2 b = c.points[(i + 1) % n] - p;
    total += std::atan2(cross(a, b), dot(a, b));
  }
  return total / kTwoPi;
}

bool segments_cross(Vec2 p1, Vec2 p2, Vec2 q1, Vec2 q2) {
  const double d1 = cross(p2 - p1, q1 - p1);
  const double d2 = cross(p2 - p1, q2 - p1);
  const double d3 = cross(q2 - q1, p1 - q1);
  const double d4 = cross(q2 - q1, p2 - q1);
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0)) && d1 != 0 && d2 != 0 && d3 != 0 &&
         d4 != 0;
}

void check_simple(const BoundaryCurve& curve) {
  const auto& comps = curve.components();
  for (std::size_t a = 0; a < comps.size(); ++a) {
    const auto& ca = comps[a];
    const std::size_t na = ca.size();
    for (std::size_t b = a; b < comps.size(); ++b) {
      const auto& cb = comps[b];
      const std::size_t nb = cb.size();
      for (std::size_t i = 0; i < na; ++i) {
        const std::size_t j0 = (a == b) ? i + 2 : 0;
        for (std::size_t j = j0; j < nb; ++j) {
          if (a == b && i == 0 && j == nb - 1) continue;  // adjacent through the seam
          if (segments_cross(ca.points[i], ca.points[(i + 1) % na], cb.points[j],
                             cb.points[(j + 1) % nb]))
            throw InvalidDomainError("boundary curve intersects itself or another component");
        }
      }
    }
  }
  // Nested components would make the exterior disconnected.
  for (std::size_t a = 0; a < comps.size(); ++a)
    for (std::size_t b = 0; b < comps.size(); ++b)
      if (a != b && std::abs(winding_number(comps[b], comps[a].points[0])) > 0.5)
        throw InvalidDomainError("boundary components are nested");
}

}  // namespace

// ---------------------------------------------------------------------------

DomainSpec DomainSpec::circle(double radius, Vec2 center) {
  if (!(radius > 0)) throw InvalidDomainError("circle radius must be positive");
  return {DomainKind::Circle, {CurveSpec{CircleShape{radius}, center, 1.0}}};
}

DomainSpec DomainSpec::ellipse(double a, double b, Vec2 center) {
  if (!(a > 0 && b > 0)) throw InvalidDomainError("ellipse semi-axes must be positive");
  return {DomainKind::Ellipse, {CurveSpec{EllipseShape{a, b}, center, 1.0}}};
}

DomainSpec DomainSpec::kite() { return {DomainKind::Kite, {CurveSpec{KiteShape{}, {}, 1.0}}}; }

DomainSpec DomainSpec::three_disks() {
  return {DomainKind::ThreeDisks,
          {CurveSpec{CircleShape{1.0}, {0.0, 0.0}, 1.0},
           CurveSpec{CircleShape{2.0 / 3.0}, {-2.0, 0.0}, 1.0},
           CurveSpec{CircleShape{1.5}, {2.0, -2.0}, 1.0}}};
}

DomainSpec DomainSpec::fourier(FourierShape shape) {
  return {DomainKind::Fourier, {CurveSpec{std::move(shape), {}, 1.0}}};
}

DomainSpec DomainSpec::star(double r0, const std::vector<double>& a, const std::vector<double>& b) {
  const std::size_t m = std::max(a.size(), b.size()) + 2;
  FourierShape f;
  f.x_cos.assign(m, 0.0);
  f.x_sin.assign(m, 0.0);
  f.y_cos.assign(m, 0.0);
  f.y_sin.assign(m, 0.0);
  f.x_cos[1] += r0;
  f.y_sin[1] += r0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::size_t k = i + 1;
    const double ak = a[i];
    f.x_cos[k + 1] += 0.5 * ak;
    f.x_cos[k - 1] += 0.5 * ak;
    f.y_sin[k + 1] += 0.5 * ak;
    f.y_sin[k - 1] -= 0.5 * ak;
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    const std::size_t k = i + 1;
    const double bk = b[i];
    f.x_sin[k + 1] += 0.5 * bk;
    f.x_sin[k - 1] += 0.5 * bk;
    f.y_cos[k - 1] += 0.5 * bk;
    f.y_cos[k + 1] -= 0.5 * bk;
  }
  return fourier(std::move(f));
}

DomainSpec DomainSpec::scaled(const DomainSpec& inner, double factor) {
  if (!(factor > 0)) throw InvalidDomainError("scale factor must be positive");
  DomainSpec out{DomainKind::Scaled, inner.components};
  for (auto& c : out.components) {
    c.scale *= factor;
    c.center = factor * c.center;
  }
  return out;
}

DomainSpec DomainSpec::translated(Vec2 offset) const {
  DomainSpec out = *this;
  for (auto& c : out.components) c.center = c.center + offset;
  return out;
}

std::string to_string(DomainKind kind) {
  switch (kind) {
    case DomainKind::Circle: return "circle";
    case DomainKind::Ellipse: return "ellipse";
    case DomainKind::Kite: return "kite";
    case DomainKind::ThreeDisks: return "three-disks";
    case DomainKind::Fourier: return "fourier";
    case DomainKind::Scaled: return "scaled";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------

BoundaryCurve::BoundaryCurve(std::vector<CurveEvaluator> evaluators, std::vector<int> orientations,
                             std::size_t nodes)
    : nodes_(nodes) {
  components_.reserve(evaluators.size());
  const double h = kTwoPi / static_cast<double>(nodes);
  for (std::size_t c = 0; c < evaluators.size(); ++c) {
    CurveComponent comp;
    comp.evaluate = std::move(evaluators[c]);
    comp.orientation = orientations[c];
    const double o = comp.orientation;
    comp.t.resize(nodes);
    comp.points.resize(nodes);
    comp.velocity.resize(nodes);
    comp.acceleration.resize(nodes);
    comp.speed.resize(nodes);
    comp.normal.resize(nodes);
    comp.curvature.resize(nodes);
    for (std::size_t i = 0; i < nodes; ++i) {
      const double t = h * static_cast<double>(i);
      CurveJet j = comp.evaluate(t);
      const double sp = norm(j.velocity);
      comp.t[i] = t;
      comp.points[i] = j.position;
      comp.velocity[i] = j.velocity;
      comp.acceleration[i] = j.acceleration;
      comp.speed[i] = sp;
      comp.normal[i] = {o * j.velocity.y / sp, -o * j.velocity.x / sp};
      comp.curvature[i] = o * cross(j.velocity, j.acceleration) / (sp * sp * sp);
    }
    components_.push_back(std::move(comp));
  }
}

double BoundaryCurve::parameter_step() const { return kTwoPi / static_cast<double>(nodes_); }

Vec2 BoundaryCurve::point(std::size_t g) const {
  return components_[g / nodes_].points[g % nodes_];
}
Vec2 BoundaryCurve::normal(std::size_t g) const {
  return components_[g / nodes_].normal[g % nodes_];
}
double BoundaryCurve::speed(std::size_t g) const {
  return components_[g / nodes_].speed[g % nodes_];
}
double BoundaryCurve::curvature(std::size_t g) const {
  return components_[g / nodes_].curvature[g % nodes_];
}
double BoundaryCurve::weight(std::size_t g) const { return speed(g) * parameter_step(); }

std::vector<double> BoundaryCurve::weights() const {
  std::vector<double> w(total_nodes());
  for (std::size_t g = 0; g < w.size(); ++g) w[g] = weight(g);
  return w;
}

BoundaryCurve BoundaryCurve::affine(double factor, Vec2 offset) const {
  std::vector<CurveEvaluator> evs;
  std::vector<int> orient;
  for (const auto& c : components_) {
    evs.push_back([f = c.evaluate, factor, offset](double t) {
      CurveJet j = f(t);
      return CurveJet{factor * j.position + offset, factor * j.velocity, factor * j.acceleration};
    });
    orient.push_back(c.orientation);
  }
  return BoundaryCurve(std::move(evs), std::move(orient), nodes_);
}

double BoundaryCurve::region_indicator(Vec2 p) const {
  double s = 0.0;
  for (const auto& c : components_) s += c.orientation * winding_number(c, p);
  return s;
}

double BoundaryCurve::distance_to_nodes(Vec2 p) const {
  double d = std::numeric_limits<double>::infinity();
  for (const auto& c : components_)
    for (const auto& q : c.points) d = std::min(d, norm(q - p));
  return d;
}

double BoundaryCurve::max_node_spacing() const {
  double d = 0.0;
  for (const auto& c : components_)
    for (std::size_t i = 0; i < c.size(); ++i)
      d = std::max(d, norm(c.points[(i + 1) % c.size()] - c.points[i]));
  return d;
}

// ---------------------------------------------------------------------------

BoundaryCurve build_curve(const DomainSpec& spec, std::size_t nodes) {
  if (nodes < 16 || nodes % 2 != 0)
    throw InvalidDomainError("node count must be even and at least 16");
  if (spec.components.empty()) throw InvalidDomainError("domain has no components");

  std::vector<CurveEvaluator> evs;
  std::vector<int> orient;
  for (const auto& cs : spec.components) {
    if (!(cs.scale > 0) || !std::isfinite(cs.scale))
      throw InvalidDomainError("component scale must be positive");
    CurveEvaluator f = make_evaluator(cs);

    const CurveJet j0 = f(0.0), j1 = f(kTwoPi);
    const double size = std::max(1.0, norm(j0.position));
    if (norm(j0.position - j1.position) > 1e-9 * size)
      throw InvalidDomainError("component is not closed");

    const double area = signed_area(f, std::max<std::size_t>(nodes, 256));
    if (!(std::abs(area) > 0) || !std::isfinite(area))
      throw InvalidDomainError("component encloses no area");
    if (area < 0) {
      // Reverse the parametrization so that every component runs counterclockwise.
      f = [g = std::move(f)](double t) {
        CurveJet j = g(kTwoPi - t);
        return CurveJet{j.position, -1.0 * j.velocity, j.acceleration};
      };
    }
    evs.push_back(std::move(f));
    orient.push_back(1);
  }

  BoundaryCurve curve(std::move(evs), std::move(orient), nodes);
  for (const auto& c : curve.components())
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!(c.speed[i] > 0) || !std::isfinite(c.speed[i]) || !std::isfinite(c.curvature[i]))
        throw InvalidDomainError("curve has a degenerate node (zero speed)");
  check_simple(curve);
  return curve;
}

CurveQuantities quantities(const BoundaryCurve& curve) {
  CurveQuantities q;
  const double h = curve.parameter_step();
  for (const auto& c : curve.components()) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      q.perimeter += c.speed[i] * h;
      q.area += 0.5 * dot(c.points[i], c.normal[i]) * c.speed[i] * h;
    }
  }

  // Diameter: best node pair, then alternating golden-section refinement in each parameter.
  const auto& comps = curve.components();
  std::size_t ba = 0, bb = 0, bi = 0, bj = 0;
  double best = -1.0;
  for (std::size_t a = 0; a < comps.size(); ++a)
    for (std::size_t b = a; b < comps.size(); ++b)
      for (std::size_t i = 0; i < comps[a].size(); ++i)
        for (std::size_t j = 0; j < comps[b].size(); ++j) {
          const double d = norm(comps[a].points[i] - comps[b].points[j]);
          if (d > best) best = d, ba = a, bb = b, bi = i, bj = j;
        }
  double s = comps[ba].t[bi], t = comps[bb].t[bj];
  const auto& fa = comps[ba].evaluate;
  const auto& fb = comps[bb].evaluate;
  auto dist = [&](double u, double v) { return norm(fa(u).position - fb(v).position); };
  auto golden = [](auto&& g, double lo, double hi) {
    const double r = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - r * (hi - lo), x2 = lo + r * (hi - lo);
    double f1 = g(x1), f2 = g(x2);
    for (int it = 0; it < 60; ++it) {
      if (f1 > f2) {
        hi = x2, x2 = x1, f2 = f1, x1 = hi - r * (hi - lo), f1 = g(x1);
      } else {
        lo = x1, x1 = x2, f1 = f2, x2 = lo + r * (hi - lo), f2 = g(x2);
      }
    }
    return 0.5 * (lo + hi);
  };
  const double span = curve.parameter_step();
  for (int sweep = 0; sweep < 6; ++sweep) {
    s = golden([&](double u) { return dist(u, t); }, s - span, s + span);
    t = golden([&](double v) { return dist(s, v); }, t - span, t + span);
  }
  q.diameter = std::max(best, dist(s, t));
  return q;
}

BoundaryCurve rescale(const BoundaryCurve& curve, double factor) {
  if (!(factor > 0)) throw DomainError("rescale factor must be positive");
  return curve.affine(factor, {});
}

BoundaryCurve translate(const BoundaryCurve& curve, Vec2 offset) {
  return curve.affine(1.0, offset);
}

bool point_inside(const BoundaryCurve& curve, Vec2 p) { return curve.region_indicator(p) > 0.5; }

InvertedBoundary invert_boundary(const BoundaryCurve& curve, Vec2 center) {
  if (!point_inside(curve, center) ||
      curve.distance_to_nodes(center) < 1e-3 * curve.max_node_spacing())
    throw InvalidCenterError("inversion center must lie strictly inside the domain");

  const std::complex<double> c = to_complex(center);
  std::vector<CurveEvaluator> evs;
  std::vector<int> orient;
  for (const auto& comp : curve.components()) {
    evs.push_back([f = comp.evaluate, c](double t) {
      CurveJet j = f(t);
      const std::complex<double> d = to_complex(j.position) - c;
      const std::complex<double> z1 = to_complex(j.velocity);
      const std::complex<double> z2 = to_complex(j.acceleration);
      const std::complex<double> w = 1.0 / d;
      const std::complex<double> w1 = -z1 * w * w;
      const std::complex<double> w2 = 2.0 * z1 * z1 * w * w * w - z2 * w * w;
      return CurveJet{to_vec(w), to_vec(w1), to_vec(w2)};
    });
    orient.push_back(-comp.orientation);
  }
  InvertedBoundary out{BoundaryCurve(std::move(evs), std::move(orient), curve.nodes_per_component()),
                       {}};
  out.weight.resize(curve.total_nodes());
  for (std::size_t g = 0; g < curve.total_nodes(); ++g) {
    const Vec2 d = curve.point(g) - center;
    out.weight[g] = dot(d, d);
  }
  return out;
}

Vec2 default_center(const BoundaryCurve& curve) {
  const auto& c0 = curve.components().front();
  if (std::abs(winding_number(c0, {0.0, 0.0})) > 0.5 && curve.distance_to_nodes({}) > 0)
    return {0.0, 0.0};
  // Area centroid of the first component via Green's theorem.
  const double h = curve.parameter_step();
  double area = 0.0, mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < c0.size(); ++i) {
    const Vec2 p = c0.points[i], v = c0.velocity[i];
    area += 0.5 * cross(p, v) * h;
    mx += 0.5 * p.x * p.x * v.y * h;
    my += -0.5 * p.y * p.y * v.x * h;
  }
  return {mx / area, my / area};
}

}  // namespace steklov
