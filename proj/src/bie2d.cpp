#include "steklov/bie2d.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace steklov {

namespace {

constexpr double kPi = std::numbers::pi;

// Weights R(d), d = i - j mod N, of the periodic rule for
//   int_0^{2pi} log(4 sin^2((t_i - s)/2)) f(s) ds  ~  sum_j R(i - j) f(t_j),   N = 2n.
std::vector<double> log_weights(std::size_t N) {
  const std::size_t n = N / 2;
  const double h = 2.0 * kPi / static_cast<double>(N);
  std::vector<double> R(N);
  for (std::size_t d = 0; d < N; ++d) {
    const double t = h * static_cast<double>(d);
    double s = 0.0;
    for (std::size_t m = 1; m < n; ++m) s += std::cos(static_cast<double>(m) * t) / static_cast<double>(m);
    R[d] = -2.0 * kPi / static_cast<double>(n) * s -
           kPi / static_cast<double>(n * n) * std::cos(static_cast<double>(n) * t);
  }
  return R;
}

double check_kernel_orientation(const LayerSystem& L) {
  const Eigen::VectorXd row = L.K * Eigen::VectorXd::Ones(L.K.cols());
  return (row.array() - 0.5).abs().maxCoeff();
}

struct Prepared {
  BoundaryCurve scaled;
  Vec2 reference;
  double factor;  // scaled = factor * (curve - reference)
};

Prepared prepare(const BoundaryCurve& curve, Vec2 reference, double target) {
  const double diam = quantities(curve).diameter;
  const double a = target / diam;
  return {curve.affine(a, -a * reference), reference, a};
}

Eigen::VectorXd weights_of(const BoundaryCurve& c) {
  const auto w = c.weights();
  return Eigen::Map<const Eigen::VectorXd>(w.data(), static_cast<Eigen::Index>(w.size()));
}

// Filters, sorts, scales and normalizes the raw eigenpairs of A u = tau B u.
Spectrum finish(const RawEigen& raw, std::size_t count, double factor, const BoundaryCurve& original,
                Formulation form, const SolverOptions& opt) {
  const Eigen::Index M = raw.values.size();
  if (count > static_cast<std::size_t>(M))
    throw PreconditionError("requested more eigenvalues than boundary nodes");

  std::vector<Eigen::Index> order(M);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return raw.values[a].real() < raw.values[b].real();
  });

  const Eigen::VectorXd w = weights_of(original);
  Spectrum s;
  s.formulation = form;
  s.curve = std::make_shared<const BoundaryCurve>(original);
  s.traces.resize(M, 0);
  std::vector<Eigen::VectorXd> vecs;
  std::string failure;
  for (std::size_t k = 0; k < count; ++k) {
    const Eigen::Index idx = order[k];
    const std::complex<double> lam = raw.values[idx];
    if (std::abs(lam.imag()) > opt.reality_tol * (1.0 + std::abs(lam.real()))) {
      failure = "eigenvalue " + std::to_string(k + 1) + " is not real";
      break;
    }
    if (!(raw.residuals[idx] < opt.residual_tol)) {
      failure = "eigenvalue " + std::to_string(k + 1) + " exceeds the residual tolerance";
      break;
    }
    // Rotate the complex eigenvector onto the real axis using its largest entry.
    Eigen::VectorXcd z = raw.vectors.col(idx);
    Eigen::Index imax;
    z.cwiseAbs().maxCoeff(&imax);
    z *= std::abs(z[imax]) / z[imax];
    Eigen::VectorXd u = z.real();
    u /= std::sqrt((u.array().square() * w.array()).sum());
    s.values.push_back(factor * lam.real());
    s.residuals.push_back(raw.residuals[idx]);
    vecs.push_back(u);
  }

  // Multiplicity groups and weighted Gram-Schmidt within each group.
  const std::size_t n = s.values.size();
  s.group.assign(n, 0);
  int g = 0;
  for (std::size_t k = 1; k < n; ++k) {
    const double a = s.values[k - 1], b = s.values[k];
    const double scale = std::max(std::abs(a), std::abs(b));
    if (!(std::abs(b - a) <= opt.group_tol * scale)) ++g;
    s.group[k] = g;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (s.group[j] != s.group[k]) continue;
      vecs[k] -= (vecs[k].array() * vecs[j].array() * w.array()).sum() * vecs[j];
    }
    vecs[k] /= std::sqrt((vecs[k].array().square() * w.array()).sum());
    // Sign convention: the largest entry is positive.
    Eigen::Index imax;
    vecs[k].cwiseAbs().maxCoeff(&imax);
    if (vecs[k][imax] < 0) vecs[k] = -vecs[k];
  }
  s.traces.resize(M, static_cast<Eigen::Index>(n));
  for (std::size_t k = 0; k < n; ++k) s.traces.col(static_cast<Eigen::Index>(k)) = vecs[k];

  if (!failure.empty()) throw PartialSpectrumError(failure, std::move(s));
  return s;
}

}  // namespace

std::string to_string(Formulation f) {
  switch (f) {
    case Formulation::ExteriorBie: return "exterior-bie";
    case Formulation::InteriorBie: return "interior-bie";
    case Formulation::ConformalExterior: return "conformal-exterior";
  }
  return "unknown";
}

std::vector<std::vector<int>> Spectrum::groups() const {
  std::vector<std::vector<int>> out;
  for (std::size_t k = 0; k < group.size(); ++k) {
    if (static_cast<std::size_t>(group[k]) >= out.size()) out.resize(group[k] + 1);
    out[group[k]].push_back(static_cast<int>(k));
  }
  return out;
}

LayerSystem assemble(const BoundaryCurve& curve, bool exterior) {
  LayerSystem L;
  L.curve = curve;
  const std::size_t N = curve.nodes_per_component();
  const std::size_t C = curve.components().size();
  const Eigen::Index M = static_cast<Eigen::Index>(curve.total_nodes());
  const double h = curve.parameter_step();
  const auto R = log_weights(N);
  L.weights = weights_of(curve);
  L.V.resize(M, M);
  L.K.resize(M, M);
  L.Kp.resize(M, M);

  const auto& comps = curve.components();
  for (std::size_t a = 0; a < C; ++a) {
    const auto& ca = comps[a];
    for (std::size_t i = 0; i < N; ++i) {
      const Eigen::Index gi = static_cast<Eigen::Index>(a * N + i);
      const Vec2 x = ca.points[i];
      const Vec2 nx = ca.normal[i];
      for (std::size_t b = 0; b < C; ++b) {
        const auto& cb = comps[b];
        for (std::size_t j = 0; j < N; ++j) {
          const Eigen::Index gj = static_cast<Eigen::Index>(b * N + j);
          const double wj = cb.speed[j] * h;
          if (a == b && i == j) {
            // Smooth part of log|x - y| at the diagonal is log|x'(t)|.
            L.V(gi, gj) = -R[0] * cb.speed[j] / (4.0 * kPi) - std::log(cb.speed[j]) * wj / (2.0 * kPi);
            L.K(gi, gj) = cb.curvature[j] / (4.0 * kPi) * wj;
            L.Kp(gi, gj) = ca.curvature[i] / (4.0 * kPi) * wj;
            continue;
          }
          const Vec2 d = cb.points[j] - x;
          const double r2 = dot(d, d);
          L.K(gi, gj) = dot(d, cb.normal[j]) / (2.0 * kPi * r2) * wj;
          L.Kp(gi, gj) = -dot(d, nx) / (2.0 * kPi * r2) * wj;
          const double logr = 0.5 * std::log(r2);
          if (a == b) {
            const std::size_t dd = (i + N - j) % N;
            const double sn = std::sin(0.5 * (ca.t[i] - cb.t[j]));
            const double smooth = logr - 0.5 * std::log(4.0 * sn * sn);
            L.V(gi, gj) = -R[dd] * cb.speed[j] / (4.0 * kPi) - smooth * wj / (2.0 * kPi);
          } else {
            L.V(gi, gj) = -logr * wj / (2.0 * kPi);
          }
        }
      }
    }
  }
  if (check_kernel_orientation(L) > 1e-3)
    throw PreconditionError("double-layer identity K1 = 1/2 fails: inconsistent orientation");

  if (!exterior) return L;

  if (!(quantities(curve).diameter < 1.0))
    throw PreconditionError("exterior operators need diameter < 1; rescale the curve first");
  if (!point_inside(curve, {0.0, 0.0}) || curve.distance_to_nodes({}) < curve.max_node_spacing())
    throw PreconditionError("exterior operators need the origin strictly inside the domain");

  Eigen::PartialPivLU<Eigen::MatrixXd> lu(L.V);
  if (!(lu.rcond() > 1e-14)) throw SingularOperatorError("single-layer matrix is singular");
  const Eigen::VectorXd eq = lu.solve(Eigen::VectorXd::Ones(M));
  L.capacity = std::exp(-2.0 * kPi / eq.dot(L.weights));

  L.V0 = L.V;
  L.K0.resize(M);
  const double logcap = std::log(L.capacity);
  for (Eigen::Index j = 0; j < M; ++j) {
    const Vec2 y = curve.point(static_cast<std::size_t>(j));
    const double wj = L.weights[j];
    const double r2 = dot(y, y);
    L.V0.col(j).array() += (0.5 * std::log(r2) - logcap) / (2.0 * kPi) * wj;
    L.K0[j] = dot(y, curve.normal(static_cast<std::size_t>(j))) / (2.0 * kPi * r2) * wj;
  }
  L.has_exterior = true;
  return L;
}

double capacity(const BoundaryCurve& curve) {
  const double diam = quantities(curve).diameter;
  double a = 1.0;
  const BoundaryCurve* c = &curve;
  BoundaryCurve scaled;
  if (!(diam < 1.0)) {
    a = 0.8 / diam;
    scaled = rescale(curve, a);
    c = &scaled;
  }
  const LayerSystem L = assemble(*c, false);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(L.V);
  if (!(lu.rcond() > 1e-14)) throw SingularOperatorError("single-layer matrix is singular");
  const Eigen::VectorXd eq = lu.solve(Eigen::VectorXd::Ones(L.V.rows()));
  return std::exp(-2.0 * kPi / eq.dot(L.weights)) / a;
}

namespace {

// Power-of-two diagonal similarity D^{-1} C D equalizing row and column norms (Parlett and
// Reinsch).  Returns D; eigenvectors of the balanced matrix map back as D v.
Eigen::VectorXd balance(Eigen::MatrixXd& C) {
  const Eigen::Index n = C.rows();
  Eigen::VectorXd d = Eigen::VectorXd::Ones(n);
  bool converged = false;
  while (!converged) {
    converged = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double c = C.col(i).cwiseAbs().sum() - std::abs(C(i, i));
      const double r = C.row(i).cwiseAbs().sum() - std::abs(C(i, i));
      if (c == 0.0 || r == 0.0) continue;
      double f = 1.0, cc = c;
      while (cc < r / 2) cc *= 2, f *= 2;
      while (cc >= r * 2) cc /= 2, f /= 2;
      if ((cc + r / f) < 0.95 * (c + r)) {
        converged = false;
        d[i] *= f;
        C.row(i) /= f;
        C.col(i) *= f;
      }
    }
  }
  return d;
}

}  // namespace

RawEigen solve_generalized(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B) {
  if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows())
    throw PreconditionError("solve_generalized needs square matrices of equal size");
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(B);
  if (!(lu.rcond() > 1e-14)) throw SingularOperatorError("right-hand operator is singular");
  Eigen::MatrixXd C = lu.solve(A);
  const Eigen::VectorXd d = balance(C);
  const auto D = d.cast<std::complex<double>>().asDiagonal();
  RawEigen r;
  Eigen::EigenSolver<Eigen::MatrixXd> es(C, true);
  if (es.info() == Eigen::Success) {
    r.values = es.eigenvalues();
    r.vectors = D * es.eigenvectors();
  } else {
    // The real Schur iteration occasionally stalls on strongly clustered spectra (inverted
    // multiply connected domains); the complex one does not.
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> ces(C.cast<std::complex<double>>(), true);
    if (ces.info() != Eigen::Success) throw SingularOperatorError("dense eigensolver did not converge");
    r.values = ces.eigenvalues();
    r.vectors = D * ces.eigenvectors();
  }
  r.residuals.resize(C.rows());
  const Eigen::MatrixXcd Ac = A.cast<std::complex<double>>();
  const Eigen::MatrixXcd Bc = B.cast<std::complex<double>>();
  for (Eigen::Index k = 0; k < C.rows(); ++k) {
    const Eigen::VectorXcd u = r.vectors.col(k);
    r.residuals[k] = (Ac * u - r.values[k] * (Bc * u)).norm() / u.norm();
  }
  return r;
}

Spectrum exterior_spectrum(const BoundaryCurve& curve, std::size_t count, const SolverOptions& opt) {
  const Vec2 ref = default_center(curve);
  if (!point_inside(curve, ref))
    throw InvalidDomainError("could not find an interior reference point");
  const Prepared p = prepare(curve, ref, opt.target_diameter);
  const LayerSystem L = assemble(p.scaled, true);
  const Eigen::Index M = L.K.rows();
  const Eigen::MatrixXd A = 0.5 * Eigen::MatrixXd::Identity(M, M) + L.K -
                            Eigen::VectorXd::Ones(M) * L.K0;
  const RawEigen raw = solve_generalized(A, L.V0);
  Spectrum s;
  try {
    s = finish(raw, count, p.factor, curve, Formulation::ExteriorBie, opt);
  } catch (PartialSpectrumError& e) {
    Spectrum pre = e.prefix();
    pre.capacity = L.capacity / p.factor;
    pre.reference = ref;
    throw PartialSpectrumError(e.what(), std::move(pre));
  }
  s.capacity = L.capacity / p.factor;
  s.reference = ref;
  return s;
}

Spectrum exterior_spectrum(const DomainSpec& spec, std::size_t nodes, std::size_t count,
                           const SolverOptions& opt) {
  return exterior_spectrum(build_curve(spec, nodes), count, opt);
}

Spectrum interior_spectrum(const BoundaryCurve& curve, std::size_t count, const SolverOptions& opt) {
  const Vec2 ref = default_center(curve);
  const Prepared p = prepare(curve, ref, opt.target_diameter);
  const LayerSystem L = assemble(p.scaled, false);
  const Eigen::Index M = L.K.rows();
  const Eigen::MatrixXd A = 0.5 * Eigen::MatrixXd::Identity(M, M) - L.K;
  Spectrum s = finish(solve_generalized(A, L.V), count, p.factor, curve, Formulation::InteriorBie, opt);
  s.reference = ref;
  return s;
}

Spectrum interior_spectrum(const DomainSpec& spec, std::size_t nodes, std::size_t count,
                           const SolverOptions& opt) {
  return interior_spectrum(build_curve(spec, nodes), count, opt);
}

Spectrum conformal_exterior_spectrum(const BoundaryCurve& curve, Vec2 center, std::size_t count,
                                     const SolverOptions& opt) {
  const InvertedBoundary inv = invert_boundary(curve, center);
  const double diam = quantities(inv.curve).diameter;
  const double beta = opt.target_diameter / diam;
  const BoundaryCurve scaled = rescale(inv.curve, beta);
  const LayerSystem L = assemble(scaled, false);
  const Eigen::Index M = L.K.rows();
  const Eigen::Map<const Eigen::VectorXd> w(inv.weight.data(), M);
  const Eigen::MatrixXd A = 0.5 * Eigen::MatrixXd::Identity(M, M) - L.K;
  const Eigen::MatrixXd B = L.V * w.asDiagonal();
  Spectrum s = finish(solve_generalized(A, B), count, beta, curve, Formulation::ConformalExterior, opt);
  s.reference = center;
  s.capacity = capacity(curve);
  return s;
}

Spectrum conformal_exterior_spectrum(const DomainSpec& spec, Vec2 center, std::size_t nodes,
                                     std::size_t count, const SolverOptions& opt) {
  return conformal_exterior_spectrum(build_curve(spec, nodes), center, count, opt);
}

double far_field_constant(const Spectrum& s, std::size_t k) {
  if (s.formulation == Formulation::InteriorBie)
    throw PreconditionError("far field is defined for exterior spectra only");
  const BoundaryCurve& c = *s.curve;
  const double tau = s.values.at(k);
  const double logcap = std::log(s.capacity);
  double sum = 0.0;
  for (std::size_t g = 0; g < c.total_nodes(); ++g) {
    const Vec2 y = c.point(g) - s.reference;
    const double r2 = dot(y, y);
    const double u = s.traces(static_cast<Eigen::Index>(g), static_cast<Eigen::Index>(k));
    sum += (u * dot(y, c.normal(g)) / r2 + tau * u * (0.5 * std::log(r2) - logcap)) * c.weight(g);
  }
  return sum / (2.0 * kPi);
}

std::vector<double> evaluate_field(const Spectrum& s, std::size_t k, const std::vector<Vec2>& points) {
  const BoundaryCurve& c = *s.curve;
  const double tau = s.values.at(k);
  const double uinf = far_field_constant(s, k);
  const double tol = 3.0 * c.max_node_spacing();
  std::vector<double> out;
  out.reserve(points.size());
  for (const Vec2& x : points) {
    if (point_inside(c, x)) throw EvaluationError("evaluation point lies inside the domain");
    if (c.distance_to_nodes(x) < tol) throw EvaluationError("evaluation point is too close to the boundary");
    double single = 0.0, dbl = 0.0;
    for (std::size_t g = 0; g < c.total_nodes(); ++g) {
      const Vec2 d = c.point(g) - x;
      const double r2 = dot(d, d);
      const double u = s.traces(static_cast<Eigen::Index>(g), static_cast<Eigen::Index>(k));
      single += -0.5 * std::log(r2) / (2.0 * kPi) * u * c.weight(g);
      dbl += dot(d, c.normal(g)) / (2.0 * kPi * r2) * u * c.weight(g);
    }
    out.push_back(uinf + tau * single - dbl);
  }
  return out;
}

}  // namespace steklov
