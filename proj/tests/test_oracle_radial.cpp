#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/bessel.hpp>

#include "steklov/errors.hpp"
#include "steklov/oracle_radial.hpp"
#include "steklov/specfun.hpp"

using namespace steklov;

namespace {

// Steklov eigenvalue on |x| = rho of the shell rho < |x| < R, found from the general radial
// solution u = A g(r) + B h(r) by imposing the outer condition and reading off -u'(rho)/u(rho).
double shell_oracle(int n, double rho, double R, int l, BoundaryCondition bc) {
  // g, h and their derivatives for the two independent radial solutions of mode l.
  auto g = [&](double r) { return std::pow(r, l); };
  auto dg = [&](double r) { return l == 0 ? 0.0 : l * std::pow(r, l - 1); };
  double p = n == 2 ? -l : 2 - n - l;
  auto h = [&](double r) { return (n == 2 && l == 0) ? std::log(r) : std::pow(r, p); };
  auto dh = [&](double r) { return (n == 2 && l == 0) ? 1.0 / r : p * std::pow(r, p - 1); };
  double A, B;
  if (bc == BoundaryCondition::Dirichlet) {
    A = -h(R);
    B = g(R);
  } else {
    if (l == 0) return 0.0;  // constants satisfy both conditions
    A = -dh(R);
    B = dg(R);
  }
  const double u = A * g(rho) + B * h(rho);
  const double du = A * dg(rho) + B * dh(rho);
  return -du / u;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST_CASE("disk exterior spectrum") {
  const auto s = disk_exterior(1.0, 10);
  const std::vector<double> want{0, 1, 1, 2, 2, 3, 3};
  CHECK(s.flattened(7) == want);
  const auto t = disk_exterior(2.0, 10).flattened(5);
  CHECK(t == std::vector<double>{0, 0.5, 0.5, 1, 1});
  CHECK(disk_interior(1.3, 12).flattened() == disk_exterior(1.3, 12).flattened());
  CHECK(s.entries[0].multiplicity == 1);
  CHECK(s.entries[3].multiplicity == 2);
  CHECK_THROWS_AS(disk_exterior(0.0), DomainError);
}

TEST_CASE("ball exterior spectrum") {
  const auto s = ball_exterior(3, 1.0, 5);
  CHECK(s.entries[0].value == 1.0);
  CHECK(s.entries[0].multiplicity == 1);
  CHECK(s.entries[1].value == 2.0);
  CHECK(s.entries[1].multiplicity == 3);
  CHECK(s.entries[2].value == 3.0);
  CHECK(s.entries[2].multiplicity == 5);
  CHECK(ball_exterior(4, 2.0).entries[0].value == 1.0);
  // Escobar equality: the first ball eigenvalue equals (n-2) L(1/rho, ..., 1/rho).
  for (int n = 3; n <= 6; ++n)
    for (double rho : {0.5, 1.0, 3.0})
      CHECK(rel(ball_exterior(n, rho).entries[0].value, (n - 2) * log_mean(std::vector<double>(n - 1, 1 / rho))) < 1e-14);
  CHECK_THROWS_AS(ball_exterior(2, 1.0), DomainError);
}

TEST_CASE("radial spectra are sorted with spherical-harmonic multiplicities") {
  for (int n = 2; n <= 5; ++n) {
    const auto ext = n == 2 ? disk_exterior(0.7, 20) : ball_exterior(n, 0.7, 20);
    const auto hel = helmholtz_radial(n, 0.7, 0.3, 20);
    const auto trd = ball_trunc(n, 0.7, 3.0, 20, BoundaryCondition::Dirichlet);
    const auto trn = ball_trunc(n, 0.7, 3.0, 20, BoundaryCondition::Neumann);
    for (const auto* s : {&ext, &hel, &trd, &trn}) {
      for (std::size_t l = 0; l < s->entries.size(); ++l) {
        CHECK(s->entries[l].multiplicity == sph_mult(n, static_cast<int>(l)));
        if (l > 0) CHECK(s->entries[l].value > s->entries[l - 1].value);
      }
      const auto f = s->flattened();
      CHECK(std::is_sorted(f.begin(), f.end()));
    }
  }
}

TEST_CASE("truncated disk examples") {
  CHECK(rel(disk_trunc(1.0, std::numbers::e, 3, BoundaryCondition::Dirichlet).entries[0].value, 1.0) < 1e-15);
  CHECK(rel(disk_trunc(1.0, 2.0, 3, BoundaryCondition::Dirichlet).entries[1].value, 5.0 / 3.0) < 1e-15);
  CHECK(rel(disk_trunc(1.0, 2.0, 3, BoundaryCondition::Neumann).entries[1].value, 3.0 / 5.0) < 1e-15);
  CHECK(disk_trunc(1.0, 2.0, 3, BoundaryCondition::Neumann).entries[0].value == 0.0);
  CHECK_THROWS_AS(disk_trunc(1.0, 1.0, 3, BoundaryCondition::Dirichlet), DomainError);
}

TEST_CASE("truncated spectra match the two-point radial solution") {
  for (int n = 2; n <= 5; ++n)
    for (double rho : {0.5, 1.0, 2.0})
      for (double R : {1.5 * rho, 4 * rho, 30 * rho})
        for (auto bc : {BoundaryCondition::Dirichlet, BoundaryCondition::Neumann}) {
          const auto s = n == 2 ? disk_trunc(rho, R, 8, bc) : ball_trunc(n, rho, R, 8, bc);
          for (int l = 0; l <= 8; ++l) {
            const double want = shell_oracle(n, rho, R, l, bc);
            if (want == 0.0)
              CHECK(s.entries[l].value == 0.0);
            else
              CHECK(rel(s.entries[l].value, want) < 1e-12);
          }
        }
}

TEST_CASE("truncation is monotone in R and converges to the exterior spectrum") {
  for (int n = 2; n <= 5; ++n) {
    const double rho = 1.0;
    const auto ext = n == 2 ? disk_exterior(rho, 6) : ball_exterior(n, rho, 6);
    std::vector<double> prevD(7, 1e300), prevN(7, -1.0);
    for (double R = 1.5; R < 1e4; R *= 1.5) {
      const auto d = n == 2 ? disk_trunc(rho, R, 6, BoundaryCondition::Dirichlet)
                            : ball_trunc(n, rho, R, 6, BoundaryCondition::Dirichlet);
      const auto m = n == 2 ? disk_trunc(rho, R, 6, BoundaryCondition::Neumann)
                            : ball_trunc(n, rho, R, 6, BoundaryCondition::Neumann);
      for (int l = 0; l <= 6; ++l) {
        const double target = ext.entries[l].value;
        // Strict while the distance to the limit is resolvable in double precision.
        const double resolvable = 1e-13 * target;
        CHECK(d.entries[l].value >= target);
        CHECK(d.entries[l].value <= prevD[l]);
        if (d.entries[l].value - target > resolvable) CHECK(d.entries[l].value < prevD[l]);
        prevD[l] = d.entries[l].value;
        if (l >= 1) {
          CHECK(m.entries[l].value <= target);
          CHECK(m.entries[l].value >= prevN[l]);
          if (target - m.entries[l].value > resolvable) CHECK(m.entries[l].value > prevN[l]);
          prevN[l] = m.entries[l].value;
        } else {
          CHECK(m.entries[l].value == 0.0);
        }
      }
    }
    const double R = 1e6;
    for (int l = 1; l <= 6; ++l) {
      const auto d = n == 2 ? disk_trunc(rho, R, 6, BoundaryCondition::Dirichlet)
                            : ball_trunc(n, rho, R, 6, BoundaryCondition::Dirichlet);
      CHECK(std::abs(d.entries[l].value - ext.entries[l].value) < 1e-9);
    }
  }
}

TEST_CASE("Helmholtz closed forms") {
  // n = 3, l = 0: K_{3/2}/K_{1/2} = 1 + 1/x, so mu = Lambda + 1/rho.
  CHECK(rel(helmholtz_radial(3, 1.0, 0.5, 3).entries[0].value, 1.5) < 1e-14);
  for (double lam : {1e-3, 0.2, 4.0, 60.0})
    CHECK(rel(helmholtz_radial(3, 2.0, lam, 0).entries[0].value, lam + 0.5) < 1e-13);
  for (int n = 2; n <= 6; ++n)
    for (double lam : {1e-3, 0.1, 1.0, 7.0})
      for (int l = 0; l <= 12; ++l) {
        const double x = lam * 0.8;
        const double want = lam * boost::math::cyl_bessel_k(l + n / 2.0, x) /
                                boost::math::cyl_bessel_k(l + n / 2.0 - 1, x) - l / 0.8;
        CHECK(rel(helmholtz_radial(n, 0.8, lam, 12).entries[l].value, want) < 1e-11);
      }
  CHECK_THROWS_AS(helmholtz_radial(3, 1.0, 0.0), DomainError);
}

TEST_CASE("Helmholtz eigenvalues decrease to the Laplace limit") {
  for (int n = 3; n <= 5; ++n)
    for (int l = 0; l <= 5; ++l) {
      double prev = 1e300;
      for (double lam = 10.0; lam > 1e-6; lam /= 3) {
        const double mu = helmholtz_radial(n, 1.0, lam, 5).entries[l].value;
        CHECK(mu < prev);
        CHECK(mu > n + l - 2);
        prev = mu;
      }
    }
  CHECK(std::abs(helmholtz_radial(5, 1.0, 1e-4, 0).entries[0].value - 3.0) < 1e-6);
  // In 2D the zero mode decays logarithmically: mu ~ 1 / (log(2/Lambda) - gamma).
  for (double lam : {1e-6, 1e-9}) {
    const double mu = helmholtz_radial(2, 1.0, lam, 0).entries[0].value;
    CHECK(rel(mu, 1.0 / (std::log(2.0 / lam) - std::numbers::egamma)) < 1e-3);
  }
}

TEST_CASE("Dirichlet-to-Neumann action and energy on spheres") {
  HarmonicCoefficients f(3);
  f[0] = {1.0};
  CHECK(dtn_apply_sphere(2, 1.0, f)[0][0] == 0.0);
  HarmonicCoefficients g(2);
  g[0] = {0.0};
  g[1] = {0.3, -1.2, 2.0};
  const auto h = dtn_apply_sphere(3, 2.0, g);
  for (int i = 0; i < 3; ++i) CHECK(h[1][i] == doctest::Approx(g[1][i]).epsilon(1e-15));

  std::mt19937_64 rng(3);
  std::normal_distribution<double> N01;
  for (int n = 2; n <= 5; ++n) {
    HarmonicCoefficients a(5), b(5), sum(5);
    for (int l = 0; l < 5; ++l) {
      const auto d = sph_mult(n, l);
      for (std::uint64_t i = 0; i < d; ++i) {
        a[l].push_back(N01(rng));
        b[l].push_back(N01(rng));
        sum[l].push_back(2.0 * a[l][i] - 3.0 * b[l][i]);
      }
    }
    const auto da = dtn_apply_sphere(n, 1.4, a), db = dtn_apply_sphere(n, 1.4, b),
               ds = dtn_apply_sphere(n, 1.4, sum);
    for (int l = 0; l < 5; ++l)
      for (std::size_t i = 0; i < a[l].size(); ++i)
        CHECK(std::abs(ds[l][i] - (2.0 * da[l][i] - 3.0 * db[l][i])) < 1e-12);
  }

  HarmonicCoefficients unit0(1);
  unit0[0] = {1.0};
  CHECK(grad_energy_sphere(3, 1.0, unit0) == doctest::Approx(1.0).epsilon(1e-15));
  HarmonicCoefficients zero(3);
  zero[0] = {0.0};
  zero[1] = {0.0, 0.0, 0.0};
  CHECK(grad_energy_sphere(3, 1.0, zero) == 0.0);
}

TEST_CASE("gradient energy matches a radial quadrature of the decaying extension") {
  // u = (rho/r)^{n+l-2} f with f of unit L2 norm on the sphere of radius rho; in polar
  // coordinates |grad u|^2 = u_r^2 + l(l+n-2) u^2 / r^2 after angular integration.
  boost::math::quadrature::exp_sinh<double> integrator;
  for (int n = 3; n <= 5; ++n)
    for (double rho : {1.0, 2.5})
      for (int l = 0; l <= 3; ++l) {
        const double p = n + l - 2;
        const double angular = 1.0 / std::pow(rho, n - 1);  // int_{S^{n-1}} Y^2
        // u_r^2 r^{n-1} = p^2 rho^{2p} r^{n-3-2p}, and likewise for the angular term; kept as one
        // power of r so the integrand stays finite at the far end of the exp-sinh grid.
        auto integrand = [&](double s) {
          const double r = rho + s;
          return (p * p + l * (l + n - 2)) * std::pow(rho, 2 * p) * std::pow(r, n - 3 - 2 * p) * angular;
        };
        const double energy = integrator.integrate(integrand, 1e-14);
        HarmonicCoefficients c(l + 1);
        for (int j = 0; j < l; ++j) c[j].assign(sph_mult(n, j), 0.0);
        c[l].assign(sph_mult(n, l), 0.0);
        c[l][0] = 1.0;
        CHECK(rel(grad_energy_sphere(n, rho, c), energy) < 1e-10);
      }
}

TEST_CASE("interlacing of the truncated limits") {
  const auto r3 = interlacing_check(3, 1.0, 30);
  CHECK(r3.holds);
  CHECK(r3.first_violation == -1);
  const std::vector<double> wantN{0, 2, 2, 2, 3, 3, 3, 3, 3};
  const std::vector<double> wantD{1, 2, 2, 2, 3, 3, 3, 3, 3};
  for (std::size_t i = 0; i < wantN.size(); ++i) {
    CHECK(r3.neumann_limit[i] == wantN[i]);
    CHECK(r3.dirichlet_limit[i] == wantD[i]);
  }
  for (int n = 4; n <= 6; ++n) CHECK(interlacing_check(n, 0.5, 30).holds);
  // Equality lambda_k(A^D) = lambda_{k+1}(A^N) inside repeated modes.
  int equalities = 0;
  for (int k = 0; k < 30; ++k) equalities += r3.dirichlet_limit[k] == r3.neumann_limit[k + 1];
  CHECK(equalities > 0);
}

TEST_CASE("sphere layer symbols") {
  for (double rho : {1.0, 2.5}) {
    const auto s = sphere_layer_symbols(rho, 10);
    REQUIRE(s.size() == 11);
    for (const auto& m : s) {
      CHECK(rel(m.single_layer, rho / (2 * m.ell + 1)) < 1e-10);
      CHECK(std::abs(m.double_layer - 0.5 / (2 * m.ell + 1)) < 1e-10);
      CHECK(m.tau == doctest::Approx((m.ell + 1) / rho).epsilon(1e-15));
      CHECK(m.defect < 1e-8);
    }
    CHECK(std::abs(0.5 + s[0].double_layer - s[0].single_layer / rho) < 1e-10);
    CHECK(std::abs(0.5 + s[1].double_layer - 2 * s[1].single_layer / rho) < 1e-10);
  }
}
