#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "steklov/asymptotics.hpp"
#include "steklov/bie2d.hpp"
#include "steklov/errors.hpp"
#include "steklov/specfun.hpp"

using namespace steklov;
using std::numbers::pi;

TEST_CASE("counting function is a right-continuous staircase") {
  const CountingFunction N({0.0, 1.0, 1.0, 2.5});
  CHECK(N(-0.1) == 0);
  CHECK(N(0.0) == 1);
  CHECK(N(0.999) == 1);
  CHECK(N(1.0) == 3);
  CHECK(N(2.4) == 3);
  CHECK(N(2.5) == 4);
  CHECK(N(1e9) == 4);
  const CountingFunction unsorted({3.0, 1.0, 2.0});
  CHECK(unsorted(1.5) == 1);
}

TEST_CASE("radial counting agrees with a brute-force count") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 30.0);
  for (int n = 2; n <= 5; ++n) {
    const auto s = n == 2 ? disk_exterior(0.9, 40) : ball_exterior(n, 0.9, 40);
    const CountingFunction N(s);
    for (int i = 0; i < 200; ++i) {
      const double sigma = u(rng);
      std::uint64_t direct = 0;
      for (int l = 0; l <= 40; ++l) {
        const double v = n == 2 ? l / 0.9 : (n + l - 2) / 0.9;
        if (v <= sigma) direct += sph_mult(n, l);
      }
      CHECK(N(sigma) == direct);
      CHECK(radial_count(s, sigma) == direct);
    }
  }
}

TEST_CASE("disk counting function has a remainder of at most 2") {
  for (double rho : {0.5, 1.0, 3.0}) {
    const CountingFunction N(disk_exterior(rho, 200));
    for (double sigma = 0.01; sigma < 150 / rho; sigma *= 1.05) {
      const double Ns = static_cast<double>(N(sigma));
      CHECK(std::abs(Ns - 2 * rho * sigma) <= 2.0);
      if (rho == 1.0) CHECK(N(sigma) == 1 + 2 * static_cast<std::size_t>(std::floor(sigma)));
    }
  }
}

TEST_CASE("Weyl fit on the disk is exact") {
  const auto v = disk_exterior(1.0, 100).flattened(200);
  const auto f = weyl_fit_2d(v, 2 * pi);
  CHECK(std::abs(f.slope - 2.0) < 1e-12);
  CHECK(std::abs(f.expected - 2.0) < 1e-15);
  CHECK(std::abs(f.relative_error) < 1e-12);
  CHECK(f.points == 99);  // upper half minus the top eigenvalue, whose partner is cut off
  CHECK_THROWS_AS(weyl_fit_2d(disk_exterior(1.0, 20).flattened(41), 2 * pi), InsufficientDataError);
}

TEST_CASE("ball counting function against the Weyl leading term") {
  // n = 3: leading term omega_2 |S^2| sigma^2 / (2 pi)^2 = sigma^2 for the unit ball, and the
  // remainder stays linear in sigma.
  CHECK(weyl_leading_term(3, 4 * pi, 5.0) == doctest::Approx(25.0).epsilon(1e-14));
  CHECK(weyl_leading_term(2, 2 * pi, 5.0) == doctest::Approx(10.0).epsilon(1e-14));
  const CountingFunction N(ball_exterior(3, 1.0, 200));
  std::vector<double> grid;
  for (double s = 1.0; s < 150; s += 0.37) grid.push_back(s);
  const double ratio = weyl_remainder_ratio(N, 3, 4 * pi, grid);
  CHECK(ratio <= 2.0 + 1e-12);
  CHECK(ratio > 0.5);  // the remainder is genuinely of order sigma
  // Two-term fit: N(sigma) - sigma^2 is bounded by a linear function.
  for (double s : grid) CHECK(std::abs(static_cast<double>(N(s)) - s * s) <= 2 * s + 1);
}

TEST_CASE("disk pair gaps vanish") {
  const auto g = pair_gap_2d(disk_exterior(2.0, 60).flattened(100));
  CHECK(g.gaps.size() >= 40);
  for (double x : g.gaps) CHECK(x == 0.0);
}

TEST_CASE("kite pair gaps are resolved and decay ever faster") {
  const auto a = exterior_spectrum(DomainSpec::kite(), 512, 200);
  const auto b = exterior_spectrum(DomainSpec::kite(), 640, 200);
  const auto ga = pair_gap_2d(a.values), gb = pair_gap_2d(b.values);
  REQUIRE(ga.gaps.size() >= 90);
  for (std::size_t i = 0; i < 90; ++i) {
    CHECK(ga.k[i] == static_cast<int>(i + 1));
    CHECK(std::abs(ga.gaps[i] - gb.gaps[i]) < 1e-8);
  }
  // Within each parity class the gaps shrink monotonically from k = 5 on.
  for (std::size_t i = 4; i + 2 < 90; ++i) CHECK(ga.gaps[i + 2] < ga.gaps[i]);
  // Local power-law exponents over successive octaves keep steepening, which no fixed
  // power of k does.
  auto local = [&](int k0) {
    return std::log(ga.gaps[2 * k0 - 1] / ga.gaps[k0 - 1]) / std::log(2.0);
  };
  const double e10 = local(10), e20 = local(20), e40 = local(40);
  CHECK(e20 < e10);
  CHECK(e40 < e20);
  CHECK(e40 < -3.0);
}

TEST_CASE("power-law and inverse-log fits") {
  std::vector<double> x, y, z;
  for (double t = 2; t < 200; t *= 1.7) {
    x.push_back(t);
    y.push_back(3.0 * std::pow(t, -2.5));
  }
  CHECK(fit_power_law(x, y) == doctest::Approx(-2.5).epsilon(1e-12));
  CHECK_THROWS_AS(fit_power_law({1.0}, {1.0}), InsufficientDataError);
  CHECK_THROWS_AS(fit_power_law({1.0, 2.0}, {1.0, -1.0}), DomainError);

  std::vector<double> lam{1.0, 1e-2, 1e-4, 1e-6}, mu;
  for (double l : lam) mu.push_back(l == 1.0 ? 5.0 : 0.7 / std::abs(std::log(l)));
  const auto f = fit_inverse_log(lam, mu);  // the x = 1 point carries no information
  CHECK(f.constant == doctest::Approx(0.7).epsilon(1e-13));
  CHECK(f.relative_residual < 1e-13);
  CHECK_THROWS_AS(fit_inverse_log({1.0}, {2.0}), InsufficientDataError);
}
