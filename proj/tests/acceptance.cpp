// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "steklov/asymptotics.hpp"
#include "steklov/bie2d.hpp"
#include "steklov/bounds.hpp"
#include "steklov/geometry.hpp"
#include "steklov/oracle_radial.hpp"
#include "steklov/specfun.hpp"

using namespace steklov;
using std::numbers::pi;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(a.at(i) - b.at(i)));
  return m;
}

void disk_oracle(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto s = exterior_spectrum(DomainSpec::circle(1.0), 256, 9);
  const double t = seconds_since(t0);
  const double err = max_diff(s.values, {0, 1, 1, 2, 2, 3, 3, 4, 4}, 9);
  c.detail << "max error " << err << ", " << t << " s; ";
  c.require(err < 1e-8, "error < 1e-8");
  c.require(t < 5.0, "runtime < 5 s");
}

void kite_table(Check& c) {
  const std::vector<double> ext_ref{0.545, 0.571, 1.130, 1.309, 1.746, 1.821, 2.293, 2.450, 2.903};
  const std::vector<double> int_ref{0.403, 0.524, 1.183, 1.384, 1.721, 2.018, 2.201, 2.706, 2.785};
  const auto t0 = std::chrono::steady_clock::now();
  const auto ext = exterior_spectrum(DomainSpec::kite(), 512, 10);
  const auto in = interior_spectrum(DomainSpec::kite(), 512, 10);
  const double t = seconds_since(t0);
  double de = 0.0, di = 0.0;
  for (std::size_t k = 0; k < 9; ++k) {
    de = std::max(de, std::abs(ext.values[k + 1] - ext_ref[k]));
    di = std::max(di, std::abs(in.values[k + 1] - int_ref[k]));
  }
  c.detail << "exterior max dev " << de << ", interior max dev " << di << ", " << t << " s; ";
  c.require(de <= 0.01, "exterior within 0.01");
  c.require(di <= 0.01, "interior within 0.01");
  c.require(t < 30.0, "runtime < 30 s");
}

void cross_formulation(Check& c) {
  const std::vector<std::pair<const char*, DomainSpec>> domains{
      {"kite", DomainSpec::kite()}, {"ellipse", DomainSpec::ellipse(1.5, 0.7)}, {"three_disks", DomainSpec::three_disks()}};
  for (const auto& [name, spec] : domains) {
    const auto ext = exterior_spectrum(spec, 256, 10);
    const auto conf = conformal_exterior_spectrum(spec, {0, 0}, 256, 10);
    const double d = max_diff(ext.values, conf.values, 10);
    c.detail << name << " " << d << "; ";
    c.require(d < 1e-6, std::string(name) + " agreement < 1e-6");
  }
}

void truncation(Check& c) {
  const double rho = 1.0;
  const std::vector<double> R{10, 20, 40, 80};
  const int L = 4;
  const auto ext = disk_exterior(rho, L);
  std::vector<std::vector<double>> dex(L + 1), nex(L + 1), dval(L + 1);
  for (double r : R) {
    const auto d = disk_trunc(rho, r, L, BoundaryCondition::Dirichlet);
    const auto n = disk_trunc(rho, r, L, BoundaryCondition::Neumann);
    for (int l = 0; l <= L; ++l) {
      if (!dval[l].empty()) c.require(d.entries[l].value < dval[l].back(), "Dirichlet decreasing");
      if (l > 0 && !nex[l].empty())
        c.require(ext.entries[l].value - n.entries[l].value < nex[l].back(), "Neumann increasing");
      c.require(d.entries[l].value >= ext.entries[l].value, "Dirichlet above limit");
      c.require(n.entries[l].value <= ext.entries[l].value, "Neumann below limit");
      dval[l].push_back(d.entries[l].value);
      dex[l].push_back(d.entries[l].value - ext.entries[l].value);
      nex[l].push_back(ext.entries[l].value - n.entries[l].value);
    }
  }
  const auto f0 = fit_inverse_log(R, dval[0]);
  c.detail << "l=0 C/log R constant " << f0.constant << " (residual " << f0.relative_residual << "); ";
  c.require(std::abs(f0.constant - 1.0) < 0.1 && f0.relative_residual < 0.1, "l=0 inverse-log rate");
  for (int l = 1; l <= L; ++l) {
    const double pd = fit_power_law(R, dex[l]), pn = fit_power_law(R, nex[l]);
    c.detail << "l=" << l << " rates " << pd << "/" << pn << "; ";
    c.require(std::abs(pd / (-2.0 * l) - 1) < 0.1, "Dirichlet rate");
    c.require(std::abs(pn / (-2.0 * l) - 1) < 0.1, "Neumann rate");
  }
}

void helmholtz(Check& c) {
  double worst = 0.0;
  for (int n : {3, 5}) {
    for (int l = 0; l <= 3; ++l) {
      double prev = -1.0;
      for (double lam = 1e-6; lam < 20; lam *= 4) {
        const double mu = helmholtz_radial(n, 1.0, lam, 3).entries[l].value;
        c.require(mu > prev, "monotone in Lambda");
        prev = mu;
      }
      const double mu = helmholtz_radial(n, 1.0, 1e-4, 3).entries[l].value;
      worst = std::max(worst, std::abs(mu - (n + l - 2)));
    }
  }
  c.detail << "max |mu(1e-4) - limit| " << worst << "; ";
  c.require(worst < 1e-3, "limit within 1e-3");
  std::vector<double> lam, mu;
  for (double x = 1e-2; x > 1e-9; x /= 10) {
    lam.push_back(x);
    mu.push_back(helmholtz_radial(2, 1.0, x, 0).entries[0].value);
  }
  const auto f = fit_inverse_log(lam, mu);
  c.detail << "2D C " << f.constant << ", residual " << f.relative_residual << "; ";
  c.require(f.relative_residual < 0.05, "2D inverse-log residual < 5%");
}

void log_mean_oracle(Check& c) {
  std::mt19937_64 rng(20261015);
  std::uniform_real_distribution<double> lk(std::log(0.05), std::log(20.0));
  std::uniform_real_distribution<double> lg(std::log(1e-7), std::log(1e-1));
  double worst = 0.0;
  int tuples = 0;
  for (int n = 3; n <= 5; ++n)
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<double> k(n - 1);
      for (auto& x : k) x = std::exp(lk(rng));
      if (trial % 3 == 1) k[1] = k[0] * (1 + std::exp(lg(rng)));
      if (trial % 3 == 2)
        for (std::size_t j = 1; j < k.size(); ++j) k[j] = k[0] * (1 + (trial % 2 ? 1e-7 : 1e-4) * j);
      const double want = (n - 2) * log_mean(k);
      worst = std::max(worst, std::abs(K_quadrature(k, n) - want) / std::max(1.0, want));
      ++tuples;
    }
  c.detail << tuples << " tuples, max deviation " << worst << "; ";
  c.require(worst < 1e-8, "within 1e-8");
}

void bound_curves_check(Check& c) {
  const auto grid = aspect_grid(0.01, 0.99, 50);
  SpheroidFamily pro, obl;
  pro.kind = SpheroidKind::Prolate;
  obl.kind = SpheroidKind::Oblate;
  obl.k = 1;
  pro.a_grid = obl.a_grid = grid;
  const auto pr = bound_curves(pro), ob = bound_curves(obl);
  double dp = 0.0, dob = 0.0, dx = 0.0;
  bool beta_wins = false, xiong_wins = false;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double a = grid[i];
    dp = std::max(dp, std::abs(pr[i].beta / ((1 - a * a) / (-2 * a * std::log(a))) - 1));
    dob = std::max(dob, std::abs(ob[i].beta / a - 1));
    dx = std::max(dx, std::abs(pr[i].beta_xiong / spheroid_xiong_formula(a) - 1));
    beta_wins = beta_wins || pr[i].beta > pr[i].beta_xiong || ob[i].beta > ob[i].beta_xiong;
    xiong_wins = xiong_wins || pr[i].beta_xiong > pr[i].beta || ob[i].beta_xiong > ob[i].beta;
  }
  c.detail << "formula deviations " << dp << "/" << dob << "/" << dx << "; ";
  c.require(dp < 1e-10 && dob < 1e-10 && dx < 1e-8, "closed forms reproduced");
  c.require(beta_wins && xiong_wins, "neither bound dominates");
  pro.a_grid = {1e-3};
  const double norm = bound_curves(pro).front().beta_norm;
  c.detail << "normalized prolate bound at a=1e-3 is " << norm << "; ";
  c.require(norm > 10.0, "normalized prolate bound > 10 at a = 1e-3");
}

void weinstock(Check& c) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<std::pair<std::string, DomainSpec>> domains{{"kite", DomainSpec::kite()}};
  for (int i = 0; i < 20; ++i) {
    // r(t) = 1 + sum_j (a_j cos jt + b_j sin jt) with decaying modes, so r > 0.77.
    std::vector<double> a(4), b(4);
    for (int j = 0; j < 4; ++j) {
      a[j] = 0.08 * u(rng) / ((j + 1) * (j + 1));
      b[j] = 0.08 * u(rng) / ((j + 1) * (j + 1));
    }
    domains.emplace_back("star" + std::to_string(i), DomainSpec::star(1.0, a, b));
  }
  double worst = -1e300;
  for (const auto& [name, spec] : domains) {
    const auto s = exterior_spectrum(spec, 256, 6);
    const auto q = quantities(*s.curve);
    const auto m = weinstock_margin(s.values, q.perimeter, q.area);
    worst = std::max(worst, -m.weinstock);
    for (double h : m.hps) worst = std::max(worst, -h);
    c.require(m.weinstock >= -1e-6, name + " sigma_2 bound");
    for (double h : m.hps) c.require(h >= -1e-6, name + " sigma_{k+1} bound");
  }
  const auto disk = exterior_spectrum(DomainSpec::circle(0.7), 256, 6);
  const auto md = weinstock_margin(disk.values, 2 * pi * 0.7, pi * 0.49);
  c.detail << "largest violation over 21 domains " << worst << ", disk margin " << md.weinstock << "; ";
  c.require(std::abs(md.weinstock) < 1e-6, "disk equality");
}

void capacity_check(Check& c) {
  double dc = 0.0, de = 0.0;
  for (double rho : {0.3, 1.0, 4.0}) dc = std::max(dc, std::abs(capacity(build_curve(DomainSpec::circle(rho), 128)) - rho));
  for (auto [a, b] : {std::pair{2.0, 1.0}, std::pair{1.5, 0.7}})
    for (std::size_t N : {64u, 128u, 256u})
      de = std::max(de, std::abs(capacity(build_curve(DomainSpec::ellipse(a, b), N)) - (a + b) / 2));
  const auto k = build_curve(DomainSpec::kite(), 256);
  const double dt = std::abs(capacity(k) - capacity(translate(k, {5, -3})));
  c.detail << "circle " << dc << ", ellipse " << de << ", translation " << dt << "; ";
  c.require(dc < 1e-10, "circle");
  c.require(de < 1e-6, "ellipse");
  c.require(dt < 1e-10, "translation");
}

void weyl(Check& c) {
  const auto s = exterior_spectrum(DomainSpec::kite(), 512, 200);
  const double perimeter = quantities(*s.curve).perimeter;
  const std::vector<double> first(s.values.begin(), s.values.begin() + 120);
  const auto f = weyl_fit_2d(first, perimeter);
  c.detail << "kite slope " << f.slope << " vs " << f.expected << " (" << 100 * f.relative_error << "%, "
           << first.size() << " eigenvalues); ";
  c.require(std::abs(f.relative_error) < 0.05, "kite slope within 5%");
  const auto d = weyl_fit_2d(disk_exterior(1.0, 100).flattened(200), 2 * pi);
  c.detail << "disk slope error " << d.relative_error << "; ";
  c.require(std::abs(d.relative_error) < 1e-12, "disk slope exact");
  const auto g = pair_gap_2d(s.values);
  const double threshold = 1e-3 * 2 * pi / perimeter;
  int first_below = -1;
  for (std::size_t i = 0; i < g.gaps.size(); ++i)
    if (g.gaps[i] < threshold) {
      first_below = g.k[i];
      break;
    }
  c.detail << "pair gap at k=12 is " << g.gaps.at(11) << " vs threshold " << threshold << ", first below at k="
           << first_below << "; ";
  c.require(g.gaps.at(11) < threshold, "pair gap below threshold by k = 12");
}

void structural(Check& c) {
  const std::vector<std::pair<const char*, DomainSpec>> domains{{"circle", DomainSpec::circle(0.4)},
                                                                {"ellipse", DomainSpec::ellipse(1.5, 0.7)},
                                                                {"kite", DomainSpec::kite()},
                                                                {"three_disks", DomainSpec::three_disks()}};
  double k1 = 0.0, tau1 = 0.0, flat = 0.0, res = 0.0, conv = 0.0, gap = 1e300;
  for (const auto& [name, spec] : domains) {
    const auto L = assemble(build_curve(spec, 256), false);
    const Eigen::VectorXd row_sums = L.K.rowwise().sum();
    k1 = std::max(k1, (row_sums.array() - 0.5).abs().maxCoeff());
    const auto a = exterior_spectrum(spec, 256, 10);
    const auto b = exterior_spectrum(spec, 512, 10);
    tau1 = std::max(tau1, std::abs(a.values[0]));
    const Eigen::VectorXd u0 = a.traces.col(0);
    flat = std::max(flat, (u0.maxCoeff() - u0.minCoeff()) / u0.cwiseAbs().maxCoeff());
    gap = std::min(gap, a.values[1] - a.values[0]);
    for (double r : a.residuals) res = std::max(res, r);
    for (double r : b.residuals) res = std::max(res, r);
    conv = std::max(conv, max_diff(a.values, b.values, 10));
  }
  c.detail << "K1-1/2 " << k1 << ", tau1 " << tau1 << ", zero-mode spread " << flat << ", min tau2-tau1 " << gap
           << ", max residual " << res << ", N change " << conv << "; ";
  c.require(k1 < 1e-8, "K 1 = 1/2");
  c.require(tau1 < 1e-9, "tau_1 = 0");
  c.require(flat < 1e-7, "constant zero mode");
  c.require(gap > 0, "tau_2 > tau_1");
  c.require(res < 1e-7, "residuals");
  c.require(conv < 1e-8, "N convergence");
}

void nd_contracts(Check& c) {
  for (int n : {3, 4, 5}) {
    const auto r = interlacing_check(n, 1.0, 30);
    c.require(r.holds, "interlacing n=" + std::to_string(n));
  }
  double defect = 0.0;
  for (const auto& m : sphere_layer_symbols(1.0, 10)) defect = std::max(defect, m.defect);
  c.detail << "interlacing n=3,4,5 k<=30, max symbol defect " << defect << "; ";
  c.require(defect < 1e-8, "layer symbols");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria{
      {"disk oracle", disk_oracle},
      {"kite reference table", kite_table},
      {"exterior vs conformal", cross_formulation},
      {"truncation limits", truncation},
      {"Helmholtz limits", helmholtz},
      {"K quadrature vs log mean", log_mean_oracle},
      {"bound curves", bound_curves_check},
      {"Weinstock and HPS", weinstock},
      {"capacity", capacity_check},
      {"Weyl law", weyl},
      {"structural invariants", structural},
      {"nD closed forms", nd_contracts},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail << "exception: " << e.what();
    }
    failures += !c.ok;
    std::printf("%s criterion %zu (%s): %s\n", c.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, c.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
