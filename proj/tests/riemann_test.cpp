#include <doctest.h>

#include <cmath>
#include <random>

#include "solverlab/iso_rec.hpp"
#include "solverlab/riemann.hpp"

using namespace solverlab;
using doctest::Approx;

namespace {

// Pressure function of one side, written from the textbook closed forms.
double side_function(double p, const GasState& k, double g) {
  const double a = std::sqrt(g * k.p / k.rho);
  if (p > k.p) {
    const double A = 2.0 / ((g + 1.0) * k.rho);
    const double B = (g - 1.0) / (g + 1.0) * k.p;
    return (p - k.p) * std::sqrt(A / (p + B));
  }
  return 2.0 * a / (g - 1.0) * (std::pow(p / k.p, (g - 1.0) / (2.0 * g)) - 1.0);
}

double bisection_p_star(const GasState& l, const GasState& r, double g) {
  double lo = 1e-14, hi = 1.0;
  auto f = [&](double p) { return side_function(p, l, g) + side_function(p, r, g) + r.u - l.u; };
  while (f(hi) < 0.0) hi *= 2.0;
  for (int i = 0; i < 400; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

double iso_residual(const IsoState& l, const IsoState& r, const IsoStar& s, double c) {
  const double from_left = l.u - iso_wave_curve(s.rho_star, l.rho, c);
  const double from_right = r.u + iso_wave_curve(s.rho_star, r.rho, c);
  return std::abs(from_left - from_right);
}

}  // namespace

TEST_CASE("isothermal star state") {
  const double c = 0.5;
  auto s = iso_star({1.0, 0.5}, {1.0, 0.5}, c);
  CHECK(s.rho_star == Approx(1.0).epsilon(1e-14));
  CHECK(s.u_star == Approx(0.5).epsilon(1e-14));

  s = iso_star({1.0, 0.8}, {1.0, -0.8}, c);
  CHECK(std::abs(s.u_star) <= 1e-13);
  CHECK(s.left_shock);
  CHECK(s.right_shock);

  const double sigma = 0.1;
  const IsoState left{1.0, sigma + c * std::sqrt(20.0)};
  const IsoState right{20.0, sigma + c / std::sqrt(20.0)};
  CHECK(rh_residual(left, right, sigma, c).max() <= 1e-12);
  s = iso_star(left, right, c);
  CHECK(s.rho_star == Approx(20.0).epsilon(1e-10));
  CHECK(s.u_star == Approx(right.u).epsilon(1e-10));
  CHECK(s.left_shock);
}

TEST_CASE("isothermal shock speed") {
  const double c = 0.5;
  CHECK(iso_shock_speed(1, {1.0, 0.1 + 0.5 * std::sqrt(20.0)}, 20.0, c) == Approx(0.1).epsilon(1e-14));
  CHECK(iso_shock_speed(2, {1.0, 0.0}, 1.0, c) == c);
  const double s = iso_shock_speed(1, {1.0, 0.0}, 4.0, 1.0);
  CHECK(s == -2.0);
  const auto star = iso_star({1.0, 0.0}, {4.0, 0.0 - iso_wave_curve(4.0, 1.0, 1.0)}, 1.0);
  CHECK(rh_residual(IsoState{1.0, 0.0}, IsoState{4.0, star.u_star}, s, 1.0).max() <= 1e-12);
  CHECK_THROWS(iso_shock_speed(1, {1.0, 0.0}, 0.0, c));
  CHECK_THROWS(iso_shock_speed(3, {1.0, 0.0}, 2.0, c));
}

TEST_CASE("random isothermal problems") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> R(0.1, 10.0), V(-3.0, 3.0), C(0.2, 2.0);
  for (int i = 0; i < 1000; ++i) {
    const IsoState l{R(rng), V(rng)}, r{R(rng), V(rng)};
    const double c = C(rng);
    const auto s = iso_star(l, r, c);
    CHECK(iso_residual(l, r, s, c) <= 1e-12 * std::max(1.0, std::abs(l.u) + std::abs(r.u) + c));
    const auto fam = detect_wave_iso(l, r);
    if (fam == IsoFamily::kOneShock) CHECK(s.left_shock);
    if (fam == IsoFamily::kTwoShock) CHECK(s.right_shock);
    // Far samples are the data.
    CHECK(sample_iso(l, r, s, c, -100.0).rho == l.rho);
    CHECK(sample_iso(l, r, s, c, 100.0).rho == r.rho);
  }
}

TEST_CASE("gas star against a bisection oracle") {
  const double g = 1.4;
  const GasState l{5.99924, 19.5975, 460.894}, r{5.99242, -6.19633, 46.0950};
  const auto s = gas_star(l, r, g);
  CHECK(s.p_star == Approx(bisection_p_star(l, r, g)).epsilon(1e-12));
  CHECK(s.p_star == Approx(1691.64).epsilon(1e-5));
  CHECK(s.u_star == Approx(8.68975).epsilon(1e-5));
  CHECK(gas_star_residual(l, r, s, g) <= 1e-10);
  CHECK(s.left_shock);
  CHECK(s.right_shock);
  const double sl = gas_left_shock_speed(l, s.p_star, g);
  const auto res = rh_residual(l, s.left_state(), sl, g);
  CHECK(res.mass <= 1e-9);
  CHECK(res.momentum <= 1e-7);

  const GasState sod_l{1.0, 0.0, 1.0}, sod_r{0.125, 0.0, 0.1};
  const auto sod = gas_star(sod_l, sod_r, g);
  CHECK(sod.p_star == Approx(0.30313).epsilon(1e-4));
  CHECK(sod.u_star == Approx(0.92745).epsilon(1e-4));
  CHECK_FALSE(sod.left_shock);
  CHECK(sod.right_shock);
}

TEST_CASE("gas star simple cases") {
  const double g = 5.0 / 3.0;
  const GasState a{1.3, 0.2, 2.0};
  const auto s = gas_star(a, a, g);
  CHECK(s.p_star == Approx(2.0).epsilon(1e-12));
  CHECK(s.u_star == Approx(0.2).epsilon(1e-12));
  CHECK(s.rho_star_L == Approx(1.3).epsilon(1e-12));
  CHECK(s.rho_star_R == Approx(1.3).epsilon(1e-12));

  const auto wall = gas_star({1.0, 4.0, 1.0}, {1.0, -4.0, 1.0}, g);
  CHECK(std::abs(wall.u_star) <= 1e-12);
  CHECK(wall.p_star == Approx(bisection_p_star({1.0, 4.0, 1.0}, {1.0, -4.0, 1.0}, g)).epsilon(1e-12));

  CHECK_THROWS_AS(gas_star({1.0, -10.0, 0.1}, {1.0, 10.0, 0.1}, 1.4), VacuumError);
}

TEST_CASE("gas sampling") {
  const double g = 1.4;
  const GasState l{1.0, 0.0, 1.0}, r{0.125, 0.0, 0.1};
  const auto s = gas_star(l, r, g);
  CHECK(sample_gas(l, r, s, g, -10.0).rho == l.rho);
  CHECK(sample_gas(l, r, s, g, 10.0).rho == r.rho);
  const double eps = 1e-9;
  const auto a = sample_gas(l, r, s, g, s.u_star - eps);
  const auto b = sample_gas(l, r, s, g, s.u_star + eps);
  CHECK(a.rho == Approx(s.rho_star_L).epsilon(1e-12));
  CHECK(b.rho == Approx(s.rho_star_R).epsilon(1e-12));
  CHECK(std::abs(a.u - b.u) <= 1e-10);
  CHECK(std::abs(a.p - b.p) <= 1e-10);
  // Rarefaction fan is continuous at its edges.
  const double head = -std::sqrt(g);
  const auto in = sample_gas(l, r, s, g, head + 1e-9);
  CHECK(in.rho == Approx(1.0).epsilon(1e-8));
}

TEST_CASE("jump residuals") {
  CHECK(rh_residual(GasState{1, 0, 1}, GasState{1, 0, 1}, 3.0, 1.4).max() == 0.0);
  const auto r = rh_residual(GasState{1, 0, 1}, GasState{2, 0, 2}, 0.0, 1.4);
  CHECK(r.momentum == Approx(1.0));
  CHECK(rh_residual(IsoState{2, 1}, IsoState{2, 1}, -1.0, 0.5).max() == 0.0);
}

TEST_CASE("star pressure increases as the data converge") {
  const double g = 1.4;
  double prev = 0.0;
  for (double du = 2.0; du >= -4.0; du -= 0.25) {
    const auto s = gas_star({1.0, 0.0, 1.0}, {0.5, du, 0.8}, g);
    CHECK(s.p_star > prev);
    prev = s.p_star;
  }
}
