#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "solverlab/comparison.hpp"
#include "solverlab/harness.hpp"
#include "solverlab/scalar_rec.hpp"

using namespace solverlab;
using doctest::Approx;

namespace {

// Midpoint-rule average of f(u) - v u seen by the swept interface while an
// in-cell shock (u_L on the left, u_R on the right) moves at sigma.
double quadrature_flux(const ScalarRecDecision& d, double v, double dt, double dx, int n) {
  const ConvexFlux b = burgers();
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    const double tau = (k + 0.5) * dt / n;
    const double face = (v <= 0.0 ? dx : 0.0) + v * tau;
    const double shock = d.d + d.sigma * tau;
    const double u = face < shock ? d.u_L : d.u_R;
    sum += b.f(u) - v * u;
  }
  return sum / n;
}

double characteristic_compression(double t, double x) {
  // u = u0(x - u t) with u0 = 3 | 3 - (x + 3) | 1; bisection on u in [1, 3].
  auto u0 = [](double y) { return y <= -3.0 ? 3.0 : (y >= -1.0 ? 1.0 : -y); };
  double lo = 1.0, hi = 3.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid - u0(x - mid * t) > 0.0) hi = mid;
    else lo = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("burgers flux") {
  CHECK(burgers_flux(0.0) == 0.0);
  CHECK(burgers_flux(3.0) == 4.5);
  CHECK(burgers_flux(-2.0) == 2.0);
  CHECK(burgers().f_prime(-1.5) == -1.5);
}

TEST_CASE("scalar reconstruction") {
  const ConvexFlux b = burgers();
  auto r = reconstruct_scalar(3, 2, 1, 1.0, b);
  CHECK(r.accepted);
  CHECK(r.d == 0.5);
  CHECK(r.u_L == 3.0);
  CHECK(r.u_R == 1.0);
  CHECK(r.sigma == 2.0);

  r = reconstruct_scalar(1, 2, 3, 1.0, b);
  CHECK_FALSE(r.accepted);
  CHECK(r.sigma == 2.0);
  CHECK(r.u_L == 2.0);
  CHECK(r.u_R == 2.0);

  CHECK_FALSE(reconstruct_scalar(2, 2, 2, 1.0, b).accepted);

  r = reconstruct_scalar(3, 2.5, 1, 1.0, b);
  CHECK(r.accepted);
  CHECK(r.d == 0.75);
  CHECK(r.sigma == 2.0);

  // Boundary distances are rejected.
  CHECK_FALSE(reconstruct_scalar(3, 3, 1, 1.0, b).accepted);
  CHECK_FALSE(reconstruct_scalar(3, 1, 1, 1.0, b).accepted);
  CHECK_FALSE(reconstruct_scalar(3, 3.5, 1, 1.0, b).accepted);
}

TEST_CASE("accepted reconstructions conserve the cell average") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> U(-4.0, 4.0);
  const ConvexFlux b = burgers();
  int accepted = 0;
  for (int i = 0; i < 2000; ++i) {
    const double a = U(rng), m = U(rng), c = U(rng), dx = 0.1 + std::abs(U(rng));
    const auto r = reconstruct_scalar(a, m, c, dx, b);
    if (!r.accepted) continue;
    ++accepted;
    CHECK(r.d > 0.0);
    CHECK(r.d < dx);
    CHECK(r.u_L > r.u_R);
    const double mass = r.d * r.u_L + (dx - r.d) * r.u_R;
    CHECK(std::abs(mass - dx * m) <= 1e-13 * std::max(1.0, std::abs(dx * m)) * 10);
  }
  CHECK(accepted > 100);
}

TEST_CASE("scalar interface flux") {
  const ConvexFlux b = burgers();
  ScalarRecDecision d{true, 0.5, 3.0, 1.0, 2.0};
  CHECK(scalar_interface_flux(d, -3.0, 0.3, 1.0, b) == Approx(10.1666666666666667).epsilon(1e-14));

  // Shock never reaches the interface within dt.
  CHECK(scalar_interface_flux(d, -3.0, 0.05, 1.0, b) == b.f(1.0) + 3.0 * 1.0);

  // Not accepted: donor constant state.
  ScalarRecDecision none{false, 0.0, 2.0, 2.0, 2.0};
  CHECK(scalar_interface_flux(none, 1.5, 0.1, 1.0, b) == b.f(2.0) - 1.5 * 2.0);

  // Shock riding the interface: near state all step.
  ScalarRecDecision ride{true, 0.5, 3.0, 1.0, 2.0};
  CHECK(scalar_interface_flux(ride, 2.0, 0.2, 1.0, b) == Approx(b.f(3.0) - 2.0 * 3.0).epsilon(1e-14));
}

TEST_CASE("interface flux matches sub-step quadrature") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double dx = 0.5 + U(rng);
    const double ul = 1.0 + 3.0 * U(rng), ur = ul - 0.2 - 2.0 * U(rng);
    const double sigma = 0.5 * (ul + ur);
    const double vw = std::max(std::abs(ul), std::abs(ur));
    const double v = (i % 2 == 0 ? -1.0 : 1.0) * vw * (1.0 + U(rng));
    const double dt = 0.9 * dx / (std::abs(v) + vw);
    ScalarRecDecision d{true, dx * (0.05 + 0.9 * U(rng)), ul, ur, sigma};
    const double exact = scalar_interface_flux(d, v, dt, dx, burgers());
    const double oracle = quadrature_flux(d, v, dt, dx, 200000);
    CHECK(exact == Approx(oracle).epsilon(1e-4));
  }
}

TEST_CASE("godunov scalar flux") {
  const ConvexFlux b = burgers();
  CHECK(godunov_scalar_flux(2, 2, b) == b.f(2));
  CHECK(godunov_scalar_flux(3, 1, b) == 4.5);
  CHECK(godunov_scalar_flux(-1, 1, b) == 0.0);
  CHECK(godunov_scalar_flux(-3, -1, b) == b.f(-1));
  CHECK(godunov_scalar_flux(1, -3, b) == 4.5);
  CHECK(godunov_scalar_flux(-1, -3, b) == 4.5);
}

TEST_CASE("compression exact solution") {
  CHECK(exact_compression(0.0, -5.0) == 3.0);
  CHECK(exact_compression(1.0, 0.5) == 1.0);
  CHECK(exact_compression(1.0, -0.5) == 3.0);
  CHECK(exact_compression(0.5, -1.0) == Approx(2.0).epsilon(1e-15));
  CHECK(exact_compression(0.5, -2.0) == 3.0);
  CHECK(exact_compression(2.0, 1.9) == 3.0);
  CHECK(exact_compression(2.0, 2.1) == 1.0);
  for (double t : {0.0, 0.2, 0.5, 0.9})
    for (double x = -4.0; x <= 2.0; x += 0.137)
      CHECK(exact_compression(t, x) == Approx(characteristic_compression(t, x)).epsilon(1e-12));
}

TEST_CASE("scalar step basics") {
  const ConvexFlux b = burgers();
  const auto bc = BoundaryCondition<double>::periodic();
  const std::vector<double> flat(10, 1.3);
  for (double v : {-2.0, 0.0, 2.0}) {
    const auto out = scalar_step(flat, 0.01, 0.1, v, b, bc);
    for (double u : out) CHECK(u == Approx(1.3).epsilon(1e-15));
  }
  CHECK_THROWS_AS(scalar_step(flat, 1.0, 0.1, -2.0, b, bc), CflError);
  CHECK_THROWS_AS(scalar_step(flat, 0.01, 0.1, 0.5, b, bc), CflError);

  std::vector<double> spike(20, 1.0);
  spike[7] = 2.5;
  double sum0 = std::accumulate(spike.begin(), spike.end(), 0.0);
  auto u = spike;
  for (int n = 0; n < 200; ++n) {
    const double v = n % 2 == 0 ? 2.5 : -2.5;
    u = scalar_step(u, 0.4 * 0.1 / 5.0, 0.1, v, b, bc);
  }
  const double sum1 = std::accumulate(u.begin(), u.end(), 0.0);
  CHECK(std::abs(sum1 - sum0) <= 1e-12 * sum0);
}

TEST_CASE("pure burgers shock is transported exactly") {
  const ConvexFlux b = burgers();
  const auto grid = GridSpec::uniform(0.0, 1.0, 100);
  const double dx = grid.dx();
  BoundaryCondition<double> bc{BoundaryKind::kFixed, BoundaryKind::kFixed, 3.0, 1.0};
  auto u = exact_pure_shock_average(3.0, 1.0, 2.0, 0.25, 0.0, grid, b);
  double t = 0.0;
  double worst = 0.0;
  for (int n = 0; n < 150; ++n) {
    const double dt = 0.4 * dx / 3.0;
    u = scalar_step(u, dt, dx, 0.0, b, bc);
    t += dt;
    const auto ex = exact_pure_shock_average(3.0, 1.0, 2.0, 0.25, t, grid, b);
    for (std::size_t j = 0; j < u.size(); ++j) worst = std::max(worst, std::abs(u[j] - ex[j]));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("disabled reconstruction is staggered Lax-Friedrichs bit for bit") {
  const ScalarLaw law{burgers()};
  const auto bc = BoundaryCondition<double>::periodic();
  std::vector<double> u(64);
  for (std::size_t j = 0; j < u.size(); ++j) u[j] = 1.0 + std::sin(0.3 * j) + (j > 30 ? 1.0 : 0.0);
  auto a = u, b = u, c = u, d = u;
  for (int n = 0; n < 60; ++n) {
    const double v = n % 2 == 0 ? 3.0 : -3.0;
    const double dt = 0.45 * 0.1 / 6.0;
    a = scalar_step(a, dt, 0.1, v, law.law, bc, {Coupling::kLxF, true, nullptr});
    b = lxf_step(b, dt, 0.1, v, law, bc);
    c = scalar_step(c, dt, 0.1, v, law.law, bc, {Coupling::kNT, true, nullptr});
    d = nt_step(d, dt, 0.1, v, law, bc);
  }
  CHECK(a == b);
  CHECK(c == d);
}
