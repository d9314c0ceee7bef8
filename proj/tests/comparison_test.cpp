#include <doctest.h>

#include <cmath>

#include "solverlab/comparison.hpp"
#include "support.hpp"

using namespace solverlab;
using doctest::Approx;

TEST_CASE("scheme names round-trip") {
  for (SchemeId id : all_schemes()) CHECK(parse_scheme(scheme_name(id)) == id);
  CHECK(all_schemes().size() == 9);
  CHECK_THROWS(parse_scheme("weno"));
  CHECK(is_staggered(SchemeId::kNT));
  CHECK_FALSE(is_staggered(SchemeId::kGodunov));
  CHECK(is_reconstruction(SchemeId::kRecFullNT));
  CHECK_FALSE(is_reconstruction(SchemeId::kMuscl));
}

TEST_CASE("numerical fluxes are consistent") {
  const ScalarLaw b{burgers()};
  CHECK(godunov_flux(b, 1.5, 1.5) == b.flux(1.5));
  CHECK(rusanov_flux(b, 1.5, 1.5) == b.flux(1.5));

  const Isothermal iso{0.7};
  const StateVec<2> s{{1.3, -0.4}};
  const auto gi = godunov_flux(iso, s, s);
  const auto fi = iso.flux(s);
  CHECK(gi[0] == Approx(fi[0]).epsilon(1e-12));
  CHECK(gi[1] == Approx(fi[1]).epsilon(1e-12));

  const IdealGas gas{1.4};
  const auto u = GasState{0.8, 0.5, 1.7}.conserved(1.4);
  const auto gg = godunov_flux(gas, u, u);
  const auto fg = gas.flux(u);
  for (int c = 0; c < 3; ++c) CHECK(gg[c] == Approx(fg[c]).epsilon(1e-12));
}

TEST_CASE("godunov gas flux samples the exact solution at x/t = 0") {
  const double g = 1.4;
  const IdealGas gas{g};
  const GasState l{1.0, 0.0, 1.0}, r{0.125, 0.0, 0.1};
  const auto star = gas_star(l, r, g);
  const auto at0 = sample_gas(l, r, star, g, 0.0).conserved(g);
  const auto f = godunov_flux(gas, l.conserved(g), r.conserved(g));
  const auto e = gas.flux(at0);
  for (int c = 0; c < 3; ++c) CHECK(f[c] == Approx(e[c]).epsilon(1e-12));
}

TEST_CASE("baseline schemes keep uniform fields") {
  const IdealGas gas{1.4};
  const auto bc = BoundaryCondition<StateVec<3>>::periodic();
  const Field<StateVec<3>> f(8, GasState{1.1, -0.3, 0.9}.conserved(1.4));
  const double dt = 0.002, dx = 0.1;
  using solverlab::testing::max_abs_diff;
  CHECK(max_abs_diff(lxf_step(f, dt, dx, 2.0, gas, bc), f) <= 1e-14);
  CHECK(max_abs_diff(nt_step(f, dt, dx, -2.0, gas, bc), f) <= 1e-14);
  CHECK(max_abs_diff(rusanov_step(f, dt, dx, gas, bc), f) <= 1e-14);
  CHECK(max_abs_diff(godunov_step(f, dt, dx, gas, bc), f) <= 1e-14);
  CHECK(max_abs_diff(muscl_step(f, dt, dx, gas, bc), f) <= 1e-14);
  CHECK_THROWS_AS(godunov_step(f, 1.0, dx, gas, bc), CflError);
}

TEST_CASE("NT with zero slopes is LxF") {
  const Isothermal iso{1.0};
  const auto bc = BoundaryCondition<StateVec<2>>::periodic();
  Field<StateVec<2>> u(30);
  for (std::size_t j = 0; j < u.size(); ++j) u[j] = {{1.0 + 0.4 * std::sin(0.5 * j), 0.1}};
  const auto a = nt_step(u, 0.01, 0.1, -2.0, iso, bc, true);
  const auto b = lxf_step(u, 0.01, 0.1, -2.0, iso, bc);
  CHECK(a == b);
}

TEST_CASE("godunov resolves a stationary burgers shock") {
  const ScalarLaw b{burgers()};
  BoundaryCondition<double> bc{BoundaryKind::kFixed, BoundaryKind::kFixed, 1.0, -1.0};
  std::vector<double> u{1, 1, 1, 1, -1, -1, -1, -1};
  for (int n = 0; n < 20; ++n) u = godunov_step(u, 0.05, 0.1, b, bc);
  CHECK(u == std::vector<double>{1, 1, 1, 1, -1, -1, -1, -1});
}
