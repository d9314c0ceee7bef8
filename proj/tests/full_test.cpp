#include <doctest.h>

#include <cmath>

#include "solverlab/full_rec.hpp"
#include "solverlab/harness.hpp"
#include "support.hpp"

using namespace solverlab;
using solverlab::testing::gas_shocked;
using solverlab::testing::march;
using solverlab::testing::max_abs_diff;
using doctest::Approx;

namespace {

StateVec<3> mixture(const GasState& l, const GasState& r, double w, double g) {
  return w * l.conserved(g) + (1.0 - w) * r.conserved(g);
}

}  // namespace

TEST_CASE("wave selection") {
  const double g = 1.4;
  const GasState a{1.0, 0.5, 2.0};
  CHECK(select_wave_full(a, a, 0.4, g).family == GasFamily::kNone);

  const GasState ahead{1.0, 0.0, 1.0};
  const GasState behind = gas_shocked(ahead, 3.0, g, 1);
  auto sel = select_wave_full(ahead, behind, 0.4, g);
  CHECK(sel.family == GasFamily::kOneShock);
  CHECK(sel.bar_R.rho == Approx(behind.rho).epsilon(1e-10));
  CHECK(sel.sigma == Approx(gas_left_shock_speed(ahead, 3.0, g)).epsilon(1e-10));

  const GasState right_ahead{0.5, -1.0, 0.4};
  const GasState right_behind = gas_shocked(right_ahead, 2.0, g, 3);
  sel = select_wave_full(right_behind, right_ahead, 0.4, g);
  CHECK(sel.family == GasFamily::kThreeShock);
  CHECK(sel.sigma == Approx(gas_right_shock_speed(right_ahead, 2.0, g)).epsilon(1e-10));

  sel = select_wave_full({2.0, 0.3, 1.0}, {0.5, 0.3, 1.0}, 0.4, g);
  CHECK(sel.family == GasFamily::kContact);
  CHECK(sel.sigma == Approx(0.3).epsilon(1e-12));
}

TEST_CASE("full conservation distances") {
  const double g = 1.4;
  const GasState l{1.0, 0.7, 2.0}, r{2.0, -0.2, 1.0};
  auto d = distances_full(l, mixture(l, r, 0.5, g), r, 1.0, g);
  CHECK(*d.d_rho == Approx(0.5));
  CHECK(*d.d_q == Approx(0.5));
  CHECK(*d.d_E == Approx(0.5));
  d = distances_full(l, l.conserved(g), r, 1.0, g);
  CHECK(*d.d_rho == Approx(1.0));
  CHECK(*d.d_q == Approx(1.0));
  CHECK(*d.d_E == Approx(1.0));

  // Contact at delta with q = 0 on both sides: no momentum jump.
  const GasState cl{3.0, 0.0, 1.0}, cr{1.0, 0.0, 1.0};
  d = distances_full(cl, mixture(cl, cr, 0.3, g), cr, 1.0, g);
  CHECK(*d.d_rho == Approx(0.3));
  CHECK_FALSE(d.d_q.has_value());
  CHECK_FALSE(d.d_E.has_value());
}

TEST_CASE("full acceptance") {
  const double g = 1.4;
  const GasState ahead{1.0, 0.0, 1.0};
  const GasState behind = gas_shocked(ahead, 3.0, g, 1);
  const auto prev = ahead.conserved(g), next = behind.conserved(g);
  const auto mid = mixture(ahead, behind, 0.4, g);
  FullRecOptions opt;
  const auto rec = reconstruct_full(prev, mid, next, 1.0, opt);
  CHECK(rec.family == GasFamily::kOneShock);
  CHECK(rec.accepted);
  CHECK(*rec.d_rho == Approx(0.4).epsilon(1e-12));
  CHECK(*rec.d_E == Approx(0.4).epsilon(1e-12));

  GasRecDecision bad = rec;
  bad.d_E = 1.4;
  CHECK_FALSE(accept_full(prev, mid, next, bad, 1.0, g));
  CHECK_FALSE(accept_full(GasState{1, 0, 1}.conserved(g), GasState{3, 0, 1}.conserved(g),
                          GasState{2, 0, 1}.conserved(g), rec, 1.0, g));
  GasRecDecision none;
  CHECK_FALSE(accept_full(prev, mid, next, none, 1.0, g));
}

TEST_CASE("full interface flux") {
  const double g = 1.4;
  const IdealGas model{g};
  GasRecDecision same;
  same.accepted = true;
  same.family = GasFamily::kContact;
  same.bar_L = same.bar_R = {1.2, 0.3, 0.9};
  same.d_rho = same.d_q = same.d_E = 0.5;
  const auto u = same.bar_L.conserved(g);
  const auto f = full_interface_flux(same, -2.0, 0.1, 1.0, g);
  const auto e = moving_flux(u, model.flux(u), -2.0);
  for (int c = 0; c < 3; ++c) CHECK(f[c] == Approx(e[c]).epsilon(1e-15));

  GasRecDecision contact;
  contact.accepted = true;
  contact.family = GasFamily::kContact;
  contact.bar_L = {3.0, 0.0, 1.0};
  contact.bar_R = {1.0, 0.0, 1.0};
  contact.sigma = 0.0;
  contact.d_rho = contact.d_E = 0.6;
  const double v = -2.0;
  const auto h = full_interface_flux(contact, v, 0.3, 1.0, g);
  CHECK(h[1] == Approx(1.0).epsilon(1e-15));
  const double t_star = 0.4 / 2.0;
  const auto near = contact.bar_R.conserved(g), far = contact.bar_L.conserved(g);
  CHECK(h[0] == Approx((t_star * (-v * near[0]) + (0.3 - t_star) * (-v * far[0])) / 0.3));
}

TEST_CASE("uniform gas field is stationary") {
  const auto bc = BoundaryCondition<StateVec<3>>::periodic();
  GasField f(10, GasState{1.0, 0.2, 1.0}.conserved(1.4));
  FullRecOptions opt;
  for (auto sel : {Selection::kOneShot, Selection::kTwoShot}) {
    opt.selection = sel;
    const auto out = full_step(f, 0.01, 0.1, 1.6, bc, opt);
    CHECK(max_abs_diff(out, f) <= 1e-14);
  }
}

TEST_CASE("pure gas shocks and contacts are exact") {
  const double g = 1.4;
  const IdealGas model{g};
  const auto grid = GridSpec::uniform(0.0, 1.0, 100);
  const double dx = grid.dx();
  BoundaryCondition<StateVec<3>> bc;
  FullRecOptions opt;
  opt.gamma = g;
  opt.c_cfl = 0.4;
  // Compare only while the discontinuity is away from the open boundaries.
  auto inside_domain = [&](double x) { return x > 2.0 * dx && x < 1.0 - 2.0 * dx; };

  SUBCASE("1-shock") {
    const GasState l{1.0, 0.0, 1.0};
    const GasState r = gas_shocked(l, 3.0, g, 1);
    const double s = gas_left_shock_speed(l, 3.0, g);
    auto u = exact_pure_shock_average(l, r, s, 0.6, 0.0, grid, g);
    double worst = 0.0;
    int checked = 0;
    march(model, u, dx, 0.4, 500,
          [&](const GasField& f, double dt, double v) { return full_step(f, dt, dx, v, bc, opt); },
          [&](double t, double off, const GasField& f) {
            if (!inside_domain(0.6 + s * t)) return;
            ++checked;
            worst = std::max(worst, max_abs_diff(f, exact_pure_shock_average(l, r, s, 0.6, t, grid, g, off)));
          });
    CHECK(checked > 100);
    CHECK(worst <= 1e-9);
  }
  SUBCASE("3-shock") {
    const GasState r{0.5, -1.0, 0.4};
    const GasState l = gas_shocked(r, 2.0, g, 3);
    const double s = gas_right_shock_speed(r, 2.0, g);
    auto u = exact_pure_shock_average(l, r, s, 0.4, 0.0, grid, g);
    double worst = 0.0;
    int checked = 0;
    march(model, u, dx, 0.4, 500,
          [&](const GasField& f, double dt, double v) { return full_step(f, dt, dx, v, bc, opt); },
          [&](double t, double off, const GasField& f) {
            if (!inside_domain(0.4 + s * t)) return;
            ++checked;
            worst = std::max(worst, max_abs_diff(f, exact_pure_shock_average(l, r, s, 0.4, t, grid, g, off)));
          });
    CHECK(checked > 100);
    CHECK(worst <= 1e-9);
  }
  SUBCASE("contact") {
    const GasState l{2.0, 0.3, 1.0}, r{0.5, 0.3, 1.0};
    auto u = exact_pure_shock_average(l, r, 0.3, 0.35, 0.0, grid, g);
    double worst = 0.0;
    int checked = 0;
    march(model, u, dx, 0.4, 500,
          [&](const GasField& f, double dt, double v) { return full_step(f, dt, dx, v, bc, opt); },
          [&](double t, double off, const GasField& f) {
            if (!inside_domain(0.35 + 0.3 * t)) return;
            ++checked;
            worst = std::max(worst, max_abs_diff(f, exact_pure_shock_average(l, r, 0.3, 0.35, t, grid, g, off)));
          });
    CHECK(checked > 100);
    CHECK(worst <= 1e-9);
  }
}

TEST_CASE("disabled full reconstruction is LxF bit for bit") {
  const double g = 1.4;
  const IdealGas model{g};
  const auto bc = BoundaryCondition<StateVec<3>>::periodic();
  GasField u(40);
  for (std::size_t j = 0; j < u.size(); ++j)
    u[j] = GasState{1.0 + 0.3 * std::sin(0.3 * j), 0.2, j < 20 ? 1.0 : 0.5}.conserved(g);
  FullRecOptions opt;
  opt.disable_reconstruction = true;
  auto a = u, b = u;
  for (int n = 0; n < 30; ++n) {
    const double v = n % 2 == 0 ? 2.5 : -2.5;
    a = full_step(a, 0.008, 0.1, v, bc, opt);
    b = lxf_step(b, 0.008, 0.1, v, model, bc);
  }
  CHECK(a == b);
}
