#ifndef SOLVERLAB_TESTS_SUPPORT_HPP_
#define SOLVERLAB_TESTS_SUPPORT_HPP_

#include <cmath>

#include "solverlab/grid.hpp"
#include "solverlab/models.hpp"
#include "solverlab/riemann.hpp"

namespace solverlab::testing {

// Runs `steps` staggered steps on the alternating mesh and calls
// check(t, net_offset, field) after each one.
template <class Model, class Step, class Check>
void march(const Model& model, Field<typename Model::State>& u, double dx, double cfl,
           int steps, Step&& step, Check&& check) {
  MeshMotion motion;
  double t = 0.0;
  for (int n = 0; n < steps; ++n) {
    const double v_waves = max_wave_speed(model, u);
    const auto plan = plan_mesh_step(motion, v_waves, cfl, dx, 1.0, 1e30, false);
    u = step(u, plan.dt, plan.v_mesh);
    motion.advance(plan.v_mesh, plan.dt);
    t += plan.dt;
    check(t, motion.net_offset, u);
  }
}

// Post-shock state behind a 1-shock (ahead = left) or 3-shock (ahead = right)
// of pressure p_star, from the textbook shock relations.
inline GasState gas_shocked(const GasState& ahead, double p_star, double g, int family) {
  const double ratio = p_star / ahead.p;
  const double k = (g - 1.0) / (g + 1.0);
  const double rho = ahead.rho * (ratio + k) / (k * ratio + 1.0);
  const double A = 2.0 / ((g + 1.0) * ahead.rho);
  const double B = k * ahead.p;
  const double du = (p_star - ahead.p) * std::sqrt(A / (p_star + B));
  return {rho, family == 1 ? ahead.u - du : ahead.u + du, p_star};
}

inline double max_abs_diff(const std::vector<StateVec<3>>& a, const std::vector<StateVec<3>>& b) {
  double m = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::size_t c = 0; c < 3; ++c) m = std::max(m, std::abs(a[j][c] - b[j][c]));
  return m;
}

inline double max_abs_diff(const std::vector<StateVec<2>>& a, const std::vector<StateVec<2>>& b) {
  double m = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::size_t c = 0; c < 2; ++c) m = std::max(m, std::abs(a[j][c] - b[j][c]));
  return m;
}

}  // namespace solverlab::testing

#endif  // SOLVERLAB_TESTS_SUPPORT_HPP_
