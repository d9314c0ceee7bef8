#include "solverlab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace solverlab {

GridSpec GridSpec::uniform(double x_min, double x_max, int n_cells) {
  if (n_cells <= 0) throw std::invalid_argument("grid needs at least one cell");
  if (!(x_max > x_min)) throw std::invalid_argument("grid needs x_max > x_min");
  return GridSpec{x_min, x_max, n_cells};
}

std::vector<double> GridSpec::centers() const {
  std::vector<double> x(static_cast<std::size_t>(n_cells));
  for (int j = 0; j < n_cells; ++j) x[j] = center(j);
  return x;
}

void MeshMotion::advance(double v, double dt) {
  v_mesh = v;
  parity ^= 1;
  const double moved = net_offset + v * dt;
  // A closing step is planned as -offset/dt; snap the rounding residue.
  net_offset = std::abs(moved) <= 1e-12 * std::abs(net_offset) ? 0.0 : moved;
}

double mesh_speed_for_step(long step_index, double v_waves, double safety,
                           bool stationary) {
  if (v_waves < 0.0) throw std::invalid_argument("v_waves must be >= 0");
  if (safety < 1.0) throw std::invalid_argument("mesh safety factor must be >= 1");
  if (stationary) return 0.0;
  const double speed = safety * v_waves;
  return step_index % 2 == 0 ? speed : -speed;
}

double stable_dt(double v_mesh, double v_waves, double dx, double cfl) {
  const double denom = std::abs(v_mesh) + v_waves;
  if (!(denom > 0.0)) throw StaticFieldError();
  return cfl * dx / denom;
}

MeshStep plan_mesh_step(const MeshMotion& motion, double v_waves, double cfl,
                        double dx, double safety, double t_remaining,
                        bool stationary) {
  if (!(t_remaining > 0.0)) throw std::invalid_argument("no time left to step");
  const double s = motion.net_offset;
  if (s == 0.0) {
    if (stationary || v_waves == 0.0) {
      if (v_waves == 0.0) return {0.0, t_remaining};
      const double dt = stable_dt(0.0, v_waves, dx, cfl);
      return {0.0, std::min(dt, t_remaining)};
    }
    const double v = mesh_speed_for_step(0, v_waves, safety);
    const double dt = stable_dt(v, v_waves, dx, cfl);
    if (2.0 * dt < t_remaining) return {v, dt};
    // Last pair: split the remaining time evenly and pick the mesh speed in the
    // middle of the admissible band so the closing step still fits when the
    // wave speed changes in between.
    const double half = 0.5 * t_remaining;
    const double v_hi = cfl * dx / half - v_waves;
    return {0.5 * (v + v_hi), half};
  }
  // Closing step: the mesh must travel back by -s. |v| = |s|/dt must stay
  // >= safety*v_waves and dt*(|v| + v_waves) <= cfl*dx.
  double dt = t_remaining;
  if (v_waves > 0.0) {
    dt = std::min(dt, std::abs(s) / (safety * v_waves));
    dt = std::min(dt, (cfl * dx - std::abs(s)) / v_waves);
  }
  if (!(dt > 0.0))
    throw std::logic_error("mesh offset too large to close within the CFL bound");
  return {-s / dt, dt};
}

}  // namespace solverlab
