#ifndef SOLVERLAB_STAGGERED_HPP_
#define SOLVERLAB_STAGGERED_HPP_

// Flux-form updates shared by every scheme.
//
// Staggered schemes run on the moving mesh: during a step all interfaces
// translate at v_mesh, and because |v_mesh| dominates the wave speeds each
// interface only sees the cell it sweeps through (the donor). Interface i
// sits between cells i-1 and i; its donor is cell i-1 when v_mesh <= 0 and
// cell i when v_mesh > 0. Fixed-grid schemes use two-sided interface fluxes.

#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "solverlab/grid.hpp"
#include "solverlab/models.hpp"
#include "solverlab/state.hpp"

namespace solverlab {

inline constexpr int kGhostWidth = 2;

class CflError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Coupling { kLxF, kNT };

/// Which interface of the donor cell the mesh sweeps.
inline bool crosses_right_interface(double v_mesh) { return v_mesh <= 0.0; }

/// Everything a donor or interface flux may read during one step.
template <class State>
struct StepContext {
  std::vector<State> ext;    // cells with kGhostWidth ghosts per side
  std::vector<State> fext;   // physical flux of every ext entry
  double dt = 0.0;
  double dx = 0.0;
  double v_mesh = 0.0;

  /// ext index of cell j (j may be a ghost index in [-width, n + width)).
  static int at(int j) { return j + kGhostWidth; }
};

/// Flux in the frame moving with the mesh: f(U) - v U.
template <class State>
State moving_flux(const State& u, const State& fu, double v_mesh) {
  return fu - v_mesh * u;
}

/// Time for an in-cell discontinuity at distance d from the donor's left edge
/// to reach the swept interface; +inf when it never does.
inline double crossing_time(double d, double sigma, double v_mesh, double dx) {
  const double inf = std::numeric_limits<double>::infinity();
  if (crosses_right_interface(v_mesh)) {
    const double rel = sigma - v_mesh;
    if (!(rel > 0.0)) return inf;
    return (dx - d) / rel;
  }
  const double rel = v_mesh - sigma;
  if (!(rel > 0.0)) return inf;
  return d / rel;
}

/// Time average of the moving-frame flux at the swept interface of a cell
/// holding bar_L on [0, d_c) and bar_R on (d_c, dx), one distance per
/// component. Before the crossing the interface sees the near state
/// (bar_R on the right interface, bar_L on the left one), afterwards the far one.
/// Distances outside [0, dx] give crossing times outside [0, dt] and are used
/// as they are, so the weights may leave [0, 1].
template <class Model>
typename Model::State reconstructed_flux(const Model& model,
                                         const typename Model::State& bar_L,
                                         const typename Model::State& bar_R,
                                         double sigma,
                                         std::span<const double> distance,
                                         double v_mesh, double dt, double dx) {
  using State = typename Model::State;
  using C = Components<State>;
  const bool right = crosses_right_interface(v_mesh);
  const State& near = right ? bar_R : bar_L;
  const State& far = right ? bar_L : bar_R;
  const State g_near = moving_flux(near, model.flux(near), v_mesh);
  const State g_far = moving_flux(far, model.flux(far), v_mesh);
  State out{};
  for (std::size_t c = 0; c < C::count; ++c) {
    const double t_star = crossing_time(distance[c], sigma, v_mesh, dx);
    const double before = std::min(dt, t_star);
    const double value =
        (before * C::get(g_near, c) + (dt - before) * C::get(g_far, c)) / dt;
    C::set(out, c, value);
  }
  return out;
}

/// Staggered Lax-Friedrichs flux: the donor's constant state.
template <class State>
State lxf_donor_flux(const StepContext<State>& ctx, int k) {
  const int e = StepContext<State>::at(k);
  return moving_flux(ctx.ext[e], ctx.fext[e], ctx.v_mesh);
}

/// Nessyahu-Tadmor flux on the moving mesh: MinMod slopes of the conserved
/// variables and of the flux, midpoint-in-time predictor, evaluated at the
/// interface position at half step. Zero slopes give lxf_donor_flux exactly.
template <class Model>
typename Model::State nt_donor_flux(const Model& model,
                                    const StepContext<typename Model::State>& ctx,
                                    int k, bool zero_slopes = false) {
  using State = typename Model::State;
  const int e = StepContext<State>::at(k);
  const State& u = ctx.ext[e];
  if (zero_slopes) return lxf_donor_flux(ctx, k);
  const State s = minmod(ctx.ext[e + 1] - u, u - ctx.ext[e - 1]);
  const State fs = minmod(ctx.fext[e + 1] - ctx.fext[e], ctx.fext[e] - ctx.fext[e - 1]);
  if (s == State{} && fs == State{}) return lxf_donor_flux(ctx, k);
  const double lambda = ctx.dt / ctx.dx;
  const double xi = (crosses_right_interface(ctx.v_mesh) ? 0.5 : -0.5) +
                    0.5 * ctx.v_mesh * lambda;
  const State w = u - (0.5 * lambda) * fs + xi * s;
  return moving_flux(w, model.flux(w), ctx.v_mesh);
}

template <class Model>
StepContext<typename Model::State> make_context(const Model& model,
                                                std::span<const typename Model::State> cells,
                                                const BoundaryCondition<typename Model::State>& bc,
                                                double dt, double dx, double v_mesh) {
  StepContext<typename Model::State> ctx;
  ctx.ext = fill_ghosts(cells, bc, kGhostWidth,
                        [&](const auto& s) { return model.reflect(s); });
  ctx.fext.reserve(ctx.ext.size());
  for (const auto& s : ctx.ext) ctx.fext.push_back(model.flux(s));
  ctx.dt = dt;
  ctx.dx = dx;
  ctx.v_mesh = v_mesh;
  return ctx;
}

/// Rejects steps that break the staggered CFL bound or let waves outrun the
/// mesh (every eigenvalue must lie on the donor's side of v_mesh).
template <class Model>
void check_staggered_step(const Model& model, const StepContext<typename Model::State>& ctx) {
  if (!(ctx.dt > 0.0) || !(ctx.dx > 0.0)) throw CflError("step needs dt > 0 and dx > 0");
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  double vmax = 0.0;
  for (const auto& s : ctx.ext) {
    const auto [a, b] = model.speed_bounds(s);
    lo = std::min(lo, a);
    hi = std::max(hi, b);
    vmax = std::max(vmax, model.max_speed(s));
  }
  const double slack = 1e-12 * (std::abs(ctx.v_mesh) + vmax);
  if (ctx.dt * (std::abs(ctx.v_mesh) + vmax) > ctx.dx * (1.0 + 1e-12))
    throw CflError("staggered CFL condition violated: dt*(|v_mesh|+v_waves) > dx");
  if (crosses_right_interface(ctx.v_mesh) ? ctx.v_mesh > lo + slack
                                          : ctx.v_mesh < hi - slack)
    throw CflError("mesh slower than the waves: v_mesh = " + std::to_string(ctx.v_mesh));
}

/// Conservative staggered update with one donor flux per interface.
template <class Model, class DonorFlux>
Field<typename Model::State> staggered_update(const Model& model,
                                              const Field<typename Model::State>& cells,
                                              const BoundaryCondition<typename Model::State>& bc,
                                              double dt, double dx, double v_mesh,
                                              DonorFlux&& donor_flux) {
  using State = typename Model::State;
  const auto ctx = make_context(model, std::span<const State>(cells), bc, dt, dx, v_mesh);
  check_staggered_step(model, ctx);
  const int n = static_cast<int>(cells.size());
  const int shift = crosses_right_interface(v_mesh) ? -1 : 0;
  std::vector<State> flux(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) flux[i] = donor_flux(ctx, i + shift);
  Field<State> out(cells.size());
  const double lambda = dt / dx;
  for (int j = 0; j < n; ++j) out[j] = cells[j] - lambda * (flux[j + 1] - flux[j]);
  require_admissible(model, out);
  return out;
}

/// Conservative update on the fixed grid; iface_flux(ctx, i) receives the
/// interface index i in [0, n] (between cells i-1 and i).
template <class Model, class InterfaceFlux>
Field<typename Model::State> fixed_update(const Model& model,
                                          const Field<typename Model::State>& cells,
                                          const BoundaryCondition<typename Model::State>& bc,
                                          double dt, double dx, double max_cfl,
                                          InterfaceFlux&& iface_flux) {
  using State = typename Model::State;
  const auto ctx = make_context(model, std::span<const State>(cells), bc, dt, dx, 0.0);
  double vmax = 0.0;
  for (const auto& s : ctx.ext) vmax = std::max(vmax, model.max_speed(s));
  if (!(dt > 0.0) || dt * vmax > max_cfl * dx * (1.0 + 1e-12))
    throw CflError("CFL condition violated: dt*v_waves > " + std::to_string(max_cfl) + "*dx");
  const int n = static_cast<int>(cells.size());
  std::vector<State> flux(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) flux[i] = iface_flux(ctx, i);
  Field<State> out(cells.size());
  const double lambda = dt / dx;
  for (int j = 0; j < n; ++j) out[j] = cells[j] - lambda * (flux[j + 1] - flux[j]);
  require_admissible(model, out);
  return out;
}

}  // namespace solverlab

#endif  // SOLVERLAB_STAGGERED_HPP_
