#ifndef SOLVERLAB_COMPARISON_HPP_
#define SOLVERLAB_COMPARISON_HPP_

// Baseline schemes: staggered Lax-Friedrichs and Nessyahu-Tadmor on the moving
// mesh, and Rusanov, Godunov and MUSCL-Hancock on the fixed grid.

#include <string>
#include <string_view>

#include "solverlab/grid.hpp"
#include "solverlab/models.hpp"
#include "solverlab/riemann.hpp"
#include "solverlab/scalar_rec.hpp"
#include "solverlab/staggered.hpp"

namespace solverlab {

enum class SchemeId { kLxF, kRusanov, kGodunov, kNT, kMuscl, kRec, kRecFull, kRecNT, kRecFullNT };

SchemeId parse_scheme(std::string_view name);
std::string scheme_name(SchemeId id);
const std::vector<SchemeId>& all_schemes();

/// Schemes that run on the alternating moving mesh.
bool is_staggered(SchemeId id);
bool is_reconstruction(SchemeId id);

/// Local Lax-Friedrichs flux with a = max(|lambda(L)|, |lambda(R)|).
template <class Model>
typename Model::State rusanov_flux(const Model& model, const typename Model::State& left,
                                   const typename Model::State& right) {
  const double a = std::max(model.max_speed(left), model.max_speed(right));
  return 0.5 * (model.flux(left) + model.flux(right)) - (0.5 * a) * (right - left);
}

double godunov_flux(const ScalarLaw& model, double left, double right);
StateVec<2> godunov_flux(const Isothermal& model, const StateVec<2>& left,
                         const StateVec<2>& right);
StateVec<3> godunov_flux(const IdealGas& model, const StateVec<3>& left,
                         const StateVec<3>& right);

template <class Model>
Field<typename Model::State> lxf_step(const Field<typename Model::State>& field, double dt,
                                      double dx, double v_mesh, const Model& model,
                                      const BoundaryCondition<typename Model::State>& bc) {
  return staggered_update(model, field, bc, dt, dx, v_mesh,
                          [](const auto& ctx, int k) { return lxf_donor_flux(ctx, k); });
}

template <class Model>
Field<typename Model::State> nt_step(const Field<typename Model::State>& field, double dt,
                                     double dx, double v_mesh, const Model& model,
                                     const BoundaryCondition<typename Model::State>& bc,
                                     bool zero_slopes = false) {
  return staggered_update(model, field, bc, dt, dx, v_mesh, [&](const auto& ctx, int k) {
    return nt_donor_flux(model, ctx, k, zero_slopes);
  });
}

template <class Model>
Field<typename Model::State> rusanov_step(const Field<typename Model::State>& field,
                                          double dt, double dx, const Model& model,
                                          const BoundaryCondition<typename Model::State>& bc) {
  using State = typename Model::State;
  return fixed_update(model, field, bc, dt, dx, 1.0, [&](const StepContext<State>& ctx, int i) {
    const int e = StepContext<State>::at(i);
    return rusanov_flux(model, ctx.ext[e - 1], ctx.ext[e]);
  });
}

template <class Model>
Field<typename Model::State> godunov_step(const Field<typename Model::State>& field,
                                          double dt, double dx, const Model& model,
                                          const BoundaryCondition<typename Model::State>& bc) {
  using State = typename Model::State;
  return fixed_update(model, field, bc, dt, dx, 1.0, [&](const StepContext<State>& ctx, int i) {
    const int e = StepContext<State>::at(i);
    return godunov_flux(model, ctx.ext[e - 1], ctx.ext[e]);
  });
}

/// MinMod-limited primitive slopes, Hancock half-step predictor, Rusanov flux.
template <class Model>
Field<typename Model::State> muscl_step(const Field<typename Model::State>& field, double dt,
                                        double dx, const Model& model,
                                        const BoundaryCondition<typename Model::State>& bc) {
  using State = typename Model::State;
  const double half = 0.5 * dt / dx;
  return fixed_update(model, field, bc, dt, dx, 1.0, [&](const StepContext<State>& ctx, int i) {
    // Face values of cell at ext index e: {left face, right face}.
    auto faces = [&](int e) {
      const State w = model.to_primitive(ctx.ext[e]);
      const State slope = minmod(w - model.to_primitive(ctx.ext[e - 1]),
                                 model.to_primitive(ctx.ext[e + 1]) - w);
      State lo = model.from_primitive(w - 0.5 * slope);
      State hi = model.from_primitive(w + 0.5 * slope);
      const State correction = half * (model.flux(lo) - model.flux(hi));
      lo += correction;
      hi += correction;
      return std::pair{lo, hi};
    };
    const int e = StepContext<State>::at(i);
    return rusanov_flux(model, faces(e - 1).second, faces(e).first);
  });
}

}  // namespace solverlab

#endif  // SOLVERLAB_COMPARISON_HPP_
