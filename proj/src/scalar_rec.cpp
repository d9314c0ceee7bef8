#include "solverlab/scalar_rec.hpp"

#include <algorithm>
#include <array>

namespace solverlab {

ScalarRecDecision reconstruct_scalar(double u_prev, double u_mid, double u_next,
                                     double dx, const ConvexFlux& flux) {
  ScalarRecDecision r;
  r.u_L = r.u_R = u_mid;
  r.sigma = flux.f_prime(u_mid);
  const double denom = u_next - u_prev;
  if (denom == 0.0 || !(u_prev > u_next)) return r;
  const double d = dx * (u_next - u_mid) / denom;
  if (!(d > 0.0 && d < dx)) return r;
  r.accepted = true;
  r.d = d;
  r.u_L = u_prev;
  r.u_R = u_next;
  r.sigma = (flux.f(u_prev) - flux.f(u_next)) / (u_prev - u_next);
  return r;
}

double scalar_interface_flux(const ScalarRecDecision& decision, double v_mesh,
                             double dt, double dx, const ConvexFlux& flux) {
  const ScalarLaw law{flux};
  if (!decision.accepted) {
    return moving_flux(decision.u_L, flux.f(decision.u_L), v_mesh);
  }
  const std::array<double, 1> d{decision.d};
  return reconstructed_flux(law, decision.u_L, decision.u_R, decision.sigma,
                            std::span<const double>(d), v_mesh, dt, dx);
}

ScalarField scalar_step(const ScalarField& field, double dt, double dx, double v_mesh,
                        const ConvexFlux& flux, const BoundaryCondition<double>& bc,
                        const RecOptions& options) {
  const ScalarLaw law{flux};
  const int n = static_cast<int>(field.size());
  if (options.accepted_cells) options.accepted_cells->clear();
  auto donor = [&](const StepContext<double>& ctx, int k) {
    if (!options.disable_reconstruction) {
      const int e = StepContext<double>::at(k);
      const auto rec = reconstruct_scalar(ctx.ext[e - 1], ctx.ext[e], ctx.ext[e + 1], dx, flux);
      if (rec.accepted) {
        if (options.accepted_cells && k >= 0 && k < n) options.accepted_cells->push_back(k);
        return scalar_interface_flux(rec, v_mesh, dt, dx, flux);
      }
    }
    return options.coupling == Coupling::kNT ? nt_donor_flux(law, ctx, k)
                                             : lxf_donor_flux(ctx, k);
  };
  return staggered_update(law, field, bc, dt, dx, v_mesh, donor);
}

double godunov_scalar_flux(double u_left, double u_right, const ConvexFlux& flux) {
  if (u_left <= u_right) return flux.f(std::clamp(flux.sonic, u_left, u_right));
  return std::max(flux.f(u_left), flux.f(u_right));
}

double exact_compression(double t, double x) {
  if (t < 1.0) {
    const double foot = -3.0 + 3.0 * t;
    if (x <= foot) return 3.0;
    if (x >= -1.0 + t) return 1.0;
    return 3.0 - (x - foot) / (1.0 - t);
  }
  return x <= 2.0 * (t - 1.0) ? 3.0 : 1.0;
}

}  // namespace solverlab
