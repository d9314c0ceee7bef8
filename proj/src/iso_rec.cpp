#include "solverlab/iso_rec.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace solverlab {

IsoFamily detect_wave_iso(const IsoState& left, const IsoState& right) {
  // Velocity drops at round-off level are not waves.
  const double floor = 1e-12 * std::max(std::abs(left.u), std::abs(right.u));
  if (!(left.u - right.u > floor)) return IsoFamily::kNone;
  return left.rho < right.rho ? IsoFamily::kOneShock : IsoFamily::kTwoShock;
}

IsoCandidates candidates_iso(const IsoState& prev, const IsoState& mid,
                             const IsoState& next, double c) {
  IsoCandidates r;
  r.family = detect_wave_iso(prev, next);
  if (r.family == IsoFamily::kNone) {
    r.bar_L = r.bar_R = mid;
    return r;
  }
  const IsoStar star = iso_star(prev, next, c);
  const IsoState s{star.rho_star, star.u_star};
  if (r.family == IsoFamily::kOneShock) {
    r.bar_L = prev;
    r.bar_R = s;
    r.sigma = iso_shock_speed(1, prev, star.rho_star, c);
  } else {
    r.bar_L = s;
    r.bar_R = next;
    r.sigma = iso_shock_speed(2, next, star.rho_star, c);
  }
  return r;
}

namespace {

std::optional<double> mixture_distance(double left, double mid, double right, double dx) {
  const double denom = right - left;
  if (denom == 0.0) return std::nullopt;
  return dx * (right - mid) / denom;
}

// A distance within round-off of an edge marks a pure cell.
bool inside(std::optional<double> d, double dx) {
  const double tol = 1e-12 * dx;
  return d && *d > tol && *d < dx - tol;
}

}  // namespace

IsoDistances distances_iso(const IsoState& bar_L, const IsoState& mid,
                           const IsoState& bar_R, double dx) {
  return {mixture_distance(bar_L.rho, mid.rho, bar_R.rho, dx),
          mixture_distance(bar_L.q(), mid.q(), bar_R.q(), dx)};
}

bool accept_iso(IsoVariant variant, std::optional<double> d_rho,
                std::optional<double> d_q, double dx) {
  if (!inside(d_rho, dx)) return false;
  return variant == IsoVariant::kHalf || inside(d_q, dx);
}

IsoRecDecision reconstruct_iso(const IsoState& prev, const IsoState& mid,
                               const IsoState& next, double dx, double c,
                               IsoVariant variant) {
  IsoRecDecision r;
  r.variant = variant;
  IsoCandidates cand;
  try {
    cand = candidates_iso(prev, mid, next, c);
  } catch (const RiemannError&) {
    r.bar_L = r.bar_R = mid;
    return r;
  }
  r.family = cand.family;
  r.bar_L = cand.bar_L;
  r.bar_R = cand.bar_R;
  r.sigma = cand.sigma;
  if (cand.family == IsoFamily::kNone) return r;
  const auto d = distances_iso(cand.bar_L, mid, cand.bar_R, dx);
  r.d_rho = d.d_rho;
  r.d_q = d.d_q;
  r.accepted = accept_iso(variant, d.d_rho, d.d_q, dx);
  return r;
}

StateVec<2> iso_interface_flux(const IsoRecDecision& decision, double v_mesh,
                               double dt, double dx, double c) {
  const Isothermal model{c};
  const auto bar_L = decision.bar_L.conserved();
  const auto bar_R = decision.bar_R.conserved();
  if (!decision.accepted) return moving_flux(bar_L, model.flux(bar_L), v_mesh);
  const double d_rho = *decision.d_rho;
  const double d_q = decision.d_q ? *decision.d_q : d_rho;
  const std::array<double, 2> d{d_rho, d_q};
  return reconstructed_flux(model, bar_L, bar_R, decision.sigma,
                            std::span<const double>(d), v_mesh, dt, dx);
}

IsoField iso_step(const IsoField& field, double dt, double dx, double v_mesh, double c,
                  IsoVariant variant, const BoundaryCondition<StateVec<2>>& bc,
                  const RecOptions& options) {
  const Isothermal model{c};
  const int n = static_cast<int>(field.size());
  if (options.accepted_cells) options.accepted_cells->clear();
  auto donor = [&](const StepContext<StateVec<2>>& ctx, int k) {
    if (!options.disable_reconstruction) {
      const int e = StepContext<StateVec<2>>::at(k);
      const auto rec = reconstruct_iso(IsoState::from_conserved(ctx.ext[e - 1]),
                                       IsoState::from_conserved(ctx.ext[e]),
                                       IsoState::from_conserved(ctx.ext[e + 1]), dx, c,
                                       variant);
      if (rec.accepted) {
        if (options.accepted_cells && k >= 0 && k < n) options.accepted_cells->push_back(k);
        return iso_interface_flux(rec, v_mesh, dt, dx, c);
      }
    }
    return options.coupling == Coupling::kNT ? nt_donor_flux(model, ctx, k)
                                             : lxf_donor_flux(ctx, k);
  };
  return staggered_update(model, field, bc, dt, dx, v_mesh, donor);
}

}  // namespace solverlab
