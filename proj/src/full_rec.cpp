#include "solverlab/full_rec.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace solverlab {

namespace {

double rh_speed(const GasState& l, const GasState& r) {
  const double drho = r.rho - l.rho;
  if (drho == 0.0) return l.u;
  return (r.rho * r.u - l.rho * l.u) / drho;
}

GasCandidates shock_candidate(GasFamily family, const GasState& prev, const GasState& next,
                              const GasStar& star) {
  GasCandidates r;
  r.family = family;
  if (family == GasFamily::kOneShock) {
    r.bar_L = prev;
    r.bar_R = star.left_state();
  } else {
    r.bar_L = star.right_state();
    r.bar_R = next;
  }
  r.sigma = rh_speed(r.bar_L, r.bar_R);
  return r;
}

GasCandidates contact_candidate(const GasStar& star) {
  GasCandidates r;
  r.family = GasFamily::kContact;
  r.bar_L = star.left_state();
  r.bar_R = star.right_state();
  r.sigma = star.u_star;
  return r;
}

bool one_shock_ordering(const GasState& prev, const GasState& next) {
  return prev.u >= next.u && prev.rho <= next.rho && prev.p <= next.p;
}

bool three_shock_ordering(const GasState& prev, const GasState& next) {
  return prev.u >= next.u && prev.rho >= next.rho && prev.p >= next.p;
}

std::optional<double> mixture_distance(double left, double mid, double right, double dx) {
  const double denom = right - left;
  if (denom == 0.0) return std::nullopt;
  return dx * (right - mid) / denom;
}

bool inside(std::optional<double> d, double dx) { return d && *d > 0.0 && *d < dx; }

// Monotone up to round-off relative to the largest magnitude.
bool monotone(double a, double b, double c) {
  const double tol = 1e-12 * std::max({std::abs(a), std::abs(b), std::abs(c)});
  return (a <= b + tol && b <= c + tol) || (a + tol >= b && b + tol >= c);
}

GasRecDecision to_decision(const GasCandidates& cand, const StateVec<3>& mid, double dx,
                           double gamma) {
  GasRecDecision r;
  r.family = cand.family;
  r.bar_L = cand.bar_L;
  r.bar_R = cand.bar_R;
  r.sigma = cand.sigma;
  if (cand.family == GasFamily::kNone) return r;
  const auto d = distances_full(cand.bar_L, mid, cand.bar_R, dx, gamma);
  r.d_rho = d.d_rho;
  r.d_q = d.d_q;
  r.d_E = d.d_E;
  return r;
}

}  // namespace

GasCandidates select_wave_full(const GasState& prev, const GasState& next, double c_cfl,
                               double gamma) {
  const GasStar star = gas_star(prev, next, gamma);
  const double jump_1 = std::abs(prev.rho - star.rho_star_L);
  const double jump_2 = std::abs(star.rho_star_L - star.rho_star_R);
  const double jump_3 = std::abs(star.rho_star_R - next.rho);
  // Jumps at round-off level are not waves.
  const double floor = 1e-12 * std::max({prev.rho, next.rho, star.rho_star_L, star.rho_star_R});
  auto dominant = [&](double j, double a, double b) {
    return j > floor && j > c_cfl * std::max(a, b);
  };
  if (one_shock_ordering(prev, next) && dominant(jump_1, jump_2, jump_3))
    return shock_candidate(GasFamily::kOneShock, prev, next, star);
  if (three_shock_ordering(prev, next) && dominant(jump_3, jump_2, jump_1))
    return shock_candidate(GasFamily::kThreeShock, prev, next, star);
  if (dominant(jump_2, jump_1, jump_3)) return contact_candidate(star);
  GasCandidates none;
  none.bar_L = prev;
  none.bar_R = next;
  return none;
}

GasDistances distances_full(const GasState& bar_L, const StateVec<3>& mid,
                            const GasState& bar_R, double dx, double gamma) {
  const auto l = bar_L.conserved(gamma);
  const auto r = bar_R.conserved(gamma);
  return {mixture_distance(l[kRho], mid[kRho], r[kRho], dx),
          mixture_distance(l[kMom], mid[kMom], r[kMom], dx),
          mixture_distance(l[kEnergy], mid[kEnergy], r[kEnergy], dx)};
}

bool distances_in_range(const GasRecDecision& decision, double dx) {
  return inside(decision.d_rho, dx) && inside(decision.d_E, dx);
}

bool accept_full(const StateVec<3>& prev, const StateVec<3>& mid, const StateVec<3>& next,
                 const GasRecDecision& decision, double dx, double gamma,
                 bool require_momentum) {
  if (decision.family == GasFamily::kNone) return false;
  if (!distances_in_range(decision, dx)) return false;
  if (require_momentum && !inside(decision.d_q, dx)) return false;

  if (!monotone(prev[kRho], mid[kRho], next[kRho])) return false;
  const double b = inside(decision.d_q, dx) ? *decision.d_q : *decision.d_rho;
  const double u_rec = (b * decision.bar_L.u + (dx - b) * decision.bar_R.u) / dx;
  if (!monotone(prev[kMom] / prev[kRho], u_rec, next[kMom] / next[kRho])) return false;

  // Each conserved component switches from bar_L to bar_R at its own distance.
  const auto l = decision.bar_L.conserved(gamma);
  const auto r = decision.bar_R.conserved(gamma);
  std::array<double, 3> cut{};
  const std::array<std::optional<double>, 3> d{decision.d_rho, decision.d_q, decision.d_E};
  for (std::size_t c = 0; c < 3; ++c)
    cut[c] = d[c] ? std::clamp(*d[c], 0.0, dx) : *decision.d_rho;
  std::vector<double> edges{0.0, dx};
  for (double x : cut)
    if (x > 0.0 && x < dx) edges.push_back(x);
  std::sort(edges.begin(), edges.end());
  for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
    if (!(edges[k + 1] > edges[k])) continue;
    const double x = 0.5 * (edges[k] + edges[k + 1]);
    StateVec<3> s;
    for (std::size_t c = 0; c < 3; ++c) s[c] = x < cut[c] ? l[c] : r[c];
    if (!(s[kRho] > 0.0)) return false;
    const double e = s[kEnergy] / s[kRho] - 0.5 * s[kMom] * s[kMom] / (s[kRho] * s[kRho]);
    if (!(e > 0.0)) return false;
  }
  return true;
}

GasRecDecision reconstruct_full(const StateVec<3>& prev, const StateVec<3>& mid,
                                const StateVec<3>& next, double dx,
                                const FullRecOptions& options) {
  const double gamma = options.gamma;
  const GasState p = GasState::from_conserved(prev, gamma);
  const GasState nx = GasState::from_conserved(next, gamma);
  GasRecDecision r;
  try {
    if (options.selection == Selection::kOneShot) {
      r = to_decision(select_wave_full(p, nx, options.c_cfl, gamma), mid, dx, gamma);
    } else {
      const GasStar star = gas_star(p, nx, gamma);
      r = to_decision(contact_candidate(star), mid, dx, gamma);
      if (!distances_in_range(r, dx)) {
        GasFamily family = GasFamily::kNone;
        if (p.u > nx.u && p.rho < nx.rho && p.p <= nx.p) family = GasFamily::kOneShock;
        else if (p.u > nx.u && p.rho >= nx.rho && p.p >= nx.p) family = GasFamily::kThreeShock;
        if (family == GasFamily::kNone) return GasRecDecision{};
        r = to_decision(shock_candidate(family, p, nx, star), mid, dx, gamma);
      }
    }
  } catch (const RiemannError&) {
    return GasRecDecision{};
  }
  r.accepted = accept_full(prev, mid, next, r, dx, gamma, options.require_momentum);
  return r;
}

StateVec<3> full_interface_flux(const GasRecDecision& decision, double v_mesh, double dt,
                                double dx, double gamma) {
  const IdealGas model{gamma};
  const auto bar_L = decision.bar_L.conserved(gamma);
  const auto bar_R = decision.bar_R.conserved(gamma);
  if (!decision.accepted) return moving_flux(bar_L, model.flux(bar_L), v_mesh);
  const double d_rho = *decision.d_rho;
  const double d_q = decision.d_q ? *decision.d_q : d_rho;
  const double d_E = *decision.d_E;
  const std::array<double, 3> d{d_rho, d_q, d_E};
  return reconstructed_flux(model, bar_L, bar_R, decision.sigma, std::span<const double>(d),
                            v_mesh, dt, dx);
}

GasField full_step(const GasField& field, double dt, double dx, double v_mesh,
                   const BoundaryCondition<StateVec<3>>& bc, const FullRecOptions& options) {
  const IdealGas model{options.gamma};
  const int n = static_cast<int>(field.size());
  if (options.accepted_cells) options.accepted_cells->clear();
  auto donor = [&](const StepContext<StateVec<3>>& ctx, int k) {
    if (!options.disable_reconstruction) {
      const int e = StepContext<StateVec<3>>::at(k);
      const auto rec = reconstruct_full(ctx.ext[e - 1], ctx.ext[e], ctx.ext[e + 1], dx, options);
      if (rec.accepted) {
        if (options.accepted_cells && k >= 0 && k < n) options.accepted_cells->push_back(k);
        return full_interface_flux(rec, v_mesh, dt, dx, options.gamma);
      }
    }
    return options.coupling == Coupling::kNT ? nt_donor_flux(model, ctx, k)
                                             : lxf_donor_flux(ctx, k);
  };
  return staggered_update(model, field, bc, dt, dx, v_mesh, donor);
}

}  // namespace solverlab
