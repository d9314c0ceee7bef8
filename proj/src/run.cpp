#include <chrono>
#include <cmath>
#include <limits>

#include "solverlab/harness.hpp"
#include "solverlab/iso_rec.hpp"
#include "solverlab/models.hpp"
#include "solverlab/scalar_rec.hpp"
#include "solverlab/typed_cells.hpp"

namespace solverlab {

namespace {

struct RecKnobs {
  bool full = false;
  Coupling coupling = Coupling::kLxF;
  bool disable = false;
  double c_cfl = 0.4;
  Selection selection = Selection::kOneShot;
};

Field<double> rec_step(const ScalarLaw& m, const Field<double>& u, double dt, double dx,
                       double v, const BoundaryCondition<double>& bc, const RecKnobs& k,
                       std::vector<int>* accepted) {
  return scalar_step(u, dt, dx, v, m.law, bc, {k.coupling, k.disable, accepted});
}

Field<StateVec<2>> rec_step(const Isothermal& m, const Field<StateVec<2>>& u, double dt,
                            double dx, double v, const BoundaryCondition<StateVec<2>>& bc,
                            const RecKnobs& k, std::vector<int>* accepted) {
  return iso_step(u, dt, dx, v, m.c, k.full ? IsoVariant::kFull : IsoVariant::kHalf, bc,
                  {k.coupling, k.disable, accepted});
}

Field<StateVec<3>> rec_step(const IdealGas& m, const Field<StateVec<3>>& u, double dt,
                            double dx, double v, const BoundaryCondition<StateVec<3>>& bc,
                            const RecKnobs& k, std::vector<int>* accepted) {
  FullRecOptions o;
  o.gamma = m.gamma;
  o.c_cfl = k.c_cfl;
  o.selection = k.selection;
  o.require_momentum = k.full;
  o.coupling = k.coupling;
  o.disable_reconstruction = k.disable;
  o.accepted_cells = accepted;
  return full_step(u, dt, dx, v, bc, o);
}

template <class Model>
struct Extremes {
  double min_rho = 0.0;
  double min_e = 0.0;
};

template <class Model>
Extremes<Model> extremes(const Model& model, const Field<typename Model::State>& u) {
  Extremes<Model> r;
  r.min_rho = std::numeric_limits<double>::infinity();
  for (const auto& s : u) r.min_rho = std::min(r.min_rho, Components<typename Model::State>::get(s, 0));
  if constexpr (std::is_same_v<Model, IdealGas>) {
    r.min_e = std::numeric_limits<double>::infinity();
    for (const auto& s : u) r.min_e = std::min(r.min_e, model.internal_energy(s));
  }
  return r;
}

template <class Model>
RunResult drive(const Model& model, const CaseSpec& spec, SchemeId scheme, int cells,
                double cfl, const RunOverrides& ov) {
  using State = typename Model::State;
  RunResult res;
  res.spec = spec;
  res.scheme = scheme;
  res.grid = GridSpec::uniform(spec.x_min, spec.x_max, cells);
  const GridSpec& grid = res.grid;
  const double dx = grid.dx();
  if (!(cfl > 0.0 && cfl <= 1.0)) throw std::invalid_argument("cfl must lie in (0, 1]");

  Field<State> u = from_table<State>(initial_cells(spec, grid));
  BoundaryCondition<State> bc;
  bc.left = spec.left_bc;
  bc.right = spec.right_bc;
  bc.left_state = u.front();
  bc.right_state = u.back();
  if (spec.left_bc == BoundaryKind::kFixed || spec.right_bc == BoundaryKind::kFixed) {
    // Far-field states are the datum itself, not the edge cell averages.
    const GridSpec outside = GridSpec::uniform(spec.x_min - dx, spec.x_max + dx, cells + 2);
    const auto ext = from_table<State>(initial_cells(spec, outside));
    bc.left_state = ext.front();
    bc.right_state = ext.back();
  }
  auto reflect = [&](const State& s) { return model.reflect(s); };

  RecKnobs knobs;
  knobs.full = scheme == SchemeId::kRecFull || scheme == SchemeId::kRecFullNT;
  knobs.coupling = (scheme == SchemeId::kRecNT || scheme == SchemeId::kRecFullNT)
                       ? Coupling::kNT
                       : Coupling::kLxF;
  if (ov.coupling) knobs.coupling = *ov.coupling;
  knobs.disable = ov.disable_reconstruction;
  knobs.c_cfl = cfl;
  knobs.selection = ov.selection;

  std::vector<int> accepted;
  auto step = [&](const Field<State>& f, double dt, double v) -> Field<State> {
    accepted.clear();
    switch (scheme) {
      case SchemeId::kLxF: return lxf_step(f, dt, dx, v, model, bc);
      case SchemeId::kNT: return nt_step(f, dt, dx, v, model, bc);
      case SchemeId::kRusanov: return rusanov_step(f, dt, dx, model, bc);
      case SchemeId::kGodunov: return godunov_step(f, dt, dx, model, bc);
      case SchemeId::kMuscl: return muscl_step(f, dt, dx, model, bc);
      default: return rec_step(model, f, dt, dx, v, bc, knobs, &accepted);
    }
  };

  const bool staggered = is_staggered(scheme);
  const bool by_steps = ov.max_steps.has_value();
  const double t_end = spec.t_end;
  MeshMotion motion;
  double t = 0.0;
  long n_steps = 0;
  const auto start = std::chrono::steady_clock::now();

  try {
    while (by_steps ? n_steps < *ov.max_steps : t < t_end) {
      const double remaining =
          by_steps ? std::numeric_limits<double>::infinity() : t_end - t;
      const double v_waves = max_wave_speed(model, u);
      MeshStep plan;
      if (staggered) {
        const auto [lo, hi] = wave_speed_range(model, u);
        const bool stationary = spec.stationary_mesh && lo >= 0.0;
        plan = plan_mesh_step(motion, v_waves, cfl, dx, ov.safety, remaining, stationary);
      } else {
        plan.dt = v_waves > 0.0 ? std::min(cfl * dx / v_waves, remaining) : remaining;
      }
      if (!std::isfinite(plan.dt)) plan.dt = cfl * dx;

      u = step(u, plan.dt, plan.v_mesh);
      motion.advance(plan.v_mesh, plan.dt);
      t = (!by_steps && plan.dt >= remaining * (1.0 - 1e-12)) ? t_end : t + plan.dt;
      ++n_steps;

      StepRecord rec;
      rec.step = n_steps;
      rec.t = t;
      rec.dt = plan.dt;
      rec.v_mesh = plan.v_mesh;
      rec.net_offset = motion.net_offset;
      State total{};
      double entropy = 0.0;
      for (const auto& s : u) {
        total += s;
        entropy += model.entropy(s);
      }
      rec.totals = to_values(dx * total);
      rec.entropy = dx * entropy;
      const auto ex = extremes(model, u);
      rec.min_rho = ex.min_rho;
      rec.min_e = ex.min_e;
      rec.accepted = static_cast<int>(accepted.size());
      res.diagnostics.push_back(rec);
      if (ov.observer) ov.observer(rec, to_table(u));
    }
  } catch (const PositivityError& e) {
    res.aborted = true;
    res.abort_step = n_steps + 1;
    res.abort_message = e.what();
  } catch (const RiemannError& e) {
    res.aborted = true;
    res.abort_step = n_steps + 1;
    res.abort_message = e.what();
  }

  if (motion.net_offset != 0.0) {
    u = remap_to_reference(std::span<const State>(u), motion.net_offset, dx, bc, reflect);
  }
  res.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  res.t = t;
  res.steps = n_steps;
  res.cells = to_table(u);
  return res;
}

}  // namespace

CaseSpec resolve_case(const CaseSpec& spec, const RunOverrides& ov) {
  CaseSpec c = spec;
  if (ov.t_end) c.t_end = *ov.t_end;
  if (ov.gamma) c.gamma = *ov.gamma;
  if (ov.c_sound) c.c_sound = *ov.c_sound;
  if (!(c.t_end > 0.0)) throw std::invalid_argument("t_end must be positive");
  if (c.model == ModelKind::kGas && !(c.gamma > 1.0))
    throw std::invalid_argument("gamma must exceed 1");
  if (c.model == ModelKind::kIsothermal && !(c.c_sound > 0.0))
    throw std::invalid_argument("sound speed must be positive");
  return c;
}

RunResult run_case(const CaseSpec& base, SchemeId scheme, int cells, double cfl,
                   const RunOverrides& ov) {
  const CaseSpec spec = resolve_case(base, ov);
  if (ov.safety < 1.0) throw std::invalid_argument("mesh safety factor must be >= 1");
  RunResult res;
  switch (spec.model) {
    case ModelKind::kBurgers: res = drive(ScalarLaw{burgers()}, spec, scheme, cells, cfl, ov); break;
    case ModelKind::kIsothermal: res = drive(Isothermal{spec.c_sound}, spec, scheme, cells, cfl, ov); break;
    case ModelKind::kGas: res = drive(IdealGas{spec.gamma}, spec, scheme, cells, cfl, ov); break;
  }
  if (ov.compute_reference && spec.reference != ReferenceKind::kNone && !res.aborted) {
    if (spec.reference == ReferenceKind::kFineNT) {
      res.reference = reference_fine_grid(spec, res.grid, res.t, ov);
    } else {
      res.reference = exact_reference(spec, res.grid, res.t);
    }
    ErrorReport err;
    const int vars = model_vars(spec.model);
    err.l1 = l1_error(res.cells, *res.reference, res.grid.dx(), vars);
    const int var = vars == 1 ? 0 : 1;
    err.overshoot = overshoot_metric(column(res.cells, var), column(*res.reference, var));
    res.error = err;
  }
  return res;
}

}  // namespace solverlab
