#ifndef SOLVERLAB_FULL_REC_HPP_
#define SOLVERLAB_FULL_REC_HPP_

#include <optional>

#include "solverlab/grid.hpp"
#include "solverlab/models.hpp"
#include "solverlab/riemann.hpp"
#include "solverlab/scalar_rec.hpp"
#include "solverlab/staggered.hpp"

namespace solverlab {

using GasField = Field<StateVec<3>>;

enum class GasFamily { kNone, kOneShock, kThreeShock, kContact };
enum class Selection { kOneShot, kTwoShot };

struct GasCandidates {
  GasFamily family = GasFamily::kNone;
  GasState bar_L;
  GasState bar_R;
  double sigma = 0.0;
};

/// Picks the wave to reconstruct from the Riemann problem between the two
/// neighbours. A shock must dominate the other two density jumps by the
/// factor c_cfl; failing that, a contact is tried with the same test.
GasCandidates select_wave_full(const GasState& prev, const GasState& next, double c_cfl,
                               double gamma);

struct GasDistances {
  std::optional<double> d_rho;
  std::optional<double> d_q;
  std::optional<double> d_E;
};

GasDistances distances_full(const GasState& bar_L, const StateVec<3>& mid,
                            const GasState& bar_R, double dx, double gamma);

struct GasRecDecision {
  GasFamily family = GasFamily::kNone;
  GasState bar_L;
  GasState bar_R;
  double sigma = 0.0;
  std::optional<double> d_rho;
  std::optional<double> d_q;
  std::optional<double> d_E;
  bool accepted = false;
};

/// Range, monotonicity and positivity tests. With require_momentum set the
/// momentum distance must also lie in (0, dx).
bool accept_full(const StateVec<3>& prev, const StateVec<3>& mid, const StateVec<3>& next,
                 const GasRecDecision& decision, double dx, double gamma,
                 bool require_momentum = false);

/// Both distances that carry the acceptance range test lie in (0, dx).
bool distances_in_range(const GasRecDecision& decision, double dx);

struct FullRecOptions {
  double gamma = 1.4;
  double c_cfl = 0.45;
  Selection selection = Selection::kOneShot;
  bool require_momentum = false;
  Coupling coupling = Coupling::kLxF;
  bool disable_reconstruction = false;
  std::vector<int>* accepted_cells = nullptr;
};

GasRecDecision reconstruct_full(const StateVec<3>& prev, const StateVec<3>& mid,
                                const StateVec<3>& next, double dx,
                                const FullRecOptions& options);

StateVec<3> full_interface_flux(const GasRecDecision& decision, double v_mesh, double dt,
                                double dx, double gamma);

GasField full_step(const GasField& field, double dt, double dx, double v_mesh,
                   const BoundaryCondition<StateVec<3>>& bc, const FullRecOptions& options);

}  // namespace solverlab

#endif  // SOLVERLAB_FULL_REC_HPP_
