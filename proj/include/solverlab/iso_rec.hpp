#ifndef SOLVERLAB_ISO_REC_HPP_
#define SOLVERLAB_ISO_REC_HPP_

#include <optional>

#include "solverlab/grid.hpp"
#include "solverlab/models.hpp"
#include "solverlab/riemann.hpp"
#include "solverlab/scalar_rec.hpp"
#include "solverlab/staggered.hpp"

namespace solverlab {

using IsoField = Field<StateVec<2>>;

enum class IsoFamily { kNone, kOneShock, kTwoShock };
enum class IsoVariant { kHalf, kFull };

/// Which shock the Riemann problem (left, right) is guaranteed to contain.
/// A density tie with converging velocities counts as a 2-shock.
IsoFamily detect_wave_iso(const IsoState& left, const IsoState& right);

struct IsoCandidates {
  IsoFamily family = IsoFamily::kNone;
  IsoState bar_L;
  IsoState bar_R;
  double sigma = 0.0;
};

/// Candidate reconstructed states from the cell's neighbours. With no shock
/// detected both states are `mid` and sigma is 0.
IsoCandidates candidates_iso(const IsoState& prev, const IsoState& mid,
                             const IsoState& next, double c);

struct IsoDistances {
  std::optional<double> d_rho;  // empty when the density jump vanishes
  std::optional<double> d_q;    // empty when the momentum jump vanishes
};

IsoDistances distances_iso(const IsoState& bar_L, const IsoState& mid,
                           const IsoState& bar_R, double dx);

bool accept_iso(IsoVariant variant, std::optional<double> d_rho,
                std::optional<double> d_q, double dx);

struct IsoRecDecision {
  IsoFamily family = IsoFamily::kNone;
  IsoState bar_L;
  IsoState bar_R;
  double sigma = 0.0;
  std::optional<double> d_rho;
  std::optional<double> d_q;
  bool accepted = false;
  IsoVariant variant = IsoVariant::kHalf;
};

IsoRecDecision reconstruct_iso(const IsoState& prev, const IsoState& mid,
                               const IsoState& next, double dx, double c,
                               IsoVariant variant);

/// Two-component flux at the swept interface. The momentum crossing uses d_q
/// as computed, even outside (0, dx), or d_rho when d_q is undefined.
StateVec<2> iso_interface_flux(const IsoRecDecision& decision, double v_mesh,
                               double dt, double dx, double c);

IsoField iso_step(const IsoField& field, double dt, double dx, double v_mesh, double c,
                  IsoVariant variant, const BoundaryCondition<StateVec<2>>& bc,
                  const RecOptions& options = {});

}  // namespace solverlab

#endif  // SOLVERLAB_ISO_REC_HPP_
