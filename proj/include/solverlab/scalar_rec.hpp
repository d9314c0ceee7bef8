#ifndef SOLVERLAB_SCALAR_REC_HPP_
#define SOLVERLAB_SCALAR_REC_HPP_

#include <vector>

#include "solverlab/grid.hpp"
#include "solverlab/models.hpp"
#include "solverlab/staggered.hpp"

namespace solverlab {

using ScalarField = Field<double>;

/// In-cell shock replacing a cell average: u_L on [0, d), u_R on (d, dx).
struct ScalarRecDecision {
  bool accepted = false;
  double d = 0.0;
  double u_L = 0.0;
  double u_R = 0.0;
  double sigma = 0.0;
};

ScalarRecDecision reconstruct_scalar(double u_prev, double u_mid, double u_next,
                                     double dx, const ConvexFlux& flux);

/// Time-averaged moving-frame flux at the interface the mesh sweeps.
double scalar_interface_flux(const ScalarRecDecision& decision, double v_mesh,
                             double dt, double dx, const ConvexFlux& flux);

struct RecOptions {
  Coupling coupling = Coupling::kLxF;
  /// Forces every cell onto the coupling flux.
  bool disable_reconstruction = false;
  /// When set, receives the indices of donor cells whose reconstruction was used.
  std::vector<int>* accepted_cells = nullptr;
};

ScalarField scalar_step(const ScalarField& field, double dt, double dx, double v_mesh,
                        const ConvexFlux& flux, const BoundaryCondition<double>& bc,
                        const RecOptions& options = {});

/// Exact Riemann flux at x/t = 0 for a convex flux.
double godunov_scalar_flux(double u_left, double u_right, const ConvexFlux& flux);

/// Exact solution of Burgers' equation from the compression datum
/// 3 (x <= -3), linear ramp, 1 (x >= -1).
double exact_compression(double t, double x);

}  // namespace solverlab

#endif  // SOLVERLAB_SCALAR_REC_HPP_
