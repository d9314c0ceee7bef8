#ifndef SOLVERLAB_RIEMANN_HPP_
#define SOLVERLAB_RIEMANN_HPP_

#include <stdexcept>
#include <string>

#include "solverlab/state.hpp"

namespace solverlab {

class RiemannError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The left and right states would be separated by vacuum.
class VacuumError : public RiemannError {
 public:
  using RiemannError::RiemannError;
};

// ---------------------------------------------------------------------------
// Isothermal gas, p = c^2 rho.

struct IsoState {
  double rho = 1.0;
  double u = 0.0;

  double q() const { return rho * u; }
  StateVec<2> conserved() const { return {{rho, rho * u}}; }
  static IsoState from_conserved(const StateVec<2>& s) { return {s[kRho], s[kMom] / s[kRho]}; }
};

struct IsoStar {
  double rho_star = 1.0;
  double u_star = 0.0;
  bool left_shock = false;   // 1-wave is a shock
  bool right_shock = false;  // 2-wave is a shock
};

/// Velocity change across the family-`family` wave curve from `ref` to a
/// state of density rho: u = ref.u - curve (family 1), ref.u + curve (family 2).
double iso_wave_curve(double rho, double rho_ref, double c);

/// Intermediate state of the isothermal Riemann problem. Safeguarded Newton
/// on log(rho); |residual| <= 1e-12.
IsoStar iso_star(const IsoState& left, const IsoState& right, double c);

/// Speed of a shock from `ahead` (the upstream state) to density rho_star.
/// family 1: ahead is the left state; family 2: ahead is the right state.
double iso_shock_speed(int family, const IsoState& ahead, double rho_star, double c);

/// Self-similar solution value at x/t = xi.
IsoState sample_iso(const IsoState& left, const IsoState& right, const IsoStar& star,
                    double c, double xi);

// ---------------------------------------------------------------------------
// Ideal gas, p = (gamma - 1) rho e.

struct GasState {
  double rho = 1.0;
  double u = 0.0;
  double p = 1.0;

  double sound_speed(double gamma) const;
  StateVec<3> conserved(double gamma) const;
  static GasState from_conserved(const StateVec<3>& s, double gamma);
};

struct GasStar {
  double p_star = 1.0;
  double u_star = 0.0;
  double rho_star_L = 1.0;
  double rho_star_R = 1.0;
  bool left_shock = false;
  bool right_shock = false;

  GasState left_state() const { return {rho_star_L, u_star, p_star}; }
  GasState right_state() const { return {rho_star_R, u_star, p_star}; }
};

inline constexpr double kPressureFloor = 1e-12;
inline constexpr double kDensityFloor = 1e-12;

/// Exact star state. Newton on the pressure function from the two-rarefaction
/// guess, bisection fallback inside a sign bracket.
GasStar gas_star(const GasState& left, const GasState& right, double gamma);

/// |f_L(p*) + f_R(p*) + u_R - u_L| scaled by c_L + c_R + |u_R - u_L|.
double gas_star_residual(const GasState& left, const GasState& right,
                         const GasStar& star, double gamma);

/// Shock speeds of the left (1-) and right (3-) shocks; valid when the
/// corresponding *_shock flag is set.
double gas_left_shock_speed(const GasState& left, double p_star, double gamma);
double gas_right_shock_speed(const GasState& right, double p_star, double gamma);

GasState sample_gas(const GasState& left, const GasState& right, const GasStar& star,
                    double gamma, double xi);

// ---------------------------------------------------------------------------

struct RhResidual {
  double mass = 0.0;
  double momentum = 0.0;
  double energy = 0.0;

  double max() const;
};

/// |sigma [U] - [F(U)]| per conservation law.
RhResidual rh_residual(const IsoState& upstream, const IsoState& downstream,
                       double sigma, double c);
RhResidual rh_residual(const GasState& upstream, const GasState& downstream,
                       double sigma, double gamma);

}  // namespace solverlab

#endif  // SOLVERLAB_RIEMANN_HPP_
