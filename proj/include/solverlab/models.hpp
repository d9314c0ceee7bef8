#ifndef SOLVERLAB_MODELS_HPP_
#define SOLVERLAB_MODELS_HPP_

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "solverlab/state.hpp"

namespace solverlab {

/// C^1 convex flux for a scalar law. `sonic` is the minimiser of f
/// (-inf for increasing fluxes, +inf for decreasing ones).
struct ConvexFlux {
  std::function<double(double)> f;
  std::function<double(double)> f_prime;
  double sonic = 0.0;
};

inline double burgers_flux(double u) { return 0.5 * u * u; }

ConvexFlux burgers();
ConvexFlux linear_advection(double a);

/// Raised when a step produces a non-admissible state (rho <= 0 or e <= 0).
class PositivityError : public std::runtime_error {
 public:
  PositivityError(const std::string& what, int cell)
      : std::runtime_error(what), cell_(cell) {}
  int cell() const { return cell_; }

 private:
  int cell_;
};

/// Scalar conservation law u_t + f(u)_x = 0.
struct ScalarLaw {
  using State = double;
  static constexpr std::size_t kVars = 1;
  ConvexFlux law;

  double flux(double u) const { return law.f(u); }
  std::pair<double, double> speed_bounds(double u) const {
    const double a = law.f_prime(u);
    return {a, a};
  }
  double max_speed(double u) const { return std::abs(law.f_prime(u)); }
  double reflect(double u) const { return -u; }
  double to_primitive(double u) const { return u; }
  double from_primitive(double w) const { return w; }
  bool admissible(double u) const { return std::isfinite(u); }
  /// S(u) = u^2/2.
  double entropy(double u) const { return 0.5 * u * u; }
};

/// Isothermal Euler, p = c^2 rho. State (rho, q).
struct Isothermal {
  using State = StateVec<2>;
  static constexpr std::size_t kVars = 2;
  double c = 1.0;

  State flux(const State& s) const {
    const double u = s[kMom] / s[kRho];
    return {{s[kMom], s[kMom] * u + c * c * s[kRho]}};
  }
  std::pair<double, double> speed_bounds(const State& s) const {
    const double u = s[kMom] / s[kRho];
    return {u - c, u + c};
  }
  double max_speed(const State& s) const { return std::abs(s[kMom] / s[kRho]) + c; }
  State reflect(State s) const {
    s[kMom] = -s[kMom];
    return s;
  }
  /// (rho, u)
  State to_primitive(const State& s) const { return {{s[kRho], s[kMom] / s[kRho]}}; }
  State from_primitive(const State& w) const { return {{w[0], w[0] * w[1]}}; }
  bool admissible(const State& s) const {
    return s[kRho] > 0.0 && std::isfinite(s[kRho]) && std::isfinite(s[kMom]);
  }
  /// Mathematical entropy rho u^2/2 + c^2 rho log(rho).
  double entropy(const State& s) const {
    return 0.5 * s[kMom] * s[kMom] / s[kRho] + c * c * s[kRho] * std::log(s[kRho]);
  }
};

/// Ideal-gas Euler, p = (gamma - 1) rho e. State (rho, q, E).
struct IdealGas {
  using State = StateVec<3>;
  static constexpr std::size_t kVars = 3;
  double gamma = 1.4;

  double pressure(const State& s) const {
    return (gamma - 1.0) * (s[kEnergy] - 0.5 * s[kMom] * s[kMom] / s[kRho]);
  }
  double internal_energy(const State& s) const {
    return s[kEnergy] / s[kRho] - 0.5 * (s[kMom] * s[kMom]) / (s[kRho] * s[kRho]);
  }
  double sound_speed(const State& s) const {
    return std::sqrt(gamma * pressure(s) / s[kRho]);
  }
  State flux(const State& s) const {
    const double u = s[kMom] / s[kRho];
    const double p = pressure(s);
    return {{s[kMom], s[kMom] * u + p, u * (s[kEnergy] + p)}};
  }
  std::pair<double, double> speed_bounds(const State& s) const {
    const double u = s[kMom] / s[kRho];
    const double a = sound_speed(s);
    return {u - a, u + a};
  }
  double max_speed(const State& s) const {
    return std::abs(s[kMom] / s[kRho]) + sound_speed(s);
  }
  State reflect(State s) const {
    s[kMom] = -s[kMom];
    return s;
  }
  /// (rho, u, p)
  State to_primitive(const State& s) const {
    return {{s[kRho], s[kMom] / s[kRho], pressure(s)}};
  }
  State from_primitive(const State& w) const {
    return {{w[0], w[0] * w[1], w[2] / (gamma - 1.0) + 0.5 * w[0] * w[1] * w[1]}};
  }
  bool admissible(const State& s) const {
    return s[kRho] > 0.0 && std::isfinite(s[kEnergy]) && std::isfinite(s[kMom]) &&
           internal_energy(s) > 0.0;
  }
  /// -rho s / (gamma - 1) with s = log(p / rho^gamma).
  double entropy(const State& s) const {
    const double p = pressure(s);
    return -s[kRho] * (std::log(p) - gamma * std::log(s[kRho])) / (gamma - 1.0);
  }
};

/// Largest |eigenvalue| over a field.
template <class Model>
double max_wave_speed(const Model& model, const Field<typename Model::State>& u) {
  double v = 0.0;
  for (const auto& s : u) v = std::max(v, model.max_speed(s));
  return v;
}

/// Smallest and largest eigenvalue over a field.
template <class Model>
std::pair<double, double> wave_speed_range(const Model& model,
                                           const Field<typename Model::State>& u) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& s : u) {
    const auto [a, b] = model.speed_bounds(s);
    lo = std::min(lo, a);
    hi = std::max(hi, b);
  }
  return {lo, hi};
}

template <class Model>
void require_admissible(const Model& model, const Field<typename Model::State>& u) {
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (!model.admissible(u[j]))
      throw PositivityError("non-admissible state in cell " + std::to_string(j),
                            static_cast<int>(j));
  }
}

}  // namespace solverlab

#endif  // SOLVERLAB_MODELS_HPP_
