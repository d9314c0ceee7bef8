#ifndef SOLVERLAB_GRID_HPP_
#define SOLVERLAB_GRID_HPP_

#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "solverlab/state.hpp"

namespace solverlab {

/// Uniform 1D grid on [x_min, x_max].
struct GridSpec {
  double x_min = 0.0;
  double x_max = 1.0;
  int n_cells = 1;

  static GridSpec uniform(double x_min, double x_max, int n_cells);

  double dx() const { return (x_max - x_min) / n_cells; }
  double center(int j) const { return x_min + (j + 0.5) * dx(); }
  /// x_{j-1/2}
  double left_edge(int j) const { return x_min + j * dx(); }
  /// x_{j+1/2}
  double right_edge(int j) const { return x_min + (j + 1) * dx(); }
  std::vector<double> centers() const;
};

/// Alternating moving-mesh bookkeeping. The grid is a fixed reference grid
/// shifted by net_offset; interfaces move at v_mesh during a step.
struct MeshMotion {
  double v_mesh = 0.0;
  int parity = 0;
  double net_offset = 0.0;

  void advance(double v, double dt);
};

struct SimClock {
  double t = 0.0;
  long step_index = 0;
  double dt = 0.0;
};

/// Signed mesh speed for a step: positive on even steps, negated on odd ones.
/// With `stationary` set the mesh does not move (callers only request it when
/// every wave speed is non-negative).
double mesh_speed_for_step(long step_index, double v_waves, double safety,
                           bool stationary = false);

/// Thrown when no wave moves and the mesh is static; the caller then uses the
/// remaining time to the final time as the step.
class StaticFieldError : public std::domain_error {
 public:
  StaticFieldError() : std::domain_error("static field: zero signal speed") {}
};

/// dt = cfl * dx / (|v_mesh| + v_waves).
double stable_dt(double v_mesh, double v_waves, double dx, double cfl);

struct MeshStep {
  double v_mesh = 0.0;
  double dt = 0.0;
};

/// Chooses (v_mesh, dt) for the next step. A step starting on the reference
/// grid moves it by +safety*v_waves; the following step moves it back so that
/// every pair of steps ends on the reference grid. A step that would overshoot
/// the final time is halved so the closing step still fits.
MeshStep plan_mesh_step(const MeshMotion& motion, double v_waves, double cfl,
                        double dx, double safety, double t_remaining,
                        bool stationary);

enum class BoundaryKind { kTransmissive, kPeriodic, kReflective, kFixed };

/// Per-side boundary treatment. kFixed ghosts hold the stored far-field state.
template <class State>
struct BoundaryCondition {
  BoundaryKind left = BoundaryKind::kTransmissive;
  BoundaryKind right = BoundaryKind::kTransmissive;
  State left_state{};
  State right_state{};

  static BoundaryCondition periodic() {
    return {BoundaryKind::kPeriodic, BoundaryKind::kPeriodic, {}, {}};
  }
  static BoundaryCondition transmissive() { return {}; }
};

/// Extends `cells` by `width` ghost cells on each side. `reflect` maps a
/// state to its wall mirror (negated momentum).
template <class State, class Reflect>
std::vector<State> fill_ghosts(std::span<const State> cells,
                               const BoundaryCondition<State>& bc, int width,
                               Reflect&& reflect) {
  const int n = static_cast<int>(cells.size());
  if (n == 0) throw std::invalid_argument("fill_ghosts: empty field");
  if ((bc.left == BoundaryKind::kPeriodic) != (bc.right == BoundaryKind::kPeriodic))
    throw std::invalid_argument("fill_ghosts: periodic must apply to both sides");
  if (bc.left == BoundaryKind::kPeriodic && n < width)
    throw std::invalid_argument("fill_ghosts: periodic grid narrower than ghosts");

  std::vector<State> ext(static_cast<std::size_t>(n + 2 * width));
  std::copy(cells.begin(), cells.end(), ext.begin() + width);
  for (int g = 1; g <= width; ++g) {
    State& lo = ext[width - g];
    State& hi = ext[width + n - 1 + g];
    switch (bc.left) {
      case BoundaryKind::kPeriodic: lo = cells[n - g]; break;
      case BoundaryKind::kTransmissive: lo = cells[0]; break;
      case BoundaryKind::kReflective: lo = reflect(cells[std::min(g - 1, n - 1)]); break;
      case BoundaryKind::kFixed: lo = bc.left_state; break;
    }
    switch (bc.right) {
      case BoundaryKind::kPeriodic: hi = cells[g - 1]; break;
      case BoundaryKind::kTransmissive: hi = cells[n - 1]; break;
      case BoundaryKind::kReflective: hi = reflect(cells[std::max(n - g, 0)]); break;
      case BoundaryKind::kFixed: hi = bc.right_state; break;
    }
  }
  return ext;
}

/// Conservatively redistributes a field living on the grid shifted by
/// `net_offset` onto the reference grid. Reference cell j receives the
/// overlap-weighted contributions of the two shifted cells covering it.
template <class State, class Reflect>
std::vector<State> remap_to_reference(std::span<const State> cells,
                                      double net_offset, double dx,
                                      const BoundaryCondition<State>& bc,
                                      Reflect&& reflect) {
  if (!(std::abs(net_offset) < dx))
    throw std::invalid_argument("remap_to_reference: |offset| must be < dx");
  std::vector<State> out(cells.begin(), cells.end());
  if (net_offset == 0.0) return out;
  const auto ext = fill_ghosts(cells, bc, 1, reflect);
  const double theta = std::abs(net_offset) / dx;
  const int n = static_cast<int>(cells.size());
  // Shifted cell j covers [x_{j-1/2} + offset, x_{j+1/2} + offset].
  const int neighbor = net_offset > 0.0 ? -1 : 1;
  for (int j = 0; j < n; ++j)
    out[j] = (1.0 - theta) * ext[j + 1] + theta * ext[j + 1 + neighbor];
  return out;
}

/// Piecewise-constant initial datum: values[k] holds on (breaks[k-1], breaks[k]).
template <class State>
struct PiecewiseConstant {
  std::vector<double> breaks;
  std::vector<State> values;
};

/// Pointwise initial datum, smooth between the listed breakpoints.
template <class State>
struct SmoothProfile {
  std::function<State(double)> f;
  std::vector<double> breaks;
};

template <class State>
using Profile = std::variant<PiecewiseConstant<State>, SmoothProfile<State>>;

namespace detail {

// 5-point Gauss-Legendre rule on [-1, 1].
inline constexpr std::array<double, 5> kGaussNodes = {
    -0.9061798459386639927976269, -0.5384693101056830910363144, 0.0,
    0.5384693101056830910363144, 0.9061798459386639927976269};
inline constexpr std::array<double, 5> kGaussWeights = {
    0.2369268850561890875142640, 0.4786286704993664680412915,
    0.5688888888888888888888889, 0.4786286704993664680412915,
    0.2369268850561890875142640};

template <class State, class F>
State gauss_integral(F&& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  State sum{};
  for (std::size_t i = 0; i < kGaussNodes.size(); ++i)
    sum += (kGaussWeights[i] * half) * f(mid + half * kGaussNodes[i]);
  return sum;
}

}  // namespace detail

/// Average of `f` over [a, b], splitting at `breaks` and integrating each
/// smooth piece with the 5-point Gauss-Legendre rule.
template <class State, class F>
State average_over(F&& f, const std::vector<double>& breaks, double a, double b) {
  State sum{};
  double lo = a;
  for (double br : breaks) {
    if (br <= lo || br >= b) continue;
    sum += detail::gauss_integral<State>(f, lo, br);
    lo = br;
  }
  sum += detail::gauss_integral<State>(f, lo, b);
  return (1.0 / (b - a)) * sum;
}

/// Exact average of a piecewise-constant datum over [a, b].
template <class State>
State average_over(const PiecewiseConstant<State>& pc, double a, double b) {
  if (pc.values.size() != pc.breaks.size() + 1)
    throw std::invalid_argument("piecewise-constant profile: size mismatch");
  State sum{};
  double lo = a;
  int pieces = 0;
  std::size_t k = 0;
  while (k < pc.breaks.size() && pc.breaks[k] <= a) ++k;
  for (; k < pc.breaks.size() && pc.breaks[k] < b; ++k) {
    sum += (pc.breaks[k] - lo) * pc.values[k];
    lo = pc.breaks[k];
    ++pieces;
  }
  if (pieces == 0) return pc.values[k];
  sum += (b - lo) * pc.values[k];
  return (1.0 / (b - a)) * sum;
}

/// Cell averages of the profile on the grid shifted by `offset`.
template <class State>
std::vector<State> init_cell_averages(const Profile<State>& profile,
                                      const GridSpec& grid, double offset = 0.0) {
  std::vector<State> out(static_cast<std::size_t>(grid.n_cells));
  for (int j = 0; j < grid.n_cells; ++j) {
    const double a = grid.left_edge(j) + offset;
    const double b = grid.right_edge(j) + offset;
    if (const auto* pc = std::get_if<PiecewiseConstant<State>>(&profile)) {
      out[j] = average_over(*pc, a, b);
    } else {
      const auto& sm = std::get<SmoothProfile<State>>(profile);
      out[j] = average_over<State>(sm.f, sm.breaks, a, b);
    }
  }
  return out;
}

}  // namespace solverlab

#endif  // SOLVERLAB_GRID_HPP_
