#include <algorithm>
#include <cmath>
#include <limits>

#include "solverlab/harness.hpp"
#include "solverlab/models.hpp"

namespace solverlab {

CellValues l1_error(const Table& a, const Table& b, double dx, int vars) {
  if (a.size() != b.size()) throw std::invalid_argument("l1_error: length mismatch");
  CellValues e{};
  for (std::size_t j = 0; j < a.size(); ++j)
    for (int c = 0; c < vars; ++c) e[c] += std::abs(a[j][c] - b[j][c]);
  for (int c = 0; c < vars; ++c) e[c] *= dx;
  return e;
}

double l1_error(const std::vector<double>& a, const std::vector<double>& b, double dx) {
  if (a.size() != b.size()) throw std::invalid_argument("l1_error: length mismatch");
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) s += std::abs(a[j] - b[j]);
  return dx * s;
}

OrderFit convergence_order(const std::vector<double>& dx, const std::vector<double>& errors) {
  if (dx.size() != errors.size()) throw std::invalid_argument("convergence_order: size mismatch");
  if (dx.size() < 3) throw std::invalid_argument("convergence_order: needs at least 3 points");
  if (std::all_of(errors.begin(), errors.end(), [](double e) { return e <= kRoundoffError; }))
    return {true, 0.0};
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(dx.size());
  for (std::size_t i = 0; i < dx.size(); ++i) {
    if (!(errors[i] > 0.0) || !(dx[i] > 0.0))
      throw std::invalid_argument("convergence_order: errors and dx must be positive");
    const double x = std::log(dx[i]);
    const double y = std::log(errors[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return {false, (n * sxy - sx * sy) / (n * sxx - sx * sx)};
}

double overshoot_metric(const std::vector<double>& values, const std::vector<double>& expected) {
  if (values.empty() || expected.empty()) return 0.0;
  const auto [emin, emax] = std::minmax_element(expected.begin(), expected.end());
  const auto [vmin, vmax] = std::minmax_element(values.begin(), values.end());
  return std::max(0.0, *vmax - *emax) + std::max(0.0, *emin - *vmin);
}

double entropy_budget(const Table& before, const Table& after, double dx, ModelKind model,
                      double param) {
  auto total = [&](const Table& t) {
    double s = 0.0;
    for (const auto& v : t) {
      switch (model) {
        case ModelKind::kBurgers: s += ScalarLaw{burgers()}.entropy(v[0]); break;
        case ModelKind::kIsothermal: s += Isothermal{param}.entropy({{v[0], v[1]}}); break;
        case ModelKind::kGas: s += IdealGas{param}.entropy({{v[0], v[1], v[2]}}); break;
      }
    }
    return dx * s;
  };
  return total(after) - total(before);
}

int transition_width(const std::vector<double>& values, double lo, double hi) {
  const double tol = 0.01 * (hi - lo);
  return static_cast<int>(std::count_if(values.begin(), values.end(), [&](double v) {
    return v > lo + tol && v < hi - tol;
  }));
}

std::optional<double> level_crossing(const std::vector<double>& values, const GridSpec& grid,
                                     double level, std::optional<double> right_far) {
  std::vector<double> v = values;
  std::vector<double> x = grid.centers();
  if (right_far) {
    v.push_back(*right_far);
    x.push_back(grid.x_max + 0.5 * grid.dx());
  }
  for (std::size_t j = 0; j + 1 < v.size(); ++j) {
    const double a = v[j] - level;
    const double b = v[j + 1] - level;
    if (a == 0.0) return x[j];
    if ((a > 0.0) != (b > 0.0)) return x[j] + (x[j + 1] - x[j]) * a / (a - b);
  }
  return std::nullopt;
}

std::vector<double> column(const Table& t, int var) {
  std::vector<double> c;
  c.reserve(t.size());
  for (const auto& v : t) c.push_back(v[var]);
  return c;
}

std::vector<double> velocity(const Table& t) {
  std::vector<double> c;
  c.reserve(t.size());
  for (const auto& v : t) c.push_back(v[1] / v[0]);
  return c;
}

std::vector<double> pressure(const Table& t, double gamma) {
  std::vector<double> c;
  c.reserve(t.size());
  for (const auto& v : t) c.push_back(IdealGas{gamma}.pressure({{v[0], v[1], v[2]}}));
  return c;
}

std::vector<double> internal_energy(const Table& t) {
  std::vector<double> c;
  c.reserve(t.size());
  for (const auto& v : t) c.push_back(v[2] / v[0] - 0.5 * v[1] * v[1] / (v[0] * v[0]));
  return c;
}

}  // namespace solverlab
