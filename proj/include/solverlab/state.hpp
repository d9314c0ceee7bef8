#ifndef SOLVERLAB_STATE_HPP_
#define SOLVERLAB_STATE_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

namespace solverlab {

// Fixed-size vector of per-cell unknowns (conserved or primitive) with the
// arithmetic the finite-volume updates need.
template <std::size_t N>
struct StateVec {
  std::array<double, N> v{};

  static constexpr std::size_t size() { return N; }

  constexpr double& operator[](std::size_t i) { return v[i]; }
  constexpr double operator[](std::size_t i) const { return v[i]; }

  StateVec& operator+=(const StateVec& o) {
    for (std::size_t i = 0; i < N; ++i) v[i] += o.v[i];
    return *this;
  }
  StateVec& operator-=(const StateVec& o) {
    for (std::size_t i = 0; i < N; ++i) v[i] -= o.v[i];
    return *this;
  }
  StateVec& operator*=(double a) {
    for (std::size_t i = 0; i < N; ++i) v[i] *= a;
    return *this;
  }

  friend StateVec operator+(StateVec a, const StateVec& b) { return a += b; }
  friend StateVec operator-(StateVec a, const StateVec& b) { return a -= b; }
  friend StateVec operator*(double s, StateVec a) { return a *= s; }
  friend StateVec operator*(StateVec a, double s) { return a *= s; }
  friend StateVec operator-(StateVec a) { return a *= -1.0; }
  friend bool operator==(const StateVec&, const StateVec&) = default;
};

// Component indices of conserved vectors.
inline constexpr std::size_t kRho = 0;
inline constexpr std::size_t kMom = 1;
inline constexpr std::size_t kEnergy = 2;

template <class State>
using Field = std::vector<State>;

// Uniform component access so generic code handles scalar and system states.
template <class State>
struct Components;

template <>
struct Components<double> {
  static constexpr std::size_t count = 1;
  static double get(double s, std::size_t) { return s; }
  static void set(double& s, std::size_t, double x) { s = x; }
};

template <std::size_t N>
struct Components<StateVec<N>> {
  static constexpr std::size_t count = N;
  static double get(const StateVec<N>& s, std::size_t i) { return s[i]; }
  static void set(StateVec<N>& s, std::size_t i, double x) { s[i] = x; }
};

inline double minmod(double a, double b) {
  if (a > 0.0 && b > 0.0) return std::min(a, b);
  if (a < 0.0 && b < 0.0) return std::max(a, b);
  return 0.0;
}

template <std::size_t N>
StateVec<N> minmod(const StateVec<N>& a, const StateVec<N>& b) {
  StateVec<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = minmod(a[i], b[i]);
  return r;
}

}  // namespace solverlab

#endif  // SOLVERLAB_STATE_HPP_
