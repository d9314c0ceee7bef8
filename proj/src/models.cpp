#include "solverlab/models.hpp"

#include <limits>

namespace solverlab {

ConvexFlux burgers() {
  return {[](double u) { return burgers_flux(u); }, [](double u) { return u; }, 0.0};
}

ConvexFlux linear_advection(double a) {
  const double inf = std::numeric_limits<double>::infinity();
  return {[a](double u) { return a * u; }, [a](double) { return a; },
          a > 0.0 ? -inf : (a < 0.0 ? inf : 0.0)};
}

}  // namespace solverlab
