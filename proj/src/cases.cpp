#include <cmath>

#include "solverlab/harness.hpp"

namespace solverlab {

namespace {

CaseSpec burgers_pure_shock() {
  CaseSpec c;
  c.name = "burgers-pure-shock";
  c.summary = "Burgers, single shock 3 | 1 starting on an interface";
  c.model = ModelKind::kBurgers;
  c.x_min = 0.0;
  c.x_max = 1.0;
  c.t_end = 0.2;
  c.cells = 100;
  c.cfl = 0.4;
  c.left_bc = c.right_bc = BoundaryKind::kFixed;
  c.breaks = {0.25};
  c.pieces = {{3.0, 0, 0}, {1.0, 0, 0}};
  c.reference = ReferenceKind::kExactShock;
  c.shock_speed = 2.0;
  c.stationary_mesh = true;
  return c;
}

CaseSpec compression() {
  CaseSpec c;
  c.name = "compression";
  c.summary = "Burgers, linear ramp 3 -> 1 steepening into a shock at t = 1";
  c.model = ModelKind::kBurgers;
  c.x_min = -4.0;
  c.x_max = 2.0;
  c.t_end = 2.0;
  c.cells = 100;
  c.cfl = 0.4;
  c.left_bc = c.right_bc = BoundaryKind::kFixed;
  c.smooth = [](double x) { return Primitive{exact_compression(0.0, x), 0, 0}; };
  c.smooth_breaks = {-3.0, -1.0};
  c.reference = ReferenceKind::kExactCompression;
  c.stationary_mesh = true;
  return c;
}

// 1-shock of speed 0.1 between densities 1 and 20, c = 0.5, states from the
// jump conditions.
CaseSpec iso_sms_pure() {
  const double c_s = 0.5, sigma = 0.1, rho_l = 1.0, rho_r = 20.0;
  CaseSpec c;
  c.name = "iso-sms-pure";
  c.summary = "isothermal, slowly moving 1-shock (speed 0.1, rho 1 -> 20, c = 0.5)";
  c.model = ModelKind::kIsothermal;
  c.c_sound = c_s;
  c.x_min = 0.0;
  c.x_max = 1.0;
  c.t_end = 1.0;
  c.cells = 200;
  c.cfl = 0.45;
  c.breaks = {0.5};
  c.pieces = {{rho_l, sigma + c_s * std::sqrt(rho_r / rho_l), 0},
              {rho_r, sigma + c_s * std::sqrt(rho_l / rho_r), 0}};
  c.reference = ReferenceKind::kExactShock;
  c.shock_speed = sigma;
  return c;
}

CaseSpec iso_sms_riemann() {
  CaseSpec c;
  c.name = "iso-sms-riemann";
  c.summary = "isothermal Riemann problem: slowly moving 1-shock and a 2-shock";
  c.model = ModelKind::kIsothermal;
  c.c_sound = 0.5;
  c.x_min = -1.0;
  c.x_max = 1.0;
  c.t_end = 1.0;
  c.cells = 200;
  c.cfl = 0.45;
  c.breaks = {0.0};
  c.pieces = {{1.0, 2.6361, 0}, {20.0, 1.2361 / 20.0, 0}};
  c.reference = ReferenceKind::kExactRiemann;
  return c;
}

CaseSpec iso_shock_rarefaction() {
  CaseSpec c;
  c.name = "iso-shock-rarefaction";
  c.summary = "isothermal 1-shock + 2-rarefaction";
  c.model = ModelKind::kIsothermal;
  c.c_sound = 1.0;
  c.x_min = -1.0;
  c.x_max = 1.0;
  c.t_end = 0.4;
  c.cells = 100;
  c.cfl = 0.1;
  c.breaks = {0.0};
  c.pieces = {{1.0, 0.5, 0}, {3.0, 0.5, 0}};
  c.reference = ReferenceKind::kExactRiemann;
  c.published_data = false;
  return c;
}

CaseSpec gas_toro() {
  CaseSpec c;
  c.name = "gas-toro";
  c.summary = "ideal gas, three discontinuities moving right";
  c.model = ModelKind::kGas;
  c.x_min = 0.0;
  c.x_max = 1.0;
  c.t_end = 0.035;
  c.cells = 400;
  c.cfl = 0.4;
  c.breaks = {0.4};
  c.pieces = {{5.99924, 19.5975, 460.894}, {5.99242, -6.19633, 46.0950}};
  c.reference = ReferenceKind::kFineNT;
  return c;
}

CaseSpec blast(bool late) {
  CaseSpec c;
  c.name = late ? "blast-late" : "blast";
  c.summary = late ? "interacting blast waves, reflective walls, t = 0.038"
                   : "interacting blast waves, reflective walls, t = 0.026";
  c.model = ModelKind::kGas;
  c.x_min = 0.0;
  c.x_max = 1.0;
  c.t_end = late ? 0.038 : 0.026;
  c.cells = 400;
  c.cfl = late ? 0.48 : 0.45;
  c.left_bc = c.right_bc = BoundaryKind::kReflective;
  c.breaks = {0.1, 0.9};
  c.pieces = {{1.0, 0.0, 1000.0}, {1.0, 0.0, 0.01}, {1.0, 0.0, 100.0}};
  c.reference = ReferenceKind::kFineNT;
  return c;
}

CaseSpec shock_sine() {
  CaseSpec c;
  c.name = "shock-sine";
  c.summary = "shock interacting with a density sine wave";
  c.model = ModelKind::kGas;
  c.x_min = -5.0;
  c.x_max = 5.0;
  c.t_end = 1.8;
  c.cells = 400;
  c.cfl = 0.45;
  c.smooth = [](double x) {
    if (x < -4.0) return Primitive{3.897143, 2.629369, 10.33333};
    return Primitive{1.0 + 0.2 * std::sin(5.0 * x), 0.0, 1.0};
  };
  c.smooth_breaks = {-4.0};
  c.reference = ReferenceKind::kFineNT;
  return c;
}

CaseSpec gas_sms() {
  CaseSpec c;
  c.name = "gas-sms";
  c.summary = "ideal gas Riemann problem with a slowly moving 3-shock";
  c.model = ModelKind::kGas;
  c.x_min = -1.0;
  c.x_max = 1.0;
  c.t_end = 0.3;
  c.cells = 800;
  c.cfl = 0.3;
  c.breaks = {0.0};
  c.pieces = {{3.86, -0.81, 10.33}, {1.05, -3.44, 1.05}};
  c.reference = ReferenceKind::kExactRiemann;
  return c;
}

CaseSpec wall_symmetric() {
  CaseSpec c;
  c.name = "wall-symmetric";
  c.summary = "two colliding streams forming symmetric shocks, gamma = 5/3";
  c.model = ModelKind::kGas;
  c.gamma = 5.0 / 3.0;
  c.x_min = -0.5;
  c.x_max = 0.5;
  c.t_end = 0.1;
  c.cells = 200;
  c.cfl = 0.4;
  c.breaks = {0.0};
  c.pieces = {{1.0, 4.0, 1.0}, {1.0, -4.0, 1.0}};
  c.reference = ReferenceKind::kExactRiemann;
  return c;
}

CaseSpec wall_reflect() {
  CaseSpec c;
  c.name = "wall-reflect";
  c.summary = "cold gas reflecting on a solid wall at x = 1, gamma = 5/3";
  c.model = ModelKind::kGas;
  c.gamma = 5.0 / 3.0;
  c.x_min = 0.0;
  c.x_max = 1.0;
  c.t_end = 1.6;
  c.cells = 1000;
  c.cfl = 0.45;
  c.right_bc = BoundaryKind::kReflective;
  c.pieces = {{1.0, 1.0, 0.001}};
  c.reference = ReferenceKind::kNone;
  return c;
}

}  // namespace

const std::vector<CaseSpec>& case_registry() {
  static const std::vector<CaseSpec> cases = {
      burgers_pure_shock(), compression(), iso_sms_pure(), iso_sms_riemann(),
      iso_shock_rarefaction(), gas_toro(), blast(false), blast(true),
      shock_sine(), gas_sms(), wall_symmetric(), wall_reflect()};
  return cases;
}

const CaseSpec& find_case(std::string_view name) {
  for (const auto& c : case_registry())
    if (c.name == name) return c;
  throw std::invalid_argument("unknown case '" + std::string(name) + "'");
}

std::string model_name(ModelKind m) {
  switch (m) {
    case ModelKind::kBurgers: return "burgers";
    case ModelKind::kIsothermal: return "isothermal";
    case ModelKind::kGas: return "gas";
  }
  return "?";
}

std::string reference_name(ReferenceKind r) {
  switch (r) {
    case ReferenceKind::kExactShock: return "exact-shock";
    case ReferenceKind::kExactCompression: return "exact-compression";
    case ReferenceKind::kExactRiemann: return "exact-riemann";
    case ReferenceKind::kFineNT: return "fine-nt";
    case ReferenceKind::kNone: return "none";
  }
  return "?";
}

int model_vars(ModelKind m) {
  switch (m) {
    case ModelKind::kBurgers: return 1;
    case ModelKind::kIsothermal: return 2;
    case ModelKind::kGas: return 3;
  }
  return 0;
}

}  // namespace solverlab
