#ifndef SOLVERLAB_HARNESS_HPP_
#define SOLVERLAB_HARNESS_HPP_

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "solverlab/comparison.hpp"
#include "solverlab/full_rec.hpp"
#include "solverlab/grid.hpp"

namespace solverlab {

enum class ModelKind { kBurgers, kIsothermal, kGas };
enum class ReferenceKind { kExactShock, kExactCompression, kExactRiemann, kFineNT, kNone };

std::string model_name(ModelKind m);
std::string reference_name(ReferenceKind r);
int model_vars(ModelKind m);

/// Up to three unknowns per cell: (u), (rho, q) or (rho, q, E), zero-padded.
using CellValues = std::array<double, 3>;
using Table = std::vector<CellValues>;
/// Primitive variables: (u), (rho, u) or (rho, u, p).
using Primitive = std::array<double, 3>;

struct CaseSpec {
  std::string name;
  std::string summary;
  ModelKind model = ModelKind::kBurgers;
  double x_min = 0.0;
  double x_max = 1.0;
  double t_end = 1.0;
  int cells = 100;
  double cfl = 0.4;
  double gamma = 1.4;
  double c_sound = 1.0;
  BoundaryKind left_bc = BoundaryKind::kTransmissive;
  BoundaryKind right_bc = BoundaryKind::kTransmissive;
  /// Piecewise-constant datum: pieces[k] on (breaks[k-1], breaks[k]).
  std::vector<double> breaks;
  std::vector<Primitive> pieces;
  /// Smooth datum (takes precedence over pieces when set).
  std::function<Primitive(double)> smooth;
  std::vector<double> smooth_breaks;
  ReferenceKind reference = ReferenceKind::kNone;
  /// Speed of the single discontinuity for kExactShock.
  double shock_speed = 0.0;
  /// The mesh stays still when every wave speed is non-negative.
  bool stationary_mesh = false;
  /// False for representative stand-in data.
  bool published_data = true;
};

const std::vector<CaseSpec>& case_registry();
/// Throws std::invalid_argument for unknown names.
const CaseSpec& find_case(std::string_view name);

struct StepRecord {
  long step = 0;
  double t = 0.0;
  double dt = 0.0;
  double v_mesh = 0.0;
  double net_offset = 0.0;
  CellValues totals{};  // dx * sum over cells, per conserved variable
  double min_rho = 0.0;
  double min_e = 0.0;
  double entropy = 0.0;  // dx * sum of the mathematical entropy
  int accepted = 0;      // cells whose reconstruction fed a flux
};

struct ErrorReport {
  CellValues l1{};
  double overshoot = 0.0;
};

struct RunOverrides {
  std::optional<double> t_end;
  std::optional<long> max_steps;  // run this many steps instead of stopping at t_end
  std::optional<double> gamma;
  std::optional<double> c_sound;
  double safety = 1.0;
  Selection selection = Selection::kOneShot;
  std::optional<Coupling> coupling;
  bool disable_reconstruction = false;
  bool compute_reference = true;
  int reference_cells = 30000;
  double reference_cfl = 0.48;
  /// Directory for cached fine-grid references; empty disables the cache.
  std::string cache_dir;
  /// Called after every step with the record and the field on the current mesh.
  std::function<void(const StepRecord&, const Table&)> observer;
};

struct RunResult {
  CaseSpec spec;
  SchemeId scheme = SchemeId::kRec;
  GridSpec grid;
  double t = 0.0;
  long steps = 0;
  Table cells;  // conserved values on the reference grid
  std::vector<StepRecord> diagnostics;
  double wall_seconds = 0.0;
  bool aborted = false;
  long abort_step = -1;
  std::string abort_message;
  std::optional<Table> reference;
  std::optional<ErrorReport> error;
};

/// Applies overrides to the registry entry (gamma, c, t_end).
CaseSpec resolve_case(const CaseSpec& spec, const RunOverrides& overrides);

RunResult run_case(const CaseSpec& spec, SchemeId scheme, int cells, double cfl,
                   const RunOverrides& overrides = {});

/// Initial cell averages (conserved) on the grid shifted by offset.
Table initial_cells(const CaseSpec& spec, const GridSpec& grid, double offset = 0.0);

/// Exact reference at time t for kExactShock / kExactCompression / kExactRiemann.
Table exact_reference(const CaseSpec& spec, const GridSpec& grid, double t, double offset = 0.0);

/// Cell averages of a single discontinuity (left | right) at x0 + sigma t.
/// Rejects data that violate the jump conditions by more than 1e-10.
Field<double> exact_pure_shock_average(double left, double right, double sigma, double x0,
                                       double t, const GridSpec& grid, const ConvexFlux& flux,
                                       double offset = 0.0);
Field<StateVec<2>> exact_pure_shock_average(const IsoState& left, const IsoState& right,
                                            double sigma, double x0, double t,
                                            const GridSpec& grid, double c, double offset = 0.0);
Field<StateVec<3>> exact_pure_shock_average(const GasState& left, const GasState& right,
                                            double sigma, double x0, double t,
                                            const GridSpec& grid, double gamma,
                                            double offset = 0.0);

/// Fine Nessyahu-Tadmor solution averaged onto `grid`, cached on disk when
/// overrides.cache_dir is set.
Table reference_fine_grid(const CaseSpec& spec, const GridSpec& grid, double t_end,
                          const RunOverrides& overrides);

/// Conservative average of a fine uniform field onto a coarser uniform grid
/// covering the same interval.
Table restrict_to_grid(const Table& fine, const GridSpec& fine_grid, const GridSpec& coarse);

// ---------------------------------------------------------------------------
// Metrics

/// dx * sum |a - b| for each of the first `vars` variables.
CellValues l1_error(const Table& a, const Table& b, double dx, int vars = 3);
double l1_error(const std::vector<double>& a, const std::vector<double>& b, double dx);

/// L1 errors at or below this are round-off.
inline constexpr double kRoundoffError = 1e-13;

struct OrderFit {
  bool exact = false;  // every error was at round-off level
  double slope = 0.0;
};

/// Least-squares slope of log(error) against log(dx); needs >= 3 points.
OrderFit convergence_order(const std::vector<double>& dx, const std::vector<double>& errors);

/// Amount by which `values` leave the range spanned by `expected`.
double overshoot_metric(const std::vector<double>& values, const std::vector<double>& expected);

/// dx * (sum S(after) - sum S(before)).
double entropy_budget(const Table& before, const Table& after, double dx, ModelKind model,
                      double param);

/// Number of cells with values strictly inside (lo + tol, hi - tol), tol = 1% of hi - lo.
int transition_width(const std::vector<double>& values, double lo, double hi);

/// Position where the profile first crosses `level` between cell centres
/// (linear interpolation; the ghost value `right_far` is placed at x_max + dx/2).
std::optional<double> level_crossing(const std::vector<double>& values, const GridSpec& grid,
                                     double level, std::optional<double> right_far = {});

std::vector<double> column(const Table& t, int var);
/// Primitive/derived columns used by the CSV output.
std::vector<double> velocity(const Table& t);
std::vector<double> pressure(const Table& t, double gamma);
std::vector<double> internal_energy(const Table& t);

// ---------------------------------------------------------------------------
// I/O

/// Writes the per-cell CSV for a finished run (schema depends on the model).
void write_run_csv(const RunResult& result, const std::string& path);

struct OrderRow {
  int cells = 0;
  double dx = 0.0;
  CellValues l1{};
};

struct OrderStudy {
  std::vector<OrderRow> rows;
  OrderFit fit;  // on the density (or u) error
};

OrderStudy order_study(const CaseSpec& spec, SchemeId scheme, const std::vector<int>& cells,
                       double cfl, const RunOverrides& overrides = {});

void write_order_csv(const OrderStudy& study, const std::string& path);

/// Parses `key=value` lines; '#' starts a comment, blank lines are ignored.
std::vector<std::pair<std::string, std::string>> parse_config(std::string_view text);

}  // namespace solverlab

#endif  // SOLVERLAB_HARNESS_HPP_
