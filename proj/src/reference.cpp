#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "solverlab/harness.hpp"
#include "solverlab/riemann.hpp"
#include "solverlab/scalar_rec.hpp"
#include "solverlab/typed_cells.hpp"

namespace solverlab {

namespace {

StateVec<3> conserved(const CaseSpec& spec, const Primitive& w) {
  switch (spec.model) {
    case ModelKind::kBurgers: return {{w[0], 0.0, 0.0}};
    case ModelKind::kIsothermal: return {{w[0], w[0] * w[1], 0.0}};
    case ModelKind::kGas:
      return {{w[0], w[0] * w[1], w[2] / (spec.gamma - 1.0) + 0.5 * w[0] * w[1] * w[1]}};
  }
  return {};
}

Table averages(const Profile<StateVec<3>>& profile, const GridSpec& grid, double offset) {
  const auto f = init_cell_averages(profile, grid, offset);
  Table t;
  t.reserve(f.size());
  for (const auto& s : f) t.push_back(s.v);
  return t;
}

template <class State>
Table pure_shock_table(const State& left, const State& right, double x0, double sigma, double t,
                       const GridSpec& grid, double offset) {
  const PiecewiseConstant<State> pc{{x0 + sigma * t}, {left, right}};
  return to_table(init_cell_averages(Profile<State>(pc), grid, offset));
}

// Wave positions of a self-similar solution, used to split the quadrature.
std::vector<double> sorted(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

Table initial_cells(const CaseSpec& spec, const GridSpec& grid, double offset) {
  if (spec.smooth) {
    SmoothProfile<StateVec<3>> sm{[&](double x) { return conserved(spec, spec.smooth(x)); },
                                  spec.smooth_breaks};
    return averages(sm, grid, offset);
  }
  PiecewiseConstant<StateVec<3>> pc;
  pc.breaks = spec.breaks;
  for (const auto& w : spec.pieces) pc.values.push_back(conserved(spec, w));
  return averages(pc, grid, offset);
}

Field<double> exact_pure_shock_average(double left, double right, double sigma, double x0,
                                       double t, const GridSpec& grid, const ConvexFlux& flux,
                                       double offset) {
  const double residual = std::abs(sigma * (right - left) - (flux.f(right) - flux.f(left)));
  if (residual > 1e-10) throw std::invalid_argument("pure shock violates the jump condition");
  return from_table<double>(pure_shock_table(left, right, x0, sigma, t, grid, offset));
}

Field<StateVec<2>> exact_pure_shock_average(const IsoState& left, const IsoState& right,
                                            double sigma, double x0, double t,
                                            const GridSpec& grid, double c, double offset) {
  if (rh_residual(left, right, sigma, c).max() > 1e-10)
    throw std::invalid_argument("pure shock violates the jump conditions");
  return from_table<StateVec<2>>(
      pure_shock_table(left.conserved(), right.conserved(), x0, sigma, t, grid, offset));
}

Field<StateVec<3>> exact_pure_shock_average(const GasState& left, const GasState& right,
                                            double sigma, double x0, double t,
                                            const GridSpec& grid, double gamma, double offset) {
  if (rh_residual(left, right, sigma, gamma).max() > 1e-10)
    throw std::invalid_argument("pure shock violates the jump conditions");
  return from_table<StateVec<3>>(pure_shock_table(left.conserved(gamma), right.conserved(gamma),
                                                  x0, sigma, t, grid, offset));
}

Table exact_reference(const CaseSpec& spec, const GridSpec& grid, double t, double offset) {
  switch (spec.reference) {
    case ReferenceKind::kExactShock: {
      if (spec.pieces.size() != 2) throw std::invalid_argument("exact shock needs two states");
      const auto& l = spec.pieces[0];
      const auto& r = spec.pieces[1];
      const double x0 = spec.breaks.at(0);
      switch (spec.model) {
        case ModelKind::kBurgers:
          return to_table(exact_pure_shock_average(l[0], r[0], spec.shock_speed, x0, t, grid,
                                                   burgers(), offset));
        case ModelKind::kIsothermal:
          return to_table(exact_pure_shock_average(IsoState{l[0], l[1]}, IsoState{r[0], r[1]},
                                                   spec.shock_speed, x0, t, grid, spec.c_sound,
                                                   offset));
        case ModelKind::kGas:
          return to_table(exact_pure_shock_average(GasState{l[0], l[1], l[2]},
                                                   GasState{r[0], r[1], r[2]}, spec.shock_speed,
                                                   x0, t, grid, spec.gamma, offset));
      }
      break;
    }
    case ReferenceKind::kExactCompression: {
      std::vector<double> breaks;
      if (t < 1.0) breaks = {-3.0 + 3.0 * t, -1.0 + t};
      else breaks = {2.0 * (t - 1.0)};
      SmoothProfile<StateVec<3>> sm{
          [t](double x) { return StateVec<3>{{exact_compression(t, x), 0.0, 0.0}}; }, breaks};
      return averages(sm, grid, offset);
    }
    case ReferenceKind::kExactRiemann: {
      if (spec.pieces.size() != 2) throw std::invalid_argument("Riemann data needs two states");
      const auto& l = spec.pieces[0];
      const auto& r = spec.pieces[1];
      const double x0 = spec.breaks.at(0);
      if (!(t > 0.0)) return initial_cells(spec, grid, offset);
      if (spec.model == ModelKind::kIsothermal) {
        const double c = spec.c_sound;
        const IsoState L{l[0], l[1]}, R{r[0], r[1]};
        const IsoStar star = iso_star(L, R, c);
        std::vector<double> speeds;
        if (star.left_shock) speeds.push_back(iso_shock_speed(1, L, star.rho_star, c));
        else speeds.insert(speeds.end(), {L.u - c, star.u_star - c});
        if (star.right_shock) speeds.push_back(iso_shock_speed(2, R, star.rho_star, c));
        else speeds.insert(speeds.end(), {star.u_star + c, R.u + c});
        std::vector<double> breaks;
        for (double s : sorted(speeds)) breaks.push_back(x0 + s * t);
        SmoothProfile<StateVec<3>> sm{
            [&](double x) {
              const auto s = sample_iso(L, R, star, c, (x - x0) / t);
              return StateVec<3>{{s.rho, s.q(), 0.0}};
            },
            breaks};
        return averages(sm, grid, offset);
      }
      if (spec.model == ModelKind::kGas) {
        const double g = spec.gamma;
        const GasState L{l[0], l[1], l[2]}, R{r[0], r[1], r[2]};
        const GasStar star = gas_star(L, R, g);
        std::vector<double> speeds{star.u_star};
        if (star.left_shock) {
          speeds.push_back(gas_left_shock_speed(L, star.p_star, g));
        } else {
          const double c_star = star.left_state().sound_speed(g);
          speeds.insert(speeds.end(), {L.u - L.sound_speed(g), star.u_star - c_star});
        }
        if (star.right_shock) {
          speeds.push_back(gas_right_shock_speed(R, star.p_star, g));
        } else {
          const double c_star = star.right_state().sound_speed(g);
          speeds.insert(speeds.end(), {star.u_star + c_star, R.u + R.sound_speed(g)});
        }
        std::vector<double> breaks;
        for (double s : sorted(speeds)) breaks.push_back(x0 + s * t);
        SmoothProfile<StateVec<3>> sm{
            [&](double x) { return sample_gas(L, R, star, g, (x - x0) / t).conserved(g); },
            breaks};
        return averages(sm, grid, offset);
      }
      throw std::invalid_argument("no exact Riemann reference for " + model_name(spec.model));
    }
    default:
      break;
  }
  throw std::invalid_argument("case '" + spec.name + "' has no exact reference");
}

Table restrict_to_grid(const Table& fine, const GridSpec& fg, const GridSpec& coarse) {
  if (static_cast<int>(fine.size()) != fg.n_cells)
    throw std::invalid_argument("restrict_to_grid: field/grid size mismatch");
  const double fdx = fg.dx();
  Table out(static_cast<std::size_t>(coarse.n_cells));
  for (int j = 0; j < coarse.n_cells; ++j) {
    const double a = coarse.left_edge(j);
    const double b = coarse.right_edge(j);
    int k0 = std::max(0, static_cast<int>(std::floor((a - fg.x_min) / fdx)) - 1);
    CellValues acc{};
    double covered = 0.0;
    for (int k = k0; k < fg.n_cells; ++k) {
      const double lo = std::max(a, fg.left_edge(k));
      const double hi = std::min(b, fg.right_edge(k));
      if (fg.left_edge(k) >= b) break;
      if (hi <= lo) continue;
      for (int c = 0; c < 3; ++c) acc[c] += (hi - lo) * fine[k][c];
      covered += hi - lo;
    }
    if (!(covered > 0.0)) throw std::invalid_argument("restrict_to_grid: grids do not overlap");
    for (int c = 0; c < 3; ++c) out[j][c] = acc[c] / covered;
  }
  return out;
}

namespace {

std::string cache_path(const CaseSpec& spec, int cells, double t_end, double cfl,
                       const std::string& dir) {
  char buf[256];
  const double param = spec.model == ModelKind::kGas ? spec.gamma : spec.c_sound;
  std::snprintf(buf, sizeof buf, "ref-%s-%d-%.17g-%.17g-%.17g.csv", spec.name.c_str(), cells,
                t_end, cfl, param);
  return (std::filesystem::path(dir) / buf).string();
}

std::optional<Table> read_cache(const std::string& path, int cells) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  Table t;
  std::string line;
  if (!std::getline(in, line)) return std::nullopt;  // header
  while (std::getline(in, line)) {
    std::istringstream row(line);
    CellValues v{};
    char comma;
    if (!(row >> v[0] >> comma >> v[1] >> comma >> v[2])) return std::nullopt;
    for (double x : v)
      if (!std::isfinite(x)) return std::nullopt;
    t.push_back(v);
  }
  if (static_cast<int>(t.size()) != cells) return std::nullopt;
  return t;
}

void write_cache(const std::string& path, const Table& t) {
  std::filesystem::create_directories(std::filesystem::path(path).parent_path());
  const std::string tmp =
      path + "." + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id())) + ".tmp";
  {
    std::ofstream out(tmp);
    out.precision(17);
    out << "u0,u1,u2\n";
    for (const auto& v : t) out << v[0] << ',' << v[1] << ',' << v[2] << '\n';
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

Table reference_fine_grid(const CaseSpec& spec, const GridSpec& grid, double t_end,
                          const RunOverrides& ov) {
  const int fine_cells = ov.reference_cells;
  const GridSpec fg = GridSpec::uniform(spec.x_min, spec.x_max, fine_cells);
  std::string path;
  if (!ov.cache_dir.empty()) {
    path = cache_path(spec, fine_cells, t_end, ov.reference_cfl, ov.cache_dir);
    if (auto cached = read_cache(path, fine_cells)) return restrict_to_grid(*cached, fg, grid);
  }
  RunOverrides fine_ov;
  fine_ov.t_end = t_end;
  fine_ov.gamma = spec.gamma;
  fine_ov.c_sound = spec.c_sound;
  fine_ov.safety = ov.safety;
  fine_ov.compute_reference = false;
  const RunResult fine = run_case(spec, SchemeId::kNT, fine_cells, ov.reference_cfl, fine_ov);
  if (fine.aborted) throw std::runtime_error("fine reference run aborted: " + fine.abort_message);
  if (!path.empty()) write_cache(path, fine.cells);
  return restrict_to_grid(fine.cells, fg, grid);
}

}  // namespace solverlab
