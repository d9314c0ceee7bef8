#include <future>
#include <fstream>
#include <sstream>

#include "solverlab/harness.hpp"

namespace solverlab {

namespace {

std::ofstream open_csv(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.precision(17);
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

void write_run_csv(const RunResult& r, const std::string& path) {
  auto out = open_csv(path);
  const auto x = r.grid.centers();
  const Table& t = r.cells;
  switch (r.spec.model) {
    case ModelKind::kBurgers:
      out << "x,u\n";
      for (std::size_t j = 0; j < t.size(); ++j) out << x[j] << ',' << t[j][0] << '\n';
      break;
    case ModelKind::kIsothermal: {
      out << "x,rho,momentum,velocity\n";
      const auto u = velocity(t);
      for (std::size_t j = 0; j < t.size(); ++j)
        out << x[j] << ',' << t[j][0] << ',' << t[j][1] << ',' << u[j] << '\n';
      break;
    }
    case ModelKind::kGas: {
      out << "x,rho,momentum,energy,velocity,pressure,internal_energy\n";
      const auto u = velocity(t);
      const auto p = pressure(t, r.spec.gamma);
      const auto e = internal_energy(t);
      for (std::size_t j = 0; j < t.size(); ++j)
        out << x[j] << ',' << t[j][0] << ',' << t[j][1] << ',' << t[j][2] << ',' << u[j] << ','
            << p[j] << ',' << e[j] << '\n';
      break;
    }
  }
}

OrderStudy order_study(const CaseSpec& spec, SchemeId scheme, const std::vector<int>& cells,
                       double cfl, const RunOverrides& overrides) {
  if (spec.reference == ReferenceKind::kNone)
    throw std::invalid_argument("case '" + spec.name + "' has no reference solution");
  RunOverrides ov = overrides;
  ov.compute_reference = true;
  ov.observer = nullptr;
  std::vector<std::future<RunResult>> runs;
  for (int n : cells)
    runs.push_back(std::async(std::launch::async,
                              [&, n] { return run_case(spec, scheme, n, cfl, ov); }));
  OrderStudy study;
  std::vector<double> dxs, errs;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const RunResult r = runs[i].get();
    if (r.aborted) throw std::runtime_error("run with " + std::to_string(cells[i]) +
                                            " cells aborted: " + r.abort_message);
    OrderRow row;
    row.cells = cells[i];
    row.dx = r.grid.dx();
    row.l1 = r.error->l1;
    study.rows.push_back(row);
    dxs.push_back(row.dx);
    errs.push_back(row.l1[0]);
  }
  study.fit = convergence_order(dxs, errs);
  return study;
}

void write_order_csv(const OrderStudy& study, const std::string& path) {
  auto out = open_csv(path);
  out << "cells,dx,l1_rho,l1_momentum,l1_energy,slope\n";
  for (std::size_t i = 0; i < study.rows.size(); ++i) {
    const auto& r = study.rows[i];
    out << r.cells << ',' << r.dx << ',' << r.l1[0] << ',' << r.l1[1] << ',' << r.l1[2] << ',';
    if (i + 1 == study.rows.size()) {
      if (study.fit.exact) out << "exact";
      else out << study.fit.slope;
    }
    out << '\n';
  }
}

std::vector<std::pair<std::string, std::string>> parse_config(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(number) + ": expected key=value");
    std::string key = trim(std::string_view(t).substr(0, eq));
    std::string value = trim(std::string_view(t).substr(eq + 1));
    if (key.empty())
      throw std::invalid_argument("config line " + std::to_string(number) + ": empty key");
    out.emplace_back(std::move(key), std::move(value));
  }
  return out;
}

}  // namespace solverlab
