// Command-line front end: list the registered cases, run one, or run a
// refinement study.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "solverlab/harness.hpp"

using namespace solverlab;

namespace {

struct Settings {
  std::string case_name;
  std::string scheme = "rec";
  std::string cells = "";
  double cfl = 0.0;
  double t_end = 0.0;
  double gamma = 0.0;
  double c_sound = 0.0;
  double safety = 1.0;
  std::string selection = "one-shot";
  std::string coupling;
  std::string out;
  std::string config;
  std::string cache_dir = "solverlab-cache";
  int reference_cells = 30000;
  bool fine_reference = false;
};

Selection parse_selection(const std::string& s) {
  if (s == "one-shot") return Selection::kOneShot;
  if (s == "two-shot") return Selection::kTwoShot;
  throw std::invalid_argument("selection must be one-shot or two-shot");
}

Coupling parse_coupling(const std::string& s) {
  if (s == "lxf") return Coupling::kLxF;
  if (s == "nt") return Coupling::kNT;
  throw std::invalid_argument("coupling must be lxf or nt");
}

std::vector<int> parse_cells(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    const int n = std::stoi(item, &used);
    if (used != item.size() || n <= 0) throw std::invalid_argument("bad cell count '" + item + "'");
    out.push_back(n);
  }
  if (out.empty()) throw std::invalid_argument("--cells needs at least one value");
  return out;
}

// Fills settings from a key=value file for every option not given on the command line.
void apply_config(CLI::App& cmd, Settings& s) {
  if (s.config.empty()) return;
  std::ifstream in(s.config);
  if (!in) throw std::invalid_argument("cannot read config " + s.config);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::map<std::string, std::function<void(const std::string&)>> setters = {
      {"case", [&](const std::string& v) { s.case_name = v; }},
      {"scheme", [&](const std::string& v) { s.scheme = v; }},
      {"cells", [&](const std::string& v) { s.cells = v; }},
      {"cfl", [&](const std::string& v) { s.cfl = std::stod(v); }},
      {"tend", [&](const std::string& v) { s.t_end = std::stod(v); }},
      {"gamma", [&](const std::string& v) { s.gamma = std::stod(v); }},
      {"c-sound", [&](const std::string& v) { s.c_sound = std::stod(v); }},
      {"safety", [&](const std::string& v) { s.safety = std::stod(v); }},
      {"selection", [&](const std::string& v) { s.selection = v; }},
      {"coupling", [&](const std::string& v) { s.coupling = v; }},
      {"out", [&](const std::string& v) { s.out = v; }},
      {"cache-dir", [&](const std::string& v) { s.cache_dir = v; }},
      {"reference-cells", [&](const std::string& v) { s.reference_cells = std::stoi(v); }},
  };
  for (const auto& [key, value] : parse_config(buf.str())) {
    const auto it = setters.find(key);
    if (it == setters.end()) throw std::invalid_argument("unknown config key '" + key + "'");
    const CLI::Option* opt = cmd.get_option_no_throw("--" + key);
    if (opt && opt->count() > 0) continue;
    it->second(value);
  }
}

RunOverrides overrides_from(const Settings& s) {
  RunOverrides ov;
  if (s.t_end > 0.0) ov.t_end = s.t_end;
  if (s.gamma > 0.0) ov.gamma = s.gamma;
  if (s.c_sound > 0.0) ov.c_sound = s.c_sound;
  ov.safety = s.safety;
  ov.selection = parse_selection(s.selection);
  if (!s.coupling.empty()) ov.coupling = parse_coupling(s.coupling);
  ov.cache_dir = s.cache_dir;
  ov.reference_cells = s.reference_cells;
  return ov;
}

void add_common(CLI::App* cmd, Settings& s) {
  cmd->add_option("--case", s.case_name, "registered case name");
  cmd->add_option("--scheme", s.scheme, "lxf, rusanov, godunov, nt, muscl, rec, rec-full, rec+nt, rec-full+nt");
  cmd->add_option("--cfl", s.cfl, "CFL number (default: the case's)");
  cmd->add_option("--tend", s.t_end, "final time");
  cmd->add_option("--gamma", s.gamma, "ratio of specific heats");
  cmd->add_option("--c-sound", s.c_sound, "isothermal sound speed");
  cmd->add_option("--safety", s.safety, "mesh speed factor (>= 1)");
  cmd->add_option("--selection", s.selection, "full-Euler wave selection: one-shot or two-shot");
  cmd->add_option("--coupling", s.coupling, "flux used where no reconstruction is accepted: lxf or nt");
  cmd->add_option("--out", s.out, "output CSV path");
  cmd->add_option("--config", s.config, "key=value file; command-line flags win");
  cmd->add_option("--cache-dir", s.cache_dir, "directory for cached fine-grid references");
  cmd->add_option("--reference-cells", s.reference_cells, "cells of the fine-grid reference");
}

int run_command(CLI::App* cmd, Settings& s) {
  apply_config(*cmd, s);
  if (s.case_name.empty()) throw std::invalid_argument("--case is required");
  if (s.out.empty()) throw std::invalid_argument("--out is required");
  const CaseSpec& spec = find_case(s.case_name);
  const SchemeId scheme = parse_scheme(s.scheme);
  const int cells = s.cells.empty() ? spec.cells : parse_cells(s.cells).at(0);
  const double cfl = s.cfl > 0.0 ? s.cfl : spec.cfl;
  RunOverrides ov = overrides_from(s);
  ov.compute_reference = spec.reference != ReferenceKind::kFineNT || s.fine_reference;
  const RunResult r = run_case(spec, scheme, cells, cfl, ov);
  write_run_csv(r, s.out);
  std::printf("case %s scheme %s cells %d cfl %g: %ld steps, t = %.17g, %.3f s\n",
              spec.name.c_str(), scheme_name(scheme).c_str(), cells, cfl, r.steps, r.t,
              r.wall_seconds);
  if (r.error) {
    std::printf("l1 error vs %s reference: %.6e %.6e %.6e, overshoot %.6e\n",
                reference_name(spec.reference).c_str(), r.error->l1[0], r.error->l1[1],
                r.error->l1[2], r.error->overshoot);
  }
  if (r.aborted) {
    std::fprintf(stderr, "aborted at step %ld: %s\n", r.abort_step, r.abort_message.c_str());
    return 2;
  }
  return 0;
}

int order_command(CLI::App* cmd, Settings& s) {
  apply_config(*cmd, s);
  if (s.case_name.empty()) throw std::invalid_argument("--case is required");
  if (s.out.empty()) throw std::invalid_argument("--out is required");
  if (s.cells.empty()) throw std::invalid_argument("--cells is required");
  const CaseSpec& spec = find_case(s.case_name);
  const SchemeId scheme = parse_scheme(s.scheme);
  const double cfl = s.cfl > 0.0 ? s.cfl : spec.cfl;
  const OrderStudy study = order_study(spec, scheme, parse_cells(s.cells), cfl, overrides_from(s));
  write_order_csv(study, s.out);
  for (const auto& row : study.rows)
    std::printf("%6d cells  l1 %.6e\n", row.cells, row.l1[0]);
  if (study.fit.exact) std::printf("slope: exact\n");
  else std::printf("slope: %.4f\n", study.fit.slope);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"1D finite-volume solver laboratory"};
  app.require_subcommand(1);
  Settings s;

  app.add_subcommand("list-cases", "print the registered cases");
  auto* run = app.add_subcommand("run", "run one case and write the final profile");
  add_common(run, s);
  run->add_option("--cells", s.cells, "number of cells (default: the case's)");
  run->add_flag("--fine-reference", s.fine_reference, "also compute the fine-grid reference error");
  auto* order = app.add_subcommand("order", "refinement study");
  add_common(order, s);
  order->add_option("--cells", s.cells, "comma-separated cell counts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (app.got_subcommand("list-cases")) {
      for (const auto& c : case_registry()) {
        std::printf("%-22s %-10s ref=%-17s %s%s\n", c.name.c_str(), model_name(c.model).c_str(),
                    reference_name(c.reference).c_str(), c.summary.c_str(),
                    c.published_data ? "" : " [stand-in data]");
      }
      return 0;
    }
    if (app.got_subcommand("run")) return run_command(run, s);
    return order_command(order, s);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
