#include "solverlab/comparison.hpp"

#include <stdexcept>

namespace solverlab {

namespace {

struct SchemeName {
  SchemeId id;
  const char* name;
};

constexpr SchemeName kNames[] = {
    {SchemeId::kLxF, "lxf"},       {SchemeId::kRusanov, "rusanov"},
    {SchemeId::kGodunov, "godunov"}, {SchemeId::kNT, "nt"},
    {SchemeId::kMuscl, "muscl"},   {SchemeId::kRec, "rec"},
    {SchemeId::kRecFull, "rec-full"}, {SchemeId::kRecNT, "rec+nt"},
    {SchemeId::kRecFullNT, "rec-full+nt"},
};

}  // namespace

SchemeId parse_scheme(std::string_view name) {
  for (const auto& s : kNames)
    if (name == s.name) return s.id;
  throw std::invalid_argument("unknown scheme '" + std::string(name) + "'");
}

std::string scheme_name(SchemeId id) {
  for (const auto& s : kNames)
    if (s.id == id) return s.name;
  throw std::logic_error("scheme without a name");
}

const std::vector<SchemeId>& all_schemes() {
  static const std::vector<SchemeId> ids = [] {
    std::vector<SchemeId> v;
    for (const auto& s : kNames) v.push_back(s.id);
    return v;
  }();
  return ids;
}

bool is_staggered(SchemeId id) {
  return id != SchemeId::kRusanov && id != SchemeId::kGodunov && id != SchemeId::kMuscl;
}

bool is_reconstruction(SchemeId id) {
  return id == SchemeId::kRec || id == SchemeId::kRecFull || id == SchemeId::kRecNT ||
         id == SchemeId::kRecFullNT;
}

double godunov_flux(const ScalarLaw& model, double left, double right) {
  return godunov_scalar_flux(left, right, model.law);
}

StateVec<2> godunov_flux(const Isothermal& model, const StateVec<2>& left,
                         const StateVec<2>& right) {
  const auto l = IsoState::from_conserved(left);
  const auto r = IsoState::from_conserved(right);
  const auto star = iso_star(l, r, model.c);
  return model.flux(sample_iso(l, r, star, model.c, 0.0).conserved());
}

StateVec<3> godunov_flux(const IdealGas& model, const StateVec<3>& left,
                         const StateVec<3>& right) {
  const auto l = GasState::from_conserved(left, model.gamma);
  const auto r = GasState::from_conserved(right, model.gamma);
  const auto star = gas_star(l, r, model.gamma);
  return model.flux(sample_gas(l, r, star, model.gamma, 0.0).conserved(model.gamma));
}

}  // namespace solverlab
