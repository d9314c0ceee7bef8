#ifndef SOLVERLAB_TYPED_CELLS_HPP_
#define SOLVERLAB_TYPED_CELLS_HPP_

// Conversions between typed fields and the model-agnostic Table.

#include "solverlab/harness.hpp"
#include "solverlab/state.hpp"

namespace solverlab {

template <class State>
CellValues to_values(const State& s) {
  CellValues v{};
  for (std::size_t c = 0; c < Components<State>::count; ++c) v[c] = Components<State>::get(s, c);
  return v;
}

template <class State>
State from_values(const CellValues& v) {
  State s{};
  for (std::size_t c = 0; c < Components<State>::count; ++c) Components<State>::set(s, c, v[c]);
  return s;
}

template <class State>
Table to_table(const Field<State>& f) {
  Table t;
  t.reserve(f.size());
  for (const auto& s : f) t.push_back(to_values(s));
  return t;
}

template <class State>
Field<State> from_table(const Table& t) {
  Field<State> f;
  f.reserve(t.size());
  for (const auto& v : t) f.push_back(from_values<State>(v));
  return f;
}

}  // namespace solverlab

#endif  // SOLVERLAB_TYPED_CELLS_HPP_
