#pragma once

// One fully-built workspace: the group, aligned classes, the sixteen irreps,
// and the character table. Everything downstream takes this as input.

#include "reflect96/bratteli.hpp"
#include "reflect96/chartable.hpp"

namespace reflect96 {

struct Context {
  FiniteMatrixGroup group;
  ConjClassSet classes;  // aligned to the representative words
  IrrepSet irreps;
  CharacterTable table;

  static Context build(std::size_t max_closure = kDefaultClosureBound);
};

}  // namespace reflect96
