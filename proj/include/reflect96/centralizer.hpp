#pragma once

// Sizes of the simple components of the centralizer algebra
// A_k = End_H1(V10^(x)k): the level recursion on (d8, d10, d16), the
// intermediate-row systems, closed forms, the uniform two-case size formulas,
// the total-dimension formula, and an independent character-sum route.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "reflect96/chartable.hpp"

namespace reflect96 {

struct RecursionState {
  long ell = 0;   // state describes level 4*ell + 1
  Int d8, d10, d16;
};

inline RecursionState initial_state() { return {0, Int(0), Int(1), Int(0)}; }

// One period of the diagram: level 4l+1 -> level 4(l+1)+1.
RecursionState step_recursion(const RecursionState& s);

struct IntermediateRows {
  std::map<int, Int> row_4l_plus_2, row_4l_plus_3, row_4l_plus_4;
};

// The three following rows derived linearly from a (d8, d10, d16) state.
IntermediateRows intermediate_rows(const RecursionState& s);

// Closed-form multiplicity of rho_label at level k. std::domain_error when
// the label does not occur at k's residue mod 4; arithmetic_error if the
// exact rational evaluation fails to be a non-negative integer.
Int closed_form(int label, int k);

struct ComponentSizes {
  int k = 0;
  bool even = false;  // k = 2m has the two extra e components
  Int d_plus, d_minus, d_zero, e_plus, e_minus;
  // Which irrep label each named size counts; fixed by matching the closed
  // forms, so it depends on k mod 4 and on the parity of floor((k-1)/4).
  std::vector<std::pair<std::string, int>> label_map;

  Int square_sum() const;
  std::map<int, Int> by_label() const;
};

ComponentSizes theorem_sizes(int k);

// 2^(k-2) + 2^(2k-3)/3 + 1/3, evaluated exactly (k >= 1).
Int dim_corollary(int k);

// (1/|G|) * sum over classes of size * |chi_10|^(2k); exact.
Int dim_character_oracle(int k, const CharacterTable& table);

}  // namespace reflect96
