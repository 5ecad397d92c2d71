#pragma once

// The 16 x 16 character table over aligned classes, its exact inverse, and
// decomposition of class functions into irreducible multiplicities.

#include <string>
#include <vector>

#include "reflect96/irreps.hpp"

namespace reflect96 {

struct CharacterTable {
  MatrixCyc X;      // row i-1 = chi_i over aligned classes
  MatrixCyc X_inv;  // exact inverse
  std::vector<int> class_sizes;
  std::vector<std::string> class_words;
  std::vector<int> dims;  // first column of X
  int group_order = 0;

  int count() const { return X.rows(); }
  std::vector<Cyc8> row(int i) const;  // chi_i, 1-based label
};

// Throws construction_error if X turns out singular.
CharacterTable build_table(const IrrepSet& irreps, const FiniteMatrixGroup& group,
                           const ConjClassSet& classes);

std::vector<Cyc8> character_product(const std::vector<Cyc8>& a,
                                    const std::vector<Cyc8>& b);

// Multiplicities via the inverse-table identity m = k * X^-1. Throws
// not_a_character (with the offending value) on non-integral or negative
// entries.
std::vector<Int> decompose(const std::vector<Cyc8>& values,
                           const CharacterTable& table);

// (1/|G|) * sum_c size_c * chi_c * conj(psi_c)
Cyc8 inner_product(const std::vector<Cyc8>& chi, const std::vector<Cyc8>& psi,
                   const CharacterTable& table);

// Same multiplicities via class-size-weighted inner products with each row.
std::vector<Int> decompose_by_inner_products(const std::vector<Cyc8>& values,
                                             const CharacterTable& table);

}  // namespace reflect96
