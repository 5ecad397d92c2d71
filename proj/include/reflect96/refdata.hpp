#pragma once

// Reference data for the order-96 unitary reflection group H1
// (Shephard-Todd No. 8): generators, class representative words, the
// expected character table, branching rule, diagram rows, and image orders.
// The verification layer compares everything it computes against these.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "reflect96/matrix.hpp"

namespace reflect96::refdata {

MatrixCyc generator_T();
MatrixCyc generator_D();
inline const std::string& generator_letters() {
  static const std::string s = "TD";
  return s;
}

const std::vector<std::string>& class_words();  // "1", "T", ..., "D2T2"
const std::array<int, 16>& order_row();         // element orders per class
const std::array<int, 16>& dimension_vector();  // irrep dimensions, label order
const std::array<int, 16>& image_orders();      // |rho_i(H1)|, label order

// Expected character values as Gaussian integers (re, im), chi_i by row over
// aligned classes; every table entry lies in Z[i].
using GaussInt = std::pair<int, int>;
const std::array<std::array<GaussInt, 16>, 16>& character_table();
Cyc8 gauss_to_cyc(const GaussInt& g);

// Irreducible constituents of chi_10 * chi_j (all multiplicities are 1).
const std::array<std::vector<int>, 16>& branching_rule();

// Expected generator images printed for rho_5, rho_13, rho_15.
MatrixCyc rho13_T();
MatrixCyc rho13_D();
MatrixCyc rho15_T();
MatrixCyc rho15_D();
MatrixCyc rho5_T();
MatrixCyc rho5_D();

// Diagram rows 1..9: (label, multiplicity) pairs, and their square sums.
const std::vector<std::vector<std::pair<int, long>>>& diagram_rows();
const std::array<long, 9>& diagram_square_sums();

const std::vector<std::string>& e8_generator_rows();

}  // namespace reflect96::refdata
