#include "reflect96/refdata.hpp"

namespace reflect96::refdata {

namespace {

Cyc8 half_one_plus_i() {
  // (1 + i)/2 = 1/2 + (1/2) z^2
  return Cyc8(make_rat(1, 2), Rat(0), make_rat(1, 2), Rat(0));
}

}  // namespace

MatrixCyc generator_T() {
  Cyc8 w = half_one_plus_i();
  return MatrixCyc::from_rows({{w, w}, {w, -w}});
}

MatrixCyc generator_D() {
  return MatrixCyc::from_rows({{Cyc8(1), Cyc8(0)}, {Cyc8(0), Cyc8::i()}});
}

const std::vector<std::string>& class_words() {
  static const std::vector<std::string> w = {
      "1",   "T",   "T2",  "T3",  "T4",  "T6",  "D",  "DT",
      "DT2", "DT3", "DT4", "DT5", "DT6", "DT7", "D2", "D2T2"};
  return w;
}

const std::array<int, 16>& order_row() {
  static const std::array<int, 16> o = {1, 8, 4, 8, 2, 4, 4, 6,
                                        4, 12, 4, 3, 4, 12, 2, 4};
  return o;
}

const std::array<int, 16>& dimension_vector() {
  static const std::array<int, 16> d = {1, 1, 1, 1, 2, 2, 2, 2,
                                        2, 2, 3, 3, 3, 3, 4, 4};
  return d;
}

const std::array<int, 16>& image_orders() {
  static const std::array<int, 16> o = {1,  2,  4,  4,  6,  12, 96, 96,
                                        96, 96, 24, 24, 48, 48, 96, 96};
  return o;
}

const std::array<std::array<GaussInt, 16>, 16>& character_table() {
  static const std::array<std::array<GaussInt, 16>, 16> x = {{
      // chi_1
      {{{1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0},
        {1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}}},
      // chi_2
      {{{1, 0}, {-1, 0}, {1, 0}, {-1, 0}, {1, 0}, {1, 0}, {-1, 0}, {1, 0},
        {-1, 0}, {1, 0}, {-1, 0}, {1, 0}, {-1, 0}, {1, 0}, {1, 0}, {1, 0}}},
      // chi_3
      {{{1, 0}, {0, -1}, {-1, 0}, {0, 1}, {1, 0}, {-1, 0}, {0, 1}, {1, 0},
        {0, -1}, {-1, 0}, {0, 1}, {1, 0}, {0, -1}, {-1, 0}, {-1, 0}, {1, 0}}},
      // chi_4
      {{{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 0}, {-1, 0}, {0, -1}, {1, 0},
        {0, 1}, {-1, 0}, {0, -1}, {1, 0}, {0, 1}, {-1, 0}, {-1, 0}, {1, 0}}},
      // chi_5
      {{{2, 0}, {0, 0}, {2, 0}, {0, 0}, {2, 0}, {2, 0}, {0, 0}, {-1, 0},
        {0, 0}, {-1, 0}, {0, 0}, {-1, 0}, {0, 0}, {-1, 0}, {2, 0}, {2, 0}}},
      // chi_6
      {{{2, 0}, {0, 0}, {-2, 0}, {0, 0}, {2, 0}, {-2, 0}, {0, 0}, {-1, 0},
        {0, 0}, {1, 0}, {0, 0}, {-1, 0}, {0, 0}, {1, 0}, {-2, 0}, {2, 0}}},
      // chi_7
      {{{2, 0}, {0, 0}, {0, -2}, {0, 0}, {-2, 0}, {0, 2}, {-1, 1}, {1, 0},
        {1, 1}, {0, -1}, {1, -1}, {-1, 0}, {-1, -1}, {0, 1}, {0, 0}, {0, 0}}},
      // chi_8
      {{{2, 0}, {0, 0}, {0, 2}, {0, 0}, {-2, 0}, {0, -2}, {-1, -1}, {1, 0},
        {1, -1}, {0, 1}, {1, 1}, {-1, 0}, {-1, 1}, {0, -1}, {0, 0}, {0, 0}}},
      // chi_9
      {{{2, 0}, {0, 0}, {0, -2}, {0, 0}, {-2, 0}, {0, 2}, {1, -1}, {1, 0},
        {-1, -1}, {0, -1}, {-1, 1}, {-1, 0}, {1, 1}, {0, 1}, {0, 0}, {0, 0}}},
      // chi_10
      {{{2, 0}, {0, 0}, {0, 2}, {0, 0}, {-2, 0}, {0, -2}, {1, 1}, {1, 0},
        {-1, 1}, {0, 1}, {-1, -1}, {-1, 0}, {1, -1}, {0, -1}, {0, 0}, {0, 0}}},
      // chi_11
      {{{3, 0}, {1, 0}, {3, 0}, {1, 0}, {3, 0}, {3, 0}, {-1, 0}, {0, 0},
        {-1, 0}, {0, 0}, {-1, 0}, {0, 0}, {-1, 0}, {0, 0}, {-1, 0}, {-1, 0}}},
      // chi_12
      {{{3, 0}, {-1, 0}, {3, 0}, {-1, 0}, {3, 0}, {3, 0}, {1, 0}, {0, 0},
        {1, 0}, {0, 0}, {1, 0}, {0, 0}, {1, 0}, {0, 0}, {-1, 0}, {-1, 0}}},
      // chi_13
      {{{3, 0}, {0, 1}, {-3, 0}, {0, -1}, {3, 0}, {-3, 0}, {0, 1}, {0, 0},
        {0, -1}, {0, 0}, {0, 1}, {0, 0}, {0, -1}, {0, 0}, {1, 0}, {-1, 0}}},
      // chi_14
      {{{3, 0}, {0, -1}, {-3, 0}, {0, 1}, {3, 0}, {-3, 0}, {0, -1}, {0, 0},
        {0, 1}, {0, 0}, {0, -1}, {0, 0}, {0, 1}, {0, 0}, {1, 0}, {-1, 0}}},
      // chi_15
      {{{4, 0}, {0, 0}, {0, -4}, {0, 0}, {-4, 0}, {0, 4}, {0, 0}, {-1, 0},
        {0, 0}, {0, 1}, {0, 0}, {1, 0}, {0, 0}, {0, -1}, {0, 0}, {0, 0}}},
      // chi_16
      {{{4, 0}, {0, 0}, {0, 4}, {0, 0}, {-4, 0}, {0, -4}, {0, 0}, {-1, 0},
        {0, 0}, {0, -1}, {0, 0}, {1, 0}, {0, 0}, {0, 1}, {0, 0}, {0, 0}}},
  }};
  return x;
}

Cyc8 gauss_to_cyc(const GaussInt& g) {
  return Cyc8(Rat(g.first), Rat(0), Rat(g.second), Rat(0));
}

const std::array<std::vector<int>, 16>& branching_rule() {
  static const std::array<std::vector<int>, 16> b = {{
      {10},          // chi_10 * chi_1
      {8},           // * chi_2
      {7},           // * chi_3
      {9},           // * chi_4
      {16},          // * chi_5
      {15},          // * chi_6
      {2, 11},       // * chi_7
      {4, 14},       // * chi_8
      {1, 12},       // * chi_9
      {3, 13},       // * chi_10
      {8, 16},       // * chi_11
      {10, 16},      // * chi_12
      {7, 15},       // * chi_13
      {9, 15},       // * chi_14
      {5, 11, 12},   // * chi_15
      {6, 13, 14},   // * chi_16
  }};
  return b;
}

namespace {

MatrixCyc scaled_int_matrix(const Cyc8& s, std::vector<std::vector<int>> rows) {
  MatrixCyc m(static_cast<int>(rows.size()),
              static_cast<int>(rows.front().size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      m.at(i, j) =
          s * Cyc8(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  return m;
}

}  // namespace

MatrixCyc rho13_T() {
  Cyc8 half_i(Rat(0), Rat(0), make_rat(1, 2), Rat(0));  // i/2
  return scaled_int_matrix(half_i, {{1, 2, 1}, {1, 0, -1}, {1, -2, 1}});
}

MatrixCyc rho13_D() {
  return MatrixCyc::diagonal({Cyc8(1), Cyc8::i(), Cyc8(-1)});
}

MatrixCyc rho15_T() {
  // (-1 + i)/4
  Cyc8 w(make_rat(-1, 4), Rat(0), make_rat(1, 4), Rat(0));
  return scaled_int_matrix(
      w, {{1, 3, 3, 1}, {1, 1, -1, -1}, {1, -1, -1, 1}, {1, -3, 3, -1}});
}

MatrixCyc rho15_D() {
  return MatrixCyc::diagonal({Cyc8(1), Cyc8::i(), Cyc8(-1), -Cyc8::i()});
}

MatrixCyc rho5_T() {
  return scaled_int_matrix(Cyc8(make_rat(-1, 2)), {{1, 1}, {3, -1}});
}

MatrixCyc rho5_D() { return MatrixCyc::diagonal({Cyc8(1), Cyc8(-1)}); }

const std::vector<std::vector<std::pair<int, long>>>& diagram_rows() {
  static const std::vector<std::vector<std::pair<int, long>>> rows = {
      {{10, 1}},
      {{3, 1}, {13, 1}},
      {{7, 2}, {15, 1}},
      {{2, 2}, {5, 1}, {11, 3}, {12, 1}},
      {{8, 5}, {10, 1}, {16, 5}},
      {{3, 1}, {4, 5}, {6, 5}, {13, 6}, {14, 10}},
      {{7, 7}, {9, 15}, {15, 21}},
      {{1, 15}, {2, 7}, {5, 21}, {11, 28}, {12, 36}},
      {{8, 35}, {10, 51}, {16, 85}},
  };
  return rows;
}

const std::array<long, 9>& diagram_square_sums() {
  static const std::array<long, 9> s = {1,   2,   5,    15,  51,
                                             187, 715, 2795, 11051};
  return s;
}

const std::vector<std::string>& e8_generator_rows() {
  static const std::vector<std::string> rows = {"10000111", "01001011",
                                                "00101101", "00011110"};
  return rows;
}

}  // namespace reflect96::refdata
