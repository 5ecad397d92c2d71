#include "reflect96/centralizer.hpp"

#include <stdexcept>

namespace reflect96 {

RecursionState step_recursion(const RecursionState& s) {
  RecursionState n;
  n.ell = s.ell + 1;
  n.d8 = s.d8 + 5 * s.d10 + 5 * s.d16;
  n.d10 = 5 * s.d8 + s.d10 + 5 * s.d16;
  n.d16 = 5 * s.d8 + 5 * s.d10 + 11 * s.d16;
  return n;
}

IntermediateRows intermediate_rows(const RecursionState& s) {
  IntermediateRows r;
  r.row_4l_plus_2[4] = s.d8;
  r.row_4l_plus_2[3] = s.d10;
  r.row_4l_plus_2[14] = s.d8 + s.d16;
  r.row_4l_plus_2[13] = s.d10 + s.d16;
  r.row_4l_plus_2[6] = s.d16;

  const Int& d4 = r.row_4l_plus_2[4];
  const Int& d3 = r.row_4l_plus_2[3];
  const Int& d14 = r.row_4l_plus_2[14];
  const Int& d13 = r.row_4l_plus_2[13];
  const Int& d6 = r.row_4l_plus_2[6];
  r.row_4l_plus_3[9] = d4 + d14;
  r.row_4l_plus_3[7] = d3 + d13;
  r.row_4l_plus_3[15] = d14 + d13 + d6;

  const Int& d9 = r.row_4l_plus_3[9];
  const Int& d7 = r.row_4l_plus_3[7];
  const Int& d15 = r.row_4l_plus_3[15];
  r.row_4l_plus_4[1] = d9;
  r.row_4l_plus_4[2] = d7;
  r.row_4l_plus_4[11] = d7 + d15;
  r.row_4l_plus_4[12] = d9 + d15;
  r.row_4l_plus_4[5] = d15;
  return r;
}

namespace {

Rat minus4_pow(long ell) {
  Int v = int_pow(Int(4), static_cast<unsigned long>(ell));
  if (ell % 2 == 1) v = -v;
  return Rat(v);
}

Rat sixteen_pow(long ell) {
  return Rat(int_pow(Int(16), static_cast<unsigned long>(ell)));
}

Int require_count(const Rat& q, const std::string& what) {
  if (!is_integer(q))
    throw arithmetic_error(what + " is not integral: " + to_string(q));
  if (q < 0) throw arithmetic_error(what + " is negative: " + to_string(q));
  return q.get_num();
}

const Rat kThird = make_rat(1, 3);
const Rat kHalf = make_rat(1, 2);

}  // namespace

Int closed_form(int label, int k) {
  if (k < 1) throw std::domain_error("level must be positive");
  int residue = k % 4;
  long ell = (k - ((residue == 0) ? 4 : residue)) / 4;
  Rat a = minus4_pow(ell);
  Rat b = sixteen_pow(ell);
  Rat v;
  switch (residue) {
    case 1:
      if (label == 8)
        v = -a * kHalf + kThird + b / 6;
      else if (label == 10)
        v = a * kHalf + kThird + b / 6;
      else if (label == 16)
        v = -kThird + b / 3;
      else
        throw std::domain_error("label " + std::to_string(label) +
                                " does not occur at levels = 1 mod 4");
      break;
    case 2:
      if (label == 4)
        v = -a * kHalf + kThird + b / 6;
      else if (label == 3)
        v = a * kHalf + kThird + b / 6;
      else if (label == 14)
        v = -a * kHalf + b * kHalf;
      else if (label == 13)
        v = a * kHalf + b * kHalf;
      else if (label == 6)
        v = -kThird + b / 3;
      else
        throw std::domain_error("label " + std::to_string(label) +
                                " does not occur at levels = 2 mod 4");
      break;
    case 3:
      if (label == 9)
        v = -a + kThird + 2 * b / 3;
      else if (label == 7)
        v = a + kThird + 2 * b / 3;
      else if (label == 15)
        v = -kThird + 4 * b / 3;
      else
        throw std::domain_error("label " + std::to_string(label) +
                                " does not occur at levels = 3 mod 4");
      break;
    default:  // residue 0
      if (label == 1)
        v = -a + kThird + 2 * b / 3;
      else if (label == 2)
        v = a + kThird + 2 * b / 3;
      else if (label == 11)
        v = a + 2 * b;
      else if (label == 12)
        v = -a + 2 * b;
      else if (label == 5)
        v = -kThird + 4 * b / 3;
      else
        throw std::domain_error("label " + std::to_string(label) +
                                " does not occur at levels = 0 mod 4");
      break;
  }
  return require_count(v, "closed form d(" + std::to_string(label) + ")_" +
                              std::to_string(k));
}

Int ComponentSizes::square_sum() const {
  Int s = d_plus * d_plus + d_minus * d_minus + d_zero * d_zero;
  if (even) s += e_plus * e_plus + e_minus * e_minus;
  return s;
}

std::map<int, Int> ComponentSizes::by_label() const {
  std::map<int, Int> m;
  for (const auto& [name, label] : label_map) {
    if (name == "d_plus")
      m[label] = d_plus;
    else if (name == "d_minus")
      m[label] = d_minus;
    else if (name == "d_zero")
      m[label] = d_zero;
    else if (name == "e_plus")
      m[label] = e_plus;
    else
      m[label] = e_minus;
  }
  return m;
}

ComponentSizes theorem_sizes(int k) {
  if (k < 1) throw std::domain_error("level must be positive");
  ComponentSizes cs;
  cs.k = k;
  cs.even = (k % 2 == 0);
  long m = cs.even ? k / 2 : (k + 1) / 2;
  Rat two_m2 = rat_pow(Rat(2), m - 2);
  Rat four_m2 = rat_pow(Rat(4), m - 2);
  cs.d_plus = require_count(two_m2 + kThird + 2 * four_m2 / 3, "d_plus");
  cs.d_minus = require_count(-two_m2 + kThird + 2 * four_m2 / 3, "d_minus");
  cs.d_zero =
      require_count(-kThird + rat_pow(Rat(4), m - 1) / 3, "d_zero");
  if (cs.even) {
    cs.e_plus = require_count(two_m2 + 2 * four_m2, "e_plus");
    cs.e_minus = require_count(-two_m2 + 2 * four_m2, "e_minus");
  }

  // Tie each named size to its irrep label by matching the closed forms:
  // the sign of the (-4)^l term flips with the parity of l = floor((k-1)/4).
  long ell = (k - 1) / 4;
  bool flip = (ell % 2 == 1);
  auto put = [&cs](const std::string& name, int label) {
    cs.label_map.emplace_back(name, label);
  };
  switch (k % 4) {
    case 1:
      put("d_plus", flip ? 8 : 10);
      put("d_minus", flip ? 10 : 8);
      put("d_zero", 16);
      break;
    case 2:
      put("d_plus", flip ? 4 : 3);
      put("d_minus", flip ? 3 : 4);
      put("d_zero", 6);
      put("e_plus", flip ? 14 : 13);
      put("e_minus", flip ? 13 : 14);
      break;
    case 3:
      put("d_plus", flip ? 9 : 7);
      put("d_minus", flip ? 7 : 9);
      put("d_zero", 15);
      break;
    default:
      put("d_plus", flip ? 1 : 2);
      put("d_minus", flip ? 2 : 1);
      put("d_zero", 5);
      put("e_plus", flip ? 12 : 11);
      put("e_minus", flip ? 11 : 12);
      break;
  }
  return cs;
}

Int dim_corollary(int k) {
  if (k < 1) throw std::domain_error("level must be positive");
  Rat v = rat_pow(Rat(2), k - 2) + rat_pow(Rat(2), 2 * k - 3) / 3 + kThird;
  return require_count(v, "centralizer dimension");
}

Int dim_character_oracle(int k, const CharacterTable& table) {
  if (k < 1) throw std::domain_error("level must be positive");
  std::vector<Cyc8> chi10 = table.row(10);
  Rat total(0);
  for (std::size_t c = 0; c < chi10.size(); ++c) {
    Cyc8 sq = chi10[c].abs_sq();
    if (!sq.is_rational())
      throw arithmetic_error("|chi_10|^2 not rational on class " +
                             std::to_string(c + 1));
    total += Rat(table.class_sizes[c]) * rat_pow(sq.as_rational(), k);
  }
  total /= table.group_order;
  return require_count(total, "character-sum dimension");
}

}  // namespace reflect96
