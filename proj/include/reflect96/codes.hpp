#pragma once

// Binary linear codes, weight enumerators, the self-dual / doubly-even
// predicates, exact substitution of 2x2 matrices into enumerators, and the
// theta-constant map sending enumerators to q-expansions of modular forms.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "reflect96/group.hpp"

namespace reflect96 {

// Enumeration guard: at most 2^24 codewords.
inline constexpr int kMaxEnumerationDim = 24;

class BinaryCode {
 public:
  int length() const { return n_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  bool bit(int row, int pos) const;
  const std::vector<std::vector<std::uint64_t>>& rows() const { return rows_; }

  // Rows as equal-length 0/1 strings; must be linearly independent over F2.
  static BinaryCode from_rows(const std::vector<std::string>& rows01);
  // One generator row per line; blank lines ignored.
  static BinaryCode parse(const std::string& text);
  // The code {0} of the given length (no generators).
  static BinaryCode zero_code(int length);

 private:
  int n_ = 0;
  std::vector<std::vector<std::uint64_t>> rows_;  // bit-packed
};

struct WeightEnumerator {
  int n = 0;                                    // code length = degree
  std::map<int, unsigned long long> counts;     // weight -> codeword count
  bool operator==(const WeightEnumerator& o) const = default;
};

WeightEnumerator weight_enumerator(const BinaryCode& c);  // resource_error over guard
bool is_self_dual(const BinaryCode& c);
bool is_doubly_even(const BinaryCode& c);

// Homogeneous bivariate polynomial of degree n over Q(z8):
// coeff[j] multiplies x^(n-j) y^j.
struct HomogPoly {
  int n = 0;
  std::vector<Cyc8> coeff;
  bool operator==(const HomogPoly& o) const = default;
};

HomogPoly to_poly(const WeightEnumerator& w);
// Formal substitution x -> a x + b y, y -> c x + d y for m = [[a,b],[c,d]].
HomogPoly substitute(const WeightEnumerator& w, const MatrixCyc& m);
bool invariant_under(const WeightEnumerator& w, const MatrixCyc& m);
bool invariant_under_group(const WeightEnumerator& w, const FiniteMatrixGroup& g);

// Series in q^(1/4): quarter[j] is the coefficient of q^(j/4).
struct QuarterQSeries {
  int order = 0;             // truncation: exponents through q^order
  std::vector<Rat> quarter;  // size 4*order + 1
};

// theta_{a0}(2 tau) for a in {0, 1}: sum over integers m of q^((m + a/2)^2).
QuarterQSeries theta_series(int a, int order);

// W(theta_00(2 tau), theta_10(2 tau)) through q^order.
QuarterQSeries modular_map(const WeightEnumerator& w, int order);

// Collapses to integer exponents; arithmetic_error if any fractional
// exponent survives (none do for lengths divisible by 8).
std::map<int, Rat> integer_q_expansion(const QuarterQSeries& s);

}  // namespace reflect96
