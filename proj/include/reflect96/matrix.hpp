#pragma once

// Dense exact matrices over Q(z8), plus polynomials in one variable t
// (for characteristic determinants det(I - t*A)).

#include <initializer_list>
#include <string>
#include <vector>

#include "reflect96/cyc8.hpp"

namespace reflect96 {

class MatrixCyc {
 public:
  MatrixCyc() = default;
  MatrixCyc(int rows, int cols);
  static MatrixCyc identity(int n);
  static MatrixCyc from_rows(std::initializer_list<std::initializer_list<Cyc8>> rows);
  static MatrixCyc diagonal(const std::vector<Cyc8>& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Cyc8& at(int i, int j) { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
  const Cyc8& at(int i, int j) const {
    return a_[static_cast<std::size_t>(i * cols_ + j)];
  }

  MatrixCyc operator-() const;
  friend MatrixCyc operator+(const MatrixCyc& a, const MatrixCyc& b);
  friend MatrixCyc operator-(const MatrixCyc& a, const MatrixCyc& b);
  friend MatrixCyc operator*(const MatrixCyc& a, const MatrixCyc& b);
  friend MatrixCyc operator*(const Cyc8& s, const MatrixCyc& a);
  friend bool operator==(const MatrixCyc& a, const MatrixCyc& b);
  friend bool operator!=(const MatrixCyc& a, const MatrixCyc& b) { return !(a == b); }

  MatrixCyc transpose() const;
  MatrixCyc adjoint() const;  // conjugate transpose
  Cyc8 trace() const;
  Cyc8 det() const;  // cofactor expansion; intended for small n
  bool is_identity() const;
  bool is_square() const { return rows_ == cols_; }

  // Canonical identity string; doubles as a hash key for closure maps.
  std::string key() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Cyc8> a_;
};

MatrixCyc kron(const MatrixCyc& a, const MatrixCyc& b);

// Solves B * R = W exactly (B must have full column rank and the system must
// be consistent); throws construction_error otherwise.
MatrixCyc solve_exact(const MatrixCyc& B, const MatrixCyc& W);

// Exact inverse by Gauss-Jordan elimination with first-nonzero pivoting.
// Throws construction_error when singular, dimension_error when not square.
MatrixCyc inverse(const MatrixCyc& a);

// Matrix of the action of m on the column span of `basis`, i.e. the R with
// m * basis = basis * R. Throws construction_error when the span is not
// invariant under m.
MatrixCyc restrict_to_span(const MatrixCyc& m, const MatrixCyc& basis);

class PolyCyc {
 public:
  PolyCyc() = default;
  explicit PolyCyc(std::vector<Cyc8> coeffs);
  static PolyCyc constant(const Cyc8& c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  Cyc8 coeff(int d) const;
  bool is_zero() const { return c_.empty(); }

  friend PolyCyc operator+(const PolyCyc& a, const PolyCyc& b);
  friend PolyCyc operator-(const PolyCyc& a, const PolyCyc& b);
  friend PolyCyc operator*(const PolyCyc& a, const PolyCyc& b);
  friend bool operator==(const PolyCyc& a, const PolyCyc& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Cyc8> c_;  // c_[d] is the coefficient of t^d; trailing zeros trimmed
};

// det(I - t*a) as a polynomial in t; dimension_error when a is not square.
PolyCyc charpoly_det(const MatrixCyc& a);

}  // namespace reflect96
