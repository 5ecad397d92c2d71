#include "reflect96/matrix.hpp"

#include <utility>

namespace reflect96 {

MatrixCyc::MatrixCyc(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw dimension_error("negative matrix dimension");
  a_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
}

MatrixCyc MatrixCyc::identity(int n) {
  MatrixCyc m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

MatrixCyc MatrixCyc::from_rows(
    std::initializer_list<std::initializer_list<Cyc8>> rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  MatrixCyc m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c)
      throw dimension_error("ragged matrix literal");
    int j = 0;
    for (const auto& e : row) m.at(i, j++) = e;
    ++i;
  }
  return m;
}

MatrixCyc MatrixCyc::diagonal(const std::vector<Cyc8>& d) {
  int n = static_cast<int>(d.size());
  MatrixCyc m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = d[static_cast<std::size_t>(i)];
  return m;
}

MatrixCyc MatrixCyc::operator-() const {
  MatrixCyc m(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = -a_[k];
  return m;
}

MatrixCyc operator+(const MatrixCyc& a, const MatrixCyc& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw dimension_error("matrix shape mismatch in addition");
  MatrixCyc m(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.a_.size(); ++k) m.a_[k] = a.a_[k] + b.a_[k];
  return m;
}

MatrixCyc operator-(const MatrixCyc& a, const MatrixCyc& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw dimension_error("matrix shape mismatch in subtraction");
  MatrixCyc m(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.a_.size(); ++k) m.a_[k] = a.a_[k] - b.a_[k];
  return m;
}

MatrixCyc operator*(const MatrixCyc& a, const MatrixCyc& b) {
  if (a.cols_ != b.rows_)
    throw dimension_error("matrix shape mismatch in product");
  MatrixCyc m(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Cyc8& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const Cyc8& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        m.at(i, j) += aik * bkj;
      }
    }
  return m;
}

MatrixCyc operator*(const Cyc8& s, const MatrixCyc& a) {
  MatrixCyc m(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.a_.size(); ++k) m.a_[k] = s * a.a_[k];
  return m;
}

bool operator==(const MatrixCyc& a, const MatrixCyc& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

MatrixCyc MatrixCyc::transpose() const {
  MatrixCyc m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

MatrixCyc MatrixCyc::adjoint() const {
  MatrixCyc m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j).conj();
  return m;
}

Cyc8 MatrixCyc::trace() const {
  if (!is_square()) throw dimension_error("trace of non-square matrix");
  Cyc8 t;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

namespace {

Cyc8 det_rec(const MatrixCyc& a, std::vector<int>& cols, int row) {
  int n = a.rows();
  if (row == n) return Cyc8(1);
  Cyc8 sum;
  for (std::size_t pick = 0; pick < cols.size(); ++pick) {
    if (cols[pick] < 0) continue;
    int j = cols[pick];
    const Cyc8& entry = a.at(row, j);
    if (entry.is_zero()) continue;
    int live = 0;
    for (std::size_t q = 0; q < pick; ++q)
      if (cols[q] >= 0) ++live;
    cols[pick] = -1 - j;
    Cyc8 sub = det_rec(a, cols, row + 1);
    cols[pick] = j;
    Cyc8 term = entry * sub;
    if (live % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

}  // namespace

Cyc8 MatrixCyc::det() const {
  if (!is_square()) throw dimension_error("determinant of non-square matrix");
  std::vector<int> cols(static_cast<std::size_t>(cols_));
  for (int j = 0; j < cols_; ++j) cols[static_cast<std::size_t>(j)] = j;
  return det_rec(*this, cols, 0);
}

bool MatrixCyc::is_identity() const {
  if (!is_square()) return false;
  return *this == identity(rows_);
}

std::string MatrixCyc::key() const {
  std::string s = std::to_string(rows_) + "x" + std::to_string(cols_);
  for (const auto& e : a_) {
    s += '|';
    s += e.str();
  }
  return s;
}

MatrixCyc kron(const MatrixCyc& a, const MatrixCyc& b) {
  MatrixCyc m(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (int p = 0; p < b.rows(); ++p)
        for (int q = 0; q < b.cols(); ++q)
          m.at(i * b.rows() + p, j * b.cols() + q) = a.at(i, j) * b.at(p, q);
    }
  return m;
}

namespace {

// Gauss-Jordan reduction of [B | W]; returns pivot row of each B-column.
std::vector<int> eliminate(MatrixCyc& aug, int bcols) {
  int n = aug.rows();
  std::vector<int> pivot_row(static_cast<std::size_t>(bcols), -1);
  int row = 0;
  for (int col = 0; col < bcols && row < n; ++col) {
    int p = -1;
    for (int r = row; r < n; ++r)
      if (!aug.at(r, col).is_zero()) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < aug.cols(); ++j) std::swap(aug.at(p, j), aug.at(row, j));
    Cyc8 inv = aug.at(row, col).inverse();
    for (int j = 0; j < aug.cols(); ++j) aug.at(row, j) = inv * aug.at(row, j);
    for (int r = 0; r < n; ++r) {
      if (r == row || aug.at(r, col).is_zero()) continue;
      Cyc8 f = aug.at(r, col);
      for (int j = 0; j < aug.cols(); ++j)
        aug.at(r, j) -= f * aug.at(row, j);
    }
    pivot_row[static_cast<std::size_t>(col)] = row;
    ++row;
  }
  return pivot_row;
}

}  // namespace

MatrixCyc solve_exact(const MatrixCyc& B, const MatrixCyc& W) {
  if (B.rows() != W.rows()) throw dimension_error("solve: row count mismatch");
  int n = B.rows(), m = B.cols(), p = W.cols();
  MatrixCyc aug(n, m + p);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) aug.at(i, j) = B.at(i, j);
    for (int j = 0; j < p; ++j) aug.at(i, m + j) = W.at(i, j);
  }
  std::vector<int> pivot_row = eliminate(aug, m);
  for (int j = 0; j < m; ++j)
    if (pivot_row[static_cast<std::size_t>(j)] < 0)
      throw construction_error("solve: basis columns are linearly dependent");
  // Non-pivot rows must have vanished entirely for the system to be solvable.
  for (int r = m; r < n; ++r)
    for (int j = 0; j < p; ++j)
      if (!aug.at(r, m + j).is_zero())
        throw construction_error("solve: inconsistent system");
  MatrixCyc R(m, p);
  for (int j = 0; j < m; ++j)
    for (int q = 0; q < p; ++q)
      R.at(j, q) = aug.at(pivot_row[static_cast<std::size_t>(j)], m + q);
  return R;
}

MatrixCyc inverse(const MatrixCyc& a) {
  if (!a.is_square()) throw dimension_error("inverse of non-square matrix");
  try {
    return solve_exact(a, MatrixCyc::identity(a.rows()));
  } catch (const construction_error&) {
    throw construction_error("inverse: singular matrix");
  }
}

MatrixCyc restrict_to_span(const MatrixCyc& m, const MatrixCyc& basis) {
  if (m.cols() != basis.rows())
    throw dimension_error("restrict: shape mismatch");
  try {
    return solve_exact(basis, m * basis);
  } catch (const construction_error&) {
    throw construction_error("restrict: span is not invariant");
  }
}

PolyCyc::PolyCyc(std::vector<Cyc8> coeffs) : c_(std::move(coeffs)) { trim(); }

PolyCyc PolyCyc::constant(const Cyc8& c) { return PolyCyc({c}); }

Cyc8 PolyCyc::coeff(int d) const {
  if (d < 0 || d >= static_cast<int>(c_.size())) return Cyc8();
  return c_[static_cast<std::size_t>(d)];
}

void PolyCyc::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PolyCyc operator+(const PolyCyc& a, const PolyCyc& b) {
  std::vector<Cyc8> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k < a.c_.size()) c[k] += a.c_[k];
    if (k < b.c_.size()) c[k] += b.c_[k];
  }
  return PolyCyc(std::move(c));
}

PolyCyc operator-(const PolyCyc& a, const PolyCyc& b) {
  std::vector<Cyc8> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k < a.c_.size()) c[k] += a.c_[k];
    if (k < b.c_.size()) c[k] -= b.c_[k];
  }
  return PolyCyc(std::move(c));
}

PolyCyc operator*(const PolyCyc& a, const PolyCyc& b) {
  if (a.is_zero() || b.is_zero()) return PolyCyc();
  std::vector<Cyc8> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return PolyCyc(std::move(c));
}

namespace {

PolyCyc poly_det_rec(const std::vector<std::vector<PolyCyc>>& a,
                     std::vector<int>& cols, std::size_t row) {
  if (row == a.size()) return PolyCyc::constant(Cyc8(1));
  PolyCyc sum;
  for (std::size_t pick = 0; pick < cols.size(); ++pick) {
    if (cols[pick] < 0) continue;
    int j = cols[pick];
    const PolyCyc& entry = a[row][static_cast<std::size_t>(j)];
    if (entry.is_zero()) continue;
    int live = 0;
    for (std::size_t q = 0; q < pick; ++q)
      if (cols[q] >= 0) ++live;
    cols[pick] = -1 - j;
    PolyCyc sub = poly_det_rec(a, cols, row + 1);
    cols[pick] = j;
    PolyCyc term = entry * sub;
    if (live % 2 == 1) term = PolyCyc() - term;
    sum = sum + term;
  }
  return sum;
}

}  // namespace

PolyCyc charpoly_det(const MatrixCyc& a) {
  if (!a.is_square()) throw dimension_error("charpoly of non-square matrix");
  int n = a.rows();
  std::vector<std::vector<PolyCyc>> m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    m[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      std::vector<Cyc8> coeffs = {i == j ? Cyc8(1) : Cyc8(), -a.at(i, j)};
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          PolyCyc(std::move(coeffs));
    }
  }
  std::vector<int> cols(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) cols[static_cast<std::size_t>(j)] = j;
  return poly_det_rec(m, cols, 0);
}

}  // namespace reflect96
