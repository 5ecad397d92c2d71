#include "reflect96/codes.hpp"

#include <bit>
#include <sstream>

namespace reflect96 {

namespace {

int popcount_row(const std::vector<std::uint64_t>& row) {
  int c = 0;
  for (std::uint64_t w : row) c += std::popcount(w);
  return c;
}

std::vector<std::uint64_t> xor_rows(std::vector<std::uint64_t> a,
                                    const std::vector<std::uint64_t>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] ^= b[k];
  return a;
}

int dot2(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  int c = 0;
  for (std::size_t k = 0; k < a.size(); ++k) c += std::popcount(a[k] & b[k]);
  return c & 1;
}

}  // namespace

bool BinaryCode::bit(int row, int pos) const {
  return (rows_[static_cast<std::size_t>(row)][static_cast<std::size_t>(pos / 64)] >>
          (pos % 64)) & 1;
}

BinaryCode BinaryCode::from_rows(const std::vector<std::string>& rows01) {
  if (rows01.empty()) throw parse_error("code needs at least one generator row");
  BinaryCode c;
  c.n_ = static_cast<int>(rows01.front().size());
  if (c.n_ == 0) throw parse_error("empty generator row");
  std::size_t words = static_cast<std::size_t>((c.n_ + 63) / 64);
  for (const std::string& r : rows01) {
    if (static_cast<int>(r.size()) != c.n_)
      throw parse_error("generator rows differ in length");
    std::vector<std::uint64_t> packed(words, 0);
    for (int p = 0; p < c.n_; ++p) {
      char ch = r[static_cast<std::size_t>(p)];
      if (ch == '1')
        packed[static_cast<std::size_t>(p / 64)] |= std::uint64_t{1} << (p % 64);
      else if (ch != '0')
        throw parse_error(std::string("generator rows must be 0/1, got '") + ch +
                          "'");
    }
    c.rows_.push_back(std::move(packed));
  }
  // Row independence over F2 via elimination on a scratch copy.
  std::vector<std::vector<std::uint64_t>> scratch = c.rows_;
  int rank = 0;
  for (int p = 0; p < c.n_ && rank < static_cast<int>(scratch.size()); ++p) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(scratch.size()); ++r)
      if ((scratch[static_cast<std::size_t>(r)][static_cast<std::size_t>(p / 64)] >>
           (p % 64)) & 1) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(scratch[static_cast<std::size_t>(pivot)],
              scratch[static_cast<std::size_t>(rank)]);
    for (int r = 0; r < static_cast<int>(scratch.size()); ++r)
      if (r != rank &&
          ((scratch[static_cast<std::size_t>(r)][static_cast<std::size_t>(p / 64)] >>
            (p % 64)) & 1))
        scratch[static_cast<std::size_t>(r)] =
            xor_rows(scratch[static_cast<std::size_t>(r)],
                     scratch[static_cast<std::size_t>(rank)]);
    ++rank;
  }
  if (rank != c.dim())
    throw construction_error("generator rows are linearly dependent over F2");
  return c;
}

BinaryCode BinaryCode::zero_code(int length) {
  if (length < 1) throw parse_error("code length must be positive");
  BinaryCode c;
  c.n_ = length;
  return c;
}

BinaryCode BinaryCode::parse(const std::string& text) {
  std::vector<std::string> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                             line.back() == '\t'))
      line.pop_back();
    if (!line.empty()) rows.push_back(line);
  }
  return from_rows(rows);
}

namespace {

void require_enumerable(const BinaryCode& c) {
  if (c.dim() > kMaxEnumerationDim)
    throw resource_error("codeword enumeration over 2^" +
                         std::to_string(c.dim()) + " exceeds the guard");
}

}  // namespace

WeightEnumerator weight_enumerator(const BinaryCode& c) {
  require_enumerable(c);
  WeightEnumerator w;
  w.n = c.length();
  int k = c.dim();
  std::size_t words = static_cast<std::size_t>((c.length() + 63) / 64);
  std::vector<std::uint64_t> current(words, 0);
  // Gray-code walk: each step toggles one generator.
  w.counts[0] += 1;
  unsigned long long total = 1ULL << k;
  for (unsigned long long step = 1; step < total; ++step) {
    int flip = std::countr_zero(step);
    current = xor_rows(std::move(current), c.rows()[static_cast<std::size_t>(flip)]);
    w.counts[popcount_row(current)] += 1;
  }
  return w;
}

bool is_self_dual(const BinaryCode& c) {
  if (c.length() != 2 * c.dim()) return false;
  for (int a = 0; a < c.dim(); ++a)
    for (int b = a; b < c.dim(); ++b)
      if (dot2(c.rows()[static_cast<std::size_t>(a)],
               c.rows()[static_cast<std::size_t>(b)]) != 0)
        return false;
  return true;
}

bool is_doubly_even(const BinaryCode& c) {
  require_enumerable(c);
  std::size_t words = static_cast<std::size_t>((c.length() + 63) / 64);
  std::vector<std::uint64_t> current(words, 0);
  unsigned long long total = 1ULL << c.dim();
  for (unsigned long long step = 1; step < total; ++step) {
    int flip = std::countr_zero(step);
    current = xor_rows(std::move(current), c.rows()[static_cast<std::size_t>(flip)]);
    if (popcount_row(current) % 4 != 0) return false;
  }
  return true;
}

HomogPoly to_poly(const WeightEnumerator& w) {
  HomogPoly p;
  p.n = w.n;
  p.coeff.assign(static_cast<std::size_t>(w.n) + 1, Cyc8());
  for (const auto& [weight, count] : w.counts)
    p.coeff[static_cast<std::size_t>(weight)] += Cyc8(Rat(static_cast<long>(count)));
  return p;
}

namespace {

// Coefficients of (u x + v y)^e.
std::vector<Cyc8> binomial_power(const Cyc8& u, const Cyc8& v, int e) {
  std::vector<Cyc8> c = {Cyc8(1)};
  for (int k = 0; k < e; ++k) {
    std::vector<Cyc8> next(c.size() + 1);
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j] += c[j] * u;
      next[j + 1] += c[j] * v;
    }
    c = std::move(next);
  }
  return c;
}

}  // namespace

HomogPoly substitute(const WeightEnumerator& w, const MatrixCyc& m) {
  if (m.rows() != 2 || m.cols() != 2)
    throw dimension_error("substitution needs a 2x2 matrix");
  HomogPoly p;
  p.n = w.n;
  p.coeff.assign(static_cast<std::size_t>(w.n) + 1, Cyc8());
  const Cyc8 &a = m.at(0, 0), &b = m.at(0, 1), &c = m.at(1, 0), &d = m.at(1, 1);
  for (const auto& [weight, count] : w.counts) {
    std::vector<Cyc8> xs = binomial_power(a, b, w.n - weight);  // (a x + b y)^(n-w)
    std::vector<Cyc8> ys = binomial_power(c, d, weight);        // (c x + d y)^w
    Cyc8 cnt(Rat(static_cast<long>(count)));
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = 0; j < ys.size(); ++j)
        p.coeff[i + j] += cnt * xs[i] * ys[j];
  }
  return p;
}

bool invariant_under(const WeightEnumerator& w, const MatrixCyc& m) {
  return substitute(w, m) == to_poly(w);
}

bool invariant_under_group(const WeightEnumerator& w, const FiniteMatrixGroup& g) {
  for (const auto& m : g.elements())
    if (!invariant_under(w, m)) return false;
  return true;
}

QuarterQSeries theta_series(int a, int order) {
  if (a != 0 && a != 1) throw dimension_error("theta index must be 0 or 1");
  if (order < 1) throw dimension_error("series order must be positive");
  QuarterQSeries s;
  s.order = order;
  s.quarter.assign(static_cast<std::size_t>(4 * order) + 1, Rat(0));
  // Exponent of the m-th term is (m + a/2)^2 = (2m + a)^2 / 4.
  for (long m = 0;; ++m) {
    long num = (2 * m + a) * (2 * m + a);  // quarter units
    if (num > 4L * order) break;
    s.quarter[static_cast<std::size_t>(num)] += 1;
    if (m > 0 || a == 1) {
      // the mirrored index -m-a contributes the same exponent
      s.quarter[static_cast<std::size_t>(num)] += 1;
    }
  }
  return s;
}

namespace {

QuarterQSeries series_mul(const QuarterQSeries& x, const QuarterQSeries& y) {
  QuarterQSeries r;
  r.order = x.order;
  r.quarter.assign(x.quarter.size(), Rat(0));
  for (std::size_t i = 0; i < x.quarter.size(); ++i) {
    if (x.quarter[i] == 0) continue;
    for (std::size_t j = 0; i + j < r.quarter.size() && j < y.quarter.size(); ++j) {
      if (y.quarter[j] == 0) continue;
      r.quarter[i + j] += x.quarter[i] * y.quarter[j];
    }
  }
  return r;
}

QuarterQSeries series_one(int order) {
  QuarterQSeries r;
  r.order = order;
  r.quarter.assign(static_cast<std::size_t>(4 * order) + 1, Rat(0));
  r.quarter[0] = 1;
  return r;
}

}  // namespace

QuarterQSeries modular_map(const WeightEnumerator& w, int order) {
  QuarterQSeries t00 = theta_series(0, order);
  QuarterQSeries t10 = theta_series(1, order);
  std::vector<QuarterQSeries> t00_pow = {series_one(order)};
  std::vector<QuarterQSeries> t10_pow = {series_one(order)};
  for (int e = 1; e <= w.n; ++e) {
    t00_pow.push_back(series_mul(t00_pow.back(), t00));
    t10_pow.push_back(series_mul(t10_pow.back(), t10));
  }
  QuarterQSeries out;
  out.order = order;
  out.quarter.assign(static_cast<std::size_t>(4 * order) + 1, Rat(0));
  for (const auto& [weight, count] : w.counts) {
    QuarterQSeries term =
        series_mul(t00_pow[static_cast<std::size_t>(w.n - weight)],
                   t10_pow[static_cast<std::size_t>(weight)]);
    for (std::size_t k = 0; k < out.quarter.size(); ++k)
      out.quarter[k] += Rat(static_cast<long>(count)) * term.quarter[k];
  }
  return out;
}

std::map<int, Rat> integer_q_expansion(const QuarterQSeries& s) {
  std::map<int, Rat> out;
  for (std::size_t j = 0; j < s.quarter.size(); ++j) {
    if (s.quarter[j] == 0) continue;
    if (j % 4 != 0)
      throw arithmetic_error("fractional exponent q^(" + std::to_string(j) +
                             "/4) survives in the q-expansion");
    out[static_cast<int>(j / 4)] = s.quarter[j];
  }
  return out;
}

}  // namespace reflect96
