#include "reflect96/cyc8.hpp"

#include <cstdlib>

namespace reflect96 {

Cyc8 Cyc8::zeta(int power) {
  int p = power % 8;
  if (p < 0) p += 8;
  Cyc8 r;
  if (p < 4)
    r.c_[static_cast<std::size_t>(p)] = 1;
  else
    r.c_[static_cast<std::size_t>(p - 4)] = -1;
  return r;
}

bool Cyc8::is_zero() const {
  return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

Rat Cyc8::as_rational() const {
  if (!is_rational()) throw arithmetic_error("not rational: " + str());
  return c_[0];
}

Cyc8 Cyc8::operator-() const {
  Cyc8 r;
  for (int k = 0; k < 4; ++k) r.c_[k] = -c_[k];
  return r;
}

Cyc8& Cyc8::operator+=(const Cyc8& o) {
  for (int k = 0; k < 4; ++k) c_[k] += o.c_[k];
  return *this;
}

Cyc8& Cyc8::operator-=(const Cyc8& o) {
  for (int k = 0; k < 4; ++k) c_[k] -= o.c_[k];
  return *this;
}

Cyc8 operator+(const Cyc8& a, const Cyc8& b) {
  Cyc8 r = a;
  r += b;
  return r;
}

Cyc8 operator-(const Cyc8& a, const Cyc8& b) {
  Cyc8 r = a;
  r -= b;
  return r;
}

Cyc8 operator*(const Cyc8& a, const Cyc8& b) {
  // z^(i+j) with z^4 = -1 folds exponents >= 4 back with a sign flip.
  Cyc8 r;
  for (int i = 0; i < 4; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < 4; ++j) {
      if (b.c_[j] == 0) continue;
      Rat term = a.c_[i] * b.c_[j];
      int e = i + j;
      if (e < 4)
        r.c_[e] += term;
      else
        r.c_[e - 4] -= term;
    }
  }
  return r;
}

Cyc8 operator/(const Cyc8& a, const Cyc8& b) {
  if (b.is_zero()) throw arithmetic_error("division by zero in Q(z8)");
  return a * b.inverse();
}

bool operator==(const Cyc8& a, const Cyc8& b) {
  for (int k = 0; k < 4; ++k)
    if (a.c_[k] != b.c_[k]) return false;
  return true;
}

Cyc8 Cyc8::galois(int k) const {
  int kk = k % 8;
  if (kk < 0) kk += 8;
  if (kk % 2 == 0) throw arithmetic_error("galois exponent must be odd mod 8");
  Cyc8 r;
  for (int i = 0; i < 4; ++i) {
    if (c_[i] == 0) continue;
    int e = (i * kk) % 8;
    if (e < 4)
      r.c_[e] += c_[i];
    else
      r.c_[e - 4] -= c_[i];
  }
  return r;
}

Cyc8 Cyc8::inverse() const {
  if (is_zero()) throw arithmetic_error("inverse of zero in Q(z8)");
  // Product of the other Galois conjugates; self * that is the rational norm.
  Cyc8 b = galois(3) * galois(5) * galois(7);
  Cyc8 norm = *this * b;
  Rat n = norm.as_rational();
  if (n == 0) throw arithmetic_error("vanishing norm");
  Cyc8 r;
  for (int k = 0; k < 4; ++k) r.c_[k] = b.c_[k] / n;
  return r;
}

Cyc8 Cyc8::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyc8 r = 1;
  Cyc8 base = *this;
  unsigned long n = static_cast<unsigned long>(e);
  while (n) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

std::string Cyc8::str() const {
  return to_string(c_[0]) + " + " + to_string(c_[1]) + "*z + " +
         to_string(c_[2]) + "*z^2 + " + to_string(c_[3]) + "*z^3";
}

Cyc8 Cyc8::parse(const std::string& s) {
  std::array<std::string, 4> parts;
  std::size_t pos = 0;
  for (int k = 0; k < 4; ++k) {
    std::size_t next = s.find(" + ", pos);
    if (k < 3) {
      if (next == std::string::npos) throw parse_error("bad Cyc8: " + s);
      parts[k] = s.substr(pos, next - pos);
      pos = next + 3;
    } else {
      if (next != std::string::npos) throw parse_error("bad Cyc8: " + s);
      parts[k] = s.substr(pos);
    }
  }
  static const std::array<std::string, 4> suffix = {"", "*z", "*z^2", "*z^3"};
  Cyc8 r;
  for (int k = 0; k < 4; ++k) {
    const std::string& suf = suffix[static_cast<std::size_t>(k)];
    std::string& p = parts[static_cast<std::size_t>(k)];
    if (p.size() < suf.size() || p.substr(p.size() - suf.size()) != suf)
      throw parse_error("bad Cyc8 term '" + p + "' in: " + s);
    r.c_[k] = parse_rat(p.substr(0, p.size() - suf.size()));
  }
  return r;
}

}  // namespace reflect96
