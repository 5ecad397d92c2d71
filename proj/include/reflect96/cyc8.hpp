#pragma once

// Exact arithmetic in the cyclotomic field Q(z), z = exp(2*pi*i/8).
// Elements are stored on the power basis 1, z, z^2, z^3 with z^4 = -1.
// Useful identities: i = z^2, sqrt(2) = z - z^3.

#include <array>
#include <string>

#include "reflect96/numeric.hpp"

namespace reflect96 {

class Cyc8 {
 public:
  Cyc8() = default;
  Cyc8(const Rat& r) { c_[0] = r; }  // NOLINT: implicit rational embedding
  Cyc8(long n) { c_[0] = n; }        // NOLINT
  Cyc8(Rat a, Rat b, Rat c, Rat d)
      : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

  // z^power for any integer power (reduced mod 8).
  static Cyc8 zeta(int power = 1);
  static Cyc8 i() { return zeta(2); }
  static Cyc8 sqrt2() { return zeta(1) - zeta(3); }

  const Rat& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }

  bool is_zero() const;
  bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
  // Throws arithmetic_error when the value has nonzero z-components.
  Rat as_rational() const;

  Cyc8 operator-() const;
  Cyc8& operator+=(const Cyc8& o);
  Cyc8& operator-=(const Cyc8& o);
  Cyc8& operator*=(const Cyc8& o) { return *this = *this * o; }

  friend Cyc8 operator+(const Cyc8& a, const Cyc8& b);
  friend Cyc8 operator-(const Cyc8& a, const Cyc8& b);
  friend Cyc8 operator*(const Cyc8& a, const Cyc8& b);
  friend Cyc8 operator/(const Cyc8& a, const Cyc8& b);  // arithmetic_error on b = 0
  friend bool operator==(const Cyc8& a, const Cyc8& b);
  friend bool operator!=(const Cyc8& a, const Cyc8& b) { return !(a == b); }

  // Complex conjugation: the field automorphism z -> z^-1.
  Cyc8 conj() const { return galois(7); }
  // The automorphism z -> z^k; k must be odd mod 8.
  Cyc8 galois(int k) const;
  Cyc8 inverse() const;  // arithmetic_error on zero
  // a * conj(a); real, lies in Q(sqrt 2).
  Cyc8 abs_sq() const { return *this * conj(); }
  Cyc8 pow(long e) const;

  // Canonical rendering "c0 + c1*z + c2*z^2 + c3*z^3" with reduced rationals.
  std::string str() const;
  static Cyc8 parse(const std::string& s);

 private:
  std::array<Rat, 4> c_{};
};

}  // namespace reflect96
