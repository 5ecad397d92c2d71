#include <doctest.h>

#include <complex>
#include <random>

#include "reflect96/cyc8.hpp"

using namespace reflect96;

namespace {

Cyc8 z(int p) { return Cyc8::zeta(p); }

Cyc8 random_cyc(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-12, 12);
  std::uniform_int_distribution<long> den(1, 7);
  return Cyc8(make_rat(num(rng), den(rng)), make_rat(num(rng), den(rng)),
              make_rat(num(rng), den(rng)), make_rat(num(rng), den(rng)));
}

// Float embedding used only as a guard against reduction bugs.
std::complex<double> approx(const Cyc8& a) {
  const std::complex<double> zeta = std::polar(1.0, std::acos(-1.0) / 4.0);
  std::complex<double> v{0.0, 0.0};
  std::complex<double> p{1.0, 0.0};
  for (int k = 0; k < 4; ++k) {
    v += a.coeff(k).get_d() * p;
    p *= zeta;
  }
  return v;
}

}  // namespace

TEST_CASE("eighth root identities") {
  CHECK(z(1).pow(8) == Cyc8(1));
  CHECK(z(1).pow(4) == Cyc8(-1));
  CHECK(z(1) * z(3) == Cyc8(-1));                    // z * z^3 = z^4
  CHECK(Cyc8::sqrt2() * Cyc8::sqrt2() == Cyc8(2));   // (z - z^3)^2
  CHECK(Cyc8::i() * Cyc8::i() == Cyc8(-1));
}

TEST_CASE("division and inverses") {
  Cyc8 one_plus_i = Cyc8(1) + Cyc8::i();
  Cyc8 inv = one_plus_i.inverse();
  // (1+i)^-1 = (1-i)/2
  CHECK(inv == Cyc8(make_rat(1, 2), Rat(0), make_rat(-1, 2), Rat(0)));
  CHECK(one_plus_i * inv == Cyc8(1));
  CHECK(Cyc8(1) / one_plus_i == inv);
  CHECK_THROWS_AS(Cyc8(1) / Cyc8(0), arithmetic_error);
  CHECK_THROWS_AS(Cyc8(0).inverse(), arithmetic_error);
}

TEST_CASE("conjugation") {
  CHECK(z(1).conj() == -z(3));
  CHECK(z(2).conj() == -z(2));
  CHECK(Cyc8::sqrt2().conj() == Cyc8::sqrt2());  // sqrt 2 is real
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    Cyc8 a = random_cyc(rng), b = random_cyc(rng);
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
  }
}

TEST_CASE("absolute squares") {
  CHECK(z(1).abs_sq() == Cyc8(1));
  CHECK((Cyc8(1) + Cyc8::i()).abs_sq() == Cyc8(2));
  CHECK(Cyc8(0).abs_sq() == Cyc8(0));
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    Cyc8 a = random_cyc(rng), b = random_cyc(rng), c = random_cyc(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Cyc8(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == Cyc8(1));
  }
}

TEST_CASE("float embedding agrees with exact products") {
  std::mt19937 rng(13);
  for (int t = 0; t < 200; ++t) {
    Cyc8 a = random_cyc(rng), b = random_cyc(rng);
    std::complex<double> lhs = approx(a * b);
    std::complex<double> rhs = approx(a) * approx(b);
    CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(rhs)));
  }
}

TEST_CASE("canonical rendering round-trips") {
  CHECK(Cyc8(0).str() == "0 + 0*z + 0*z^2 + 0*z^3");
  Cyc8 v(make_rat(3, 2), make_rat(-1, 3), Rat(0), Rat(5));
  CHECK(v.str() == "3/2 + -1/3*z + 0*z^2 + 5*z^3");
  CHECK(Cyc8::parse(v.str()) == v);
  std::mt19937 rng(17);
  for (int t = 0; t < 100; ++t) {
    Cyc8 a = random_cyc(rng);
    CHECK(Cyc8::parse(a.str()) == a);
  }
  CHECK_THROWS_AS(Cyc8::parse("1 + 2*z"), parse_error);
  CHECK_THROWS_AS(Cyc8::parse("1 + 2*z + 3*z^2 + 4*w^3"), parse_error);
}
