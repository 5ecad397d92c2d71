#include <doctest.h>

#include <random>

#include "reflect96/matrix.hpp"
#include "reflect96/refdata.hpp"

using namespace reflect96;

namespace {

MatrixCyc random_matrix(std::mt19937& rng, int r, int c) {
  std::uniform_int_distribution<long> num(-5, 5);
  MatrixCyc m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      m.at(i, j) = Cyc8(Rat(num(rng)), Rat(num(rng)), Rat(num(rng)), Rat(num(rng)));
  return m;
}

}  // namespace

TEST_CASE("products of the generators") {
  MatrixCyc T = refdata::generator_T();
  MatrixCyc D = refdata::generator_D();
  // T^2 is the scalar matrix iI, D^2 = diag(1, -1)
  CHECK(T * T == Cyc8::i() * MatrixCyc::identity(2));
  CHECK(MatrixCyc::identity(2) * D == D);
  CHECK(D * D == MatrixCyc::diagonal({Cyc8(1), Cyc8(-1)}));
  CHECK_THROWS_AS(T * MatrixCyc(3, 3), dimension_error);
}

TEST_CASE("adjoints") {
  MatrixCyc T = refdata::generator_T();
  MatrixCyc D = refdata::generator_D();
  CHECK(D.adjoint() == MatrixCyc::diagonal({Cyc8(1), -Cyc8::i()}));
  CHECK(T.adjoint() * T == MatrixCyc::identity(2));
  CHECK(MatrixCyc::identity(3).adjoint() == MatrixCyc::identity(3));
  std::mt19937 rng(3);
  for (int t = 0; t < 50; ++t) {
    MatrixCyc a = random_matrix(rng, 2, 3), b = random_matrix(rng, 3, 2);
    CHECK((a * b).adjoint() == b.adjoint() * a.adjoint());
  }
}

TEST_CASE("associativity on random conformable triples") {
  std::mt19937 rng(5);
  for (int t = 0; t < 40; ++t) {
    MatrixCyc a = random_matrix(rng, 2, 3), b = random_matrix(rng, 3, 4),
              c = random_matrix(rng, 4, 2);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("characteristic determinants") {
  // identity: (1-t)^2
  PolyCyc pI = charpoly_det(MatrixCyc::identity(2));
  CHECK(pI == PolyCyc({Cyc8(1), Cyc8(-2), Cyc8(1)}));
  // diagonal D: (1-t)(1-it)
  PolyCyc pD = charpoly_det(refdata::generator_D());
  CHECK(pD == PolyCyc({Cyc8(1), -(Cyc8(1) + Cyc8::i()), Cyc8::i()}));
  // T: trace 0, det -i, so det(I - tT) = 1 - i t^2
  PolyCyc pT = charpoly_det(refdata::generator_T());
  CHECK(refdata::generator_T().det() == -Cyc8::i());
  CHECK(pT == PolyCyc({Cyc8(1), Cyc8(0), -Cyc8::i()}));
  CHECK(pT.coeff(0) == Cyc8(1));  // value at t = 0
  CHECK_THROWS_AS(charpoly_det(MatrixCyc(2, 3)), dimension_error);
}

TEST_CASE("exact solve and inverse") {
  std::mt19937 rng(9);
  for (int t = 0; t < 25; ++t) {
    MatrixCyc a = random_matrix(rng, 3, 3);
    if (a.det().is_zero()) continue;
    MatrixCyc inv = inverse(a);
    CHECK(a * inv == MatrixCyc::identity(3));
    CHECK(inv * a == MatrixCyc::identity(3));
  }
  MatrixCyc singular(2, 2);
  singular.at(0, 0) = 1;
  singular.at(1, 0) = 1;
  CHECK_THROWS_AS(inverse(singular), construction_error);
}

TEST_CASE("restriction to an invariant span") {
  // D-invariant coordinate span inside the Kronecker square of D.
  MatrixCyc D = refdata::generator_D();
  MatrixCyc sq = kron(D, D);
  MatrixCyc basis(4, 2);
  basis.at(0, 0) = 1;
  basis.at(3, 1) = 1;
  MatrixCyc r = restrict_to_span(sq, basis);
  CHECK(r == MatrixCyc::diagonal({Cyc8(1), Cyc8(-1)}));
  // A span that is not invariant must be rejected.
  MatrixCyc T = refdata::generator_T();
  MatrixCyc bad(2, 1);
  bad.at(0, 0) = 1;
  CHECK_THROWS_AS(restrict_to_span(T, bad), construction_error);
}
