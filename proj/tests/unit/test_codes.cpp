#include <doctest.h>

#include "reflect96/codes.hpp"
#include "reflect96/context.hpp"
#include "reflect96/refdata.hpp"

using namespace reflect96;

namespace {

const Context& ctx() {
  static Context c = Context::build();
  return c;
}

BinaryCode e8() { return BinaryCode::from_rows(refdata::e8_generator_rows()); }

long sigma3(long n) {
  long s = 0;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) s += d * d * d;
  return s;
}

Cyc8 inv_sqrt2() {
  return Cyc8(Rat(0), make_rat(1, 2), Rat(0), make_rat(-1, 2));
}

MatrixCyc self_dual_substitution() {
  Cyc8 r = inv_sqrt2();
  return MatrixCyc::from_rows({{r, -r}, {r, r}});
}

}  // namespace

TEST_CASE("code parsing and validation") {
  BinaryCode c = BinaryCode::parse("10\r\n01\n\n");
  CHECK(c.length() == 2);
  CHECK(c.dim() == 2);
  CHECK_THROWS_AS(BinaryCode::from_rows({"10", "010"}), parse_error);
  CHECK_THROWS_AS(BinaryCode::from_rows({"1x"}), parse_error);
  CHECK_THROWS_AS(BinaryCode::from_rows({"11", "11"}), construction_error);
  CHECK_THROWS_AS(BinaryCode::from_rows({"10", "01", "11"}), construction_error);
}

TEST_CASE("weight enumerators by brute force") {
  WeightEnumerator w = weight_enumerator(e8());
  std::map<int, unsigned long long> expect = {{0, 1}, {4, 14}, {8, 1}};
  CHECK(w.counts == expect);

  WeightEnumerator rep = weight_enumerator(BinaryCode::from_rows({"11"}));
  CHECK(rep.counts == std::map<int, unsigned long long>{{0, 1}, {2, 1}});

  // the zero code of length 1 has enumerator x
  WeightEnumerator zero1 = weight_enumerator(BinaryCode::zero_code(1));
  CHECK(zero1.n == 1);
  CHECK(zero1.counts == std::map<int, unsigned long long>{{0, 1}});
  // an all-zero generator row is dependent, not a presentation of {0}
  CHECK_THROWS_AS(BinaryCode::from_rows({"0"}), construction_error);
}

TEST_CASE("enumeration guard") {
  // 25 independent rows push enumeration past the 2^24 guard
  std::vector<std::string> rows;
  for (int r = 0; r < 25; ++r) {
    std::string row(25, '0');
    row[static_cast<std::size_t>(r)] = '1';
    rows.push_back(row);
  }
  BinaryCode big = BinaryCode::from_rows(rows);
  CHECK_THROWS_AS(weight_enumerator(big), resource_error);
  CHECK_THROWS_AS(is_doubly_even(big), resource_error);
}

TEST_CASE("self-dual and doubly-even predicates") {
  CHECK(is_self_dual(e8()));
  CHECK(is_doubly_even(e8()));
  BinaryCode rep2 = BinaryCode::from_rows({"11"});
  CHECK(is_self_dual(rep2));
  CHECK_FALSE(is_doubly_even(rep2));  // weight 2
  BinaryCode full2 = BinaryCode::from_rows({"10", "01"});
  CHECK_FALSE(is_self_dual(full2));
  // both predicates forces length divisible by 8; e8 has n = 8
  CHECK(e8().length() % 8 == 0);
}

TEST_CASE("substitution fixes the enumerator exactly") {
  WeightEnumerator w = weight_enumerator(e8());
  CHECK(invariant_under(w, self_dual_substitution()));
  MatrixCyc xiy = MatrixCyc::diagonal({Cyc8(1), Cyc8::i()});
  CHECK(invariant_under(w, xiy));
  // x^8 alone is not invariant under T
  WeightEnumerator x8;
  x8.n = 8;
  x8.counts = {{0, 1}};
  CHECK_FALSE(invariant_under(x8, refdata::generator_T()));
  // the length-1 zero enumerator x is moved by the self-dual substitution
  WeightEnumerator just_x;
  just_x.n = 1;
  just_x.counts = {{0, 1}};
  CHECK_FALSE(invariant_under(just_x, self_dual_substitution()));
  HomogPoly image = substitute(just_x, self_dual_substitution());
  CHECK(image.coeff[0] == inv_sqrt2());
  CHECK(image.coeff[1] == -inv_sqrt2());
}

TEST_CASE("invariance under the full group") {
  WeightEnumerator w = weight_enumerator(e8());
  CHECK(invariant_under(w, refdata::generator_T()));
  CHECK(invariant_under(w, refdata::generator_D()));
  CHECK(invariant_under_group(w, ctx().group));
  // the self-dual substitution is a group element up to an 8th root of
  // unity, which acts trivially on degree-8 forms
  CHECK(ctx().group.index_of(Cyc8::zeta(1) * self_dual_substitution()) >= 0);
  CHECK(Cyc8::zeta(1).pow(8) == Cyc8(1));
}

TEST_CASE("direct sums multiply enumerators and expansions") {
  std::vector<std::string> rows16;
  for (const std::string& r : refdata::e8_generator_rows()) {
    rows16.push_back(r + "00000000");
    rows16.push_back("00000000" + r);
  }
  WeightEnumerator w16 = weight_enumerator(BinaryCode::from_rows(rows16));
  // W(C (+) C) = W(C)^2: counts convolve
  WeightEnumerator w8 = weight_enumerator(e8());
  std::map<int, unsigned long long> expect;
  for (const auto& [a, ca] : w8.counts)
    for (const auto& [b, cb] : w8.counts) expect[a + b] += ca * cb;
  CHECK(w16.counts == expect);

  std::map<int, Rat> q8 = integer_q_expansion(modular_map(w8, 6));
  std::map<int, Rat> q16 = integer_q_expansion(modular_map(w16, 6));
  for (int n = 0; n <= 6; ++n) {
    Rat conv(0);
    for (int a = 0; a <= n; ++a) {
      Rat ca = q8.count(a) ? q8[a] : Rat(0);
      Rat cb = q8.count(n - a) ? q8[n - a] : Rat(0);
      conv += ca * cb;
    }
    Rat got = q16.count(n) ? q16[n] : Rat(0);
    CHECK(got == conv);
  }
}

TEST_CASE("theta series by direct summation") {
  QuarterQSeries t00 = theta_series(0, 8);
  CHECK(t00.quarter[0] == 1);
  CHECK(t00.quarter[4] == 2);   // q^1
  CHECK(t00.quarter[16] == 2);  // q^4
  CHECK(t00.quarter[8] == 0);   // no q^2 term
  QuarterQSeries t10 = theta_series(1, 8);
  CHECK(t10.quarter[0] == 0);   // constant term vanishes
  CHECK(t10.quarter[1] == 2);   // q^(1/4)
  CHECK(t10.quarter[9] == 2);   // q^(9/4)
  CHECK(t10.quarter[25] == 2);  // q^(25/4)
}

TEST_CASE("the e8 enumerator maps to the weight-4 Eisenstein expansion") {
  WeightEnumerator w = weight_enumerator(e8());
  QuarterQSeries q = modular_map(w, 10);
  for (std::size_t j = 0; j < q.quarter.size(); ++j)
    if (j % 4 != 0) CHECK(q.quarter[j] == 0);
  std::map<int, Rat> qe = integer_q_expansion(q);
  CHECK(qe.at(0) == 1);
  for (int n = 1; n <= 10; ++n) CHECK(qe.at(n) == Rat(240 * sigma3(n)));
}

TEST_CASE("fractional exponents are detected") {
  // length 2 self-dual repetition code: W = x^2 + y^2 has a q^(1/2) term
  WeightEnumerator w = weight_enumerator(BinaryCode::from_rows({"11"}));
  QuarterQSeries q = modular_map(w, 4);
  CHECK_THROWS_AS(integer_q_expansion(q), arithmetic_error);
}
