#include <doctest.h>

#include "reflect96/context.hpp"
#include "reflect96/molien.hpp"

using namespace reflect96;

namespace {

const Context& ctx() {
  static Context c = Context::build();
  return c;
}

// Independent oracle: dim of the degree-n part of a free ring on generators
// of the given degrees = number of solutions of sum d_i * a_i = n.
long count_monomials(const std::vector<int>& degrees, int n) {
  if (degrees.empty()) return n == 0 ? 1 : 0;
  long total = 0;
  std::vector<int> rest(degrees.begin() + 1, degrees.end());
  for (int a = 0; a * degrees.front() <= n; ++a)
    total += count_monomials(rest, n - a * degrees.front());
  return total;
}

}  // namespace

TEST_CASE("trivial representation has series 1/(1-t)") {
  RatSeries s = molien_series(ctx().irreps.by_label(1), 12);
  for (int n = 0; n <= 12; ++n) CHECK(s.coeff[static_cast<std::size_t>(n)] == 1);
  CHECK(s.coeff[3] == 1);
}

TEST_CASE("natural representation: free ring on degrees 8 and 12") {
  RatSeries s = molien_series(ctx().irreps.by_label(10), 40);
  for (int n = 0; n <= 40; ++n)
    CHECK(s.coeff[static_cast<std::size_t>(n)] == Rat(count_monomials({8, 12}, n)));
  CHECK(s.coeff[4] == 0);
  CHECK(s.coeff[8] == 1);
  CHECK(s.coeff[12] == 1);
  CHECK(s.coeff[20] == 1);
  CHECK(s.coeff[24] == 2);  // t^24 = (t^8)^3 = (t^12)^2
}

TEST_CASE("label 5: free ring on degrees 2 and 3") {
  RatSeries s = molien_series(ctx().irreps.by_label(5), 40);
  for (int n = 0; n <= 40; ++n)
    CHECK(s.coeff[static_cast<std::size_t>(n)] == Rat(count_monomials({2, 3}, n)));
}

TEST_CASE("product-form helper matches the counting oracle") {
  RatSeries s = product_form_series({8, 12}, 40);
  for (int n = 0; n <= 40; ++n)
    CHECK(s.coeff[static_cast<std::size_t>(n)] == Rat(count_monomials({8, 12}, n)));
}

TEST_CASE("coefficients are non-negative integers") {
  for (int label : {3, 7, 11, 12, 15, 16}) {
    RatSeries s = molien_series(ctx().irreps.by_label(label), 24);
    for (const Rat& c : s.coeff) {
      CHECK(is_integer(c));
      CHECK(c >= 0);
    }
  }
}

TEST_CASE("twist-equivalent images share one series") {
  IrrepBuilder b(ctx().group, ctx().classes);
  Irrep twisted = b.twist(0, ctx().irreps.by_label(10), ctx().irreps.by_label(3));
  RatSeries a = molien_series(twisted, 24);
  RatSeries c7 = molien_series(ctx().irreps.by_label(7), 24);
  CHECK(a == c7);
  RatSeries c8 = molien_series(ctx().irreps.by_label(8), 24);
  RatSeries c9 = molien_series(ctx().irreps.by_label(9), 24);
  RatSeries c10 = molien_series(ctx().irreps.by_label(10), 24);
  CHECK(c7 == c8);
  CHECK(c8 == c9);
  CHECK(c9 == c10);
}

TEST_CASE("degree-claim report") {
  DegreeClaimReport rep = verify_degree_claims(ctx().irreps, 40);
  CHECK(rep.all_pass());
  bool found_order_item = false;
  for (const auto& item : rep.items)
    if (item.name == "image_orders_match_expected_list") {
      found_order_item = true;
      CHECK(item.pass);
    }
  CHECK(found_order_item);
  CHECK(rep.notes.size() >= 2);
  CHECK_THROWS_AS(verify_degree_claims(ctx().irreps, 12), dimension_error);
}
