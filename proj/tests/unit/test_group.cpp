#include <doctest.h>

#include <random>
#include <set>

#include "reflect96/group.hpp"
#include "reflect96/refdata.hpp"

using namespace reflect96;

namespace {

FiniteMatrixGroup h1() {
  return generate_group({refdata::generator_T(), refdata::generator_D()});
}

}  // namespace

TEST_CASE("closure sizes") {
  CHECK(h1().size() == 96);
  CHECK(generate_group({refdata::generator_D()}).size() == 4);
  CHECK(generate_group({refdata::generator_T()}).size() == 8);
}

TEST_CASE("closure bound guard") {
  CHECK_THROWS_AS(
      generate_group({refdata::generator_T(), refdata::generator_D()}, 50),
      closure_error);
}

TEST_CASE("closure idempotence") {
  FiniteMatrixGroup g = h1();
  FiniteMatrixGroup again = generate_group(g.elements());
  CHECK(again.size() == g.size());
  std::set<std::string> a, b;
  for (const auto& m : g.elements()) a.insert(m.key());
  for (const auto& m : again.elements()) b.insert(m.key());
  CHECK(a == b);
}

TEST_CASE("every element is unitary") {
  FiniteMatrixGroup g = h1();
  for (const auto& m : g.elements()) CHECK((m.adjoint() * m).is_identity());
}

TEST_CASE("characteristic determinants have unit constant term") {
  FiniteMatrixGroup g = h1();
  for (const auto& m : g.elements())
    CHECK(charpoly_det(m).coeff(0) == Cyc8(1));
}

TEST_CASE("deterministic element order") {
  FiniteMatrixGroup a = h1(), b = h1();
  REQUIRE(a.size() == b.size());
  for (int i = 0; i < a.size(); ++i) CHECK(a.element(i) == b.element(i));
}

TEST_CASE("conjugacy classes partition the group") {
  FiniteMatrixGroup g = h1();
  ConjClassSet cs = conjugacy_classes(g);
  CHECK(cs.count() == 16);
  int total = 0;
  for (int c = 0; c < cs.count(); ++c) total += cs.size_of(c);
  CHECK(total == 96);
  CHECK(cs.size_of(cs.class_of[static_cast<std::size_t>(g.identity())]) == 1);
  // conjugation by any element maps each class onto itself
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> pick(0, g.size() - 1);
  for (int t = 0; t < 50; ++t) {
    int h = pick(rng), e = pick(rng);
    int conj = g.product(g.product(h, e), g.inverse(h));
    CHECK(cs.class_of[static_cast<std::size_t>(conj)] ==
          cs.class_of[static_cast<std::size_t>(e)]);
  }
  // scalar matrices form singleton classes
  int scalars = 0;
  for (int c = 0; c < cs.count(); ++c)
    if (cs.size_of(c) == 1) ++scalars;
  CHECK(scalars == 4);  // 1, iI, -I, -iI
}

TEST_CASE("alignment to representative words") {
  FiniteMatrixGroup g = h1();
  ConjClassSet cs = align_classes(g, conjugacy_classes(g), refdata::class_words(),
                                  refdata::generator_letters());
  CHECK(cs.words == refdata::class_words());
  // word "DT2" lands in class 9 (1-based), "1" in class 1, "D2" in class 15
  int dt2 = evaluate_word(g, "DT2", refdata::generator_letters());
  CHECK(cs.class_of[static_cast<std::size_t>(dt2)] == 8);
  CHECK(cs.class_of[static_cast<std::size_t>(g.identity())] == 0);
  int d2 = evaluate_word(g, "D2", refdata::generator_letters());
  CHECK(cs.class_of[static_cast<std::size_t>(d2)] == 14);
  // duplicated words must be rejected
  std::vector<std::string> bad = refdata::class_words();
  bad[1] = "T3";
  bad[3] = "T";  // swap keeps the multiset but T3 appears before T
  CHECK_NOTHROW(align_classes(g, conjugacy_classes(g), bad,
                              refdata::generator_letters()));
  bad[3] = "T3";  // now T3 twice: collision in one class
  CHECK_THROWS_AS(align_classes(g, conjugacy_classes(g), bad,
                                refdata::generator_letters()),
                  alignment_error);
}

TEST_CASE("element orders match the expected row") {
  FiniteMatrixGroup g = h1();
  ConjClassSet cs = align_classes(g, conjugacy_classes(g), refdata::class_words(),
                                  refdata::generator_letters());
  for (int c = 0; c < cs.count(); ++c) {
    int rep = cs.representatives[static_cast<std::size_t>(c)];
    CHECK(g.order_of(rep) == refdata::order_row()[static_cast<std::size_t>(c)]);
  }
  int t_idx = evaluate_word(g, "T", refdata::generator_letters());
  int dt = evaluate_word(g, "DT", refdata::generator_letters());
  int dt5 = evaluate_word(g, "DT5", refdata::generator_letters());
  CHECK(g.order_of(t_idx) == 8);
  CHECK(g.order_of(dt) == 6);
  CHECK(g.order_of(dt5) == 3);
}
