#include <doctest.h>

#include <random>

#include "reflect96/irreps.hpp"
#include "reflect96/refdata.hpp"

using namespace reflect96;

namespace {

struct Fixture {
  FiniteMatrixGroup group;
  ConjClassSet classes;
  IrrepSet irreps;
  Fixture()
      : group(generate_group({refdata::generator_T(), refdata::generator_D()})),
        classes(align_classes(group, conjugacy_classes(group),
                              refdata::class_words(), refdata::generator_letters())),
        irreps(IrrepBuilder(group, classes).build_all()) {}
};

const Fixture& fixture() {
  static Fixture f;
  return f;
}

}  // namespace

TEST_CASE("one-dimensional representations") {
  const auto& set = fixture().irreps;
  CHECK(set.by_label(1).image_T == MatrixCyc::from_rows({{Cyc8(1)}}));
  CHECK(set.by_label(1).image_D == MatrixCyc::from_rows({{Cyc8(1)}}));
  CHECK(set.by_label(3).image_T == MatrixCyc::from_rows({{-Cyc8::i()}}));
  CHECK(set.by_label(3).image_D == MatrixCyc::from_rows({{Cyc8::i()}}));
  CHECK(set.by_label(2).image_T == MatrixCyc::from_rows({{Cyc8(-1)}}));
  CHECK(set.by_label(2).image_D == MatrixCyc::from_rows({{Cyc8(-1)}}));
  // the label-3 character is the determinant of the natural representation
  const Irrep& nat = fixture().irreps.by_label(10);
  CHECK(nat.image_T.det() == set.by_label(3).image_T.at(0, 0));
  CHECK(nat.image_D.det() == set.by_label(3).image_D.at(0, 0));
}

TEST_CASE("printed generator images match entry-for-entry") {
  const auto& set = fixture().irreps;
  CHECK(set.by_label(13).image_T == refdata::rho13_T());
  CHECK(set.by_label(13).image_D == refdata::rho13_D());
  CHECK(set.by_label(15).image_T == refdata::rho15_T());
  CHECK(set.by_label(15).image_D == refdata::rho15_D());
  CHECK(set.by_label(5).image_T == refdata::rho5_T());
  CHECK(set.by_label(5).image_D == refdata::rho5_D());
}

TEST_CASE("twists reproduce the labeled constructions") {
  const auto& f = fixture();
  IrrepBuilder b(f.group, f.classes);
  const auto& set = f.irreps;
  // rho_7 = rho_3 (x) rho_10, rho_16 = rho_3 (x) rho_15
  Irrep r7 = b.twist(7, set.by_label(10), set.by_label(3));
  CHECK(r7.character == set.by_label(7).character);
  Irrep r16 = b.twist(16, set.by_label(15), set.by_label(3));
  CHECK(r16.character == set.by_label(16).character);
  // trivial twist changes nothing
  Irrep same = b.twist(10, set.by_label(10), set.by_label(1));
  CHECK(same.image_T == set.by_label(10).image_T);
  CHECK(same.character == set.by_label(10).character);
}

TEST_CASE("restrictions reject non-invariant spans") {
  const auto& f = fixture();
  IrrepBuilder b(f.group, f.classes);
  MatrixCyc bad(4, 2);
  bad.at(0, 0) = 1;
  bad.at(1, 1) = 1;  // e1(x)e1, e1(x)e2 not T-invariant in the square
  CHECK_THROWS_AS(
      b.tensor_constituent(0, f.irreps.by_label(10), f.irreps.by_label(10), bad),
      construction_error);
}

TEST_CASE("homomorphism property on random word pairs") {
  const auto& f = fixture();
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> len(0, 6);
  std::uniform_int_distribution<int> gen(0, 1);
  auto random_word = [&rng, &len, &gen] {
    std::vector<int> w(static_cast<std::size_t>(len(rng)));
    for (auto& g : w) g = gen(rng);
    return w;
  };
  for (const auto& r : f.irreps.list) {
    for (int t = 0; t < 200; ++t) {
      std::vector<int> w1 = random_word(), w2 = random_word();
      std::vector<int> cat = w1;
      cat.insert(cat.end(), w2.begin(), w2.end());
      CHECK(image_of_word(r, cat) == image_of_word(r, w1) * image_of_word(r, w2));
    }
  }
}

TEST_CASE("images preserve the construction Hermitian form") {
  const auto& f = fixture();
  for (const auto& r : f.irreps.list) {
    std::vector<Cyc8> diag;
    for (const auto& q : r.form) diag.push_back(Cyc8(q));
    MatrixCyc G = MatrixCyc::diagonal(diag);
    for (const auto& img : r.images) CHECK(img.adjoint() * G * img == G);
  }
}

TEST_CASE("characters are class functions") {
  const auto& f = fixture();
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> pick(0, f.group.size() - 1);
  for (int t = 0; t < 20; ++t) {
    int e = pick(rng), h = pick(rng);
    int conj = f.group.product(f.group.product(h, e), f.group.inverse(h));
    for (const auto& r : f.irreps.list)
      CHECK(r.images[static_cast<std::size_t>(e)].trace() ==
            r.images[static_cast<std::size_t>(conj)].trace());
  }
}

TEST_CASE("dimension multiset and image orders") {
  const auto& set = fixture().irreps;
  long long sq = 0;
  for (int l = 1; l <= 16; ++l) {
    CHECK(set.by_label(l).dim ==
          refdata::dimension_vector()[static_cast<std::size_t>(l - 1)]);
    sq += static_cast<long long>(set.by_label(l).dim) * set.by_label(l).dim;
  }
  CHECK(sq == 96);
  CHECK(image_order(set.by_label(1)) == 1);
  CHECK(image_order(set.by_label(5)) == 6);
  CHECK(image_order(set.by_label(6)) == 12);
  CHECK(image_order(set.by_label(13)) == 48);
  for (int l = 1; l <= 16; ++l)
    CHECK(image_order(set.by_label(l)) ==
          refdata::image_orders()[static_cast<std::size_t>(l - 1)]);
}
