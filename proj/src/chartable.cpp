#include "reflect96/chartable.hpp"

namespace reflect96 {

std::vector<Cyc8> CharacterTable::row(int i) const {
  if (i < 1 || i > X.rows())
    throw dimension_error("character label " + std::to_string(i) +
                          " outside 1.." + std::to_string(X.rows()));
  std::vector<Cyc8> r;
  for (int c = 0; c < X.cols(); ++c) r.push_back(X.at(i - 1, c));
  return r;
}

CharacterTable build_table(const IrrepSet& irreps, const FiniteMatrixGroup& group,
                           const ConjClassSet& classes) {
  CharacterTable t;
  int n = static_cast<int>(irreps.list.size());
  t.X = MatrixCyc(n, classes.count());
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < classes.count(); ++c)
      t.X.at(i, c) =
          irreps.list[static_cast<std::size_t>(i)].character[static_cast<std::size_t>(c)];
  try {
    t.X_inv = inverse(t.X);
  } catch (const construction_error&) {
    throw construction_error("character table is singular");
  }
  for (int c = 0; c < classes.count(); ++c)
    t.class_sizes.push_back(classes.size_of(c));
  t.class_words = classes.words;
  for (const auto& r : irreps.list) t.dims.push_back(r.dim);
  t.group_order = group.size();
  return t;
}

std::vector<Cyc8> character_product(const std::vector<Cyc8>& a,
                                    const std::vector<Cyc8>& b) {
  if (a.size() != b.size()) throw dimension_error("character length mismatch");
  std::vector<Cyc8> r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] * b[k];
  return r;
}

namespace {

Int require_multiplicity(const Cyc8& v, std::size_t position) {
  std::string where = " at component " + std::to_string(position + 1);
  if (!v.is_rational())
    throw not_a_character("non-rational multiplicity " + v.str() + where);
  Rat q = v.as_rational();
  if (!is_integer(q))
    throw not_a_character("fractional multiplicity " + to_string(q) + where);
  if (q < 0)
    throw not_a_character("negative multiplicity " + to_string(q) + where);
  return q.get_num();
}

}  // namespace

std::vector<Int> decompose(const std::vector<Cyc8>& values,
                           const CharacterTable& table) {
  if (static_cast<int>(values.size()) != table.X.cols())
    throw dimension_error("character vector length mismatch");
  std::vector<Int> m;
  for (int j = 0; j < table.X_inv.cols(); ++j) {
    Cyc8 s;
    for (int c = 0; c < table.X_inv.rows(); ++c)
      s += values[static_cast<std::size_t>(c)] * table.X_inv.at(c, j);
    m.push_back(require_multiplicity(s, static_cast<std::size_t>(j)));
  }
  return m;
}

Cyc8 inner_product(const std::vector<Cyc8>& chi, const std::vector<Cyc8>& psi,
                   const CharacterTable& table) {
  if (chi.size() != psi.size() ||
      static_cast<int>(chi.size()) != table.count())
    throw dimension_error("character vector length mismatch");
  Cyc8 s;
  for (std::size_t c = 0; c < chi.size(); ++c)
    s += Cyc8(Rat(table.class_sizes[c])) * chi[c] * psi[c].conj();
  return s / Cyc8(Rat(table.group_order));
}

std::vector<Int> decompose_by_inner_products(const std::vector<Cyc8>& values,
                                             const CharacterTable& table) {
  std::vector<Int> m;
  for (int i = 1; i <= table.count(); ++i) {
    Cyc8 v = inner_product(values, table.row(i), table);
    m.push_back(require_multiplicity(v, static_cast<std::size_t>(i - 1)));
  }
  return m;
}

}  // namespace reflect96
