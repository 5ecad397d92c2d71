#include "reflect96/group.hpp"

#include <algorithm>
#include <cctype>

namespace reflect96 {

int FiniteMatrixGroup::index_of(const MatrixCyc& m) const {
  auto it = lookup_.find(m.key());
  return it == lookup_.end() ? -1 : it->second;
}

int FiniteMatrixGroup::product(int a, int b) const {
  int idx = index_of(element(a) * element(b));
  if (idx < 0) throw closure_error("product escaped the element set");
  return idx;
}

int FiniteMatrixGroup::inverse(int a) const {
  for (int b = 0; b < size(); ++b)
    if (product(a, b) == identity()) return b;
  throw closure_error("element has no inverse in the set");
}

int FiniteMatrixGroup::order_of(int a) const {
  int n = 1;
  int x = a;
  while (x != identity()) {
    x = product(x, a);
    ++n;
    if (n > size()) throw closure_error("order exceeds group size");
  }
  return n;
}

FiniteMatrixGroup generate_group(const std::vector<MatrixCyc>& generators,
                                 std::size_t max_elements) {
  if (generators.empty()) throw dimension_error("no generators");
  int dim = generators.front().rows();
  for (const auto& g : generators) {
    if (!g.is_square() || g.rows() != dim)
      throw dimension_error("generators must be square of equal size");
    if (g.det().is_zero()) throw dimension_error("singular generator");
  }

  FiniteMatrixGroup grp;
  auto insert = [&grp](const MatrixCyc& m, int parent, int gen) {
    int idx = grp.size();
    grp.elements_.push_back(m);
    grp.deriv_.emplace_back(parent, gen);
    grp.lookup_.emplace(m.key(), idx);
    return idx;
  };

  insert(MatrixCyc::identity(dim), -1, -1);
  for (std::size_t head = 0; head < grp.elements_.size(); ++head) {
    for (std::size_t g = 0; g < generators.size(); ++g) {
      MatrixCyc next = grp.elements_[head] * generators[g];
      if (grp.index_of(next) >= 0) continue;
      if (grp.elements_.size() >= max_elements)
        throw closure_error("closure exceeded bound of " +
                            std::to_string(max_elements) + " elements");
      insert(next, static_cast<int>(head), static_cast<int>(g));
    }
  }

  for (const auto& g : generators) grp.gen_index_.push_back(grp.index_of(g));
  return grp;
}

ConjClassSet conjugacy_classes(const FiniteMatrixGroup& g) {
  int n = g.size();
  std::vector<int> inv(static_cast<std::size_t>(n));
  for (int h = 0; h < n; ++h) inv[static_cast<std::size_t>(h)] = g.inverse(h);
  ConjClassSet cs;
  cs.class_of.assign(static_cast<std::size_t>(n), -1);
  for (int e = 0; e < n; ++e) {
    if (cs.class_of[static_cast<std::size_t>(e)] >= 0) continue;
    int c = cs.count();
    std::vector<int> orbit;
    for (int h = 0; h < n; ++h) {
      int conj = g.product(g.product(h, e), inv[static_cast<std::size_t>(h)]);
      if (cs.class_of[static_cast<std::size_t>(conj)] < 0) {
        cs.class_of[static_cast<std::size_t>(conj)] = c;
        orbit.push_back(conj);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    cs.representatives.push_back(e);
    cs.members.push_back(std::move(orbit));
  }
  return cs;
}

int evaluate_word(const FiniteMatrixGroup& g, const std::string& word,
                  const std::string& letters) {
  if (word == "1") return g.identity();
  int dim = g.element(0).rows();
  MatrixCyc m = MatrixCyc::identity(dim);
  std::size_t pos = 0;
  while (pos < word.size()) {
    std::size_t gi = letters.find(word[pos]);
    if (gi == std::string::npos)
      throw parse_error("unknown generator letter in word: " + word);
    ++pos;
    long exp = 1;
    if (pos < word.size() && std::isdigit(static_cast<unsigned char>(word[pos]))) {
      exp = 0;
      while (pos < word.size() &&
             std::isdigit(static_cast<unsigned char>(word[pos]))) {
        exp = exp * 10 + (word[pos] - '0');
        ++pos;
      }
    }
    const MatrixCyc& gen = g.element(g.generator(static_cast<int>(gi)));
    for (long k = 0; k < exp; ++k) m = m * gen;
  }
  int idx = g.index_of(m);
  if (idx < 0) throw closure_error("word evaluates outside the group: " + word);
  return idx;
}

ConjClassSet align_classes(const FiniteMatrixGroup& g, const ConjClassSet& classes,
                           const std::vector<std::string>& words,
                           const std::string& letters) {
  if (static_cast<int>(words.size()) != classes.count())
    throw alignment_error("word count differs from class count");
  std::vector<int> perm;  // perm[k] = old class index holding word k
  std::vector<bool> used(static_cast<std::size_t>(classes.count()), false);
  std::vector<int> rep_elements;
  for (const auto& w : words) {
    int e = evaluate_word(g, w, letters);
    int c = classes.class_of[static_cast<std::size_t>(e)];
    if (used[static_cast<std::size_t>(c)])
      throw alignment_error("two representative words fall in one class: " + w);
    used[static_cast<std::size_t>(c)] = true;
    perm.push_back(c);
    rep_elements.push_back(e);
  }
  ConjClassSet out;
  out.class_of.assign(static_cast<std::size_t>(g.size()), -1);
  for (int k = 0; k < classes.count(); ++k) {
    int c = perm[static_cast<std::size_t>(k)];
    out.representatives.push_back(rep_elements[static_cast<std::size_t>(k)]);
    out.members.push_back(classes.members[static_cast<std::size_t>(c)]);
    for (int e : out.members.back()) out.class_of[static_cast<std::size_t>(e)] = k;
    out.words.push_back(words[static_cast<std::size_t>(k)]);
  }
  return out;
}

}  // namespace reflect96
