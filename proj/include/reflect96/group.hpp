#pragma once

// Closure of a finite matrix group from generators, conjugacy classes,
// element orders, and alignment of classes to representative words.

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "reflect96/matrix.hpp"

namespace reflect96 {

inline constexpr std::size_t kDefaultClosureBound = 1'000'000;

class FiniteMatrixGroup {
 public:
  int size() const { return static_cast<int>(elements_.size()); }
  const MatrixCyc& element(int i) const {
    return elements_[static_cast<std::size_t>(i)];
  }
  const std::vector<MatrixCyc>& elements() const { return elements_; }
  int identity() const { return 0; }
  int generator_count() const { return static_cast<int>(gen_index_.size()); }
  int generator(int g) const { return gen_index_[static_cast<std::size_t>(g)]; }

  int index_of(const MatrixCyc& m) const;  // -1 when absent
  int product(int a, int b) const;
  int inverse(int a) const;
  int order_of(int a) const;
  // How element i was first reached: (parent index, generator ordinal);
  // (-1, -1) for the identity. Lets homomorphic images be realized cheaply.
  std::pair<int, int> derivation(int i) const {
    return deriv_[static_cast<std::size_t>(i)];
  }

  friend FiniteMatrixGroup generate_group(const std::vector<MatrixCyc>& generators,
                                          std::size_t max_elements);

 private:
  std::vector<MatrixCyc> elements_;  // BFS insertion order, identity first
  std::vector<std::pair<int, int>> deriv_;
  std::vector<int> gen_index_;
  std::unordered_map<std::string, int> lookup_;
};

// Breadth-first closure under multiplication. Deterministic: elements appear
// in BFS insertion order with generators applied in the given order.
// Throws closure_error when the closure exceeds max_elements.
FiniteMatrixGroup generate_group(const std::vector<MatrixCyc>& generators,
                                 std::size_t max_elements = kDefaultClosureBound);

struct ConjClassSet {
  std::vector<int> representatives;       // element index per class
  std::vector<std::vector<int>> members;  // sorted element indices per class
  std::vector<int> class_of;              // element index -> class index
  std::vector<std::string> words;         // filled by align_classes

  int count() const { return static_cast<int>(representatives.size()); }
  int size_of(int c) const {
    return static_cast<int>(members[static_cast<std::size_t>(c)].size());
  }
};

ConjClassSet conjugacy_classes(const FiniteMatrixGroup& g);

// Evaluates a word such as "DT2" ("1" = identity). letters[i] names
// generator i; exponents are decimal digits following a letter.
int evaluate_word(const FiniteMatrixGroup& g, const std::string& word,
                  const std::string& letters);

// Reorders classes so that class k contains the k-th word. Throws
// alignment_error when two words collide in a class or a class is unmatched.
ConjClassSet align_classes(const FiniteMatrixGroup& g, const ConjClassSet& classes,
                           const std::vector<std::string>& words,
                           const std::string& letters);

}  // namespace reflect96
