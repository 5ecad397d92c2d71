#pragma once

// The sixteen irreducible representations of H1, built explicitly:
// four scalar characters, the natural 2-dim representation and its twists,
// the symmetric square (3-dim) and its twists, a 4-dim constituent of the
// natural times the symmetric square, and a final 2-dim constituent.

#include <vector>

#include "reflect96/group.hpp"

namespace reflect96 {

struct Irrep {
  int label = 0;  // 1..16
  int dim = 0;
  MatrixCyc image_T, image_D;
  std::vector<MatrixCyc> images;  // per group element index
  std::vector<Cyc8> character;    // per aligned class
  // Squared norms of the construction basis vectors: images preserve the
  // Hermitian form diag(form), not the identity form, because the printed
  // tensor bases are orthogonal but not normalized.
  std::vector<Rat> form;
};

struct IrrepSet {
  std::vector<Irrep> list;  // label order
  const Irrep& by_label(int l) const {
    return list.at(static_cast<std::size_t>(l - 1));
  }
};

class IrrepBuilder {
 public:
  IrrepBuilder(const FiniteMatrixGroup& group, const ConjClassSet& classes)
      : group_(group), classes_(classes) {}

  // All sixteen, in label order, characters realized over aligned classes.
  IrrepSet build_all() const;

  Irrep one_dimensional(int label, const Cyc8& img_T, const Cyc8& img_D) const;
  Irrep natural(int label) const;
  // Tensor by a 1-dim representation; character multiplies pointwise.
  Irrep twist(int label, const Irrep& base, const Irrep& by) const;
  // Constituent of a tensor product cut out by integer combinations of pure
  // tensors (basis columns live in the product space). construction_error
  // when the span is not invariant.
  Irrep tensor_constituent(int label, const Irrep& a, const Irrep& b,
                           const MatrixCyc& basis) const;

  // Printed bases of the three restricted constituents.
  static MatrixCyc sym_square_basis();   // in V10 (x) V10
  static MatrixCyc rho15_basis();        // in V10 (x) V13
  static MatrixCyc rho5_basis();         // in V10 (x) V15

 private:
  Irrep realize(Irrep r) const;  // fills images and character
  const FiniteMatrixGroup& group_;
  const ConjClassSet& classes_;
};

// Order of the matrix group generated by the two generator images.
long image_order(const Irrep& r, std::size_t max_elements = kDefaultClosureBound);

// Image of an arbitrary group element word given as a sequence of generator
// ordinals (0 = T, 1 = D).
MatrixCyc image_of_word(const Irrep& r, const std::vector<int>& gens);

}  // namespace reflect96
