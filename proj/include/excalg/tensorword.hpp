#pragma once

#include <memory>
#include <string>
#include <vector>

#include "excalg/ratmatrix.hpp"
#include "excalg/repring.hpp"

namespace excalg {

// A representation of the matrix group built functorially from the standard
// one: tensor products, duals, exterior powers, determinant twists, direct
// sums, and extraction of the highest-weight irreducible constituent.
struct TensorWord {
  enum class Kind { Std, Dual, Tensor, Exterior, DetPower, Sum, Highest };

  Kind kind = Kind::Std;
  std::vector<TensorWord> args;
  int ext_degree = 0;
  long det_exponent = 0;

  static TensorWord std_rep() { return {}; }
  static TensorWord dual(TensorWord v);
  static TensorWord tensor(TensorWord a, TensorWord b);
  static TensorWord exterior(TensorWord v, int r);
  static TensorWord det_power(long k);
  static TensorWord direct_sum(TensorWord a, TensorWord b);
  static TensorWord highest_component(TensorWord v);

  std::string describe() const;
  int total_degree() const;  // std/dual letters count, exterior(r) counts r
};

/// Dimension of the realized representation for the given group.
int tensor_dim(const RootDatum& g, const TensorWord& v);

/// rho_V(g) for an invertible matrix in the standard realization.
/// Functorial: tensor_apply(vw, g*h) = tensor_apply(vw, g) * tensor_apply(vw, h).
QMat tensor_apply(const RootDatum& g, const TensorWord& v, const QMat& mat);

/// Derived (Lie-algebra) action of an ambient matrix E on the realized space.
QMat tensor_lie_apply(const RootDatum& g, const TensorWord& v, const QMat& e);

/// Character of the realized representation (exact weight multiset).
Character tensor_character(const RootDatum& g, const TensorWord& v);

/// Basis of the Lie algebra of g inside its standard matrix realization
/// (gl_n: all elementary matrices; sl_n: traceless ones; tori: diagonals;
/// products: blockwise).
std::vector<QMat> lie_algebra_basis(const RootDatum& g);

// Realized representation with the subspace data needed for the
// highest-component case; evaluation of Highest nodes restricts rho to the
// stored invariant subspace.
class MatrixRep {
 public:
  MatrixRep(RootDatum g, TensorWord word);

  const RootDatum& group() const { return group_; }
  const TensorWord& word() const { return word_; }
  int dim() const { return dim_; }

  QMat act(const QMat& mat) const;       // rho(g)
  QMat lie_act(const QMat& e) const;     // d rho(E)
  const Character& character() const { return character_; }

 private:
  RootDatum group_;
  TensorWord word_;
  int dim_ = 0;
  Character character_;
  // For Highest at the root: ambient word, subspace basis (columns), and a
  // left inverse for exact coordinate extraction.
  bool restricted_ = false;
  TensorWord ambient_;
  QMat basis_;
  QMat basis_left_inverse_;
};

}  // namespace excalg
