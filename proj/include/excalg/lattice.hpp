#pragma once

#include <string>
#include <utility>
#include <vector>

#include "excalg/intmatrix.hpp"

namespace excalg {

// A weight is an element of the character lattice X*(T), stored as exact
// integer coordinates of length rank().
using Weight = std::vector<Int>;

Weight weight_add(const Weight& a, const Weight& b);
Weight weight_sub(const Weight& a, const Weight& b);
Weight weight_neg(const Weight& a);
Weight weight_scale(const Int& c, const Weight& a);
Weight weight_zero(int rank);
bool weight_lex_less(const Weight& a, const Weight& b);

// A reductive group presented by its character lattice and a matrix-group
// realization. Supported families: GL(n), SL(n), split tori, and finite
// products of these.
//
// SL(n) uses the section "last coordinate zero" of Z^n / Z(1,...,1): weights
// are stored as the first n-1 coordinates of the representative with last
// coordinate 0, so the lattice rank is n-1 and serialization is unambiguous.
class RootDatum {
 public:
  enum class Family { GL, SL, Torus, Product };

  static RootDatum gl(int n);
  static RootDatum sl(int n);
  static RootDatum torus(int r);
  static RootDatum product(std::vector<RootDatum> factors);

  Family family() const { return family_; }
  int param() const { return n_; }  // n for GL/SL, rank for Torus
  const std::vector<RootDatum>& factors() const { return factors_; }

  int rank() const;     // character-lattice rank
  int std_dim() const;  // dimension of the standard faithful representation
  bool det_constrained() const { return family_ == Family::SL; }

  std::vector<Weight> simple_roots() const;
  std::vector<ZMat> weyl_generators() const;  // simple reflections on X*(T)

  // Weights of the standard representation, in realization order.
  std::vector<Weight> std_weights() const;

  bool is_dominant(const Weight& w) const;

  /// Dominant Weyl-orbit representative: returns (w(lambda), w) with w(lambda)
  /// dominant; w is a product of simple reflections chosen by the smallest
  /// violated index, which is deterministic.
  std::pair<Weight, ZMat> dominant_representative(const Weight& lambda) const;

  /// All dominant weights with every coordinate bounded by `bound` in
  /// absolute value, in lexicographic order.
  std::vector<Weight> dominant_weights_in_box(long bound) const;

  /// All weights (dominant or not) in the same box, in lexicographic order.
  std::vector<Weight> weights_in_box(long bound) const;

  bool operator==(const RootDatum& o) const;
  std::string describe() const;

  // Offsets of each product factor inside the concatenated lattice / the
  // block-diagonal standard realization (trivial for non-products).
  std::vector<int> lattice_offsets() const;
  std::vector<int> realization_offsets() const;

 private:
  Family family_ = Family::GL;
  int n_ = 1;
  std::vector<RootDatum> factors_;
};

/// Hermite-reduced Z-basis of the fixed sublattice ker(a - id), as columns.
ZMat fixed_sublattice(const ZMat& a);

/// Order of a as a lattice automorphism, or 0 if it exceeds `bound` (or is
/// not invertible over Z).
int lattice_automorphism_order(const ZMat& a, int bound = 256);

}  // namespace excalg
