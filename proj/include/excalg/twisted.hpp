#pragma once

#include <optional>
#include <string>
#include <vector>

#include "excalg/rng.hpp"
#include "excalg/tensorword.hpp"

namespace excalg {

// Automorphism of a reductive group, given at matrix level as conjugation by
// h composed with theta in {identity, transpose-inverse, factor permutation},
// and on the character lattice as an integer matrix (the action
// lambda -> lambda o phi).
struct GroupAutomorphism {
  enum class Theta { Identity, TransposeInverse, FactorPermutation };

  RootDatum group;
  Theta theta = Theta::Identity;
  std::vector<int> factor_permutation;  // for Theta::FactorPermutation
  QMat h;                               // invertible; conjugation part
  ZMat lattice_action;

  static GroupAutomorphism identity(const RootDatum& g);
  static GroupAutomorphism inner(const RootDatum& g, const QMat& h);
  /// Transpose-inverse composed with conjugation by h; the lattice action is
  /// the canonical one (negation composed with the order-reversing Weyl
  /// element after normalization).
  static GroupAutomorphism transpose_inverse(const RootDatum& g, const QMat& h);
  static GroupAutomorphism factor_swap(const RootDatum& g, const std::vector<int>& perm, const QMat& h);

  QMat matrix_apply(const QMat& g) const;            // phi(g) = h . theta(g) . h^{-1}
  Weight lattice_apply(const Weight& w) const;       // lattice_action * w

  /// Order of the lattice action; throws when it exceeds `bound` (the
  /// finite-order hypothesis fails).
  int lattice_order(int bound = 256) const;

  /// Structural checks: finite order, root-set permutation, and (when h
  /// normalizes the diagonal torus) matrix/lattice compatibility on sampled
  /// torus points. Throws on violation.
  void validate(int order_bound = 256) const;
};

/// Composes phi with the unique Weyl element making the lattice action
/// preserve the dominant cone. Deterministic: the minimal-length Weyl
/// element, ties broken by the lexicographically least reduced word.
GroupAutomorphism normalize_automorphism(const GroupAutomorphism& raw);

/// Whether the lattice action maps the dominant cone into itself.
bool preserves_dominant_cone(const RootDatum& g, const ZMat& action);

/// All dominant weights with coordinates bounded by `bound` that are fixed by
/// the (normalized) automorphism; these index the twisted Peter-Weyl basis.
std::vector<Weight> fixed_dominant_weights(const RootDatum& g, const GroupAutomorphism& phi, long bound);

/// Z-basis of the phi-fixed character sublattice of a torus; the monomials on
/// the sublattice it spans are a basis of the twisted-conjugation invariants.
std::vector<Weight> torus_twisted_basis(const RootDatum& torus, const GroupAutomorphism& phi);

struct IntertwinerResult {
  enum class Status { Found, NotPhiFixed };
  Status status = Status::NotPhiFixed;
  QMat alpha;           // normalized: first nonzero entry (row-major) = 1
  int solution_dim = 0; // dimension of the full intertwining solution space
  int construction_samples = 0;
  int verification_samples = 0;
  bool verified = false;
};

/// Solves alpha . rho(g) = rho(phi(g)) . alpha over a seeded construction
/// sample, then re-checks on a disjoint verification sample. For irreducible
/// V a solution space of dimension > 1 triggers automatic sample enlargement.
IntertwinerResult equivariance_intertwiner(const MatrixRep& rep, const GroupAutomorphism& phi,
                                           std::uint64_t seed = 0, int verification_count = 50);

/// tr(alpha . rho(g)), the twisted class function attached to (V, alpha).
Rat twisted_trace(const MatrixRep& rep, const QMat& alpha, const QMat& g);

/// Random element of the matrix group (products of elementary matrices with
/// small entries for SL, pool-sampled invertibles for GL, diagonal units for
/// tori, blockwise for products).
QMat random_group_element(const RootDatum& g, Rng& rng);

struct LeviFinitenessReport {
  bool compatible = false;  // restriction intertwines the two actions
  bool finite = false;
  int free_rank = 0;
  std::vector<Int> invariant_factors;
};

/// Step-2 style certificate: cokernel of the induced map between the
/// phi-fixed character lattices of T' and T. `restriction` is the matrix of
/// X*(T') -> X*(T); finiteness of the cokernel certifies finiteness of the
/// map between the twisted adjoint quotients of the tori.
LeviFinitenessReport levi_finiteness_check(const ZMat& restriction, const ZMat& phi_on_source,
                                           const ZMat& phi_on_target);

// Rational linear functional on X*(T) (x) Q, the desk-scale specialization
// of a valuation.
using ValuationFunctional = std::vector<Rat>;

Rat apply_functional(const ValuationFunctional& v, const Weight& w);

struct WeightOrbitDatum {
  Weight weight;
  Int multiplicity;
  int orbit_size = 0;   // n_mu: orbit of mu under the lattice action
  Rat orbit_average;    // v_mu
};

struct FinitenessCertificate {
  std::vector<WeightOrbitDatum> weights;
  Rat v0;                       // minimum of v_mu over the weights of V
  Int rank;                     // r: total multiplicity of the minimizing weights
  Weight lambda0;               // sum of the minimizing weights with multiplicity
  Int lambda0_multiplicity;     // multiplicity of lambda0 in Lambda^r V
  bool weights_phi_stable = false;     // orbits stay inside the weight multiset
  bool lambda0_invariant = false;      // phi(lambda0) = lambda0
  bool multiplicity_one = false;
  bool strictly_minimal = false;       // r v0 < v(mu') for every other phi-fixed weight of Lambda^r V
  bool lambda0_value_consistent = false;  // v(lambda0) = r v0
  bool certificate_ok = false;         // all of the above verifications
};

/// Step-1 style certificate for (G, phi, V, v): weight orbits, orbit
/// valuations, the minimizing block, and the exterior-power verification.
/// Failed verifications come back as cleared flags, not exceptions.
FinitenessCertificate valuation_certificate(const MatrixRep& rep, const GroupAutomorphism& phi,
                                            const ValuationFunctional& v);

}  // namespace excalg
