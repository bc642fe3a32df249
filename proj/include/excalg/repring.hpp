#pragma once

#include <map>
#include <vector>

#include "excalg/lattice.hpp"
#include "excalg/rational.hpp"

namespace excalg {

// Weight-multiplicity view of a (possibly virtual) character. Terms are kept
// in a lexicographically ordered map so every traversal is deterministic.
struct Character {
  RootDatum group;
  std::map<Weight, Int> terms;  // nonzero multiplicities only

  static Character zero(const RootDatum& g) { return {g, {}}; }
  static Character unit(const RootDatum& g);  // character of the trivial rep

  void add_term(const Weight& w, const Int& mult);
  Int multiplicity(const Weight& w) const;
  Int dimension() const;        // value at the identity = sum of multiplicities
  bool has_negative() const;    // virtual (signed) character flag
  bool is_weyl_invariant() const;

  Character operator+(const Character& o) const;
  Character operator-(const Character& o) const;
  Character scaled(const Int& c) const;
};

bool operator==(const Character& a, const Character& b);

// Element of the representation ring in the basis of irreducibles
// (dominant highest weights).
struct RepRingElement {
  RootDatum group;
  std::map<Weight, Int> coeffs;  // keys dominant
};

bool operator==(const RepRingElement& a, const RepRingElement& b);

/// Character of the irreducible representation with highest weight `lambda`
/// (GL(n): Schur Laurent polynomial via semistandard-tableau weight counts,
/// with a determinant shift for negative coordinates). Throws on non-dominant
/// input.
Character weyl_character(const RootDatum& g, const Weight& lambda);

/// Laurent-polynomial product of two characters of the same group.
Character multiply_characters(const Character& a, const Character& b);

/// Expresses a virtual character in the irreducible basis by repeatedly
/// subtracting the Weyl character of the lexicographically largest remaining
/// weight. Throws std::invalid_argument ("not a virtual character of this
/// group") when the subtraction cannot terminate at zero.
RepRingElement decompose_character(const Character& chi);

Character rep_ring_to_character(const RepRingElement& e);

/// Character of the r-th exterior power. Requires a genuine (non-virtual)
/// character; r > dim gives the zero character.
Character exterior_power_character(const Character& chi, int r);

/// Newton's identities: power sums p_1..p_k -> elementary symmetric e_1..e_k.
std::vector<Rat> power_sums_to_elementary(const std::vector<Rat>& p);
std::vector<Rat> elementary_to_power_sums(const std::vector<Rat>& e);

}  // namespace excalg
