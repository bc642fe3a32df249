#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "excalg/ratmatrix.hpp"

namespace excalg {

// Freely reduced word in abstract generators: (generator index, exponent +-1).
struct GroupWord {
  std::vector<std::pair<int, int>> letters;

  static GroupWord id() { return {}; }
  static GroupWord gen(int index, int exponent = 1);

  bool empty() const { return letters.empty(); }
  int length() const { return static_cast<int>(letters.size()); }
  bool reduced() const;

  GroupWord inverse() const;
  GroupWord operator*(const GroupWord& o) const;  // concatenate + free reduction
  GroupWord conjugated_by(const GroupWord& h) const { return h * (*this) * h.inverse(); }

  bool operator==(const GroupWord& o) const { return letters == o.letters; }
  bool operator<(const GroupWord& o) const { return letters < o.letters; }

  std::string format(const std::vector<std::string>& names) const;
};

GroupWord free_reduce(std::vector<std::pair<int, int>> letters);

struct FPGroup {
  std::vector<std::string> generators;
  std::vector<GroupWord> relators;
  // Optional surjection to Z given on generators (degrees); must kill relators.
  std::optional<std::vector<long>> degree_map;

  static FPGroup free_group(std::vector<std::string> gens);
  static FPGroup free_abelian(std::vector<std::string> gens);  // all commutators as relators

  int num_generators() const { return static_cast<int>(generators.size()); }
  bool abelian_presentation() const;  // all relators are generator commutators

  /// Checks the structural invariants: relator reduction, generator indices
  /// in range, degree map killing relators. Throws on violation.
  void validate() const;
};

// A homomorphism Gamma -> GL_n(Q) given on generators.
struct RepresentationPoint {
  FPGroup group;
  int dim = 0;
  std::vector<QMat> images;  // one per generator, invertible

  QMat evaluate(const GroupWord& w) const;  // inverses computed on demand
  RepresentationPoint conjugated(const QMat& h) const;

  /// Composition with a group endomorphism given on generators by words.
  RepresentationPoint composed_with(const std::vector<GroupWord>& images_of_gens) const;
};

struct RepresentationCheck {
  bool valid = false;
  std::string failure;          // empty when valid
  int failed_relator = -1;      // index of the violated relator, if any
};

/// Verifies invertibility of every generator image and that every relator
/// evaluates to the identity, exactly.
RepresentationCheck check_representation(const RepresentationPoint& p);

/// All freely reduced words of length 1..max_len, in length-then-lex order
/// over letters (0, +1), (0, -1), (1, +1), ...
std::vector<GroupWord> reduced_words_up_to(int num_gens, int max_len);

/// Depth-first traversal of all freely reduced words of length <= max_len,
/// maintaining the matrix product incrementally: visit(word, matrix) is
/// called once per nonempty word.
void for_each_reduced_word(const RepresentationPoint& p, int max_len,
                           const std::function<void(const GroupWord&, const QMat&)>& visit);

}  // namespace excalg
