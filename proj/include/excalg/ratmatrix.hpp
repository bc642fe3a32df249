#pragma once

#include <optional>
#include <vector>

#include "excalg/intmatrix.hpp"
#include "excalg/rational.hpp"

namespace excalg {

using QVec = std::vector<Rat>;

// Dense matrix over Q with exact arithmetic throughout.
class QMat {
 public:
  QMat() = default;
  QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rat(0)) {}

  static QMat identity(int n);
  static QMat from_rows(const std::vector<std::vector<Rat>>& rows);
  static QMat diagonal(const QVec& d);
  static QMat from_int(const ZMat& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  bool operator==(const QMat& o) const;

  QMat operator*(const QMat& o) const;
  QMat operator+(const QMat& o) const;
  QMat operator-(const QMat& o) const;
  QMat scaled(const Rat& c) const;
  QMat transposed() const;
  QVec apply(const QVec& v) const;

  bool is_zero() const;
  bool is_identity() const;
  Rat trace() const;

  std::string to_string() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

Rat det(const QMat& m);

/// Inverse; throws std::domain_error when singular.
QMat inverse(const QMat& m);

int rank(const QMat& m);

/// Reduced row echelon form; pivot columns reported in order.
QMat rref(const QMat& m, std::vector<int>* pivot_cols = nullptr);

/// Basis of the right null space {x : m x = 0}, as columns; deterministic
/// (free variables set to 1 one at a time, in column order).
QMat null_space(const QMat& m);

/// One solution of m x = b, or nullopt when inconsistent.
std::optional<QVec> solve(const QMat& m, const QVec& b);

/// Kronecker product (a tensor b).
QMat kron(const QMat& a, const QMat& b);

/// r-th compound matrix: entries are r x r minors, rows/cols indexed by
/// lexicographically ordered r-subsets. Realizes the exterior-power functor.
QMat compound(const QMat& m, int r);

/// Characteristic polynomial coefficients, monic, degree n down to 0
/// (Faddeev-LeVerrier; exact over Q).
QVec char_poly(const QMat& m);

/// Lexicographically ordered r-subsets of {0..n-1}.
std::vector<std::vector<int>> subsets_lex(int n, int r);

}  // namespace excalg
