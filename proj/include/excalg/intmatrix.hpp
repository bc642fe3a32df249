#pragma once

#include <vector>

#include "excalg/rational.hpp"

namespace excalg {

// Dense integer matrix, row-major. Sizes here are desk scale (rank <= 10 or
// so); the algorithms favour exactness and determinism over asymptotics.
class ZMat {
 public:
  ZMat() = default;
  ZMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Int(0)) {}

  static ZMat identity(int n);
  static ZMat from_rows(const std::vector<std::vector<Int>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  bool operator==(const ZMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  ZMat operator*(const ZMat& o) const;
  ZMat operator+(const ZMat& o) const;
  ZMat operator-(const ZMat& o) const;
  ZMat transposed() const;
  bool is_zero() const;

  std::vector<Int> apply(const std::vector<Int>& v) const;  // matrix * column vector

  std::string to_string() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

/// Exact determinant (fraction-free Bareiss elimination).
Int det(const ZMat& m);

struct SmithDecomposition {
  ZMat u;  // unimodular, rows x rows
  ZMat d;  // diagonal, same shape as input, d1 | d2 | ...
  ZMat v;  // unimodular, cols x cols
  // m = u * d * v holds exactly.
  std::vector<Int> invariant_factors() const;  // nonzero diagonal entries
  int rank() const;
};

/// Smith normal form by gcd-pivot elimination. The pivot is the
/// minimal-absolute-value nonzero entry of the working submatrix, ties broken
/// in row-major order; this makes the decomposition deterministic.
SmithDecomposition smith_normal_form(const ZMat& m);

/// Column-style Hermite normal form of a full-column-rank matrix: columns are
/// a canonical basis of the same column lattice (pivots positive, entries left
/// of a pivot reduced into [0, pivot)).
ZMat hermite_column_form(const ZMat& m);

/// Hermite-reduced Z-basis of {x : m x = 0}, returned as matrix columns.
ZMat kernel_basis(const ZMat& m);

struct Cokernel {
  int free_rank = 0;
  std::vector<Int> torsion;  // invariant factors of the torsion part, d1 | d2 | ...
  bool finite() const { return free_rank == 0; }
};

/// Invariant-factor decomposition of coker(f) = Z^rows / im(f).
Cokernel cokernel_invariant_factors(const ZMat& f);

}  // namespace excalg
