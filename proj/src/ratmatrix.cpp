#include "excalg/ratmatrix.hpp"

#include <sstream>
#include <stdexcept>

namespace excalg {

QMat QMat::identity(int n) {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat QMat::from_rows(const std::vector<std::vector<Rat>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows[0].size()) : 0;
  QMat m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged matrix rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

QMat QMat::diagonal(const QVec& d) {
  QMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (int i = 0; i < m.rows(); ++i) m.at(i, i) = d[i];
  return m;
}

QMat QMat::from_int(const ZMat& z) {
  QMat m(z.rows(), z.cols());
  for (int i = 0; i < z.rows(); ++i)
    for (int j = 0; j < z.cols(); ++j) m.at(i, j) = Rat(z.at(i, j));
  return m;
}

bool QMat::operator==(const QMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

QMat QMat::operator*(const QMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("QMat shape mismatch in product");
  QMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

QMat QMat::operator+(const QMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("QMat shape mismatch");
  QMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

QMat QMat::operator-(const QMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("QMat shape mismatch");
  QMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

QMat QMat::scaled(const Rat& c) const {
  QMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
  return r;
}

QMat QMat::transposed() const {
  QMat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

QVec QMat::apply(const QVec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("QMat/vector size mismatch");
  QVec r(rows_, Rat(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0) r[i] += at(i, j) * v[j];
  return r;
}

bool QMat::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

bool QMat::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != Rat(i == j ? 1 : 0)) return false;
  return true;
}

Rat QMat::trace() const {
  Rat t(0);
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
  return t;
}

std::string QMat::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << format_rat(at(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

Rat det(const QMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  QMat w = m;
  const int n = w.rows();
  Rat d(1);
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (w.at(i, k) != 0) {
        p = i;
        break;
      }
    if (p < 0) return Rat(0);
    if (p != k) {
      for (int j = k; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
      d = -d;
    }
    d *= w.at(k, k);
    Rat inv = 1 / w.at(k, k);
    for (int i = k + 1; i < n; ++i) {
      if (w.at(i, k) == 0) continue;
      Rat f = w.at(i, k) * inv;
      for (int j = k; j < n; ++j) w.at(i, j) -= f * w.at(k, j);
    }
  }
  return d;
}

QMat inverse(const QMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const int n = m.rows();
  QMat w = m, inv = QMat::identity(n);
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (w.at(i, k) != 0) {
        p = i;
        break;
      }
    if (p < 0) throw std::domain_error("singular matrix");
    if (p != k)
      for (int j = 0; j < n; ++j) {
        std::swap(w.at(k, j), w.at(p, j));
        std::swap(inv.at(k, j), inv.at(p, j));
      }
    Rat piv = 1 / w.at(k, k);
    for (int j = 0; j < n; ++j) {
      w.at(k, j) *= piv;
      inv.at(k, j) *= piv;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k || w.at(i, k) == 0) continue;
      Rat f = w.at(i, k);
      for (int j = 0; j < n; ++j) {
        w.at(i, j) -= f * w.at(k, j);
        inv.at(i, j) -= f * inv.at(k, j);
      }
    }
  }
  return inv;
}

QMat rref(const QMat& m, std::vector<int>* pivot_cols) {
  QMat w = m;
  const int rows = w.rows(), cols = w.cols();
  int r = 0;
  if (pivot_cols) pivot_cols->clear();
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (w.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < cols; ++j) std::swap(w.at(r, j), w.at(p, j));
    Rat piv = 1 / w.at(r, c);
    for (int j = c; j < cols; ++j) w.at(r, j) *= piv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || w.at(i, c) == 0) continue;
      Rat f = w.at(i, c);
      for (int j = c; j < cols; ++j) w.at(i, j) -= f * w.at(r, j);
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++r;
  }
  return w;
}

int rank(const QMat& m) {
  std::vector<int> piv;
  rref(m, &piv);
  return static_cast<int>(piv.size());
}

QMat null_space(const QMat& m) {
  std::vector<int> piv;
  QMat r = rref(m, &piv);
  const int cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  QMat basis(cols, static_cast<int>(free_cols.size()));
  for (int k = 0; k < static_cast<int>(free_cols.size()); ++k) {
    int fc = free_cols[k];
    basis.at(fc, k) = 1;
    for (int i = 0; i < static_cast<int>(piv.size()); ++i) basis.at(piv[i], k) = -r.at(i, fc);
  }
  return basis;
}

std::optional<QVec> solve(const QMat& m, const QVec& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("solve: rhs size mismatch");
  QMat aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  std::vector<int> piv;
  QMat r = rref(aug, &piv);
  for (int c : piv)
    if (c == m.cols()) return std::nullopt;  // pivot in the rhs column
  QVec x(m.cols(), Rat(0));
  for (int i = 0; i < static_cast<int>(piv.size()); ++i) x[piv[i]] = r.at(i, m.cols());
  return x;
}

QMat kron(const QMat& a, const QMat& b) {
  QMat r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a.at(i, j) == 0) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          if (b.at(k, l) != 0) r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    }
  return r;
}

std::vector<std::vector<int>> subsets_lex(int n, int r) {
  std::vector<std::vector<int>> out;
  if (r < 0 || r > n) return out;
  std::vector<int> s(r);
  for (int i = 0; i < r; ++i) s[i] = i;
  for (;;) {
    out.push_back(s);
    int i = r - 1;
    while (i >= 0 && s[i] == n - r + i) --i;
    if (i < 0) break;
    ++s[i];
    for (int j = i + 1; j < r; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

QMat compound(const QMat& m, int r) {
  if (r == 0) return QMat::identity(1);
  auto row_sets = subsets_lex(m.rows(), r);
  auto col_sets = subsets_lex(m.cols(), r);
  QMat out(static_cast<int>(row_sets.size()), static_cast<int>(col_sets.size()));
  for (size_t i = 0; i < row_sets.size(); ++i)
    for (size_t j = 0; j < col_sets.size(); ++j) {
      QMat minor(r, r);
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) minor.at(a, b) = m.at(row_sets[i][a], col_sets[j][b]);
      out.at(static_cast<int>(i), static_cast<int>(j)) = det(minor);
    }
  return out;
}

QVec char_poly(const QMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("char_poly of non-square matrix");
  const int n = m.rows();
  // Faddeev-LeVerrier: M_1 = A, c_k = -tr(A M_k)/k, M_{k+1} = A M_k + c_k I.
  QVec coeffs(n + 1, Rat(0));
  coeffs[0] = 1;  // x^n
  QMat mk = QMat::identity(n);
  for (int k = 1; k <= n; ++k) {
    mk = m * mk;
    Rat c = -mk.trace() / k;
    coeffs[k] = c;
    for (int i = 0; i < n; ++i) mk.at(i, i) += c;
  }
  return coeffs;
}

}  // namespace excalg
