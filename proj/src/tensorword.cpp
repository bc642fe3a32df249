#include "excalg/tensorword.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace excalg {

TensorWord TensorWord::dual(TensorWord v) {
  TensorWord w;
  w.kind = Kind::Dual;
  w.args.push_back(std::move(v));
  return w;
}

TensorWord TensorWord::tensor(TensorWord a, TensorWord b) {
  TensorWord w;
  w.kind = Kind::Tensor;
  w.args.push_back(std::move(a));
  w.args.push_back(std::move(b));
  return w;
}

TensorWord TensorWord::exterior(TensorWord v, int r) {
  if (r < 0) throw std::invalid_argument("exterior degree must be >= 0");
  TensorWord w;
  w.kind = Kind::Exterior;
  w.args.push_back(std::move(v));
  w.ext_degree = r;
  return w;
}

TensorWord TensorWord::det_power(long k) {
  TensorWord w;
  w.kind = Kind::DetPower;
  w.det_exponent = k;
  return w;
}

TensorWord TensorWord::direct_sum(TensorWord a, TensorWord b) {
  TensorWord w;
  w.kind = Kind::Sum;
  w.args.push_back(std::move(a));
  w.args.push_back(std::move(b));
  return w;
}

TensorWord TensorWord::highest_component(TensorWord v) {
  TensorWord w;
  w.kind = Kind::Highest;
  w.args.push_back(std::move(v));
  return w;
}

std::string TensorWord::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Std: os << "std"; break;
    case Kind::Dual: os << "dual(" << args[0].describe() << ")"; break;
    case Kind::Tensor: os << "(" << args[0].describe() << " (x) " << args[1].describe() << ")"; break;
    case Kind::Exterior: os << "ext^" << ext_degree << "(" << args[0].describe() << ")"; break;
    case Kind::DetPower: os << "det^" << det_exponent; break;
    case Kind::Sum: os << "(" << args[0].describe() << " (+) " << args[1].describe() << ")"; break;
    case Kind::Highest: os << "highest(" << args[0].describe() << ")"; break;
  }
  return os.str();
}

int TensorWord::total_degree() const {
  switch (kind) {
    case Kind::Std: return 1;
    case Kind::Dual: return args[0].total_degree();
    case Kind::Tensor: return args[0].total_degree() + args[1].total_degree();
    case Kind::Exterior: return ext_degree * args[0].total_degree();
    case Kind::DetPower: return static_cast<int>(det_exponent < 0 ? -det_exponent : det_exponent);
    case Kind::Sum: return std::max(args[0].total_degree(), args[1].total_degree());
    case Kind::Highest: return args[0].total_degree();
  }
  return 0;
}

namespace {

long binom(int n, int r) {
  if (r < 0 || r > n) return 0;
  long b = 1;
  for (int i = 0; i < r; ++i) b = b * (n - i) / (i + 1);
  return b;
}

[[noreturn]] void reject_highest() {
  throw std::invalid_argument("highest() is only supported at the root of a word; wrap it in MatrixRep");
}

}  // namespace

int tensor_dim(const RootDatum& g, const TensorWord& v) {
  switch (v.kind) {
    case TensorWord::Kind::Std: return g.std_dim();
    case TensorWord::Kind::Dual: return tensor_dim(g, v.args[0]);
    case TensorWord::Kind::Tensor: return tensor_dim(g, v.args[0]) * tensor_dim(g, v.args[1]);
    case TensorWord::Kind::Exterior: return static_cast<int>(binom(tensor_dim(g, v.args[0]), v.ext_degree));
    case TensorWord::Kind::DetPower: return 1;
    case TensorWord::Kind::Sum: return tensor_dim(g, v.args[0]) + tensor_dim(g, v.args[1]);
    case TensorWord::Kind::Highest:
      return static_cast<int>(tensor_character(g, v).dimension().get_si());
  }
  return 0;
}

QMat tensor_apply(const RootDatum& g, const TensorWord& v, const QMat& mat) {
  switch (v.kind) {
    case TensorWord::Kind::Std: return mat;
    case TensorWord::Kind::Dual: return inverse(tensor_apply(g, v.args[0], mat)).transposed();
    case TensorWord::Kind::Tensor:
      return kron(tensor_apply(g, v.args[0], mat), tensor_apply(g, v.args[1], mat));
    case TensorWord::Kind::Exterior: return compound(tensor_apply(g, v.args[0], mat), v.ext_degree);
    case TensorWord::Kind::DetPower: {
      Rat d = det(mat);
      if (d == 0) throw std::domain_error("determinant twist of a singular matrix");
      Rat val(1);
      long k = v.det_exponent;
      Rat base = k >= 0 ? d : Rat(1) / d;
      for (long i = 0; i < (k >= 0 ? k : -k); ++i) val *= base;
      QMat m(1, 1);
      m.at(0, 0) = val;
      return m;
    }
    case TensorWord::Kind::Sum: {
      QMat a = tensor_apply(g, v.args[0], mat);
      QMat b = tensor_apply(g, v.args[1], mat);
      QMat r(a.rows() + b.rows(), a.cols() + b.cols());
      for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
      for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) r.at(a.rows() + i, a.cols() + j) = b.at(i, j);
      return r;
    }
    case TensorWord::Kind::Highest: reject_highest();
  }
  throw std::logic_error("unreachable");
}

QMat tensor_lie_apply(const RootDatum& g, const TensorWord& v, const QMat& e) {
  switch (v.kind) {
    case TensorWord::Kind::Std: return e;
    case TensorWord::Kind::Dual: {
      QMat inner = tensor_lie_apply(g, v.args[0], e);
      return inner.transposed().scaled(Rat(-1));
    }
    case TensorWord::Kind::Tensor: {
      QMat la = tensor_lie_apply(g, v.args[0], e);
      QMat lb = tensor_lie_apply(g, v.args[1], e);
      return kron(la, QMat::identity(lb.rows())) + kron(QMat::identity(la.rows()), lb);
    }
    case TensorWord::Kind::Exterior: {
      QMat l = tensor_lie_apply(g, v.args[0], e);
      const int n = l.rows();
      const int r = v.ext_degree;
      auto sets = subsets_lex(n, r);
      std::vector<std::vector<int>> index_of;  // position of each subset via search
      QMat out(static_cast<int>(sets.size()), static_cast<int>(sets.size()));
      auto find_set = [&sets](const std::vector<int>& s) {
        auto it = std::lower_bound(sets.begin(), sets.end(), s);
        return static_cast<int>(it - sets.begin());
      };
      // Leibniz rule: act on one slot at a time, re-sort with sign.
      for (size_t col = 0; col < sets.size(); ++col) {
        const auto& t = sets[col];
        for (int slot = 0; slot < r; ++slot)
          for (int i = 0; i < n; ++i) {
            const Rat& c = l.at(i, t[slot]);
            if (c == 0) continue;
            std::vector<int> img = t;
            img[slot] = i;
            // sign of sorting; zero when an index repeats
            bool dup = false;
            int sign = 1;
            for (int a = 0; a < r && !dup; ++a)
              for (int b = a + 1; b < r; ++b) {
                if (img[a] == img[b]) {
                  dup = true;
                  break;
                }
                if (img[a] > img[b]) sign = -sign;
              }
            if (dup) continue;
            std::vector<int> srt = img;
            std::sort(srt.begin(), srt.end());
            int row = find_set(srt);
            out.at(row, static_cast<int>(col)) += (sign > 0 ? c : Rat(-c));
          }
      }
      return out;
    }
    case TensorWord::Kind::DetPower: {
      QMat m(1, 1);
      m.at(0, 0) = Rat(v.det_exponent) * e.trace();
      return m;
    }
    case TensorWord::Kind::Sum: {
      QMat a = tensor_lie_apply(g, v.args[0], e);
      QMat b = tensor_lie_apply(g, v.args[1], e);
      QMat r(a.rows() + b.rows(), a.cols() + b.cols());
      for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
      for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) r.at(a.rows() + i, a.cols() + j) = b.at(i, j);
      return r;
    }
    case TensorWord::Kind::Highest: reject_highest();
  }
  throw std::logic_error("unreachable");
}

namespace {

// Weight of each natural basis vector; all constructions keep the diagonal
// torus acting diagonally on this basis, in the same index order as
// tensor_apply (kron / subsets_lex / block order).
std::vector<Weight> basis_weights(const RootDatum& g, const TensorWord& v) {
  switch (v.kind) {
    case TensorWord::Kind::Std: return g.std_weights();
    case TensorWord::Kind::Dual: {
      auto w = basis_weights(g, v.args[0]);
      for (auto& x : w) x = weight_neg(x);
      return w;
    }
    case TensorWord::Kind::Tensor: {
      auto a = basis_weights(g, v.args[0]);
      auto b = basis_weights(g, v.args[1]);
      std::vector<Weight> out;
      out.reserve(a.size() * b.size());
      for (const auto& wa : a)
        for (const auto& wb : b) out.push_back(weight_add(wa, wb));
      return out;
    }
    case TensorWord::Kind::Exterior: {
      auto a = basis_weights(g, v.args[0]);
      std::vector<Weight> out;
      for (const auto& s : subsets_lex(static_cast<int>(a.size()), v.ext_degree)) {
        Weight w = weight_zero(g.rank());
        for (int i : s) w = weight_add(w, a[i]);
        out.push_back(w);
      }
      return out;
    }
    case TensorWord::Kind::DetPower: {
      Weight w = weight_zero(g.rank());
      for (const auto& e : g.std_weights()) w = weight_add(w, e);
      return {weight_scale(Int(v.det_exponent), w)};
    }
    case TensorWord::Kind::Sum: {
      auto a = basis_weights(g, v.args[0]);
      auto b = basis_weights(g, v.args[1]);
      a.insert(a.end(), b.begin(), b.end());
      return a;
    }
    case TensorWord::Kind::Highest: reject_highest();
  }
  throw std::logic_error("unreachable");
}

std::vector<QMat> simple_raising_ops(const RootDatum& g) {
  std::vector<QMat> ops;
  switch (g.family()) {
    case RootDatum::Family::GL:
    case RootDatum::Family::SL: {
      const int n = g.param();
      for (int i = 0; i + 1 < n; ++i) {
        QMat e(n, n);
        e.at(i, i + 1) = 1;
        ops.push_back(e);
      }
      break;
    }
    case RootDatum::Family::Torus: break;
    case RootDatum::Family::Product: {
      auto offs = g.realization_offsets();
      const int total = g.std_dim();
      for (size_t k = 0; k < g.factors().size(); ++k)
        for (const auto& b : simple_raising_ops(g.factors()[k])) {
          QMat e(total, total);
          for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) e.at(offs[k] + i, offs[k] + j) = b.at(i, j);
          ops.push_back(e);
        }
      break;
    }
  }
  return ops;
}

}  // namespace

Character tensor_character(const RootDatum& g, const TensorWord& v) {
  switch (v.kind) {
    case TensorWord::Kind::Std: {
      Character c = Character::zero(g);
      for (const auto& w : g.std_weights()) c.add_term(w, 1);
      return c;
    }
    case TensorWord::Kind::Dual: {
      Character inner = tensor_character(g, v.args[0]);
      Character c = Character::zero(g);
      for (const auto& [w, m] : inner.terms) c.add_term(weight_neg(w), m);
      return c;
    }
    case TensorWord::Kind::Tensor:
      return multiply_characters(tensor_character(g, v.args[0]), tensor_character(g, v.args[1]));
    case TensorWord::Kind::Exterior:
      return exterior_power_character(tensor_character(g, v.args[0]), v.ext_degree);
    case TensorWord::Kind::DetPower: {
      Character c = Character::zero(g);
      Weight w = weight_zero(g.rank());
      for (const auto& e : g.std_weights()) w = weight_add(w, e);
      c.add_term(weight_scale(Int(v.det_exponent), w), 1);
      return c;
    }
    case TensorWord::Kind::Sum:
      return tensor_character(g, v.args[0]) + tensor_character(g, v.args[1]);
    case TensorWord::Kind::Highest: {
      Character amb = tensor_character(g, v.args[0]);
      if (amb.terms.empty()) throw std::invalid_argument("highest() of the zero representation");
      Weight lead = amb.terms.rbegin()->first;
      if (!g.is_dominant(lead)) throw std::logic_error("leading weight of a genuine character must be dominant");
      return weyl_character(g, lead);
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<QMat> lie_algebra_basis(const RootDatum& g) {
  std::vector<QMat> basis;
  switch (g.family()) {
    case RootDatum::Family::GL: {
      const int n = g.param();
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          QMat e(n, n);
          e.at(i, j) = 1;
          basis.push_back(e);
        }
      break;
    }
    case RootDatum::Family::SL: {
      const int n = g.param();
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          QMat e(n, n);
          e.at(i, j) = 1;
          basis.push_back(e);
        }
      for (int i = 0; i + 1 < n; ++i) {
        QMat e(n, n);
        e.at(i, i) = 1;
        e.at(i + 1, i + 1) = -1;
        basis.push_back(e);
      }
      break;
    }
    case RootDatum::Family::Torus: {
      const int n = g.param();
      for (int i = 0; i < n; ++i) {
        QMat e(n, n);
        e.at(i, i) = 1;
        basis.push_back(e);
      }
      break;
    }
    case RootDatum::Family::Product: {
      auto offs = g.realization_offsets();
      const int total = g.std_dim();
      for (size_t k = 0; k < g.factors().size(); ++k)
        for (const auto& b : lie_algebra_basis(g.factors()[k])) {
          QMat e(total, total);
          for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) e.at(offs[k] + i, offs[k] + j) = b.at(i, j);
          basis.push_back(e);
        }
      break;
    }
  }
  return basis;
}

MatrixRep::MatrixRep(RootDatum g, TensorWord word) : group_(std::move(g)), word_(std::move(word)), character_(Character::zero(group_)) {
  if (word_.kind != TensorWord::Kind::Highest) {
    dim_ = tensor_dim(group_, word_);
    character_ = tensor_character(group_, word_);
    return;
  }

  restricted_ = true;
  ambient_ = word_.args[0];
  const Character amb_char = tensor_character(group_, ambient_);
  if (amb_char.terms.empty()) throw std::invalid_argument("highest() of the zero representation");
  const Weight lead = amb_char.terms.rbegin()->first;
  character_ = weyl_character(group_, lead);
  dim_ = static_cast<int>(character_.dimension().get_si());

  // Highest-weight vectors: the lead-weight slice of the natural weight
  // basis, intersected with the kernel of every simple raising operator.
  const auto bw = basis_weights(group_, ambient_);
  const int amb_dim = static_cast<int>(bw.size());
  std::vector<int> slice;
  for (int i = 0; i < amb_dim; ++i)
    if (bw[i] == lead) slice.push_back(i);

  QMat candidates(amb_dim, static_cast<int>(slice.size()));
  for (size_t c = 0; c < slice.size(); ++c) candidates.at(slice[c], static_cast<int>(c)) = 1;

  auto raising = simple_raising_ops(group_);
  QMat hw = candidates;
  if (!raising.empty()) {
    QMat constraints(0, 0);
    std::vector<std::vector<Rat>> rows;
    for (const auto& e : raising) {
      QMat img = tensor_lie_apply(group_, ambient_, e) * candidates;
      for (int i = 0; i < img.rows(); ++i) {
        std::vector<Rat> row(static_cast<size_t>(img.cols()));
        for (int j = 0; j < img.cols(); ++j) row[j] = img.at(i, j);
        rows.push_back(std::move(row));
      }
    }
    QMat sys = QMat::from_rows(rows);
    QMat coeffs = null_space(sys);
    hw = candidates * coeffs;
  }
  if (hw.cols() != 1)
    throw std::invalid_argument("highest(): leading constituent has multiplicity " + std::to_string(hw.cols()) +
                                ", expected 1");

  // Generate the irreducible constituent: span closure under the Lie algebra.
  auto lie = lie_algebra_basis(group_);
  std::vector<QMat> lie_on_amb;
  lie_on_amb.reserve(lie.size());
  for (const auto& e : lie) lie_on_amb.push_back(tensor_lie_apply(group_, ambient_, e));

  std::vector<std::vector<Rat>> span_rows;  // row-echelon maintained basis
  std::vector<int> lead_cols;
  auto try_insert = [&](std::vector<Rat> vec) -> bool {
    for (size_t b = 0; b < span_rows.size(); ++b) {
      const Rat& v = vec[lead_cols[b]];
      if (v != 0) {
        Rat f = v / span_rows[b][lead_cols[b]];
        for (size_t j = 0; j < vec.size(); ++j) vec[j] -= f * span_rows[b][j];
      }
    }
    int lc = -1;
    for (size_t j = 0; j < vec.size(); ++j)
      if (vec[j] != 0) {
        lc = static_cast<int>(j);
        break;
      }
    if (lc < 0) return false;
    span_rows.push_back(std::move(vec));
    lead_cols.push_back(lc);
    return true;
  };

  std::vector<std::vector<Rat>> frontier;
  {
    std::vector<Rat> v0(static_cast<size_t>(amb_dim));
    for (int i = 0; i < amb_dim; ++i) v0[i] = hw.at(i, 0);
    try_insert(v0);
    frontier.push_back(std::move(v0));
  }
  while (!frontier.empty()) {
    std::vector<std::vector<Rat>> next;
    for (const auto& v : frontier)
      for (const auto& l : lie_on_amb) {
        QVec img = l.apply(v);
        std::vector<Rat> iv(img.begin(), img.end());
        if (try_insert(iv)) next.push_back(std::move(iv));
      }
    frontier = std::move(next);
  }
  if (static_cast<int>(span_rows.size()) != dim_)
    throw std::logic_error("highest(): generated constituent has unexpected dimension");

  basis_ = QMat(amb_dim, dim_);
  for (int c = 0; c < dim_; ++c)
    for (int i = 0; i < amb_dim; ++i) basis_.at(i, c) = span_rows[c][i];

  // Left inverse from a set of pivot rows of the basis.
  std::vector<int> pivot_rows;
  rref(basis_.transposed(), &pivot_rows);
  QMat square(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) square.at(i, j) = basis_.at(pivot_rows[i], j);
  QMat sq_inv = inverse(square);
  basis_left_inverse_ = QMat(dim_, amb_dim);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) basis_left_inverse_.at(i, pivot_rows[j]) = sq_inv.at(i, j);
}

QMat MatrixRep::act(const QMat& mat) const {
  if (!restricted_) return tensor_apply(group_, word_, mat);
  QMat image = tensor_apply(group_, ambient_, mat) * basis_;
  QMat coords = basis_left_inverse_ * image;
  if (!(basis_ * coords == image)) throw std::logic_error("highest(): subspace is not stable under the given matrix");
  return coords;
}

QMat MatrixRep::lie_act(const QMat& e) const {
  if (!restricted_) return tensor_lie_apply(group_, word_, e);
  QMat image = tensor_lie_apply(group_, ambient_, e) * basis_;
  QMat coords = basis_left_inverse_ * image;
  if (!(basis_ * coords == image)) throw std::logic_error("highest(): subspace is not Lie-stable");
  return coords;
}

}  // namespace excalg
