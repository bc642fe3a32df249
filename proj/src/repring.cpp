#include "excalg/repring.hpp"

#include <algorithm>
#include <stdexcept>

namespace excalg {

Character Character::unit(const RootDatum& g) {
  Character c{g, {}};
  c.terms[weight_zero(g.rank())] = 1;
  return c;
}

void Character::add_term(const Weight& w, const Int& mult) {
  if (mult == 0) return;
  auto it = terms.find(w);
  if (it == terms.end()) {
    terms.emplace(w, mult);
  } else {
    it->second += mult;
    if (it->second == 0) terms.erase(it);
  }
}

Int Character::multiplicity(const Weight& w) const {
  auto it = terms.find(w);
  return it == terms.end() ? Int(0) : it->second;
}

Int Character::dimension() const {
  Int d(0);
  for (const auto& [w, m] : terms) d += m;
  return d;
}

bool Character::has_negative() const {
  for (const auto& [w, m] : terms)
    if (m < 0) return true;
  return false;
}

bool Character::is_weyl_invariant() const {
  for (const auto& refl : group.weyl_generators())
    for (const auto& [w, m] : terms)
      if (multiplicity(refl.apply(w)) != m) return false;
  return true;
}

Character Character::operator+(const Character& o) const {
  if (!(group == o.group)) throw std::invalid_argument("character group mismatch");
  Character r = *this;
  for (const auto& [w, m] : o.terms) r.add_term(w, m);
  return r;
}

Character Character::operator-(const Character& o) const {
  if (!(group == o.group)) throw std::invalid_argument("character group mismatch");
  Character r = *this;
  for (const auto& [w, m] : o.terms) r.add_term(w, -m);
  return r;
}

Character Character::scaled(const Int& c) const {
  Character r{group, {}};
  if (c == 0) return r;
  for (const auto& [w, m] : terms) r.terms[w] = c * m;
  return r;
}

bool operator==(const Character& a, const Character& b) {
  return a.group == b.group && a.terms == b.terms;
}

bool operator==(const RepRingElement& a, const RepRingElement& b) {
  return a.group == b.group && a.coeffs == b.coeffs;
}

namespace {

// Weight contents of all semistandard tableaux of shape `mu` (a partition,
// weakly decreasing, nonnegative) with entries in 1..n.
void ssyt_fill(const std::vector<long>& mu, int n, int row, int col,
               std::vector<std::vector<int>>& tab, std::vector<Int>& content,
               Character& acc) {
  const int nrows = static_cast<int>(mu.size());
  int r = row, c = col;
  while (r < nrows && c >= mu[r]) {
    ++r;
    c = 0;
  }
  if (r == nrows) {
    Weight w(content.begin(), content.end());
    acc.add_term(w, 1);
    return;
  }
  int lo = 1;
  if (c > 0) lo = std::max(lo, tab[r][c - 1]);          // rows weakly increase
  if (r > 0) lo = std::max(lo, tab[r - 1][c] + 1);      // columns strictly increase
  for (int v = lo; v <= n; ++v) {
    tab[r][c] = v;
    content[v - 1] += 1;
    ssyt_fill(mu, n, r, c + 1, tab, content, acc);
    content[v - 1] -= 1;
  }
}

Character gl_schur(const RootDatum& g, int n, const std::vector<long>& partition) {
  Character acc = Character::zero(g);
  std::vector<std::vector<int>> tab(partition.size());
  for (size_t i = 0; i < partition.size(); ++i) tab[i].assign(static_cast<size_t>(partition[i]), 0);
  std::vector<Int> content(static_cast<size_t>(n), Int(0));
  ssyt_fill(partition, n, 0, 0, tab, content, acc);
  return acc;
}

}  // namespace

Character weyl_character(const RootDatum& g, const Weight& lambda) {
  if (static_cast<int>(lambda.size()) != g.rank()) throw std::invalid_argument("weight rank mismatch");
  if (!g.is_dominant(lambda)) throw std::invalid_argument("weyl_character: weight is not dominant");

  switch (g.family()) {
    case RootDatum::Family::Torus: {
      Character c = Character::zero(g);
      c.terms[lambda] = 1;
      return c;
    }
    case RootDatum::Family::GL: {
      const int n = g.param();
      // Shift into partition shape, compute the Schur character, shift back.
      Int shift = lambda.back() < 0 ? Int(-lambda.back()) : Int(0);
      std::vector<long> mu(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) mu[i] = (lambda[i] + shift).get_si();
      while (!mu.empty() && mu.back() == 0) mu.pop_back();
      Character shifted = gl_schur(g, n, mu);
      if (shift == 0) return shifted;
      Character out = Character::zero(g);
      for (const auto& [w, m] : shifted.terms) {
        Weight v = w;
        for (auto& x : v) x -= shift;
        out.terms[v] = m;
      }
      return out;
    }
    case RootDatum::Family::SL: {
      const int n = g.param();
      // The section lift of a dominant SL weight is already a partition.
      RootDatum glg = RootDatum::gl(n);
      Weight lifted(lambda.begin(), lambda.end());
      lifted.push_back(Int(0));
      Character glchar = weyl_character(glg, lifted);
      Character out = Character::zero(g);
      for (const auto& [w, m] : glchar.terms) {
        Weight proj(static_cast<size_t>(n - 1));
        for (int i = 0; i + 1 < n; ++i) proj[i] = w[i] - w[n - 1];
        out.add_term(proj, m);
      }
      return out;
    }
    case RootDatum::Family::Product: {
      auto offs = g.lattice_offsets();
      Character acc = Character::zero(g);
      acc.terms[weight_zero(g.rank())] = 1;
      for (size_t k = 0; k < g.factors().size(); ++k) {
        const RootDatum& f = g.factors()[k];
        Weight part(lambda.begin() + offs[k], lambda.begin() + offs[k] + f.rank());
        Character fc = weyl_character(f, part);
        Character next = Character::zero(g);
        for (const auto& [w0, m0] : acc.terms)
          for (const auto& [w1, m1] : fc.terms) {
            Weight w = w0;
            for (size_t i = 0; i < w1.size(); ++i) w[offs[k] + i] = w1[i];
            next.add_term(w, m0 * m1);
          }
        acc = next;
      }
      return acc;
    }
  }
  throw std::logic_error("unreachable");
}

Character multiply_characters(const Character& a, const Character& b) {
  if (!(a.group == b.group)) throw std::invalid_argument("character group mismatch");
  Character r = Character::zero(a.group);
  for (const auto& [wa, ma] : a.terms)
    for (const auto& [wb, mb] : b.terms) r.add_term(weight_add(wa, wb), ma * mb);
  return r;
}

RepRingElement decompose_character(const Character& chi) {
  RepRingElement out{chi.group, {}};
  Character rem = chi;
  // Each round cancels the current lex-largest term exactly (Weyl characters
  // have leading coefficient 1), so the loop terminates on genuine input.
  const int max_rounds = 100000;
  for (int round = 0; round < max_rounds; ++round) {
    if (rem.terms.empty()) return out;
    const Weight lead = rem.terms.rbegin()->first;
    const Int coeff = rem.terms.rbegin()->second;
    if (!chi.group.is_dominant(lead))
      throw std::invalid_argument("not a virtual character of this group");
    out.coeffs[lead] += coeff;
    if (out.coeffs[lead] == 0) out.coeffs.erase(lead);
    rem = rem - weyl_character(chi.group, lead).scaled(coeff);
  }
  throw std::invalid_argument("not a virtual character of this group");
}

Character rep_ring_to_character(const RepRingElement& e) {
  Character acc = Character::zero(e.group);
  for (const auto& [lambda, c] : e.coeffs) acc = acc + weyl_character(e.group, lambda).scaled(c);
  return acc;
}

Character exterior_power_character(const Character& chi, int r) {
  if (r < 0) throw std::invalid_argument("exterior power degree must be >= 0");
  if (chi.has_negative())
    throw std::invalid_argument("exterior power of a virtual character is undefined");
  // Coefficient of t^r in prod over the weight multiset of (1 + t x^mu).
  std::vector<Character> coeff;
  coeff.push_back(Character::unit(chi.group));
  for (int k = 1; k <= r; ++k) coeff.push_back(Character::zero(chi.group));
  for (const auto& [w, m] : chi.terms) {
    const long mult = m.get_si();
    for (long copy = 0; copy < mult; ++copy) {
      for (int k = r; k >= 1; --k) {
        Character moved = Character::zero(chi.group);
        for (const auto& [v, c] : coeff[k - 1].terms) moved.add_term(weight_add(v, w), c);
        coeff[k] = coeff[k] + moved;
      }
    }
  }
  return coeff[r];
}

std::vector<Rat> power_sums_to_elementary(const std::vector<Rat>& p) {
  const size_t k = p.size();
  std::vector<Rat> e(k + 1, Rat(0));
  e[0] = 1;
  // k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i
  for (size_t m = 1; m <= k; ++m) {
    Rat s(0);
    for (size_t i = 1; i <= m; ++i) {
      Rat term = e[m - i] * p[i - 1];
      if (i % 2 == 0) term = -term;
      s += term;
    }
    e[m] = s / Rat(static_cast<long>(m));
  }
  return std::vector<Rat>(e.begin() + 1, e.end());
}

std::vector<Rat> elementary_to_power_sums(const std::vector<Rat>& e_in) {
  const size_t k = e_in.size();
  std::vector<Rat> e(k + 1, Rat(0));
  e[0] = 1;
  for (size_t i = 0; i < k; ++i) e[i + 1] = e_in[i];
  std::vector<Rat> p(k, Rat(0));
  for (size_t m = 1; m <= k; ++m) {
    // p_m = (-1)^{m-1} (m e_m - sum_{i=1}^{m-1} (-1)^{i-1} e_{m-i} p_i)
    Rat s = Rat(static_cast<long>(m)) * e[m];
    for (size_t i = 1; i < m; ++i) {
      Rat term = e[m - i] * p[i - 1];
      if (i % 2 == 0) term = -term;
      s -= term;
    }
    p[m - 1] = (m % 2 == 0) ? Rat(-s) : s;
  }
  return p;
}

}  // namespace excalg
