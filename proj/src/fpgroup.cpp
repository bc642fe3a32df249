#include "excalg/fpgroup.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace excalg {

GroupWord GroupWord::gen(int index, int exponent) {
  if (exponent != 1 && exponent != -1) throw std::invalid_argument("letter exponent must be +-1");
  GroupWord w;
  w.letters.emplace_back(index, exponent);
  return w;
}

bool GroupWord::reduced() const {
  for (size_t i = 0; i + 1 < letters.size(); ++i)
    if (letters[i].first == letters[i + 1].first && letters[i].second == -letters[i + 1].second) return false;
  return true;
}

GroupWord free_reduce(std::vector<std::pair<int, int>> letters) {
  GroupWord w;
  for (const auto& l : letters) {
    if (l.second != 1 && l.second != -1) throw std::invalid_argument("letter exponent must be +-1");
    if (!w.letters.empty() && w.letters.back().first == l.first && w.letters.back().second == -l.second)
      w.letters.pop_back();
    else
      w.letters.push_back(l);
  }
  return w;
}

GroupWord GroupWord::inverse() const {
  GroupWord w;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.emplace_back(it->first, -it->second);
  return w;
}

GroupWord GroupWord::operator*(const GroupWord& o) const {
  std::vector<std::pair<int, int>> cat = letters;
  cat.insert(cat.end(), o.letters.begin(), o.letters.end());
  return free_reduce(std::move(cat));
}

std::string GroupWord::format(const std::vector<std::string>& names) const {
  if (letters.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) os << ".";
    os << names.at(static_cast<size_t>(letters[i].first));
    if (letters[i].second < 0) os << "^-1";
  }
  return os.str();
}

FPGroup FPGroup::free_group(std::vector<std::string> gens) {
  FPGroup g;
  g.generators = std::move(gens);
  return g;
}

FPGroup FPGroup::free_abelian(std::vector<std::string> gens) {
  FPGroup g;
  g.generators = std::move(gens);
  const int n = g.num_generators();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      GroupWord w = GroupWord::gen(i) * GroupWord::gen(j) * GroupWord::gen(i, -1) * GroupWord::gen(j, -1);
      g.relators.push_back(w);
    }
  return g;
}

bool FPGroup::abelian_presentation() const {
  for (const auto& r : relators) {
    if (r.length() != 4) return false;
    const auto& l = r.letters;
    bool comm = l[0].first == l[2].first && l[1].first == l[3].first && l[0].second == -l[2].second &&
                l[1].second == -l[3].second;
    if (!comm) return false;
  }
  return true;
}

void FPGroup::validate() const {
  for (const auto& r : relators) {
    if (!r.reduced()) throw std::invalid_argument("relator is not freely reduced");
    for (const auto& [g, e] : r.letters)
      if (g < 0 || g >= num_generators()) throw std::invalid_argument("relator uses an unknown generator");
  }
  if (degree_map) {
    if (static_cast<int>(degree_map->size()) != num_generators())
      throw std::invalid_argument("degree map size mismatch");
    for (const auto& r : relators) {
      long d = 0;
      for (const auto& [g, e] : r.letters) d += e * (*degree_map)[static_cast<size_t>(g)];
      if (d != 0) throw std::invalid_argument("degree map does not kill a relator");
    }
  }
}

QMat RepresentationPoint::evaluate(const GroupWord& w) const {
  QMat m = QMat::identity(dim);
  std::vector<std::optional<QMat>> inv(images.size());
  for (const auto& [g, e] : w.letters) {
    if (g < 0 || g >= static_cast<int>(images.size()))
      throw std::invalid_argument("word uses an unknown generator");
    if (e > 0) {
      m = m * images[static_cast<size_t>(g)];
    } else {
      auto& cache = inv[static_cast<size_t>(g)];
      if (!cache) cache = inverse(images[static_cast<size_t>(g)]);
      m = m * *cache;
    }
  }
  return m;
}

RepresentationPoint RepresentationPoint::conjugated(const QMat& h) const {
  RepresentationPoint p = *this;
  QMat hinv = inverse(h);
  for (auto& img : p.images) img = h * img * hinv;
  return p;
}

RepresentationPoint RepresentationPoint::composed_with(const std::vector<GroupWord>& images_of_gens) const {
  if (images_of_gens.size() != images.size())
    throw std::invalid_argument("endomorphism must give one word per generator");
  RepresentationPoint p = *this;
  for (size_t i = 0; i < images.size(); ++i) p.images[i] = evaluate(images_of_gens[i]);
  return p;
}

RepresentationCheck check_representation(const RepresentationPoint& p) {
  RepresentationCheck c;
  if (static_cast<int>(p.images.size()) != p.group.num_generators()) {
    c.failure = "wrong number of generator images";
    return c;
  }
  for (size_t i = 0; i < p.images.size(); ++i) {
    if (p.images[i].rows() != p.dim || p.images[i].cols() != p.dim) {
      c.failure = "image of generator " + p.group.generators[i] + " has the wrong shape";
      return c;
    }
    if (det(p.images[i]) == 0) {
      c.failure = "image of generator " + p.group.generators[i] + " is singular";
      return c;
    }
  }
  for (size_t r = 0; r < p.group.relators.size(); ++r) {
    if (!p.evaluate(p.group.relators[r]).is_identity()) {
      c.failure = "relator " + p.group.relators[r].format(p.group.generators) + " does not evaluate to the identity";
      c.failed_relator = static_cast<int>(r);
      return c;
    }
  }
  c.valid = true;
  return c;
}

std::vector<GroupWord> reduced_words_up_to(int num_gens, int max_len) {
  std::vector<GroupWord> out;
  std::vector<GroupWord> frontier{GroupWord::id()};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<GroupWord> next;
    for (const auto& w : frontier)
      for (int g = 0; g < num_gens; ++g)
        for (int e : {1, -1}) {
          if (!w.letters.empty() && w.letters.back().first == g && w.letters.back().second == -e) continue;
          GroupWord x = w;
          x.letters.emplace_back(g, e);
          next.push_back(std::move(x));
        }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

namespace {

void dfs_words(const RepresentationPoint& p, const std::vector<QMat>& gen_invs, GroupWord& word, const QMat& acc,
               int remaining, const std::function<void(const GroupWord&, const QMat&)>& visit) {
  if (remaining == 0) return;
  for (int g = 0; g < p.group.num_generators(); ++g)
    for (int e : {1, -1}) {
      if (!word.letters.empty() && word.letters.back().first == g && word.letters.back().second == -e) continue;
      const QMat& step = e > 0 ? p.images[static_cast<size_t>(g)] : gen_invs[static_cast<size_t>(g)];
      QMat next = acc * step;
      word.letters.emplace_back(g, e);
      visit(word, next);
      dfs_words(p, gen_invs, word, next, remaining - 1, visit);
      word.letters.pop_back();
    }
}

}  // namespace

void for_each_reduced_word(const RepresentationPoint& p, int max_len,
                           const std::function<void(const GroupWord&, const QMat&)>& visit) {
  std::vector<QMat> gen_invs;
  gen_invs.reserve(p.images.size());
  for (const auto& m : p.images) gen_invs.push_back(inverse(m));
  GroupWord w;
  dfs_words(p, gen_invs, w, QMat::identity(p.dim), max_len, visit);
}

}  // namespace excalg
