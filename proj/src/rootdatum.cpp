#include "kempf/rootdatum.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace kempf {

WeylElement WeylElement::identity(std::size_t rank) {
  return WeylElement{ZMatrix::identity(rank), ZMatrix::identity(rank), {}};
}

WeylElement WeylElement::inverse() const {
  std::vector<int> rev(word.rbegin(), word.rend());
  return WeylElement{x_matrix.transpose(), y_matrix.transpose(), std::move(rev)};
}

bool WeylElement::is_identity() const { return y_matrix == ZMatrix::identity(y_matrix.rows()); }

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  std::vector<int> word = a.word;
  word.insert(word.end(), b.word.begin(), b.word.end());
  return WeylElement{a.y_matrix * b.y_matrix, a.x_matrix * b.x_matrix, std::move(word)};
}

Cocharacter act(const WeylElement& w, const Cocharacter& lambda) {
  return Cocharacter(w.y_matrix.apply(lambda.coords()));
}

Character act_char(const WeylElement& w, const Character& beta) {
  return Character(w.x_matrix.apply(beta.coords()));
}

RootDatum::RootDatum(std::size_t rank, std::vector<Character> roots, std::vector<std::size_t> simple,
                     std::vector<Cocharacter> coroots, ZMatrix gram)
    : rank_(rank),
      roots_(std::move(roots)),
      simple_(std::move(simple)),
      coroots_(std::move(coroots)),
      gram_(std::move(gram)) {
  if (rank_ == 0) throw InputError("rank: must be positive");
  if (gram_.rows() != rank_ || gram_.cols() != rank_)
    throw InputError("gram: expected a " + std::to_string(rank_) + "x" + std::to_string(rank_) + " matrix");
  if (coroots_.size() != roots_.size()) throw InputError("coroots: must be parallel to roots");
  for (const auto& r : roots_)
    if (r.size() != rank_) throw InputError("roots: entry of wrong dimension");
  for (const auto& c : coroots_)
    if (c.size() != rank_) throw InputError("coroots: entry of wrong dimension");
  for (auto s : simple_)
    if (s >= roots_.size()) throw InputError("simple: index out of range");
}

Rational RootDatum::inner(const Cocharacter& l, const Cocharacter& m) const {
  if (l.size() != rank_ || m.size() != rank_) throw InputError("norm: dimension mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < rank_; ++i) {
    if (l[i] == 0) continue;
    for (std::size_t j = 0; j < rank_; ++j) acc += l[i] * Rational(gram_(i, j)) * m[j];
  }
  return acc;
}

Rational norm_sq(const RootDatum& d, const Cocharacter& lambda) { return d.norm_sq(lambda); }

WeylElement RootDatum::simple_reflection(std::size_t k) const {
  if (k >= simple_.size()) throw InputError("weyl word: simple reflection index out of range");
  const auto alpha = to_integral(roots_[simple_[k]].coords());
  const auto coalpha = to_integral(coroots_[simple_[k]].coords());
  ZMatrix y = ZMatrix::identity(rank_);
  ZMatrix x = ZMatrix::identity(rank_);
  // On Y: l -> l - <l, a> a^v ; on X: b -> b - <a^v, b> a.
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j) {
      y(i, j) -= coalpha[i] * alpha[j];
      x(i, j) -= alpha[i] * coalpha[j];
    }
  return WeylElement{std::move(y), std::move(x), {static_cast<int>(k)}};
}

WeylElement RootDatum::element_from_word(const std::vector<int>& word) const {
  WeylElement w = WeylElement::identity(rank_);
  for (int k : word) {
    if (k < 0) throw InputError("weyl word: negative index");
    w = w * simple_reflection(static_cast<std::size_t>(k));
  }
  return w;
}

std::size_t RootDatum::find_root(const Character& beta) const {
  auto it = std::find(roots_.begin(), roots_.end(), beta);
  return static_cast<std::size_t>(it - roots_.begin());
}

std::vector<std::size_t> RootDatum::root_permutation(const WeylElement& w) const {
  std::vector<std::size_t> perm(roots_.size());
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    perm[i] = find_root(act_char(w, roots_[i]));
    if (perm[i] == roots_.size()) throw InputError("weyl element does not permute the roots");
  }
  return perm;
}

ParabolicType RootDatum::parabolic_type(const Cocharacter& lambda) const {
  ParabolicType p;
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    const Rational v = pairing(lambda, roots_[i]);
    if (v >= 0) p.nonneg_roots.push_back(i);
    if (v == 0) p.levi_roots.push_back(i);
    if (v > 0) p.ru_roots.push_back(i);
  }
  return p;
}

std::vector<WeylElement> weyl_group(const RootDatum& d, std::size_t bound) {
  std::vector<QVec> simple_rows;
  for (auto s : d.simple()) simple_rows.push_back(d.roots()[s].coords());
  if (rank_of_rows(simple_rows, d.rank()) != simple_rows.size())
    throw InputError("simple: roots are not linearly independent");

  std::vector<WeylElement> gens;
  for (std::size_t k = 0; k < d.simple().size(); ++k) gens.push_back(d.simple_reflection(k));

  // Breadth-first over word length; processing each level in lexicographic
  // order and generators in increasing order makes the first word found for
  // an element its lexicographically smallest reduced word.
  std::map<ZMatrix, std::size_t> seen;
  std::vector<WeylElement> out{WeylElement::identity(d.rank())};
  seen.emplace(out[0].y_matrix, 0);
  std::size_t level_begin = 0;
  while (level_begin < out.size()) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (const auto& g : gens) {
        WeylElement next = out[i] * g;
        if (seen.count(next.y_matrix)) continue;
        if (out.size() >= bound)
          throw ResourceError("weyl_group: closure exceeded bound of " + std::to_string(bound) + " elements");
        seen.emplace(next.y_matrix, out.size());
        out.push_back(std::move(next));
      }
    }
    level_begin = level_end;
  }
  std::stable_sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
  });
  return out;
}

bool is_subgroup(const std::vector<WeylElement>& elements) {
  if (elements.empty()) return false;
  const auto has = [&](const WeylElement& w) {
    return std::find(elements.begin(), elements.end(), w) != elements.end();
  };
  if (!has(WeylElement::identity(elements.front().y_matrix.rows()))) return false;
  for (const auto& a : elements)
    for (const auto& b : elements)
      if (!has(a * b)) return false;
  return true;
}

ZMatrix symmetrize_form(const RootDatum& d, const ZMatrix& form) {
  const std::size_t n = d.rank();
  ZMatrix acc(n, n);
  for (const auto& w : weyl_group(d)) {
    const ZMatrix term = w.y_matrix.transpose() * form * w.y_matrix;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) acc(i, j) += term(i, j);
  }
  Integer g = 0;
  for (const auto& z : acc.data()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  if (g == 0) return acc;
  ZMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = acc(i, j) / g;
  return out;
}

std::vector<Violation> validate_datum(const RootDatum& d, std::size_t weyl_bound) {
  std::vector<Violation> out;
  const std::size_t n = d.rank();
  const ZMatrix& g = d.gram();

  bool symmetric = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (g(i, j) != g(j, i)) symmetric = false;
  if (!symmetric) out.push_back({"gram", "not symmetric"});

  const QMatrix gq = to_rational(g);
  for (std::size_t k = 1; k <= n; ++k) {
    QMatrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = gq(i, j);
    if (determinant(minor) <= 0) {
      out.push_back({"gram", "not positive definite"});
      break;
    }
  }

  bool integral = true;
  for (const auto& r : d.roots()) integral = integral && r.is_integral();
  for (const auto& c : d.coroots()) integral = integral && c.is_integral();
  if (!integral) {
    out.push_back({"roots", "roots and coroots must be integral"});
    return out;
  }

  for (std::size_t i = 0; i < d.roots().size(); ++i) {
    if (pairing(d.coroots()[i], d.roots()[i]) != 2) {
      out.push_back({"coroots", "<coroot, root> != 2 at index " + std::to_string(i)});
    }
    if (d.find_root(-d.roots()[i]) == d.roots().size())
      out.push_back({"roots", "not closed under negation (index " + std::to_string(i) + ")"});
  }

  std::vector<QVec> simple_rows;
  for (auto s : d.simple()) simple_rows.push_back(d.roots()[s].coords());
  if (rank_of_rows(simple_rows, n) != simple_rows.size()) {
    out.push_back({"simple", "simple roots are not linearly independent"});
    return out;
  }
  // Without these the reflections need not generate a finite group.
  if (!out.empty()) return out;
  for (std::size_t k = 0; k < d.simple().size(); ++k) {
    const WeylElement s = d.simple_reflection(k);
    for (const auto& r : d.roots())
      if (d.find_root(act_char(s, r)) == d.roots().size()) {
        out.push_back({"roots", "not permuted by simple reflection " + std::to_string(k)});
        return out;
      }
  }

  try {
    const auto group = weyl_group(d, weyl_bound);
    bool invariant = true;
    bool permutes = true;
    for (const auto& w : group) {
      if (w.y_matrix.transpose() * g * w.y_matrix != g) invariant = false;
      for (const auto& r : d.roots())
        if (d.find_root(act_char(w, r)) == d.roots().size()) permutes = false;
    }
    if (!invariant) out.push_back({"gram", "not Weyl-invariant"});
    if (!permutes) out.push_back({"roots", "not permuted by the Weyl group"});
  } catch (const ResourceError& e) {
    out.push_back({"simple", e.what()});
  }
  return out;
}

}  // namespace kempf
