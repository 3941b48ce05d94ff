#pragma once

// Torus combinatorics of a split reductive group: ambient lattices Y = X = Z^n,
// roots and coroots, a Weyl-invariant integral norm, the Weyl group generated by
// simple reflections, and the map from a cocharacter to the root data of its
// parabolic subgroup.

#include <cstddef>
#include <string>
#include <vector>

#include "kempf/lattice.hpp"

namespace kempf {

/// An element of the Weyl group, acting on Y by `y_matrix` and on X by the
/// contragredient `x_matrix` (so that <w.l, w_!b> = <l, b>).
struct WeylElement {
  ZMatrix y_matrix;
  ZMatrix x_matrix;
  /// Indices into the simple-root list; the element is s_{w[0]} s_{w[1]} ...
  std::vector<int> word;

  static WeylElement identity(std::size_t rank);

  /// y_matrix^{-1} = x_matrix^T by adjointness, so no inversion is needed.
  WeylElement inverse() const;
  bool is_identity() const;

  /// Composition (a*b acts as b first). The word is concatenated, not reduced.
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  /// Elements are equal when they act identically on Y.
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.y_matrix == b.y_matrix; }
  friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }
};

Cocharacter act(const WeylElement& w, const Cocharacter& lambda);
Character act_char(const WeylElement& w, const Character& beta);

/// Root subsets describing P_l, its Levi factor L_l and unipotent radical R_u(P_l).
/// All index lists are sorted ascending and index into RootDatum::roots().
struct ParabolicType {
  std::vector<std::size_t> nonneg_roots;
  std::vector<std::size_t> levi_roots;
  std::vector<std::size_t> ru_roots;

  /// False for the whole group (e.g. l = 0 or l central).
  bool is_proper() const { return !ru_roots.empty(); }
  friend bool operator==(const ParabolicType&, const ParabolicType&) = default;
};

struct Violation {
  std::string field;
  std::string message;
  std::string str() const { return field + ": " + message; }
};

class RootDatum {
 public:
  /// Checks only shapes (dimension and index ranges); semantic invariants are
  /// reported by validate_datum.
  RootDatum(std::size_t rank, std::vector<Character> roots, std::vector<std::size_t> simple,
            std::vector<Cocharacter> coroots, ZMatrix gram);

  std::size_t rank() const { return rank_; }
  const std::vector<Character>& roots() const { return roots_; }
  const std::vector<Cocharacter>& coroots() const { return coroots_; }
  const std::vector<std::size_t>& simple() const { return simple_; }
  const ZMatrix& gram() const { return gram_; }

  /// Bilinear form (l, m) = l^T gram m.
  Rational inner(const Cocharacter& l, const Cocharacter& m) const;
  Rational norm_sq(const Cocharacter& l) const { return inner(l, l); }

  /// Reflection in the k-th simple root (k indexes simple(), not roots()).
  WeylElement simple_reflection(std::size_t k) const;
  WeylElement element_from_word(const std::vector<int>& word) const;

  /// Index of a root equal to beta, or roots().size() if none.
  std::size_t find_root(const Character& beta) const;
  /// perm[i] = index of w_!(roots[i]). Throws if w does not permute the roots.
  std::vector<std::size_t> root_permutation(const WeylElement& w) const;

  ParabolicType parabolic_type(const Cocharacter& lambda) const;

 private:
  std::size_t rank_;
  std::vector<Character> roots_;
  std::vector<std::size_t> simple_;
  std::vector<Cocharacter> coroots_;
  ZMatrix gram_;
};

Rational norm_sq(const RootDatum& d, const Cocharacter& lambda);

/// Empty iff every invariant holds: gram symmetric positive definite and
/// Weyl-invariant, <a^v, a> = 2, roots closed under negation, simple roots
/// linearly independent. Never throws on semantic problems.
std::vector<Violation> validate_datum(const RootDatum& d, std::size_t weyl_bound = 1'000'000);

/// All elements generated by the simple reflections, each with a reduced
/// word, sorted by word length then lexicographically. Throws ResourceError
/// when more than `bound` elements are produced and InputError when the
/// simple roots are linearly dependent.
std::vector<WeylElement> weyl_group(const RootDatum& d, std::size_t bound = 1'000'000);

/// True iff the list contains the identity and is closed under composition.
bool is_subgroup(const std::vector<WeylElement>& elements);

/// Sum over W of w^T form w, divided by the gcd of its entries. The result is
/// a positive multiple of the Weyl average of `form`, hence integral and
/// Weyl-invariant.
ZMatrix symmetrize_form(const RootDatum& d, const ZMatrix& form);

}  // namespace kempf
