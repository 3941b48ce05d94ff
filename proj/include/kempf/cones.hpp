#pragma once

// Polyhedral cones in Y(Q) held in both the dual description (defining
// inequalities, characters beta with <v, beta> >= 0) and the primal
// description (generators). Conversions use the double-description method.

#include <optional>
#include <vector>

#include "kempf/lattice.hpp"

namespace kempf {

class Cone {
 public:
  /// The cone defined by D: {v : <v, beta> >= 0 for all beta in D}.
  /// Zero functionals are dropped; the rest are stored primitive, deduplicated
  /// and sorted. D empty gives the whole space.
  static Cone from_inequalities(std::size_t dim, std::vector<Character> defining);
  /// The cone generated by G (nonnegative combinations). Empty G gives {0}.
  static Cone from_generators(std::size_t dim, std::vector<Cocharacter> gens);
  static Cone full_space(std::size_t dim) { return from_inequalities(dim, {}); }
  static Cone zero_cone(std::size_t dim) { return from_generators(dim, {}); }

  std::size_t dim() const { return dim_; }
  const std::vector<Character>& inequalities() const { return inequalities_; }
  /// Primitive integral vectors, sorted lexicographically: +-b for each
  /// lineality basis vector b, followed by extreme rays reduced orthogonally
  /// to the lineality space.
  const std::vector<Cocharacter>& generators() const { return generators_; }
  const std::vector<Cocharacter>& lineality_basis() const { return lineality_; }
  const std::vector<Cocharacter>& extreme_rays() const { return rays_; }

  bool contains(const Cocharacter& v) const;
  bool is_zero() const { return generators_.empty(); }

 private:
  Cone() = default;
  friend Cone negate(const Cone& c);

  std::size_t dim_ = 0;
  std::vector<Character> inequalities_;
  std::vector<Cocharacter> generators_;
  std::vector<Cocharacter> lineality_;
  std::vector<Cocharacter> rays_;
};

Cone cone_from_inequalities(std::size_t dim, std::vector<Character> defining);
Cone cone_from_generators(std::size_t dim, std::vector<Cocharacter> gens);
bool contains(const Cone& c, const Cocharacter& v);
/// Inequalities are the union of both lists; generators are recomputed.
Cone intersect(const Cone& a, const Cone& b);
Cone negate(const Cone& c);
/// Set equality, decided by mutual generator containment.
bool same_set(const Cone& a, const Cone& b);

struct SubspaceCheck {
  bool is_subspace = false;
  /// A generator g with -g outside the cone, when the cone is not a subspace.
  std::optional<Cocharacter> witness;
};

SubspaceCheck check_linear_subspace(const Cone& c);
inline bool is_linear_subspace(const Cone& c) { return check_linear_subspace(c).is_subspace; }

namespace detail {

/// Output of one double-description pass over {x : <a, x> >= 0, a in ineqs}.
struct Frame {
  std::vector<ZVec> lineality;  // basis, RREF-normalized, primitive
  std::vector<ZVec> rays;       // extreme rays modulo lineality, primitive
};

Frame double_description(std::size_t dim, const std::vector<ZVec>& ineqs);

}  // namespace detail

}  // namespace kempf
