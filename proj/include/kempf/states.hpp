#pragma once

// Bounded quasi-states as finite data. A family holds one character set per
// index; indices stand for the finitely many ways the state can look from the
// reference torus, and a finite subgroup of the Weyl group permutes them.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kempf/cones.hpp"
#include "kempf/rootdatum.hpp"

namespace kempf {

/// Value of a numerical function: -inf, a rational, or +inf.
class ExtendedValue {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  static ExtendedValue neg_inf() { return ExtendedValue(Kind::NegInf, 0); }
  static ExtendedValue pos_inf() { return ExtendedValue(Kind::PosInf, 0); }
  static ExtendedValue finite(Rational v) { return ExtendedValue(Kind::Finite, std::move(v)); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  /// Only meaningful when finite.
  const Rational& value() const { return value_; }

  bool positive() const { return kind_ == Kind::PosInf || (is_finite() && value_ > 0); }
  bool nonnegative() const { return kind_ == Kind::PosInf || (is_finite() && value_ >= 0); }

  friend bool operator==(const ExtendedValue& a, const ExtendedValue& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
  }
  friend bool operator<(const ExtendedValue& a, const ExtendedValue& b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
    return a.kind_ == Kind::Finite && a.value_ < b.value_;
  }
  std::string str() const;

 private:
  ExtendedValue(Kind k, Rational v) : kind_(k), value_(std::move(v)) {}
  Kind kind_;
  Rational value_;
};

/// The finite character set attached to one index. Stored sorted and deduplicated.
class StateComponent {
 public:
  StateComponent() = default;
  explicit StateComponent(std::vector<Character> chars);

  const std::vector<Character>& chars() const { return chars_; }
  bool empty() const { return chars_.empty(); }
  friend bool operator==(const StateComponent&, const StateComponent&) = default;

 private:
  std::vector<Character> chars_;
};

/// min over the component of <lambda, alpha>; +inf for the empty component.
ExtendedValue mu(const StateComponent& s, const Cocharacter& lambda);

/// A group action of a finite subgroup of W on {0, ..., n-1}. Either trivial
/// (every Weyl element fixes every index) or given on listed elements and
/// closed under composition.
class IndexAction {
 public:
  struct Entry {
    WeylElement element;
    std::vector<std::size_t> perm;
  };

  static IndexAction trivial(std::size_t n) { return IndexAction(n); }
  /// Closes `generators` under composition. Throws InputError if the closure
  /// is not a well-defined action (the same element with two permutations)
  /// or a permutation is malformed.
  static IndexAction generated(std::size_t n, std::vector<Entry> generators, std::size_t bound = 100'000);

  std::size_t size() const { return n_; }
  bool is_trivial() const { return trivial_; }
  /// Elements of the acting group, with permutations; empty when trivial.
  const std::vector<Entry>& elements() const { return elements_; }
  /// Throws InputError when w lies outside the acting group.
  std::size_t apply(const WeylElement& w, std::size_t index) const;
  bool acts_on(const WeylElement& w) const;

  /// Same index count and the same permutation for every element of either side.
  friend bool operator==(const IndexAction& a, const IndexAction& b);

 private:
  explicit IndexAction(std::size_t n) : n_(n), trivial_(true) {}
  std::size_t n_ = 0;
  bool trivial_ = true;
  std::vector<Entry> elements_;
};

class QuasiStateFamily {
 public:
  QuasiStateFamily(std::vector<StateComponent> components, IndexAction action, std::size_t base = 0);
  /// One component with the trivial action.
  static QuasiStateFamily single(StateComponent c);

  std::size_t size() const { return components_.size(); }
  const std::vector<StateComponent>& components() const { return components_; }
  const StateComponent& component(std::size_t i) const { return components_.at(i); }
  const StateComponent& base_component() const { return components_[base_]; }
  const IndexAction& action() const { return action_; }
  std::size_t base_index() const { return base_; }

  /// Number of distinct characters across components and across every
  /// pushforward by an element of the acting group (the boundedness witness).
  std::size_t orbit_character_count() const;

  friend bool operator==(const QuasiStateFamily& a, const QuasiStateFamily& b) {
    return a.components_ == b.components_ && a.action_ == b.action_ && a.base_ == b.base_;
  }

 private:
  std::vector<StateComponent> components_;
  IndexAction action_;
  std::size_t base_;
};

/// Result component i is w_! applied to component action(w^{-1}, i).
QuasiStateFamily pushforward(const WeylElement& w, const QuasiStateFamily& f);
/// Componentwise union; the members must share index count and action.
QuasiStateFamily union_of(const std::vector<QuasiStateFamily>& families);
/// Union of pushforwards over a subgroup H; the result is fixed by every h in H.
QuasiStateFamily average_over_group(const std::vector<WeylElement>& subgroup, const QuasiStateFamily& f);
/// The cone where mu(component) >= 0.
Cone zero_set(const QuasiStateFamily& f, std::size_t index, std::size_t dim);
/// Multiplies every character by the lcm of all denominators.
QuasiStateFamily scale_to_integral(const QuasiStateFamily& f);

/// Single-component family whose characters are the stabilizer-average of the
/// cone's defining inequalities. Its zero set is the cone and it is fixed by
/// every element of `stabilizer`. Throws InputError if `stabilizer` is not a
/// subgroup or does not map the cone to itself.
QuasiStateFamily state_from_cone(const Cone& c, const std::vector<WeylElement>& stabilizer);

/// Indices are the Weyl group elements (in weyl_group order, so the identity is
/// the base index) acted on by left multiplication. The component at w is the
/// set of roots of R_u(P) when w stabilizes P, and empty otherwise. Throws
/// InputError for the whole group.
QuasiStateFamily state_from_parabolic(const RootDatum& d, const ParabolicType& p);

struct AdmissibilityReport {
  bool passed = true;
  std::vector<std::string> failures;
  std::size_t samples = 0;
  /// What a pass does and does not certify.
  std::string scope;
};

/// Equality of mu across indices related by elements of the acting group
/// that fix lambda.
AdmissibilityReport check_admissible_at(const QuasiStateFamily& f, const Cocharacter& lambda);

/// Sign-preservation check (mu >= 0 stays >= 0) at sampled points: the
/// supplied points, generators of every component's zero set, and the
/// W-orbits of one interior point of each face of the dominant chamber.
AdmissibilityReport check_quasi_admissible(const RootDatum& d, const QuasiStateFamily& f,
                                           const std::vector<Cocharacter>& extra_samples = {});

/// The deterministic sample set used by check_quasi_admissible.
std::vector<Cocharacter> admissibility_samples(const RootDatum& d, const QuasiStateFamily& f,
                                               const std::vector<Cocharacter>& extra_samples);

}  // namespace kempf
