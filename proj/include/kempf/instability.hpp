#pragma once

// Instability of vectors in a split representation V given by its T-weights:
// support states, limits along cocharacters, destabilizing cones, and the
// optimal destabilizing class over a finite set of torus changes.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kempf/optimize.hpp"
#include "kempf/states.hpp"

namespace kempf {

/// Coordinates of V, one weight per coordinate (repeated weights allowed).
class Representation {
 public:
  Representation(std::vector<Character> weights, std::vector<std::string> labels);

  std::size_t dim() const { return weights_.size(); }
  /// Rank of the character lattice the weights live in.
  std::size_t rank() const { return weights_.front().size(); }
  const std::vector<Character>& weights() const { return weights_; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Throws InputError for an unknown label.
  std::size_t index_of(const std::string& label) const;

 private:
  std::vector<Character> weights_;
  std::vector<std::string> labels_;
  std::map<std::string, std::size_t> index_;
};

/// Sparse vector of V keyed by coordinate label; zero entries are never stored.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::map<std::string, Rational> coords);

  void set(const std::string& label, const Rational& value);
  Rational get(const std::string& label) const;
  const std::map<std::string, Rational>& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }
  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::map<std::string, Rational> coords_;
};

/// Dense coordinates in the representation's label order. Throws on unknown labels.
QVec to_dense(const Representation& rep, const WeightVector& x);
WeightVector from_dense(const Representation& rep, const QVec& v);

/// Weights whose coordinate in x is nonzero.
StateComponent support_state(const Representation& rep, const WeightVector& x);

/// lim_{a->0} lambda(a).x: none if some supported weight pairs negatively with
/// lambda, otherwise x restricted to the weights pairing to zero.
/// Throws InputError for non-integral lambda.
std::optional<WeightVector> limit(const Representation& rep, const WeightVector& x, const Cocharacter& lambda);

/// Cone cut out by the union of the support states of U.
Cone destab_cone(const Representation& rep, const std::vector<WeightVector>& u);

/// An invertible linear map of V. `weyl` names the Weyl element whose torus
/// change the map realizes; witness rays found after applying the map are
/// moved back with it before parabolic types are compared.
struct Transform {
  QMatrix matrix;
  std::optional<WeylElement> weyl;
};

struct InstabilityResult {
  OptimalClass optimal;
  /// Pairs (A_g, B_g) in transform order; the identity is always first.
  std::vector<IndexedPair> pairs;
  std::string search_scope;
};

/// Optimum of mu(B_g, l)/||l|| over the supplied transforms g, where A_g is the
/// support state of g^{-1}.U. With no upsilon (null-cone mode) B_g = A_g;
/// otherwise B_g is upsilon's component g (or its only component).
/// The identity transform is prepended when absent.
InstabilityResult optimal_instability(const RootDatum& d, const Representation& rep, const std::vector<WeightVector>& u,
                                      const std::optional<QuasiStateFamily>& upsilon,
                                      std::vector<Transform> transforms = {});

struct HilbertMumfordResult {
  bool unstable = false;
  std::optional<Cocharacter> witness;
  std::uint64_t points_scanned = 0;
};

/// First integral l != 0 (lexicographic order over the norm ball) with
/// limit(rep, x, l) = 0.
HilbertMumfordResult hilbert_mumford_check(const RootDatum& d, const Representation& rep, const WeightVector& x,
                                           long radius, std::uint64_t budget = 10'000'000);

}  // namespace kempf
