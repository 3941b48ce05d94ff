#pragma once

// The spherical building seen inside one apartment: points are primitive
// rays of Y(Q), simplices are the cones of parabolic subgroups, and a convex
// subset is a polyhedral cone with a group of Weyl symmetries.

#include <optional>
#include <string>
#include <vector>

#include "kempf/optimize.hpp"
#include "kempf/states.hpp"

namespace kempf {

class BuildingPoint {
 public:
  /// Throws InputError unless `ray` is nonzero, integral and primitive.
  explicit BuildingPoint(Cocharacter ray);
  const Cocharacter& ray() const { return ray_; }
  friend bool operator==(const BuildingPoint&, const BuildingPoint&) = default;

 private:
  Cocharacter ray_;
};

BuildingPoint zeta(const Cocharacter& lambda);
bool opposite(const BuildingPoint& p, const BuildingPoint& q);

/// {nu : P is contained in P_nu}, i.e. <nu, alpha> >= 0 on the nonnegative
/// roots of p. For the whole group this is the central subspace.
Cone simplex_cone(const RootDatum& d, const ParabolicType& p);

class ConvexSubset {
 public:
  /// Throws InputError if some stabilizer element does not map the cone onto itself.
  ConvexSubset(Cone cone, std::vector<WeylElement> stabilizer, bool saturated = true, bool finite_type = true);

  const Cone& cone() const { return cone_; }
  /// Always contains the identity.
  const std::vector<WeylElement>& stabilizer() const { return stabilizer_; }
  bool saturated() const { return saturated_; }
  bool finite_type() const { return finite_type_; }

 private:
  Cone cone_;
  std::vector<WeylElement> stabilizer_;
  bool saturated_;
  bool finite_type_;
};

/// Every point has its opposite in the subset: the cone is a linear subspace.
SubspaceCheck is_cr_in_apartment(const ConvexSubset& s);

/// Sum of the defining inequalities that are positive on some generator;
/// none when the cone is a subspace.
std::optional<Character> strict_functional(const ConvexSubset& s);

struct CentreResult {
  BuildingPoint centre;
  OptimalClass optimal;
  bool fixed_by_stabilizer = false;
};

/// Optimizes the stabilizer-averaged strict functional over the cone. Throws
/// InputError when the subset is completely reducible, and when the
/// stabilizer is not closed under composition.
CentreResult centre_in_apartment(const RootDatum& d, const ConvexSubset& s);

struct CentreCheck {
  bool passed = true;
  std::vector<std::string> failures;
  /// mu of the parabolic state at the candidate.
  ExtendedValue mu = ExtendedValue::neg_inf();
};

/// Checks membership, positivity of the state of P_c at c, and that every
/// stabilizer element fixes that state.
CentreCheck verify_centre(const RootDatum& d, const ConvexSubset& s, const BuildingPoint& c);

}  // namespace kempf
