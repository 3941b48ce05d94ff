#include "kempf/building.hpp"

#include <algorithm>

namespace kempf {

BuildingPoint::BuildingPoint(Cocharacter ray) : ray_(std::move(ray)) {
  if (ray_.is_zero()) throw InputError("0 has no building image");
  if (!ray_.is_integral() || primitive_ray(ray_) != ray_)
    throw InputError("building point: ray " + ray_.str() + " is not primitive integral");
}

BuildingPoint zeta(const Cocharacter& lambda) {
  if (lambda.is_zero()) throw InputError("0 has no building image");
  return BuildingPoint(primitive_ray(lambda));
}

bool opposite(const BuildingPoint& p, const BuildingPoint& q) { return q.ray() == -p.ray(); }

Cone simplex_cone(const RootDatum& d, const ParabolicType& p) {
  std::vector<Character> ineqs;
  for (auto i : p.nonneg_roots) ineqs.push_back(d.roots().at(i));
  return Cone::from_inequalities(d.rank(), std::move(ineqs));
}

ConvexSubset::ConvexSubset(Cone cone, std::vector<WeylElement> stabilizer, bool saturated, bool finite_type)
    : cone_(std::move(cone)), stabilizer_(std::move(stabilizer)), saturated_(saturated), finite_type_(finite_type) {
  const std::size_t n = cone_.dim();
  for (std::size_t k = 0; k < stabilizer_.size(); ++k) {
    const auto& w = stabilizer_[k];
    if (w.y_matrix.rows() != n) throw InputError("stabilizer[" + std::to_string(k) + "]: wrong rank");
    // w(C) is contained in C for every w of a finite group iff w(C) = C.
    for (const auto& g : cone_.generators())
      if (!cone_.contains(act(w, g)))
        throw InputError("stabilizer[" + std::to_string(k) + "]: does not map the cone to itself");
  }
  if (std::none_of(stabilizer_.begin(), stabilizer_.end(), [](const WeylElement& w) { return w.is_identity(); }))
    stabilizer_.insert(stabilizer_.begin(), WeylElement::identity(n));
}

SubspaceCheck is_cr_in_apartment(const ConvexSubset& s) { return check_linear_subspace(s.cone()); }

std::optional<Character> strict_functional(const ConvexSubset& s) {
  if (is_cr_in_apartment(s).is_subspace) return std::nullopt;
  Character sum = Character::zero(s.cone().dim());
  for (const auto& b : s.cone().inequalities()) {
    const bool strict = std::any_of(s.cone().generators().begin(), s.cone().generators().end(),
                                    [&](const Cocharacter& g) { return pairing(g, b) > 0; });
    if (strict) sum = sum + b;
  }
  return sum;
}

CentreResult centre_in_apartment(const RootDatum& d, const ConvexSubset& s) {
  if (s.cone().dim() != d.rank()) throw InputError("cone: dimension does not match the root datum");
  const auto beta = strict_functional(s);
  if (!beta) throw InputError("no centre guaranteed: subset is completely reducible at apartment level");
  if (!is_subgroup(s.stabilizer())) throw InputError("stabilizer: not closed under composition");

  const QuasiStateFamily xi = state_from_cone(s.cone(), s.stabilizer());
  const QuasiStateFamily upsilon = average_over_group(s.stabilizer(), QuasiStateFamily::single(StateComponent({*beta})));
  OptimalClass cls = family_max(d, {IndexedPair{0, xi.base_component().chars(), upsilon.base_component().chars()}});
  if (!cls.value.is_positive_finite())
    throw std::logic_error("centre_in_apartment: averaged functional is not positive on the cone");

  CentreResult res{zeta(cls.witnesses.front().ray), std::move(cls), true};
  for (const auto& w : s.stabilizer())
    if (act(w, res.centre.ray()) != res.centre.ray()) res.fixed_by_stabilizer = false;
  return res;
}

CentreCheck verify_centre(const RootDatum& d, const ConvexSubset& s, const BuildingPoint& c) {
  CentreCheck out;
  if (c.ray().size() != d.rank()) throw InputError("centre: dimension does not match the root datum");
  if (!s.cone().contains(c.ray())) out.failures.push_back("not in subset");
  const ParabolicType p = d.parabolic_type(c.ray());
  if (!p.is_proper()) {
    out.failures.push_back("centre is central: its parabolic is the whole group");
  } else {
    const QuasiStateFamily upsilon = state_from_parabolic(d, p);
    out.mu = mu(upsilon.base_component(), c.ray());
    if (!(out.mu.is_finite() && out.mu.positive())) out.failures.push_back("state value not finite positive");
    for (const auto& w : s.stabilizer())
      if (!(pushforward(w, upsilon) == upsilon)) {
        out.failures.push_back("state not stabilizer-fixed");
        break;
      }
  }
  out.passed = out.failures.empty();
  return out;
}

}  // namespace kempf
