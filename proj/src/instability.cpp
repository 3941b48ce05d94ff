#include "kempf/instability.hpp"

#include <algorithm>

namespace kempf {

Representation::Representation(std::vector<Character> weights, std::vector<std::string> labels)
    : weights_(std::move(weights)), labels_(std::move(labels)) {
  if (weights_.empty()) throw InputError("representation.weights: must be non-empty");
  if (labels_.size() != weights_.size())
    throw InputError("representation.labels: expected " + std::to_string(weights_.size()) + " labels, got " +
                     std::to_string(labels_.size()));
  for (const auto& w : weights_)
    if (w.size() != weights_.front().size()) throw InputError("representation.weights: mixed dimensions");
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (!index_.emplace(labels_[i], i).second) throw InputError("representation.labels: duplicate label " + labels_[i]);
}

std::size_t Representation::index_of(const std::string& label) const {
  const auto it = index_.find(label);
  if (it == index_.end()) throw InputError("vectors: unknown label " + label);
  return it->second;
}

WeightVector::WeightVector(std::map<std::string, Rational> coords) {
  for (auto& [k, v] : coords) set(k, v);
}

void WeightVector::set(const std::string& label, const Rational& value) {
  if (value == 0)
    coords_.erase(label);
  else
    coords_[label] = value;
}

Rational WeightVector::get(const std::string& label) const {
  const auto it = coords_.find(label);
  return it == coords_.end() ? Rational(0) : it->second;
}

QVec to_dense(const Representation& rep, const WeightVector& x) {
  QVec v(rep.dim());
  for (const auto& [label, value] : x.coords()) v[rep.index_of(label)] = value;
  return v;
}

WeightVector from_dense(const Representation& rep, const QVec& v) {
  if (v.size() != rep.dim()) throw InputError("vector: dimension does not match the representation");
  WeightVector x;
  for (std::size_t i = 0; i < v.size(); ++i) x.set(rep.labels()[i], v[i]);
  return x;
}

StateComponent support_state(const Representation& rep, const WeightVector& x) {
  std::vector<Character> out;
  for (const auto& [label, value] : x.coords()) out.push_back(rep.weights()[rep.index_of(label)]);
  return StateComponent(std::move(out));
}

std::optional<WeightVector> limit(const Representation& rep, const WeightVector& x, const Cocharacter& lambda) {
  if (!lambda.is_integral()) throw InputError("limit: cocharacter must be integral");
  WeightVector out;
  for (const auto& [label, value] : x.coords()) {
    const Rational p = pairing(lambda, rep.weights()[rep.index_of(label)]);
    if (p < 0) return std::nullopt;
    if (p == 0) out.set(label, value);
  }
  return out;
}

Cone destab_cone(const Representation& rep, const std::vector<WeightVector>& u) {
  if (u.empty()) throw InputError("vectors: U must be non-empty");
  std::vector<Character> all;
  for (const auto& x : u) {
    const auto s = support_state(rep, x);
    all.insert(all.end(), s.chars().begin(), s.chars().end());
  }
  return Cone::from_inequalities(rep.rank(), std::move(all));
}

InstabilityResult optimal_instability(const RootDatum& d, const Representation& rep, const std::vector<WeightVector>& u,
                                      const std::optional<QuasiStateFamily>& upsilon, std::vector<Transform> transforms) {
  if (u.empty()) throw InputError("vectors: U must be non-empty");
  if (rep.rank() != d.rank()) throw InputError("representation.weights: dimension does not match the root datum");
  const QMatrix id = QMatrix::identity(rep.dim());
  const auto is_id = [&](const Transform& t) { return t.matrix == id; };
  if (transforms.empty() || !is_id(transforms.front())) {
    transforms.erase(std::remove_if(transforms.begin(), transforms.end(), is_id), transforms.end());
    transforms.insert(transforms.begin(), Transform{id, std::nullopt});
  }
  if (upsilon && upsilon->size() != 1 && upsilon->size() != transforms.size())
    throw InputError("upsilon: needs one component or one per transform (" + std::to_string(transforms.size()) + ")");

  InstabilityResult res;
  std::map<std::size_t, WeylElement> identifications;
  for (std::size_t k = 0; k < transforms.size(); ++k) {
    const auto& t = transforms[k];
    if (t.matrix.rows() != rep.dim() || t.matrix.cols() != rep.dim())
      throw InputError("transforms[" + std::to_string(k) + "]: wrong shape");
    const auto inv = inverse(t.matrix);
    if (!inv) throw InputError("transforms[" + std::to_string(k) + "]: singular matrix");
    std::vector<Character> theta;
    for (const auto& x : u) {
      const auto s = support_state(rep, from_dense(rep, inv->apply(to_dense(rep, x))));
      theta.insert(theta.end(), s.chars().begin(), s.chars().end());
    }
    const StateComponent a(std::move(theta));
    IndexedPair pair{k, a.chars(), a.chars()};
    if (upsilon) pair.b = upsilon->component(upsilon->size() == 1 ? 0 : k).chars();
    res.pairs.push_back(std::move(pair));
    if (t.weyl) identifications.emplace(k, *t.weyl);
  }
  res.optimal = family_max(d, res.pairs, identifications);
  res.search_scope = "supplied transforms only (" + std::to_string(transforms.size()) +
                     "); a lower bound for the optimum over all maximal tori";
  return res;
}

HilbertMumfordResult hilbert_mumford_check(const RootDatum& d, const Representation& rep, const WeightVector& x,
                                           long radius, std::uint64_t budget) {
  if (rep.rank() != d.rank()) throw InputError("representation.weights: dimension does not match the root datum");
  HilbertMumfordResult res;
  res.points_scanned = for_each_ball_point(d.gram(), radius, budget, [&](const ZVec& l, const Integer&) {
    if (is_zero(l)) return true;
    const Cocharacter lambda(l);
    const auto lim = limit(rep, x, lambda);
    if (lim && lim->is_zero()) {
      res.unstable = true;
      res.witness = lambda;
      return false;
    }
    return true;
  });
  return res;
}

}  // namespace kempf
