#include "kempf/states.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace kempf {

std::string ExtendedValue::str() const {
  switch (kind_) {
    case Kind::NegInf:
      return "-inf";
    case Kind::PosInf:
      return "+inf";
    case Kind::Finite:
      break;
  }
  return to_string(value_);
}

StateComponent::StateComponent(std::vector<Character> chars) : chars_(std::move(chars)) {
  std::sort(chars_.begin(), chars_.end());
  chars_.erase(std::unique(chars_.begin(), chars_.end()), chars_.end());
  for (const auto& c : chars_)
    if (c.size() != chars_.front().size()) throw InputError("state component: characters of mixed dimension");
}

ExtendedValue mu(const StateComponent& s, const Cocharacter& lambda) {
  if (s.empty()) return ExtendedValue::pos_inf();
  Rational best = pairing(lambda, s.chars().front());
  for (const auto& c : s.chars()) {
    Rational v = pairing(lambda, c);
    if (v < best) best = v;
  }
  return ExtendedValue::finite(best);
}

namespace {

void check_perm(const std::vector<std::size_t>& perm, std::size_t n) {
  if (perm.size() != n) throw InputError("index_action: permutation has wrong length");
  std::vector<bool> hit(n, false);
  for (auto p : perm) {
    if (p >= n || hit[p]) throw InputError("index_action: not a permutation");
    hit[p] = true;
  }
}

std::vector<std::size_t> compose(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

StateComponent transform(const WeylElement& w, const StateComponent& s) {
  std::vector<Character> out;
  out.reserve(s.chars().size());
  for (const auto& c : s.chars()) out.push_back(act_char(w, c));
  return StateComponent(std::move(out));
}

StateComponent merge(const StateComponent& a, const StateComponent& b) {
  std::vector<Character> all = a.chars();
  all.insert(all.end(), b.chars().begin(), b.chars().end());
  return StateComponent(std::move(all));
}

}  // namespace

IndexAction IndexAction::generated(std::size_t n, std::vector<Entry> generators, std::size_t bound) {
  IndexAction act(n);
  if (generators.empty()) return act;
  act.trivial_ = false;
  const std::size_t rank = generators.front().element.y_matrix.rows();
  std::vector<std::size_t> id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = i;
  for (const auto& g : generators) check_perm(g.perm, n);

  act.elements_.push_back({WeylElement::identity(rank), id});
  std::deque<std::size_t> queue{0};
  const auto find = [&](const WeylElement& w) -> const Entry* {
    for (const auto& e : act.elements_)
      if (e.element == w) return &e;
    return nullptr;
  };
  // Generators themselves must agree with the identity entry if trivial.
  for (const auto& g : generators)
    if (const Entry* e = find(g.element); e && e->perm != g.perm)
      throw InputError("index_action: not a group action (conflicting permutations for one element)");
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      Entry next{act.elements_[i].element * g.element, compose(act.elements_[i].perm, g.perm)};
      if (const Entry* e = find(next.element)) {
        if (e->perm != next.perm)
          throw InputError("index_action: not a group action (conflicting permutations for one element)");
        continue;
      }
      if (act.elements_.size() >= bound) throw ResourceError("index_action: closure exceeded bound");
      act.elements_.push_back(std::move(next));
      queue.push_back(act.elements_.size() - 1);
    }
  }
  return act;
}

bool IndexAction::acts_on(const WeylElement& w) const {
  if (trivial_) return true;
  return std::any_of(elements_.begin(), elements_.end(), [&](const Entry& e) { return e.element == w; });
}

std::size_t IndexAction::apply(const WeylElement& w, std::size_t index) const {
  if (index >= n_) throw InputError("index_action: index out of range");
  if (trivial_) return index;
  for (const auto& e : elements_)
    if (e.element == w) return e.perm[index];
  throw InputError("index_action: Weyl element lies outside the acting group");
}

bool operator==(const IndexAction& a, const IndexAction& b) {
  if (a.n_ != b.n_) return false;
  const auto covers = [](const IndexAction& x, const IndexAction& y) {
    for (const auto& e : x.elements_) {
      if (!y.acts_on(e.element)) return false;
      for (std::size_t i = 0; i < x.n_; ++i)
        if (y.apply(e.element, i) != e.perm[i]) return false;
    }
    return true;
  };
  return covers(a, b) && covers(b, a);
}

QuasiStateFamily::QuasiStateFamily(std::vector<StateComponent> components, IndexAction action, std::size_t base)
    : components_(std::move(components)), action_(std::move(action)), base_(base) {
  if (components_.empty()) throw InputError("quasi-state: needs at least one component");
  if (action_.size() != components_.size())
    throw InputError("quasi-state: index_action size does not match the number of components");
  if (base_ >= components_.size()) throw InputError("quasi-state: base index out of range");
}

QuasiStateFamily QuasiStateFamily::single(StateComponent c) {
  return QuasiStateFamily({std::move(c)}, IndexAction::trivial(1), 0);
}

std::size_t QuasiStateFamily::orbit_character_count() const {
  std::set<Character> all;
  for (const auto& c : components_) all.insert(c.chars().begin(), c.chars().end());
  for (const auto& e : action_.elements())
    for (const auto& c : components_)
      for (const auto& ch : c.chars()) all.insert(act_char(e.element, ch));
  return all.size();
}

QuasiStateFamily pushforward(const WeylElement& w, const QuasiStateFamily& f) {
  const WeylElement winv = w.inverse();
  std::vector<StateComponent> out;
  out.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    out.push_back(transform(w, f.component(f.action().apply(winv, i))));
  return QuasiStateFamily(std::move(out), f.action(), f.base_index());
}

QuasiStateFamily union_of(const std::vector<QuasiStateFamily>& families) {
  if (families.empty()) throw InputError("union: no families given");
  const auto& first = families.front();
  std::vector<StateComponent> comps = first.components();
  for (std::size_t k = 1; k < families.size(); ++k) {
    const auto& f = families[k];
    if (f.size() != first.size() || !(f.action() == first.action()) || f.base_index() != first.base_index())
      throw InputError("union: families have mismatched index structure");
    for (std::size_t i = 0; i < comps.size(); ++i) comps[i] = merge(comps[i], f.component(i));
  }
  return QuasiStateFamily(std::move(comps), first.action(), first.base_index());
}

QuasiStateFamily average_over_group(const std::vector<WeylElement>& subgroup, const QuasiStateFamily& f) {
  if (!is_subgroup(subgroup)) throw InputError("average_over_group: H is not closed under composition");
  std::vector<QuasiStateFamily> pushed;
  pushed.reserve(subgroup.size());
  for (const auto& h : subgroup) pushed.push_back(pushforward(h, f));
  return union_of(pushed);
}

Cone zero_set(const QuasiStateFamily& f, std::size_t index, std::size_t dim) {
  return Cone::from_inequalities(dim, f.component(index).chars());
}

QuasiStateFamily scale_to_integral(const QuasiStateFamily& f) {
  Integer l = 1;
  for (const auto& c : f.components())
    for (const auto& ch : c.chars()) {
      const Integer d = lcm_of_denominators(ch.coords());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
  std::vector<StateComponent> out;
  for (const auto& c : f.components()) {
    std::vector<Character> chars;
    for (const auto& ch : c.chars()) chars.push_back(Rational(l) * ch);
    out.emplace_back(std::move(chars));
  }
  return QuasiStateFamily(std::move(out), f.action(), f.base_index());
}

QuasiStateFamily state_from_cone(const Cone& c, const std::vector<WeylElement>& stabilizer) {
  std::vector<WeylElement> stab = stabilizer;
  if (stab.empty()) stab.push_back(WeylElement::identity(c.dim()));
  if (!is_subgroup(stab)) throw InputError("state_from_cone: stabilizer is not closed under composition");
  for (const auto& w : stab) {
    if (w.y_matrix.rows() != c.dim()) throw InputError("state_from_cone: stabilizer has wrong rank");
    for (const auto& g : c.generators())
      if (!c.contains(act(w, g)))
        throw InputError("state_from_cone: stabilizer element does not preserve the cone");
  }
  std::vector<Character> chars;
  for (const auto& w : stab)
    for (const auto& b : c.inequalities()) chars.push_back(act_char(w, b));
  return QuasiStateFamily::single(StateComponent(std::move(chars)));
}

QuasiStateFamily state_from_parabolic(const RootDatum& d, const ParabolicType& p) {
  if (!p.is_proper()) throw InputError("state_from_parabolic: parabolic is the whole group");
  const auto group = weyl_group(d);
  const auto index_of = [&](const WeylElement& w) {
    return static_cast<std::size_t>(std::find(group.begin(), group.end(), w) - group.begin());
  };
  std::vector<IndexAction::Entry> gens;
  for (std::size_t k = 0; k < d.simple().size(); ++k) {
    const WeylElement s = d.simple_reflection(k);
    std::vector<std::size_t> perm(group.size());
    for (std::size_t i = 0; i < group.size(); ++i) perm[i] = index_of(s * group[i]);
    gens.push_back({s, std::move(perm)});
  }
  auto action = IndexAction::generated(group.size(), std::move(gens));

  std::vector<Character> ru;
  for (auto i : p.ru_roots) ru.push_back(d.roots()[i]);
  const std::set<std::size_t> nonneg(p.nonneg_roots.begin(), p.nonneg_roots.end());
  std::vector<StateComponent> comps;
  for (const auto& w : group) {
    const auto perm = d.root_permutation(w);
    std::set<std::size_t> image;
    for (auto i : p.nonneg_roots) image.insert(perm[i]);
    comps.push_back(image == nonneg ? StateComponent(ru) : StateComponent());
  }
  return QuasiStateFamily(std::move(comps), std::move(action), 0);
}

namespace {

constexpr const char* kScope =
    "necessary condition only: compared across Weyl-group elements fixing each sampled cocharacter; "
    "unipotent elements of P_lambda are not representable and were not tested";

}  // namespace

AdmissibilityReport check_admissible_at(const QuasiStateFamily& f, const Cocharacter& lambda) {
  AdmissibilityReport rep;
  rep.scope = kScope;
  rep.samples = 1;
  for (const auto& e : f.action().elements()) {
    if (act(e.element, lambda) != lambda) continue;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const auto a = mu(f.component(i), lambda);
      const auto b = mu(f.component(e.perm[i]), lambda);
      if (!(a == b)) {
        rep.passed = false;
        rep.failures.push_back("mu differs at " + lambda.str() + " between index " + std::to_string(i) + " (" +
                               a.str() + ") and index " + std::to_string(e.perm[i]) + " (" + b.str() + ")");
      }
    }
  }
  return rep;
}

std::vector<Cocharacter> admissibility_samples(const RootDatum& d, const QuasiStateFamily& f,
                                               const std::vector<Cocharacter>& extra_samples) {
  std::set<Cocharacter> out(extra_samples.begin(), extra_samples.end());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Cone z = zero_set(f, i, d.rank());
    out.insert(z.generators().begin(), z.generators().end());
  }

  const std::size_t r = d.simple().size();
  if (r > 0 && r <= 16) {
    // Cartan system: find l in span(simple coroots) with <l, a_j> = 0 for j in J
    // and 1 otherwise, for every subset J of the simple roots.
    QMatrix cartan(r, r);
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k)
        cartan(j, k) = pairing(d.coroots()[d.simple()[k]], d.roots()[d.simple()[j]]);
    const auto inv = inverse(cartan);
    if (inv) {
      const auto group = weyl_group(d);
      for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
        QVec target(r);
        for (std::size_t j = 0; j < r; ++j) target[j] = (mask >> j & 1) ? 0 : 1;
        const QVec coef = inv->apply(target);
        Cocharacter l = Cocharacter::zero(d.rank());
        for (std::size_t k = 0; k < r; ++k) l = l + coef[k] * d.coroots()[d.simple()[k]];
        for (const auto& w : group) out.insert(act(w, l));
      }
    }
  }
  return {out.begin(), out.end()};
}

AdmissibilityReport check_quasi_admissible(const RootDatum& d, const QuasiStateFamily& f,
                                           const std::vector<Cocharacter>& extra_samples) {
  AdmissibilityReport rep;
  rep.scope = kScope;
  const auto samples = admissibility_samples(d, f, extra_samples);
  rep.samples = samples.size();
  for (const auto& lambda : samples) {
    for (const auto& e : f.action().elements()) {
      if (act(e.element, lambda) != lambda) continue;
      for (std::size_t i = 0; i < f.size(); ++i) {
        const auto a = mu(f.component(i), lambda);
        const auto b = mu(f.component(e.perm[i]), lambda);
        if (a.nonnegative() && !b.nonnegative()) {
          rep.passed = false;
          rep.failures.push_back("sign flip at " + lambda.str() + ": index " + std::to_string(i) + " has mu " +
                                 a.str() + " but index " + std::to_string(e.perm[i]) + " has mu " + b.str());
        }
      }
    }
  }
  return rep;
}

}  // namespace kempf
