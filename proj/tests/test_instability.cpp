#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "kempf/instability.hpp"
#include "oracles.hpp"

using namespace kempf;
using fx::ch;
using fx::co;
using fx::vec;

namespace {

/// Permutation matrix of w on the natural representation of GL3.
QMatrix permutation_matrix(const WeylElement& w) { return to_rational(w.y_matrix); }

}  // namespace

TEST_CASE("support states") {
  const auto rep = fx::gl3_natural();
  CHECK(support_state(rep, vec({{"x1", 1}, {"x2", 1}})).chars() ==
        std::vector<Character>{ch({0, 1, 0}), ch({1, 0, 0})});
  CHECK(support_state(rep, WeightVector()).empty());
  CHECK(support_state(fx::sym4(), vec({{"x4", 1}})).chars() == std::vector<Character>{ch({4})});
  CHECK_THROWS_AS(support_state(rep, vec({{"x9", 1}})), InputError);
}

TEST_CASE("zero coordinates are never stored") {
  WeightVector x = vec({{"x1", 1}, {"x2", 0}});
  CHECK(x.coords().size() == 1);
  x.set("x1", 0);
  CHECK(x.is_zero());
}

TEST_CASE("limits along cocharacters") {
  const auto rep = fx::gl3_natural();
  const auto v = vec({{"x1", 1}, {"x2", 1}});
  const auto l = limit(rep, v, co({2, 1, -3}));
  REQUIRE(l.has_value());
  CHECK(l->is_zero());
  CHECK_FALSE(limit(rep, v, co({3, -1, -2})).has_value());
  CHECK(*limit(rep, v, co({0, 0, 0})) == v);
  CHECK(*limit(rep, v, co({1, 0, 0})) == vec({{"x2", 1}}));
  CHECK_THROWS_AS(limit(rep, v, Cocharacter{Rational(1, 2), 0, 0}), InputError);
}

TEST_CASE("destabilizing cones") {
  const auto rep = fx::gl3_natural();
  const Cone c = destab_cone(rep, {vec({{"x1", 1}, {"x2", 1}})});
  CHECK(same_set(c, cone_from_inequalities(3, {ch({1, 0, 0}), ch({0, 1, 0})})));
  CHECK(c.contains(co({2, 1, -3})));
  CHECK_FALSE(c.contains(co({3, -1, -2})));
  CHECK(is_linear_subspace(destab_cone(rep, {WeightVector()})));
  CHECK_THROWS_AS(destab_cone(rep, {}), InputError);

  const std::vector<WeightVector> u = {vec({{"x1", 1}}), vec({{"x3", 2}})};
  const Cone c13 = destab_cone(rep, u);
  oracle::for_each_box_point(3, 3, [&](const QVec& p) {
    const Cocharacter l(p);
    bool all = true;
    for (const auto& x : u) all = all && limit(rep, x, l).has_value();
    CHECK(c13.contains(l) == all);
    CHECK(c13.contains(l) == (p[0] >= 0 && p[2] >= 0));
  });
}

TEST_CASE("null-cone optima") {
  const RootDatum a1 = fx::a1();
  const auto nil = optimal_instability(a1, fx::sl2_adjoint(), {vec({{"e", 1}})}, std::nullopt);
  CHECK(nil.optimal.value == OptimumValue::positive(4));
  REQUIRE(nil.optimal.witnesses.size() == 1);
  CHECK(nil.optimal.witnesses.front().ray == co({1}));
  REQUIRE(nil.optimal.parabolic.has_value());
  CHECK(nil.optimal.parabolic->ru_roots.size() == 1);
  CHECK(nil.search_scope.find("supplied transforms") != std::string::npos);

  const auto x4 = optimal_instability(a1, fx::sym4(), {vec({{"x4", 1}})}, std::nullopt);
  CHECK(x4.optimal.value == OptimumValue::positive(16));
  CHECK(x4.optimal.witnesses.front().ray == co({1}));

  const auto x2y2 = optimal_instability(a1, fx::sym4(), {vec({{"x2y2", 1}})}, std::nullopt);
  CHECK_FALSE(x2y2.optimal.value.is_positive_finite());
  CHECK(x2y2.optimal.witnesses.empty());
}

TEST_CASE("state mode uses the supplied upsilon") {
  const RootDatum a1 = fx::a1();
  const auto ups = QuasiStateFamily::single(StateComponent({ch({1})}));
  const auto r = optimal_instability(a1, fx::sl2_adjoint(), {vec({{"e", 1}, {"h", 1}})}, ups);
  // A = {2, 0} allows l >= 0; B = {1} gives M^2 = 1.
  CHECK(r.optimal.value == OptimumValue::positive(1));
  CHECK(r.pairs.front().b == std::vector<Character>{ch({1})});
}

TEST_CASE("transforms: identity first, singular rejected, search is monotone") {
  const RootDatum d = fx::a2();
  const auto rep = fx::gl3_natural();
  const std::vector<WeightVector> u = {vec({{"x1", 1}, {"x2", 1}, {"x3", 1}})};
  CHECK_THROWS_AS(optimal_instability(d, rep, u, std::nullopt, {{QMatrix(3, 3), std::nullopt}}), InputError);

  // A unipotent change of coordinates moves x = (1,1,1) to (1,1,0)-like support.
  QMatrix g = QMatrix::identity(3);
  g(2, 0) = 1;  // g^{-1} x = x - x1 e3
  const auto base = optimal_instability(d, rep, u, std::nullopt);
  const auto more = optimal_instability(d, rep, u, std::nullopt, {{g, std::nullopt}});
  CHECK(more.pairs.size() == 2);
  CHECK(more.pairs.front().a == base.pairs.front().a);
  CHECK_FALSE(more.optimal.value < base.optimal.value);
  CHECK(more.optimal.value.is_positive_finite());
  CHECK(more.optimal.value.m_squared() == Rational(1, 2));
}

TEST_CASE("Weyl transforms move support states by pushforward") {
  const RootDatum d = fx::a2();
  const auto rep = fx::gl3_natural();
  fx::Gen gen(31);
  const auto w = weyl_group(d);
  for (int t = 0; t < 60; ++t) {
    WeightVector x;
    for (const auto& label : rep.labels())
      if (gen.coin()) x.set(label, gen.integer(1, 3));
    const auto& g = w[gen.index(w.size())];
    const WeightVector gx = from_dense(rep, permutation_matrix(g).apply(to_dense(rep, x)));
    const StateComponent sx = support_state(rep, x);
    std::vector<Character> moved;
    for (const auto& c : sx.chars()) moved.push_back(act_char(g, c));
    CHECK(support_state(rep, gx) == StateComponent(moved));

    // With the Weyl identification the witnesses agree on the parabolic.
    if (x.is_zero()) continue;
    const auto r = optimal_instability(d, rep, {x}, std::nullopt, {{permutation_matrix(g), g}});
    CHECK(r.optimal.consistent);
  }
}

TEST_CASE("null-cone consistency: mu > 0 iff the limit is zero") {
  const auto rep = fx::gl3_natural();
  fx::Gen gen(37);
  for (int t = 0; t < 200; ++t) {
    WeightVector x;
    for (const auto& label : rep.labels())
      if (gen.coin()) x.set(label, gen.integer(-2, 2));
    const auto l = gen.cocharacter(3, -3, 3);
    const auto m = mu(support_state(rep, x), l);
    const auto lim = limit(rep, x, l);
    CHECK((m.positive()) == (lim.has_value() && lim->is_zero()));
  }
}

TEST_CASE("Hilbert-Mumford scan") {
  const RootDatum sl3 = fx::sl3();
  const auto rep = fx::sl3_natural();
  const auto hit = hilbert_mumford_check(sl3, rep, vec({{"x1", 1}, {"x2", 1}}), 5);
  CHECK(hit.unstable);
  REQUIRE(hit.witness.has_value());
  CHECK(limit(rep, vec({{"x1", 1}, {"x2", 1}}), *hit.witness)->is_zero());

  const auto miss = hilbert_mumford_check(sl3, rep, vec({{"x1", 1}, {"x2", 1}, {"x3", 1}}), 5);
  CHECK_FALSE(miss.unstable);
  CHECK_FALSE(miss.witness.has_value());

  const auto zero = hilbert_mumford_check(sl3, rep, WeightVector(), 2);
  CHECK(zero.unstable);
  REQUIRE(zero.witness.has_value());
  CHECK_FALSE(zero.witness->is_zero());

  CHECK_THROWS_AS(hilbert_mumford_check(sl3, rep, WeightVector(), 1000, 100), ResourceError);

  // Agreement with the optimum on the searched ball.
  const auto opt = optimal_instability(sl3, rep, {vec({{"x1", 1}, {"x2", 1}, {"x3", 1}})}, std::nullopt);
  CHECK_FALSE(opt.optimal.value.is_positive_finite());
}
