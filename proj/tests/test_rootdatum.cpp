#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"

using namespace kempf;
using fx::ch;
using fx::co;

TEST_CASE("fixture data satisfy every datum invariant") {
  CHECK(validate_datum(fx::a1()).empty());
  CHECK(validate_datum(fx::a2()).empty());
  CHECK(validate_datum(fx::sl3()).empty());
  CHECK(validate_datum(fx::a1xa1()).empty());
  CHECK(validate_datum(fx::toy_q2()).empty());
}

TEST_CASE("Weyl group orders") {
  CHECK(weyl_group(fx::a1()).size() == 2);
  CHECK(weyl_group(fx::a2()).size() == 6);
  CHECK(weyl_group(fx::sl3()).size() == 6);
  CHECK(weyl_group(fx::a1xa1()).size() == 4);
  CHECK(weyl_group(fx::toy_q2()).size() == 2);
  CHECK_THROWS_AS(weyl_group(fx::a2(), 5), ResourceError);
}

TEST_CASE("Weyl group list is sorted by reduced word") {
  const auto w = weyl_group(fx::a2());
  CHECK(w[0].is_identity());
  CHECK(w[0].word.empty());
  CHECK(w[1].word == std::vector<int>{0});
  CHECK(w[2].word == std::vector<int>{1});
  CHECK(w[5].word.size() == 3);
  CHECK(is_subgroup(w));
  CHECK_FALSE(is_subgroup({w[0], w[3]}));
}

TEST_CASE("simple reflection of GL3 swaps coordinates") {
  const RootDatum d = fx::a2();
  const WeylElement s = d.simple_reflection(0);
  CHECK(act(s, co({1, 2, 3})) == co({2, 1, 3}));
  CHECK(act_char(s, ch({1, 0, -1})) == ch({0, 1, -1}));
  CHECK((s * s).is_identity());
  CHECK(s.inverse() == s);
}

TEST_CASE("violations name the offending field") {
  const auto bad_gram = RootDatum(1, {ch({2}), ch({-2})}, {0}, {co({1}), co({-1})}, fx::zmat({{-1}}));
  const auto v = validate_datum(bad_gram);
  REQUIRE_FALSE(v.empty());
  CHECK(v.front().str() == "gram: not positive definite");

  const auto bad_coroot = RootDatum(1, {ch({2}), ch({-2})}, {0}, {co({2}), co({-1})}, fx::zmat({{1}}));
  const auto v2 = validate_datum(bad_coroot);
  REQUIRE_FALSE(v2.empty());
  CHECK(v2.front().field == "coroots");

  const auto asym = RootDatum(2, {ch({2, 0}), ch({-2, 0})}, {0}, {co({1, 0}), co({-1, 0})}, fx::zmat({{1, 1}, {0, 1}}));
  CHECK(validate_datum(asym).front().str() == "gram: not symmetric");

  const auto not_closed = RootDatum(1, {ch({2})}, {0}, {co({1})}, fx::zmat({{1}}));
  bool saw = false;
  for (const auto& x : validate_datum(not_closed)) saw = saw || x.field == "roots";
  CHECK(saw);

  // Weyl-invariance fails for a skewed form on A1 x A1 ambient coordinates.
  const auto skew = RootDatum(2, {ch({2, 0}), ch({0, 2}), ch({-2, 0}), ch({0, -2})}, {0, 1},
                              {co({1, 0}), co({0, 1}), co({-1, 0}), co({0, -1})}, fx::zmat({{2, 1}, {1, 2}}));
  CHECK(validate_datum(skew).front().str() == "gram: not Weyl-invariant");
}

TEST_CASE("parabolic types of GL3 cocharacters") {
  const RootDatum d = fx::a2();
  const auto borel = d.parabolic_type(co({2, 1, -3}));
  CHECK(borel.nonneg_roots.size() == 3);
  CHECK(borel.levi_roots.empty());
  CHECK(borel.ru_roots.size() == 3);

  const auto maximal = d.parabolic_type(co({1, 1, -2}));
  CHECK(maximal.levi_roots.size() == 2);
  CHECK(maximal.ru_roots.size() == 2);

  const auto whole = d.parabolic_type(co({1, 1, 1}));
  CHECK_FALSE(whole.is_proper());
  CHECK(whole.nonneg_roots.size() == 6);

  // Scaling does not change the parabolic.
  CHECK(d.parabolic_type(co({4, 2, -6})) == borel);
}

TEST_CASE("root permutations are bijections compatible with act_char") {
  const RootDatum d = fx::sl3();
  for (const auto& w : weyl_group(d)) {
    const auto perm = d.root_permutation(w);
    std::vector<bool> hit(perm.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
      CHECK(d.roots()[perm[i]] == act_char(w, d.roots()[i]));
      hit[perm[i]] = true;
    }
    CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
  }
}

TEST_CASE("property: pairing and norm are Weyl-invariant") {
  fx::Gen gen(7);
  for (const RootDatum& d : {fx::a2(), fx::sl3(), fx::a1xa1()}) {
    const auto w = weyl_group(d);
    for (int t = 0; t < 100; ++t) {
      const auto& g = w[gen.index(w.size())];
      const auto l = gen.cocharacter(d.rank(), -5, 5);
      const auto b = gen.character(d.rank(), -5, 5);
      CHECK(pairing(act(g, l), act_char(g, b)) == pairing(l, b));
      CHECK(d.norm_sq(act(g, l)) == d.norm_sq(l));
      CHECK(act(g.inverse(), act(g, l)) == l);
    }
  }
}

TEST_CASE("symmetrize_form produces an invariant integral form") {
  const RootDatum d = fx::a1xa1();
  const ZMatrix f = symmetrize_form(d, fx::zmat({{3, 1}, {1, 2}}));
  const auto fixed = RootDatum(d.rank(), d.roots(), d.simple(), d.coroots(), f);
  CHECK(validate_datum(fixed).empty());
  CHECK(f == fx::zmat({{3, 0}, {0, 2}}));
}

TEST_CASE("dependent simple roots are rejected") {
  const auto d = RootDatum(1, {ch({2}), ch({-2})}, {0, 1}, {co({1}), co({-1})}, fx::zmat({{1}}));
  CHECK_THROWS_AS(weyl_group(d), InputError);
  bool saw = false;
  for (const auto& x : validate_datum(d)) saw = saw || x.field == "simple";
  CHECK(saw);
}
