#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "kempf/optimize.hpp"
#include "oracles.hpp"

using namespace kempf;
using fx::ch;
using fx::co;

namespace {

std::vector<QVec> coords(const std::vector<Character>& cs) {
  std::vector<QVec> out;
  for (const auto& c : cs) out.push_back(c.coords());
  return out;
}

Rational min_pairing(const Cocharacter& l, const std::vector<Character>& b) {
  Rational m = pairing(l, b.front());
  for (const auto& x : b) m = std::min<Rational>(m, pairing(l, x));
  return m;
}

}  // namespace

TEST_CASE("kempf_qp small examples") {
  const ZMatrix i2 = fx::identity(2);
  const auto s1 = kempf_qp({ch({0, 1})}, {ch({1, 0})}, i2);
  REQUIRE(s1.feasible);
  CHECK(s1.v == QVec{1, 0});
  CHECK(s1.norm_sq == 1);

  const auto s2 = kempf_qp({}, {ch({1, 0}), ch({0, 1})}, i2);
  REQUIRE(s2.feasible);
  CHECK(s2.v == QVec{1, 1});
  CHECK(s2.norm_sq == 2);

  const auto s3 = kempf_qp({ch({1, 0})}, {ch({-1, 0})}, i2);
  CHECK_FALSE(s3.feasible);
  CHECK_THROWS_AS(kempf_qp({}, {ch({1, 0})}, fx::zmat({{1, 2}, {2, 1}})), InputError);
}

TEST_CASE("infeasibility certificates are Farkas refutations") {
  fx::Gen gen(5);
  int seen = 0;
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + gen.index(2);
    const auto a = gen.characters(gen.index(5), n, -2, 2);
    const auto b = gen.characters(1 + gen.index(3), n, -2, 2);
    const auto s = kempf_qp(a, b, fx::identity(n));
    if (s.feasible) continue;
    ++seen;
    REQUIRE(s.certificate.size() == a.size() + b.size());
    QVec combo(n);
    Rational rhs = 0;
    for (std::size_t k = 0; k < s.certificate.size(); ++k) {
      CHECK(s.certificate[k] >= 0);
      const auto& c = k < a.size() ? a[k] : b[k - a.size()];
      for (std::size_t i = 0; i < n; ++i) combo[i] += s.certificate[k] * c.coords()[i];
      if (k >= a.size()) rhs += s.certificate[k];
    }
    CHECK(is_zero(combo));
    CHECK(rhs > 0);
  }
  CHECK(seen > 20);
}

TEST_CASE("torus_max sign cases") {
  const ZMatrix g1 = fx::zmat({{1}});
  const auto nil = torus_max({}, {ch({2})}, g1);
  CHECK(nil.value == OptimumValue::positive(4));
  CHECK(*nil.ray == co({1}));

  CHECK(torus_max({ch({1})}, {}, g1).value.kind() == OptimumValue::Kind::PosInf);
  CHECK(torus_max({ch({1}), ch({-1})}, {ch({1})}, g1).value.kind() == OptimumValue::Kind::NegInf);

  const auto zero = torus_max({ch({0})}, {ch({0})}, g1);
  CHECK(zero.value.kind() == OptimumValue::Kind::Zero);
  CHECK_FALSE(zero.ray.has_value());

  const auto neg = torus_max({ch({1})}, {ch({-1})}, g1);
  CHECK(neg.value.kind() == OptimumValue::Kind::Negative);
  CHECK(neg.infeasibility_certificate.has_value());

  const auto gl3 = torus_max({}, {ch({1, 0, 0}), ch({0, 1, 0})}, fx::identity(3));
  CHECK(gl3.value == OptimumValue::positive(Rational(1, 2)));
  CHECK(*gl3.ray == co({1, 1, 0}));
  const auto o = oracle_lattice_max({}, {ch({1, 0, 0}), ch({0, 1, 0})}, fx::identity(3), 6);
  CHECK(o.best == co({1, 1, 0}));
  CHECK(o.ratio_sq_signed == Rational(1, 2));
}

TEST_CASE("oracle examples") {
  const auto o1 = oracle_lattice_max({ch({0, 1})}, {ch({1, 0})}, fx::identity(2), 5);
  REQUIRE(o1.status == OracleResult::Status::Found);
  CHECK(o1.best == co({1, 0}));
  CHECK(o1.ratio_sq_signed == 1);
  CHECK(oracle_lattice_max({ch({1})}, {}, fx::zmat({{1}}), 5).status == OracleResult::Status::PosInfSentinel);
  const auto o3 = oracle_lattice_max({}, {ch({2})}, fx::zmat({{1}}), 3);
  CHECK(o3.best == co({1}));
  CHECK(o3.ratio_sq_signed == 4);
  CHECK(o3.points_scanned == 7);
  CHECK_THROWS_AS(oracle_lattice_max({}, {ch({1, 1, 1, 1})}, fx::identity(4), 40, 1000), ResourceError);
  // Rational inputs: A rescaled freely, B by a common factor.
  const auto o4 = oracle_lattice_max({Character{Rational(1, 3), 0}}, {Character{Rational(1, 2), Rational(1, 2)}},
                                     fx::identity(2), 4);
  CHECK(o4.ratio_sq_signed == Rational(1, 2));
}

TEST_CASE("oracle handles a non-identity gram") {
  const ZMatrix g = fx::zmat({{2, -1}, {-1, 2}});
  const auto r = torus_max({}, {ch({1, 0}), ch({0, 1})}, g);
  const auto o = oracle_lattice_max({}, {ch({1, 0}), ch({0, 1})}, g, 6);
  REQUIRE(r.value.is_positive_finite());
  CHECK(o.ratio_sq_signed == r.value.m_squared());
  CHECK(o.best == *r.ray);
}

TEST_CASE("property: solver agrees with KKT enumeration and the lattice oracle") {
  fx::Gen gen(17);
  int positive = 0;
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 1 + gen.index(3);
    const auto a = gen.characters(gen.index(4), n, -2, 2);
    const auto b = gen.characters(1 + gen.index(3), n, -2, 2);
    const ZMatrix g = fx::identity(n);
    const auto ref = oracle::kkt_enumeration(coords(a), coords(b), to_rational(g));
    const auto s = kempf_qp(a, b, g);
    REQUIRE(s.feasible == ref.feasible);
    if (!s.feasible) continue;
    ++positive;
    CHECK(s.v == ref.v);

    const auto r = torus_max(a, b, g);
    REQUIRE(r.ray.has_value());
    const auto o = oracle_lattice_max(a, b, g, 6);
    CHECK(o.ratio_sq_signed <= r.value.m_squared());
    if (gram_norm_sq(g, *r.ray) <= 36) CHECK(o.ratio_sq_signed == r.value.m_squared());

    // Witness validity: (min pairing)^2 = M^2 ||ray||^2 and the ray lies in cone(A).
    const Rational mp = min_pairing(*r.ray, b);
    CHECK(mp > 0);
    CHECK(mp * mp == r.value.m_squared() * gram_norm_sq(g, *r.ray));
    for (const auto& x : a) CHECK(pairing(*r.ray, x) >= 0);
  }
  CHECK(positive > 40);
}

TEST_CASE("property: scaling B scales M^2 and keeps the ray") {
  fx::Gen gen(23);
  for (int t = 0; t < 80; ++t) {
    const auto a = gen.characters(gen.index(3), 3, -2, 2);
    const auto b = gen.characters(1 + gen.index(3), 3, -2, 2);
    Rational c(gen.integer(1, 5), gen.integer(1, 5));
    c.canonicalize();
    std::vector<Character> cb;
    for (const auto& x : b) cb.push_back(c * x);
    const auto r = torus_max(a, b, fx::identity(3));
    const auto rc = torus_max(a, cb, fx::identity(3));
    CHECK(r.value.kind() == rc.value.kind());
    if (r.value.is_positive_finite()) {
      CHECK(rc.value.m_squared() == c * c * r.value.m_squared());
      CHECK(*rc.ray == *r.ray);
    }
  }
}

TEST_CASE("family_max aggregates and compares parabolics") {
  const RootDatum a1 = fx::a1();
  const auto single = family_max(a1, {{0, {}, {ch({2})}}});
  CHECK(single.value == OptimumValue::positive(4));
  REQUIRE(single.parabolic.has_value());
  CHECK(single.parabolic->ru_roots.size() == 1);

  const RootDatum d = fx::a2();
  const WeylElement s = d.simple_reflection(0);
  // Index 1 is index 0 seen through s: its rays map back by s.
  const std::vector<Character> b0 = {ch({1, 0, 0}), ch({0, 0, -1})};
  std::vector<Character> b1;
  for (const auto& x : b0) b1.push_back(act_char(s, x));
  const auto fam = family_max(d, {{0, {}, b0}, {1, {}, b1}}, {{1, s}});
  CHECK(fam.witnesses.size() == 2);
  CHECK(fam.consistent);

  // Without the identification the two rays have different parabolics.
  const auto raw = family_max(d, {{0, {}, b0}, {1, {}, b1}});
  CHECK_FALSE(raw.consistent);
  CHECK_FALSE(raw.diagnostics.empty());

  // +inf indices are ignored; the rest decide.
  const auto mixed = family_max(a1, {{0, {}, {}}, {1, {}, {ch({2})}}});
  CHECK(mixed.value == OptimumValue::positive(4));
  CHECK(mixed.witnesses.size() == 1);
  CHECK(mixed.witnesses.front().index == 1);

  const auto none = family_max(a1, {{0, {ch({1})}, {ch({-1})}}});
  CHECK(none.value.kind() == OptimumValue::Kind::Negative);
  CHECK(none.witnesses.empty());
}

TEST_CASE("ball enumeration visits exactly the lattice points of the ellipsoid") {
  const ZMatrix g = fx::zmat({{2, -1}, {-1, 2}});
  std::size_t count = 0;
  ZVec prev;
  for_each_ball_point(g, 3, 1000, [&](const ZVec& p, const Integer& norm) {
    CHECK(norm <= 9);
    if (!prev.empty()) CHECK(prev < p);
    prev = p;
    ++count;
    return true;
  });
  std::size_t expected = 0;
  for (long x = -6; x <= 6; ++x)
    for (long y = -6; y <= 6; ++y)
      if (2 * x * x - 2 * x * y + 2 * y * y <= 9) ++expected;
  CHECK(count == expected);
}
