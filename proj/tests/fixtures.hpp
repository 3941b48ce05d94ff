#pragma once

// Root data and representations shared by the unit and acceptance tests.

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "kempf/instability.hpp"
#include "kempf/rootdatum.hpp"

namespace fx {

using namespace kempf;

inline Character ch(std::initializer_list<long> xs) {
  QVec v;
  for (long x : xs) v.emplace_back(x);
  return Character(std::move(v));
}

inline Cocharacter co(std::initializer_list<long> xs) {
  QVec v;
  for (long x : xs) v.emplace_back(x);
  return Cocharacter(std::move(v));
}

inline ZMatrix zmat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<ZVec> rs;
  for (const auto& r : rows) {
    ZVec v;
    for (long x : r) v.emplace_back(x);
    rs.push_back(std::move(v));
  }
  return ZMatrix::from_rows(rs, rs.front().size());
}

inline ZMatrix identity(std::size_t n) { return ZMatrix::identity(n); }

/// SL2 in the weight basis: root 2, coroot 1.
inline RootDatum a1() { return RootDatum(1, {ch({2}), ch({-2})}, {0}, {co({1}), co({-1})}, zmat({{1}})); }

/// GL3 ambient: roots e_i - e_j, simple roots e1 - e2 and e2 - e3.
inline RootDatum a2() {
  std::vector<Character> roots;
  std::vector<Cocharacter> coroots;
  const std::vector<std::pair<int, int>> order = {{0, 1}, {1, 2}, {0, 2}, {1, 0}, {2, 1}, {2, 0}};
  for (auto [i, j] : order) {
    QVec v(3);
    v[i] = 1;
    v[j] = -1;
    roots.emplace_back(v);
    coroots.emplace_back(v);
  }
  return RootDatum(3, roots, {0, 1}, coroots, identity(3));
}

/// SL3 with Y spanned by the simple coroots.
inline RootDatum sl3() {
  return RootDatum(2, {ch({2, -1}), ch({-1, 2}), ch({1, 1}), ch({-2, 1}), ch({1, -2}), ch({-1, -1})}, {0, 1},
                   {co({1, 0}), co({0, 1}), co({1, 1}), co({-1, 0}), co({0, -1}), co({-1, -1})},
                   zmat({{2, -1}, {-1, 2}}));
}

inline RootDatum a1xa1() {
  return RootDatum(2, {ch({2, 0}), ch({0, 2}), ch({-2, 0}), ch({0, -2})}, {0, 1},
                   {co({1, 0}), co({0, 1}), co({-1, 0}), co({0, -1})}, identity(2));
}

/// Rank-2 torus with one root direction: the reflection is y -> -y.
inline RootDatum toy_q2() {
  return RootDatum(2, {ch({0, 1}), ch({0, -1})}, {0}, {co({0, 2}), co({0, -2})}, identity(2));
}

/// Natural representation of GL3 (weights e1, e2, e3 in the ambient datum).
inline Representation gl3_natural() { return Representation({ch({1, 0, 0}), ch({0, 1, 0}), ch({0, 0, 1})}, {"x1", "x2", "x3"}); }

/// Natural representation of SL3 in the coroot basis.
inline Representation sl3_natural() { return Representation({ch({1, 0}), ch({-1, 1}), ch({0, -1})}, {"x1", "x2", "x3"}); }

inline Representation sl2_adjoint() { return Representation({ch({2}), ch({0}), ch({-2})}, {"e", "h", "f"}); }

inline Representation sym4() {
  return Representation({ch({4}), ch({2}), ch({0}), ch({-2}), ch({-4})}, {"x4", "x3y", "x2y2", "xy3", "y4"});
}

inline WeightVector vec(std::initializer_list<std::pair<const char*, long>> xs) {
  WeightVector x;
  for (const auto& [k, v] : xs) x.set(k, Rational(v));
  return x;
}

/// Seeded generator for property tests.
class Gen {
 public:
  /// KEMPF_TEST_SEED, when set, is added to every seed to select another stream.
  explicit Gen(std::uint64_t seed) : rng_(seed + seed_offset()) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool coin() { return integer(0, 1) == 1; }
  QVec qvec(std::size_t n, long lo, long hi) {
    QVec v(n);
    for (auto& x : v) x = integer(lo, hi);
    return v;
  }
  Character character(std::size_t n, long lo, long hi) { return Character(qvec(n, lo, hi)); }
  Cocharacter cocharacter(std::size_t n, long lo, long hi) { return Cocharacter(qvec(n, lo, hi)); }
  std::vector<Character> characters(std::size_t count, std::size_t n, long lo, long hi) {
    std::vector<Character> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(character(n, lo, hi));
    return out;
  }

 private:
  static std::uint64_t seed_offset() {
    const char* s = std::getenv("KEMPF_TEST_SEED");
    return s ? std::strtoull(s, nullptr, 10) : 0;
  }
  std::mt19937_64 rng_;
};

}  // namespace fx
