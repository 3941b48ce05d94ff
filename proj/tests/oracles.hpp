#pragma once

// Test-side reference computations, written independently of the library's
// algorithms: brute-force KKT enumeration for the quadratic program,
// Caratheodory membership for generated cones, and box scans.

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "kempf/arith.hpp"
#include "kempf/lattice.hpp"

namespace oracle {

using namespace kempf;

/// Calls f on every subset of {0..m-1} of size at most k.
inline void for_each_subset(std::size_t m, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    f(cur);
    if (cur.size() == k) return;
    for (std::size_t i = start; i < m; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

struct QpAnswer {
  bool feasible = false;
  QVec v;
  Rational norm_sq;
};

/// min v^T G v s.t. <v, a> >= 0, <v, b> >= 1, by trying every linearly
/// independent active set and keeping the one that satisfies all KKT conditions.
inline QpAnswer kkt_enumeration(const std::vector<QVec>& a, const std::vector<QVec>& b, const QMatrix& g) {
  const std::size_t n = g.rows();
  std::vector<QVec> c = a;
  std::vector<Rational> rhs(a.size(), Rational(0));
  for (const auto& x : b) {
    c.push_back(x);
    rhs.emplace_back(1);
  }
  const QMatrix ginv = *inverse(g);
  QpAnswer best;
  for_each_subset(c.size(), n, [&](const std::vector<std::size_t>& s) {
    if (best.feasible) return;
    std::vector<QVec> rows;
    for (auto i : s) rows.push_back(c[i]);
    if (!rows.empty() && rank_of_rows(rows, n) != rows.size()) return;
    QVec v(n);
    QVec u;
    if (!s.empty()) {
      // v = G^{-1} N u with N^T G^{-1} N u = rhs_S.
      const std::size_t q = s.size();
      QMatrix m(q, q);
      QVec r(q);
      for (std::size_t i = 0; i < q; ++i) {
        const QVec gi = ginv.apply(rows[i]);
        for (std::size_t j = 0; j < q; ++j) m(j, i) = dot(rows[j], gi);
        r[i] = rhs[s[i]];
      }
      u = *solve(m, r);
      for (std::size_t i = 0; i < q; ++i) {
        const QVec gi = ginv.apply(rows[i]);
        for (std::size_t k = 0; k < n; ++k) v[k] += u[i] * gi[k];
      }
    }
    for (const auto& x : u)
      if (x < 0) return;
    for (std::size_t k = 0; k < c.size(); ++k)
      if (dot(c[k], v) < rhs[k]) return;
    best.feasible = true;
    best.v = v;
    best.norm_sq = dot(v, g.apply(v));
  });
  return best;
}

/// Membership in cone(gens) by Caratheodory: v is a nonnegative combination
/// of some linearly independent subset of gens. The left inverses of the
/// independent subsets are computed once, so repeated queries are cheap.
class GeneratedCone {
 public:
  explicit GeneratedCone(std::vector<QVec> gens, std::size_t n) : n_(n) {
    for_each_subset(gens.size(), n, [&](const std::vector<std::size_t>& s) {
      if (s.empty()) return;
      std::vector<QVec> rows;
      for (auto i : s) rows.push_back(gens[i]);
      if (rank_of_rows(rows, n) != rows.size()) return;
      // Independent columns: (M^T M)^{-1} M^T is an exact left inverse.
      QMatrix gram(s.size(), s.size());
      for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = 0; b < s.size(); ++b) gram(a, b) = dot(rows[a], rows[b]);
      QMatrix mt(s.size(), n);
      for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t i = 0; i < n; ++i) mt(a, i) = rows[a][i];
      subsets_.push_back({std::move(rows), *inverse(gram) * mt});
    });
  }

  bool contains(const QVec& v) const {
    if (is_zero(v)) return true;
    for (const auto& sub : subsets_) {
      const QVec coef = sub.left_inverse.apply(v);
      if (std::any_of(coef.begin(), coef.end(), [](const Rational& x) { return x < 0; })) continue;
      QVec back(n_);
      for (std::size_t j = 0; j < coef.size(); ++j)
        for (std::size_t i = 0; i < n_; ++i) back[i] += coef[j] * sub.rows[j][i];
      if (back == v) return true;
    }
    return false;
  }

 private:
  struct Subset {
    std::vector<QVec> rows;
    QMatrix left_inverse;
  };
  std::size_t n_;
  std::vector<Subset> subsets_;
};

inline bool in_generated_cone(const std::vector<QVec>& gens, const QVec& v) {
  return GeneratedCone(gens, v.size()).contains(v);
}

/// Every integer point of [-r, r]^n.
inline void for_each_box_point(std::size_t n, long r, const std::function<void(const QVec&)>& f) {
  QVec p(n, Rational(-r));
  while (true) {
    f(p);
    std::size_t i = n;
    while (true) {
      if (i == 0) return;
      --i;
      if (p[i] < r) {
        p[i] += 1;
        break;
      }
      p[i] = -r;
    }
  }
}

}  // namespace oracle
