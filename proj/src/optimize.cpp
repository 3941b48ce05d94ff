#include "kempf/optimize.hpp"

#include <algorithm>

#include "kempf/cones.hpp"

namespace kempf {

OptimumValue OptimumValue::positive(Rational m_squared) {
  if (m_squared <= 0) throw InputError("OptimumValue::positive requires M^2 > 0");
  return OptimumValue(Kind::Positive, std::move(m_squared));
}

std::string OptimumValue::str() const {
  switch (kind_) {
    case Kind::NegInf:
      return "-inf";
    case Kind::Negative:
      return "negative";
    case Kind::Zero:
      return "0";
    case Kind::PosInf:
      return "+inf";
    case Kind::Positive:
      break;
  }
  return to_string(m_squared_);
}

bool is_positive_definite(const ZMatrix& gram) {
  if (gram.rows() != gram.cols() || gram.rows() == 0) return false;
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (gram(i, j) != gram(j, i)) return false;
  const QMatrix g = to_rational(gram);
  for (std::size_t k = 1; k <= g.rows(); ++k) {
    QMatrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = g(i, j);
    if (determinant(minor) <= 0) return false;
  }
  return true;
}

Rational gram_norm_sq(const ZMatrix& gram, const Cocharacter& l) {
  if (gram.rows() != l.size()) throw InputError("norm: dimension mismatch");
  return dot(l.coords(), to_rational(gram).apply(l.coords()));
}

namespace {

void check_dims(const std::vector<Character>& a, const std::vector<Character>& b, std::size_t n) {
  for (const auto& c : a)
    if (c.size() != n) throw InputError("A: character of dimension " + std::to_string(c.size()) + ", expected " + std::to_string(n));
  for (const auto& c : b)
    if (c.size() != n) throw InputError("B: character of dimension " + std::to_string(c.size()) + ", expected " + std::to_string(n));
}

}  // namespace

QpSolution kempf_qp(const std::vector<Character>& a, const std::vector<Character>& b, const ZMatrix& gram) {
  if (!is_positive_definite(gram)) throw InputError("gram: not positive definite");
  const std::size_t n = gram.rows();
  check_dims(a, b, n);

  std::vector<QVec> c;
  std::vector<Rational> rhs;
  for (const auto& x : a) {
    c.push_back(x.coords());
    rhs.push_back(0);
  }
  for (const auto& x : b) {
    c.push_back(x.coords());
    rhs.push_back(1);
  }
  const std::size_t m = c.size();
  const QMatrix g = to_rational(gram);
  const QMatrix ginv = *inverse(g);

  QVec x(n);
  std::vector<std::size_t> active;
  QVec u;
  const auto slack = [&](std::size_t k) -> Rational { return dot(c[k], x) - rhs[k]; };

  QpSolution out;
  constexpr int kMaxIterations = 100000;
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    // Most violated constraint, lowest index on ties.
    std::size_t p = m;
    Rational worst = 0;
    for (std::size_t k = 0; k < m; ++k) {
      const Rational s = slack(k);
      if (s < worst) {
        worst = s;
        p = k;
      }
    }
    if (p == m) {
      out.feasible = true;
      out.v = x;
      const QVec gx = g.apply(x);
      out.norm_sq = dot(x, gx);
      out.active = active;
      out.multipliers = u;
      return out;
    }

    QVec uplus = u;
    uplus.push_back(0);
    while (true) {
      const std::size_t q = active.size();
      QVec r(q);
      QVec z = ginv.apply(c[p]);
      if (q > 0) {
        QMatrix ginv_n(n, q);
        for (std::size_t j = 0; j < q; ++j) {
          const QVec col = ginv.apply(c[active[j]]);
          for (std::size_t i = 0; i < n; ++i) ginv_n(i, j) = col[i];
        }
        QMatrix mm(q, q);
        QVec nt_ginv_cp(q);
        for (std::size_t i = 0; i < q; ++i) {
          for (std::size_t j = 0; j < q; ++j) {
            Rational acc = 0;
            for (std::size_t k = 0; k < n; ++k) acc += c[active[i]][k] * ginv_n(k, j);
            mm(i, j) = acc;
          }
          nt_ginv_cp[i] = dot(c[active[i]], z);
        }
        r = *solve(mm, nt_ginv_cp);
        for (std::size_t j = 0; j < q; ++j)
          for (std::size_t i = 0; i < n; ++i) z[i] -= ginv_n(i, j) * r[j];
      }

      // Largest dual step keeping multipliers nonnegative.
      std::optional<Rational> t1;
      std::size_t drop = q;
      for (std::size_t j = 0; j < q; ++j) {
        if (r[j] <= 0) continue;
        Rational t = uplus[j] / r[j];
        if (!t1 || t < *t1) {
          t1 = t;
          drop = j;
        }
      }
      // Full step that makes constraint p tight.
      std::optional<Rational> t2;
      if (!is_zero(z)) t2 = -slack(p) / dot(z, c[p]);

      if (!t1 && !t2) {
        // c_p = N r with r <= 0, and the active constraints are tight: no
        // feasible point exists. Farkas multipliers: y_p = 1, y_j = -r_j.
        out.feasible = false;
        out.certificate.assign(m, Rational(0));
        out.certificate[p] = 1;
        for (std::size_t j = 0; j < q; ++j) out.certificate[active[j]] -= r[j];
        return out;
      }
      if (!t2) {
        for (std::size_t j = 0; j < q; ++j) uplus[j] -= *t1 * r[j];
        uplus.back() += *t1;
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(drop));
        uplus.erase(uplus.begin() + static_cast<std::ptrdiff_t>(drop));
        continue;
      }
      const bool full = !t1 || *t2 <= *t1;
      const Rational t = full ? *t2 : *t1;
      for (std::size_t i = 0; i < n; ++i) x[i] += t * z[i];
      for (std::size_t j = 0; j < q; ++j) uplus[j] -= t * r[j];
      uplus.back() += t;
      if (full) {
        active.push_back(p);
        u = uplus;
        break;
      }
      active.erase(active.begin() + static_cast<std::ptrdiff_t>(drop));
      uplus.erase(uplus.begin() + static_cast<std::ptrdiff_t>(drop));
    }
  }
  throw ResourceError("kempf_qp: iteration limit reached");
}

OptimumReport torus_max(const std::vector<Character>& a, const std::vector<Character>& b, const ZMatrix& gram) {
  if (!is_positive_definite(gram)) throw InputError("gram: not positive definite");
  const std::size_t n = gram.rows();
  check_dims(a, b, n);

  OptimumReport rep;
  if (Cone::from_inequalities(n, a).is_zero()) {
    rep.value = OptimumValue::neg_inf();
    return rep;
  }
  if (b.empty()) {
    rep.value = OptimumValue::pos_inf();
    rep.feasible = true;
    return rep;
  }
  const QpSolution sol = kempf_qp(a, b, gram);
  if (sol.feasible) {
    rep.feasible = true;
    rep.value = OptimumValue::positive(1 / sol.norm_sq);
    rep.ray = primitive_ray(Cocharacter(sol.v));
    rep.active_constraints = sol.active;
    std::sort(rep.active_constraints.begin(), rep.active_constraints.end());
    return rep;
  }
  rep.feasible = false;
  rep.infeasibility_certificate = sol.certificate;
  // M <= 0. M = 0 exactly when some nonzero l in cone(A) has mu(B, l) >= 0.
  std::vector<Character> both = a;
  both.insert(both.end(), b.begin(), b.end());
  rep.value = Cone::from_inequalities(n, both).is_zero() ? OptimumValue::negative() : OptimumValue::zero();
  return rep;
}

OptimalClass family_max(const RootDatum& d, const std::vector<IndexedPair>& pairs,
                        const std::map<std::size_t, WeylElement>& identifications) {
  if (pairs.empty()) throw InputError("pairs: at least one pair is required");
  OptimalClass out;
  std::optional<OptimumValue> best;
  bool all_pos_inf = true;
  for (const auto& pr : pairs) {
    out.per_index.push_back(torus_max(pr.a, pr.b, d.gram()));
    const auto& v = out.per_index.back().value;
    if (v.kind() == OptimumValue::Kind::PosInf) continue;
    all_pos_inf = false;
    if (!best || *best < v) best = v;
  }
  if (all_pos_inf) {
    out.value = OptimumValue::pos_inf();
    return out;
  }
  out.value = *best;
  if (!out.value.is_positive_finite()) return out;

  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& rep = out.per_index[k];
    if (!(rep.value == out.value)) continue;
    const Witness w{pairs[k].index, *rep.ray};
    const auto it = identifications.find(w.index);
    const Cocharacter based = it == identifications.end() ? w.ray : act(it->second, w.ray);
    const ParabolicType p = d.parabolic_type(based);
    if (!out.parabolic) {
      out.parabolic = p;
    } else if (!(p == *out.parabolic)) {
      out.consistent = false;
      out.diagnostics.push_back("witness at index " + std::to_string(w.index) + " (ray " + w.ray.str() +
                                ") has a different parabolic type from index " +
                                std::to_string(out.witnesses.front().index));
    }
    out.witnesses.push_back(w);
  }
  return out;
}

std::uint64_t for_each_ball_point(const ZMatrix& gram, long radius, std::uint64_t budget,
                                  const std::function<bool(const ZVec&, const Integer& norm)>& visit) {
  if (radius < 1) throw InputError("radius: must be at least 1");
  if (!is_positive_definite(gram)) throw InputError("gram: not positive definite");
  const std::size_t n = gram.rows();
  const QMatrix ginv = *inverse(to_rational(gram));
  const Rational r2 = Rational(radius) * radius;
  // |l_i| <= radius * sqrt((G^{-1})_ii) on the ellipsoid l^T G l <= radius^2.
  ZVec bound(n);
  Integer box = 1;
  for (std::size_t i = 0; i < n; ++i) {
    bound[i] = floor_sqrt(r2 * ginv(i, i));
    box *= 2 * bound[i] + 1;
  }
  if (box > Integer(static_cast<unsigned long>(budget)))
    throw ResourceError("lattice scan: " + box.get_str() + " box points exceed the budget of " +
                        std::to_string(budget));
  ZVec pt(n);
  for (std::size_t i = 0; i < n; ++i) pt[i] = -bound[i];
  std::uint64_t visited = 0;
  const Integer rr = radius * Integer(radius);
  while (true) {
    ++visited;
    Integer norm = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (pt[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) norm += pt[i] * gram(i, j) * pt[j];
    }
    if (norm <= rr && !visit(pt, norm)) return visited;
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (pt[i] < bound[i]) {
        ++pt[i];
        break;
      }
      pt[i] = -bound[i];
      if (i == 0) return visited;
    }
  }
}

namespace {

// Integer arithmetic for the oracle scan: __int128 when all magnitudes are
// provably small, GMP otherwise.
template <class I>
I from_integer(const Integer& z) {
  if constexpr (std::is_same_v<I, Integer>) {
    return z;
  } else {
    return static_cast<I>(z.get_si());
  }
}

template <class I>
OracleResult scan(const std::vector<ZVec>& a, const std::vector<ZVec>& b, const Integer& b_scale, const ZMatrix& gram,
                  const ZVec& bound, std::uint64_t box_points, long radius) {
  const std::size_t n = gram.rows();
  std::vector<std::vector<I>> ai, bi;
  for (const auto& v : a) {
    std::vector<I> w;
    for (const auto& z : v) w.push_back(from_integer<I>(z));
    ai.push_back(std::move(w));
  }
  for (const auto& v : b) {
    std::vector<I> w;
    for (const auto& z : v) w.push_back(from_integer<I>(z));
    bi.push_back(std::move(w));
  }
  std::vector<I> g(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g[i * n + j] = from_integer<I>(gram(i, j));
  std::vector<I> lo(n), hi(n), pt(n);
  for (std::size_t i = 0; i < n; ++i) {
    hi[i] = from_integer<I>(bound[i]);
    lo[i] = -hi[i];
    pt[i] = lo[i];
  }
  const I rr = I(radius) * I(radius);

  OracleResult res;
  res.points_scanned = box_points;
  bool found = false;
  I best_num = 0, best_norm = 1;
  int best_sign = 0;
  std::vector<I> best_pt;
  const auto better = [&](int s, const I& num, const I& norm) {
    // Compare s*num/norm against best_sign*best_num/best_norm; norms are positive.
    if (s != best_sign) return s > best_sign;
    if (s == 0) return norm < best_norm;
    const I lhs = num * best_norm;
    const I rhs = best_num * norm;
    if (lhs != rhs) return s > 0 ? lhs > rhs : lhs < rhs;
    return norm < best_norm;
  };

  while (true) {
    bool nonzero = false;
    for (const auto& x : pt) nonzero = nonzero || x != 0;
    if (nonzero) {
      I norm = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (pt[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) norm += pt[i] * g[i * n + j] * pt[j];
      }
      if (norm <= rr) {
        bool in_cone = true;
        for (const auto& alpha : ai) {
          I v = 0;
          for (std::size_t i = 0; i < n; ++i) v += alpha[i] * pt[i];
          if (v < 0) {
            in_cone = false;
            break;
          }
        }
        if (in_cone) {
          I mn = 0;
          bool first = true;
          for (const auto& beta : bi) {
            I v = 0;
            for (std::size_t i = 0; i < n; ++i) v += beta[i] * pt[i];
            if (first || v < mn) mn = v;
            first = false;
          }
          const int s = mn > 0 ? 1 : (mn < 0 ? -1 : 0);
          const I num = mn * mn;
          if (!found || better(s, num, norm)) {
            found = true;
            best_sign = s;
            best_num = num;
            best_norm = norm;
            best_pt = pt;
          }
        }
      }
    }
    std::size_t i = n;
    bool done = false;
    while (true) {
      if (i == 0) {
        done = true;
        break;
      }
      --i;
      if (pt[i] < hi[i]) {
        pt[i] += 1;
        break;
      }
      pt[i] = lo[i];
    }
    if (done) break;
  }

  if (!found) {
    res.status = OracleResult::Status::NoFeasiblePoint;
    return res;
  }
  const auto to_rat = [](const I& v) {
    if constexpr (std::is_same_v<I, Integer>) {
      return Rational(v);
    } else {
      // Values here fit in 128 bits; split through two 64-bit halves.
      const bool neg = v < 0;
      unsigned __int128 m = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
      Integer hi_part(static_cast<unsigned long>(m >> 64));
      Integer lo_part(static_cast<unsigned long>(m & 0xFFFFFFFFFFFFFFFFULL));
      Integer z = (hi_part << 64) + lo_part;
      return Rational(neg ? Integer(-z) : z);
    }
  };
  res.status = OracleResult::Status::Found;
  QVec coords;
  for (const auto& x : best_pt) coords.push_back(to_rat(x));
  res.best = Cocharacter(std::move(coords));
  Rational ratio = to_rat(best_num) / to_rat(best_norm) / (Rational(b_scale) * b_scale);
  res.ratio_sq_signed = best_sign >= 0 ? ratio : Rational(-ratio);
  return res;
}

}  // namespace

OracleResult oracle_lattice_max(const std::vector<Character>& a, const std::vector<Character>& b, const ZMatrix& gram,
                                long radius, std::uint64_t budget) {
  if (radius < 1) throw InputError("radius: must be at least 1");
  if (!is_positive_definite(gram)) throw InputError("gram: not positive definite");
  const std::size_t n = gram.rows();
  check_dims(a, b, n);
  OracleResult res;
  if (b.empty()) {
    res.status = OracleResult::Status::PosInfSentinel;
    return res;
  }

  // Positive rescaling of A leaves the cone unchanged; B is scaled by one
  // common factor L and the ratio divided by L^2 afterwards.
  std::vector<ZVec> ai;
  for (const auto& alpha : a)
    if (!alpha.is_zero()) ai.push_back(primitive_integral(alpha.coords()));
  Integer l = 1;
  for (const auto& beta : b) {
    const Integer dden = lcm_of_denominators(beta.coords());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), dden.get_mpz_t());
  }
  std::vector<ZVec> bi;
  for (const auto& beta : b) {
    ZVec v;
    for (const auto& q : beta.coords()) v.push_back(Rational(q * l).get_num());
    bi.push_back(std::move(v));
  }

  const QMatrix ginv = *inverse(to_rational(gram));
  const Rational r2 = Rational(radius) * radius;
  ZVec bound(n);
  Integer box = 1, max_bound = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bound[i] = floor_sqrt(r2 * ginv(i, i));
    box *= 2 * bound[i] + 1;
    if (bound[i] > max_bound) max_bound = bound[i];
  }
  if (box > Integer(static_cast<unsigned long>(budget)))
    throw ResourceError("lattice scan: " + box.get_str() + " box points exceed the budget of " +
                        std::to_string(budget));

  Integer max_coef = 0;
  for (const auto& v : ai)
    for (const auto& z : v) max_coef = std::max<Integer>(max_coef, abs(z));
  for (const auto& v : bi)
    for (const auto& z : v) max_coef = std::max<Integer>(max_coef, abs(z));
  Integer max_gram = 0;
  for (const auto& z : gram.data()) max_gram = std::max<Integer>(max_gram, abs(z));
  const Integer dim(static_cast<unsigned long>(n));
  const Integer pair_bound = dim * max_coef * max_bound;
  const Integer norm_bound = dim * dim * max_gram * max_bound * max_bound + Integer(radius) * radius;
  const Integer limit = Integer(1) << 40;
  const auto points = box.get_ui();
  if (pair_bound < limit && norm_bound < limit)
    return scan<__int128>(ai, bi, l, gram, bound, points, radius);
  return scan<Integer>(ai, bi, l, gram, bound, points, radius);
}

}  // namespace kempf
