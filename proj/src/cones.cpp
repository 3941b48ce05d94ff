#include "kempf/cones.hpp"

#include <algorithm>
#include <set>

namespace kempf {

namespace detail {

namespace {

Integer idot(const ZVec& a, const ZVec& b) {
  Integer acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

ZVec combine(const Integer& s, const ZVec& x, const Integer& t, const ZVec& y) {
  ZVec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = s * x[i] - t * y[i];
  return out;
}

std::size_t rank_int(const std::vector<const ZVec*>& rows, std::size_t dim) {
  std::vector<QVec> q;
  q.reserve(rows.size());
  for (const auto* r : rows) q.push_back(to_rational(*r));
  return rank_of_rows(q, dim);
}

// Orthogonal projection (standard dot product) of r onto the complement of
// span(basis).
QVec project_out(const ZVec& r, const std::vector<ZVec>& basis, std::size_t dim) {
  QVec v = to_rational(r);
  if (basis.empty()) return v;
  const std::size_t k = basis.size();
  QMatrix gramm(k, k);
  QVec rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gramm(i, j) = Rational(idot(basis[i], basis[j]));
    rhs[i] = Rational(idot(basis[i], r));
  }
  const QVec coef = *solve(gramm, rhs);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < dim; ++c) v[c] -= coef[i] * Rational(basis[i][c]);
  return v;
}

}  // namespace

Frame double_description(std::size_t dim, const std::vector<ZVec>& ineqs) {
  std::vector<ZVec> lin;
  for (std::size_t i = 0; i < dim; ++i) {
    ZVec e(dim);
    e[i] = 1;
    lin.push_back(std::move(e));
  }
  std::vector<ZVec> rays;
  std::vector<ZVec> processed;

  for (const auto& a : ineqs) {
    if (a.size() != dim) throw InputError("cone: inequality has wrong dimension");
    if (is_zero(a)) continue;

    auto pivot = std::find_if(lin.begin(), lin.end(), [&](const ZVec& l) { return idot(a, l) != 0; });
    if (pivot != lin.end()) {
      // The new functional is nonconstant on the lineality space: one lineality
      // direction becomes a ray, everything else is moved into ker(a).
      ZVec l0 = *pivot;
      Integer s0 = idot(a, l0);
      if (s0 < 0) {
        for (auto& z : l0) z = -z;
        s0 = -s0;
      }
      std::vector<ZVec> next_lin;
      for (auto it = lin.begin(); it != lin.end(); ++it) {
        if (it == pivot) continue;
        next_lin.push_back(primitive_integral(combine(s0, *it, idot(a, *it), l0)));
      }
      std::vector<ZVec> next_rays;
      for (const auto& r : rays) next_rays.push_back(primitive_integral(combine(s0, r, idot(a, r), l0)));
      next_rays.push_back(primitive_integral(l0));
      lin = std::move(next_lin);
      rays = std::move(next_rays);
    } else {
      std::vector<ZVec> pos, zero, neg;
      for (const auto& r : rays) {
        const Integer v = idot(a, r);
        (v > 0 ? pos : v == 0 ? zero : neg).push_back(r);
      }
      std::set<ZVec> next(pos.begin(), pos.end());
      next.insert(zero.begin(), zero.end());
      // p and n span an edge iff their common tight set has rank dim - |lin| - 2.
      const std::size_t edge_rank = dim >= lin.size() + 2 ? dim - lin.size() - 2 : 0;
      for (const auto& p : pos) {
        for (const auto& n : neg) {
          std::vector<const ZVec*> common;
          for (const auto& b : processed)
            if (idot(b, p) == 0 && idot(b, n) == 0) common.push_back(&b);
          if (common.size() < edge_rank || rank_int(common, dim) != edge_rank) continue;
          const Integer ap = idot(a, p);
          const Integer an = idot(a, n);
          next.insert(primitive_integral(combine(ap, n, an, p)));
        }
      }
      rays.assign(next.begin(), next.end());
    }
    processed.push_back(a);
  }

  Frame out;
  if (!lin.empty()) {
    std::vector<QVec> rows;
    for (const auto& l : lin) rows.push_back(to_rational(l));
    const QMatrix red = rref(QMatrix::from_rows(rows, dim));
    for (std::size_t r = 0; r < red.rows(); ++r) {
      const QVec row = red.row(r);
      if (!is_zero(row)) out.lineality.push_back(primitive_integral(row));
    }
  }
  std::set<ZVec> reduced;
  for (const auto& r : rays) {
    const QVec p = project_out(r, out.lineality, dim);
    if (!is_zero(p)) reduced.insert(primitive_integral(p));
  }
  out.rays.assign(reduced.begin(), reduced.end());
  return out;
}

}  // namespace detail

namespace {

std::vector<ZVec> normalized(const std::vector<QVec>& vs, std::size_t dim, const char* what) {
  std::set<ZVec> out;
  for (const auto& v : vs) {
    if (v.size() != dim)
      throw InputError(std::string("cone: ") + what + " of dimension " + std::to_string(v.size()) +
                       ", expected " + std::to_string(dim));
    if (!is_zero(v)) out.insert(primitive_integral(v));
  }
  return {out.begin(), out.end()};
}

std::vector<ZVec> frame_generators(const detail::Frame& f) {
  std::set<ZVec> out(f.rays.begin(), f.rays.end());
  for (const auto& l : f.lineality) {
    out.insert(l);
    ZVec neg = l;
    for (auto& z : neg) z = -z;
    out.insert(std::move(neg));
  }
  return {out.begin(), out.end()};
}

template <class V>
std::vector<V> wrap(const std::vector<ZVec>& zs) {
  std::vector<V> out;
  out.reserve(zs.size());
  for (const auto& z : zs) out.emplace_back(z);
  return out;
}

}  // namespace

Cone Cone::from_inequalities(std::size_t dim, std::vector<Character> defining) {
  if (dim == 0) throw InputError("cone: dimension must be positive");
  std::vector<QVec> raw;
  for (auto& d : defining) raw.push_back(d.coords());
  const auto ineqs = normalized(raw, dim, "inequality");
  const auto frame = detail::double_description(dim, ineqs);
  Cone c;
  c.dim_ = dim;
  c.inequalities_ = wrap<Character>(ineqs);
  c.generators_ = wrap<Cocharacter>(frame_generators(frame));
  c.lineality_ = wrap<Cocharacter>(frame.lineality);
  c.rays_ = wrap<Cocharacter>(frame.rays);
  return c;
}

Cone Cone::from_generators(std::size_t dim, std::vector<Cocharacter> gens) {
  if (dim == 0) throw InputError("cone: dimension must be positive");
  std::vector<QVec> raw;
  for (auto& g : gens) raw.push_back(g.coords());
  const auto primal = normalized(raw, dim, "generator");
  // Facets of cone(G) are the generators of its dual {a : <g, a> >= 0}.
  const auto dual = detail::double_description(dim, primal);
  const auto facets = frame_generators(dual);
  const auto frame = detail::double_description(dim, facets);
  Cone c;
  c.dim_ = dim;
  c.inequalities_ = wrap<Character>(facets);
  c.generators_ = wrap<Cocharacter>(frame_generators(frame));
  c.lineality_ = wrap<Cocharacter>(frame.lineality);
  c.rays_ = wrap<Cocharacter>(frame.rays);
  return c;
}

bool Cone::contains(const Cocharacter& v) const {
  if (v.size() != dim_) throw InputError("cone membership: dimension mismatch");
  return std::all_of(inequalities_.begin(), inequalities_.end(),
                     [&](const Character& b) { return pairing(v, b) >= 0; });
}

Cone cone_from_inequalities(std::size_t dim, std::vector<Character> defining) {
  return Cone::from_inequalities(dim, std::move(defining));
}

Cone cone_from_generators(std::size_t dim, std::vector<Cocharacter> gens) {
  return Cone::from_generators(dim, std::move(gens));
}

bool contains(const Cone& c, const Cocharacter& v) { return c.contains(v); }

Cone intersect(const Cone& a, const Cone& b) {
  if (a.dim() != b.dim()) throw InputError("intersect: dimension mismatch");
  std::vector<Character> all = a.inequalities();
  all.insert(all.end(), b.inequalities().begin(), b.inequalities().end());
  return Cone::from_inequalities(a.dim(), std::move(all));
}

Cone negate(const Cone& c) {
  Cone out;
  out.dim_ = c.dim_;
  for (const auto& b : c.inequalities_) out.inequalities_.push_back(-b);
  for (const auto& g : c.generators_) out.generators_.push_back(-g);
  out.lineality_ = c.lineality_;
  for (const auto& r : c.rays_) out.rays_.push_back(-r);
  std::sort(out.inequalities_.begin(), out.inequalities_.end());
  std::sort(out.generators_.begin(), out.generators_.end());
  std::sort(out.rays_.begin(), out.rays_.end());
  return out;
}

bool same_set(const Cone& a, const Cone& b) {
  if (a.dim() != b.dim()) return false;
  return std::all_of(a.generators().begin(), a.generators().end(), [&](const auto& g) { return b.contains(g); }) &&
         std::all_of(b.generators().begin(), b.generators().end(), [&](const auto& g) { return a.contains(g); });
}

SubspaceCheck check_linear_subspace(const Cone& c) {
  for (const auto& g : c.generators())
    if (!c.contains(-g)) return {false, g};
  return {true, std::nullopt};
}

}  // namespace kempf
