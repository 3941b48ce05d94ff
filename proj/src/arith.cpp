#include "kempf/arith.hpp"

#include <cctype>

namespace kempf {

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!valid_integer_text(num_text)) throw InputError("invalid rational: '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(parse_integer(num_text));
  const auto den_text = text.substr(slash + 1);
  if (!valid_integer_text(den_text) || den_text[0] == '-' || den_text[0] == '+')
    throw InputError("invalid rational: '" + std::string(text) + "'");
  const Integer den = parse_integer(den_text);
  if (den == 0) throw InputError("invalid rational: zero denominator in '" + std::string(text) + "'");
  Rational q(parse_integer(num_text), den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

std::string to_string(const QVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  return out + ")";
}

bool is_zero(const QVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

bool is_zero(const ZVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& z) { return z == 0; });
}

bool is_integral(const QVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q.get_den() == 1; });
}

Rational dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw InputError("dot: dimension mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

QVec to_rational(const ZVec& v) { return QVec(v.begin(), v.end()); }

ZVec to_integral(const QVec& v) {
  ZVec out;
  out.reserve(v.size());
  for (const auto& q : v) {
    if (q.get_den() != 1) throw InputError("expected an integral vector, got " + to_string(v));
    out.push_back(q.get_num());
  }
  return out;
}

Integer lcm_of_denominators(const QVec& v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

ZVec primitive_integral(const ZVec& v) {
  Integer g = 0;
  for (const auto& z : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
  if (g == 0) throw InputError("primitive ray of the zero vector is undefined");
  ZVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

ZVec primitive_integral(const QVec& v) {
  const Integer l = lcm_of_denominators(v);
  ZVec scaled(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational s = v[i] * l;
    scaled[i] = s.get_num();
  }
  return primitive_integral(scaled);
}

Integer floor_sqrt(const Rational& q) {
  if (q < 0) throw InputError("floor_sqrt of a negative number");
  Integer fl = q.get_num() / q.get_den();
  Integer r;
  mpz_sqrt(r.get_mpz_t(), fl.get_mpz_t());
  return r;
}

QMatrix to_rational(const ZMatrix& m) {
  QMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  return out;
}

QMatrix rref(QMatrix m, std::vector<std::size_t>* pivots) {
  if (pivots) pivots->clear();
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t sel = lead_row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != lead_row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(lead_row, c));
    const Rational p = m(lead_row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(lead_row, c) /= p;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(lead_row, c);
    }
    if (pivots) pivots->push_back(col);
    ++lead_row;
  }
  return m;
}

std::size_t rank(const QMatrix& m) {
  std::vector<std::size_t> piv;
  rref(m, &piv);
  return piv.size();
}

std::size_t rank_of_rows(const std::vector<QVec>& rows, std::size_t cols) {
  if (rows.empty()) return 0;
  return rank(QMatrix::from_rows(rows, cols));
}

std::vector<QVec> nullspace(const QMatrix& m) {
  std::vector<std::size_t> piv;
  const QMatrix r = rref(m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<QVec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVec v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  std::vector<std::size_t> piv;
  const QMatrix red = rref(aug, &piv);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  QMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red(r, n + c);
  return inv;
}

Rational determinant(QMatrix m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && m(sel, col) == 0) ++sel;
    if (sel == n) return 0;
    if (sel != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(sel, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      const Rational f = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

std::optional<QVec> solve(const QMatrix& a, const QVec& b) {
  auto inv = inverse(a);
  if (!inv) return std::nullopt;
  return inv->apply(b);
}

}  // namespace kempf
