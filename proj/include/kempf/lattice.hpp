#pragma once

// Strongly typed vectors in the cocharacter space Y(Q) and the character
// space X(Q), both realized in ambient coordinates Q^n, and the pairing
// between them.

#include <initializer_list>
#include <string>

#include "kempf/arith.hpp"

namespace kempf {

template <class Tag>
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(QVec coords) : coords_(std::move(coords)) {}
  explicit LatticeVector(const ZVec& coords) : coords_(to_rational(coords)) {}
  LatticeVector(std::initializer_list<Rational> coords) : coords_(coords) {}

  static LatticeVector zero(std::size_t n) { return LatticeVector(QVec(n)); }

  std::size_t size() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const QVec& coords() const { return coords_; }

  bool is_zero() const { return kempf::is_zero(coords_); }
  bool is_integral() const { return kempf::is_integral(coords_); }

  friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
    check_same(a, b);
    QVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return LatticeVector(std::move(out));
  }
  friend LatticeVector operator-(const LatticeVector& a) {
    QVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
    return LatticeVector(std::move(out));
  }
  friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) { return a + (-b); }
  friend LatticeVector operator*(const Rational& s, const LatticeVector& a) {
    QVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
    return LatticeVector(std::move(out));
  }

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const LatticeVector& a, const LatticeVector& b) { return !(a == b); }
  friend bool operator<(const LatticeVector& a, const LatticeVector& b) {
    return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                        b.coords_.end());
  }

  std::string str() const { return to_string(coords_); }

 private:
  static void check_same(const LatticeVector& a, const LatticeVector& b) {
    if (a.size() != b.size()) throw InputError("vector arithmetic: dimension mismatch");
  }

  QVec coords_;
};

struct CocharacterTag {};
struct CharacterTag {};

/// Element of Y(Q): a rational cocharacter (one-parameter subgroup direction).
using Cocharacter = LatticeVector<CocharacterTag>;
/// Element of X(Q): a rational character (weight, root, or linear functional).
using Character = LatticeVector<CharacterTag>;

/// The natural pairing Y x X -> Q in ambient coordinates.
inline Rational pairing(const Cocharacter& lambda, const Character& beta) {
  if (lambda.size() != beta.size())
    throw InputError("pairing: cocharacter has dimension " + std::to_string(lambda.size()) +
                     " but character has dimension " + std::to_string(beta.size()));
  return dot(lambda.coords(), beta.coords());
}

/// Positive multiple with coprime integer entries. Throws InputError on 0.
inline Cocharacter primitive_ray(const Cocharacter& v) {
  if (v.is_zero()) throw InputError("primitive_ray: the zero cocharacter has no ray");
  return Cocharacter(primitive_integral(v.coords()));
}

inline Character primitive_character(const Character& v) {
  if (v.is_zero()) throw InputError("primitive_character: zero character");
  return Character(primitive_integral(v.coords()));
}

}  // namespace kempf
