#pragma once

// Maximization of min_{beta in B} <l, beta> / ||l|| over the cone
// {l : <l, alpha> >= 0 for alpha in A}, on one torus and across a finite
// family of tori, plus an exhaustive lattice oracle for verification.
//
// M is generally irrational, so it is never materialized: a result carries the
// sign of M and, when M > 0, the exact rational M^2.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kempf/rootdatum.hpp"

namespace kempf {

class OptimumValue {
 public:
  /// Negative means -inf < M < 0; its magnitude is not computed.
  enum class Kind { NegInf, Negative, Zero, Positive, PosInf };

  static OptimumValue neg_inf() { return OptimumValue(Kind::NegInf, 0); }
  static OptimumValue negative() { return OptimumValue(Kind::Negative, 0); }
  static OptimumValue zero() { return OptimumValue(Kind::Zero, 0); }
  static OptimumValue positive(Rational m_squared);
  static OptimumValue pos_inf() { return OptimumValue(Kind::PosInf, 0); }

  Kind kind() const { return kind_; }
  bool is_positive_finite() const { return kind_ == Kind::Positive; }
  /// M^2 when Positive, 0 when Zero.
  const Rational& m_squared() const { return m_squared_; }
  /// "-inf", "negative", "0", "p/q" (the value of M^2) or "+inf".
  std::string str() const;

  friend bool operator==(const OptimumValue& a, const OptimumValue& b) {
    return a.kind_ == b.kind_ && a.m_squared_ == b.m_squared_;
  }
  friend bool operator<(const OptimumValue& a, const OptimumValue& b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
    return a.m_squared_ < b.m_squared_;
  }

 private:
  OptimumValue(Kind k, Rational m2) : kind_(k), m_squared_(std::move(m2)) {}
  Kind kind_;
  Rational m_squared_;
};

/// Constraint indices in solver output run over A first, then B.
struct QpSolution {
  bool feasible = false;
  /// The unique minimizer of v^T G v subject to <v, alpha> >= 0, <v, beta> >= 1.
  QVec v;
  Rational norm_sq;
  std::vector<std::size_t> active;
  /// Parallel to `active`: G v = sum u_j c_j with u_j >= 0.
  QVec multipliers;
  /// When infeasible: y >= 0 with sum y_k c_k = 0 and sum y_k b_k > 0.
  QVec certificate;
};

/// Exact dual active-set (Goldfarb-Idnani) solve of
///   minimize v^T G v  s.t.  <v, alpha> >= 0 (alpha in A),  <v, beta> >= 1 (beta in B).
/// Throws InputError if gram is not positive definite or dimensions disagree.
QpSolution kempf_qp(const std::vector<Character>& a, const std::vector<Character>& b, const ZMatrix& gram);

struct OptimumReport {
  OptimumValue value = OptimumValue::neg_inf();
  /// Primitive integral maximizing ray; present iff value is Positive.
  std::optional<Cocharacter> ray;
  std::vector<std::size_t> active_constraints;
  /// Whether {<v, beta> >= 1, <v, alpha> >= 0} is feasible, i.e. M > 0.
  bool feasible = false;
  std::optional<QVec> infeasibility_certificate;
};

/// Maximum of mu(B, l)/||l|| over cone(A) \ {0}: -inf if cone(A) = {0},
/// +inf if B is empty, otherwise the exact optimum (sign only when M < 0).
OptimumReport torus_max(const std::vector<Character>& a, const std::vector<Character>& b, const ZMatrix& gram);

struct IndexedPair {
  std::size_t index = 0;
  std::vector<Character> a;
  std::vector<Character> b;
};

struct Witness {
  std::size_t index = 0;
  Cocharacter ray;
};

struct OptimalClass {
  OptimumValue value = OptimumValue::neg_inf();
  /// Every index attaining a positive finite maximum, with its primitive ray.
  std::vector<Witness> witnesses;
  /// Common parabolic of the witnesses (after identification), when M > 0.
  std::optional<ParabolicType> parabolic;
  bool consistent = true;
  std::vector<std::string> diagnostics;
  /// Per-index results, parallel to the input pairs.
  std::vector<OptimumReport> per_index;
};

/// Maximum over the family, ignoring indices whose value is +inf.
/// `identifications[index]` maps that index's coordinates to the base
/// coordinates before parabolic types are compared (identity if absent).
OptimalClass family_max(const RootDatum& d, const std::vector<IndexedPair>& pairs,
                        const std::map<std::size_t, WeylElement>& identifications = {});

struct OracleResult {
  enum class Status { PosInfSentinel, NoFeasiblePoint, Found };
  Status status = Status::NoFeasiblePoint;
  /// Best lattice point: largest signed ratio, then smallest norm, then
  /// lexicographically smallest.
  Cocharacter best;
  /// sign(mu) * mu^2 / ||l||^2 at `best`.
  Rational ratio_sq_signed;
  std::uint64_t points_scanned = 0;
};

/// Exhaustive scan of integral l != 0 with ||l||^2 <= radius^2 inside cone(A).
/// Throws ResourceError when the bounding box holds more than `budget` points.
OracleResult oracle_lattice_max(const std::vector<Character>& a, const std::vector<Character>& b, const ZMatrix& gram,
                                long radius, std::uint64_t budget = 10'000'000);

/// Integral points of the norm ball, visited in lexicographic order.
/// The callback returns false to stop early. Returns the number of box points
/// visited. Throws ResourceError when the box exceeds `budget`.
std::uint64_t for_each_ball_point(const ZMatrix& gram, long radius, std::uint64_t budget,
                                  const std::function<bool(const ZVec&, const Integer& norm)>& visit);

bool is_positive_definite(const ZMatrix& gram);
/// l^T gram l.
Rational gram_norm_sq(const ZMatrix& gram, const Cocharacter& l);

}  // namespace kempf
