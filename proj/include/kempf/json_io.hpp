#pragma once

// JSON forms of the library's inputs and reports. Rationals travel as "p/q"
// strings (plain integers are also accepted on input); objects keep insertion
// order so that output is byte-stable.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kempf/building.hpp"
#include "kempf/instability.hpp"
#include "kempf/optimize.hpp"
#include "kempf/states.hpp"

namespace kempf {

using Json = nlohmann::ordered_json;

/// Throws InputError naming the file on read or parse failure.
Json load_json_file(const std::string& path);

// Readers take the field path used in diagnostics.
Rational rational_from_json(const Json& j, const std::string& field);
QVec qvec_from_json(const Json& j, const std::string& field);
ZVec zvec_from_json(const Json& j, const std::string& field);
ZMatrix zmatrix_from_json(const Json& j, const std::string& field);
QMatrix qmatrix_from_json(const Json& j, const std::string& field);
std::vector<Character> characters_from_json(const Json& j, const std::string& field, std::size_t dim);

Json to_json(const Rational& q);
Json to_json(const QVec& v);
Json to_json(const ZVec& v);
Json to_json(const ZMatrix& m);
/// JSON integers when every entry is integral, "p/q" strings otherwise.
Json lattice_to_json(const QVec& v);

/// {"rank", "roots", "simple", "coroots", "gram"}, integers only.
RootDatum datum_from_json(const Json& j);
Json to_json(const RootDatum& d);

/// {"dim", "inequalities"?, "generators"?}. With both lists the cone is built
/// from the inequalities and must equal the cone of the generators.
Cone cone_from_json(const Json& j, const std::string& field = "cone");
Json to_json(const Cone& c);

/// {"weyl_word": [int]}.
WeylElement weyl_from_json(const RootDatum& d, const Json& j, const std::string& field);

/// {"components": [{"index", "chars"}], "index_action": [{"weyl_word", "perm"}], "base"}.
/// Indices not listed get the empty component; an empty action is trivial.
QuasiStateFamily state_from_json(const RootDatum& d, const Json& j, const std::string& field = "state");
Json to_json(const QuasiStateFamily& f);

Json to_json(const ParabolicType& p, const RootDatum& d);
Json to_json(const OptimumValue& v);
Json to_json(const OptimumReport& r);
Json to_json(const OptimalClass& c, const RootDatum& d);
Json to_json(const OracleResult& r);
Json to_json(const AdmissibilityReport& r);

struct OptimizeProblem {
  std::optional<ZMatrix> gram;
  std::vector<IndexedPair> pairs;
  std::map<std::size_t, WeylElement> identifications;
};

/// {"gram"?, "pairs": [{"index", "A", "B"}], "identifications": [{"index", "weyl_word"}]}.
OptimizeProblem optimize_problem_from_json(const RootDatum& d, const Json& j);

struct InstabilityProblem {
  Representation rep;
  std::vector<WeightVector> vectors;
  std::vector<Transform> transforms;
  /// Set in state mode.
  std::optional<QuasiStateFamily> upsilon;
};

/// {"representation": {"weights", "labels"}, "vectors": [{label: rat}],
///  "transforms"?, "transform_words"?, "mode": "null-cone" | "state", "upsilon"?}.
InstabilityProblem instability_problem_from_json(const RootDatum& d, const Json& j);
Json to_json(const WeightVector& x);
Json to_json(const InstabilityResult& r, const RootDatum& d);

struct SubsetProblem {
  ConvexSubset subset;
  std::optional<BuildingPoint> centre;
};

/// {"cone", "stabilizer": [{"weyl_word"}], "saturated", "finite_type", "centre"?}.
SubsetProblem subset_problem_from_json(const RootDatum& d, const Json& j);
/// {"centre", "m_squared", "parabolic", "fixed_by_stabilizer"}.
Json to_json(const CentreResult& r, const RootDatum& d);
Json to_json(const CentreCheck& r);

}  // namespace kempf
