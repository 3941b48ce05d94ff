#include "kempf/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace kempf {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& message) {
  throw InputError(field + ": " + message);
}

const Json& require(const Json& j, const std::string& key, const std::string& field) {
  if (!j.is_object()) fail(field, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(field.empty() ? key : field + "." + key, "missing");
  return *it;
}

std::string sub(const std::string& field, const std::string& key) { return field.empty() ? key : field + "." + key; }
std::string at(const std::string& field, std::size_t i) { return field + "[" + std::to_string(i) + "]"; }

const Json& array(const Json& j, const std::string& field) {
  if (!j.is_array()) fail(field, "expected an array");
  return j;
}

Integer integer_from_json(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(std::to_string(j.get<std::uint64_t>()))
                                                           : Integer(std::to_string(j.get<std::int64_t>()));
  const Rational q = rational_from_json(j, field);
  if (q.get_den() != 1) fail(field, "expected an integer");
  return q.get_num();
}

std::size_t index_from_json(const Json& j, const std::string& field) {
  if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() < 0))
    fail(field, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

bool bool_from_json(const Json& j, const std::string& field) {
  if (!j.is_boolean()) fail(field, "expected a boolean");
  return j.get<bool>();
}

Json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Json cochar_to_json(const Cocharacter& c) { return lattice_to_json(c.coords()); }

std::vector<int> word_from_json(const RootDatum& d, const Json& j, const std::string& field) {
  std::vector<int> word;
  for (std::size_t i = 0; i < array(j, field).size(); ++i) {
    const std::size_t k = index_from_json(j[i], at(field, i));
    if (k >= d.simple().size()) fail(at(field, i), "simple root index out of range");
    word.push_back(static_cast<int>(k));
  }
  return word;
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": invalid JSON (" + std::string(e.what()) + ")");
  }
}

Rational rational_from_json(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(integer_from_json(j, field));
  if (!j.is_string()) fail(field, "expected a rational \"p/q\" or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const InputError& e) {
    fail(field, e.what());
  }
}

QVec qvec_from_json(const Json& j, const std::string& field) {
  QVec v;
  for (std::size_t i = 0; i < array(j, field).size(); ++i) v.push_back(rational_from_json(j[i], at(field, i)));
  return v;
}

ZVec zvec_from_json(const Json& j, const std::string& field) {
  ZVec v;
  for (std::size_t i = 0; i < array(j, field).size(); ++i) v.push_back(integer_from_json(j[i], at(field, i)));
  return v;
}

ZMatrix zmatrix_from_json(const Json& j, const std::string& field) {
  std::vector<ZVec> rows;
  for (std::size_t i = 0; i < array(j, field).size(); ++i) rows.push_back(zvec_from_json(j[i], at(field, i)));
  if (rows.empty()) fail(field, "empty matrix");
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].size() != rows.front().size()) fail(at(field, i), "ragged matrix row");
  return ZMatrix::from_rows(rows, rows.front().size());
}

QMatrix qmatrix_from_json(const Json& j, const std::string& field) {
  std::vector<QVec> rows;
  for (std::size_t i = 0; i < array(j, field).size(); ++i) rows.push_back(qvec_from_json(j[i], at(field, i)));
  if (rows.empty()) fail(field, "empty matrix");
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].size() != rows.front().size()) fail(at(field, i), "ragged matrix row");
  return QMatrix::from_rows(rows, rows.front().size());
}

std::vector<Character> characters_from_json(const Json& j, const std::string& field, std::size_t dim) {
  std::vector<Character> out;
  for (std::size_t i = 0; i < array(j, field).size(); ++i) {
    QVec v = qvec_from_json(j[i], at(field, i));
    if (v.size() != dim)
      fail(at(field, i), "dimension " + std::to_string(v.size()) + ", expected " + std::to_string(dim));
    out.emplace_back(std::move(v));
  }
  return out;
}

Json to_json(const Rational& q) { return Json(to_string(q)); }

Json to_json(const QVec& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_json(q));
  return out;
}

Json lattice_to_json(const QVec& v) {
  if (!std::all_of(v.begin(), v.end(), [](const Rational& q) { return q.get_den() == 1; })) return to_json(v);
  return to_json(to_integral(v));
}

Json to_json(const ZVec& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(integer_to_json(z));
  return out;
}

Json to_json(const ZMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

RootDatum datum_from_json(const Json& j) {
  const Json& rank_j = require(j, "rank", "");
  const std::size_t rank = index_from_json(rank_j, "rank");
  if (rank == 0) fail("rank", "must be positive");
  std::vector<Character> roots;
  const Json& roots_j = array(require(j, "roots", ""), "roots");
  for (std::size_t i = 0; i < roots_j.size(); ++i) {
    ZVec v = zvec_from_json(roots_j[i], at("roots", i));
    if (v.size() != rank) fail(at("roots", i), "expected " + std::to_string(rank) + " entries");
    roots.emplace_back(v);
  }
  std::vector<Cocharacter> coroots;
  const Json& coroots_j = array(require(j, "coroots", ""), "coroots");
  if (coroots_j.size() != roots.size()) fail("coroots", "must have one coroot per root");
  for (std::size_t i = 0; i < coroots_j.size(); ++i) {
    ZVec v = zvec_from_json(coroots_j[i], at("coroots", i));
    if (v.size() != rank) fail(at("coroots", i), "expected " + std::to_string(rank) + " entries");
    coroots.emplace_back(v);
  }
  std::vector<std::size_t> simple;
  const Json& simple_j = array(require(j, "simple", ""), "simple");
  for (std::size_t i = 0; i < simple_j.size(); ++i) {
    const std::size_t k = index_from_json(simple_j[i], at("simple", i));
    if (k >= roots.size()) fail(at("simple", i), "root index out of range");
    simple.push_back(k);
  }
  const ZMatrix gram = zmatrix_from_json(require(j, "gram", ""), "gram");
  if (gram.rows() != rank || gram.cols() != rank) fail("gram", "expected a " + std::to_string(rank) + "x" + std::to_string(rank) + " matrix");
  return RootDatum(rank, std::move(roots), std::move(simple), std::move(coroots), gram);
}

Json to_json(const RootDatum& d) {
  Json out;
  out["rank"] = d.rank();
  Json roots = Json::array(), coroots = Json::array();
  for (const auto& r : d.roots()) roots.push_back(to_json(to_integral(r.coords())));
  for (const auto& r : d.coroots()) coroots.push_back(to_json(to_integral(r.coords())));
  out["roots"] = roots;
  out["simple"] = d.simple();
  out["coroots"] = coroots;
  out["gram"] = to_json(d.gram());
  return out;
}

Cone cone_from_json(const Json& j, const std::string& field) {
  const std::size_t dim = index_from_json(require(j, "dim", field), sub(field, "dim"));
  if (dim == 0) fail(sub(field, "dim"), "must be positive");
  const bool has_ineq = j.contains("inequalities");
  const bool has_gen = j.contains("generators");
  if (!has_ineq && !has_gen) fail(field, "needs \"inequalities\" or \"generators\"");
  std::optional<Cone> by_ineq, by_gen;
  if (has_ineq) by_ineq = Cone::from_inequalities(dim, characters_from_json(j["inequalities"], sub(field, "inequalities"), dim));
  if (has_gen) {
    std::vector<Cocharacter> gens;
    for (const auto& c : characters_from_json(j["generators"], sub(field, "generators"), dim)) gens.emplace_back(c.coords());
    by_gen = Cone::from_generators(dim, std::move(gens));
  }
  if (by_ineq && by_gen && !same_set(*by_ineq, *by_gen))
    fail(field, "inequalities and generators describe different cones");
  return by_ineq ? *by_ineq : *by_gen;
}

Json to_json(const Cone& c) {
  Json out;
  out["dim"] = c.dim();
  Json ineqs = Json::array(), gens = Json::array();
  for (const auto& b : c.inequalities()) ineqs.push_back(to_json(to_integral(b.coords())));
  for (const auto& g : c.generators()) gens.push_back(to_json(to_integral(g.coords())));
  out["inequalities"] = ineqs;
  out["generators"] = gens;
  return out;
}

WeylElement weyl_from_json(const RootDatum& d, const Json& j, const std::string& field) {
  return d.element_from_word(word_from_json(d, require(j, "weyl_word", field), sub(field, "weyl_word")));
}

QuasiStateFamily state_from_json(const RootDatum& d, const Json& j, const std::string& field) {
  const Json& comps = array(require(j, "components", field), sub(field, "components"));
  std::map<std::size_t, StateComponent> by_index;
  std::size_t n = 0;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string f = at(sub(field, "components"), i);
    const std::size_t idx = index_from_json(require(comps[i], "index", f), sub(f, "index"));
    if (by_index.count(idx)) fail(sub(f, "index"), "duplicate index");
    by_index.emplace(idx, StateComponent(characters_from_json(require(comps[i], "chars", f), sub(f, "chars"), d.rank())));
    n = std::max(n, idx + 1);
  }
  std::vector<IndexAction::Entry> gens;
  if (j.contains("index_action")) {
    const Json& acts = array(j["index_action"], sub(field, "index_action"));
    for (std::size_t i = 0; i < acts.size(); ++i) {
      const std::string f = at(sub(field, "index_action"), i);
      std::vector<std::size_t> perm;
      const Json& pj = array(require(acts[i], "perm", f), sub(f, "perm"));
      for (std::size_t k = 0; k < pj.size(); ++k) perm.push_back(index_from_json(pj[k], at(sub(f, "perm"), k)));
      n = std::max(n, perm.size());
      gens.push_back({weyl_from_json(d, acts[i], f), std::move(perm)});
    }
  }
  if (n == 0) fail(sub(field, "components"), "at least one component is required");
  std::vector<StateComponent> components(n);
  for (auto& [idx, c] : by_index) components[idx] = std::move(c);
  const std::size_t base = j.contains("base") ? index_from_json(j["base"], sub(field, "base")) : 0;
  if (base >= n) fail(sub(field, "base"), "out of range");
  IndexAction action = gens.empty() ? IndexAction::trivial(n) : IndexAction::generated(n, std::move(gens));
  return QuasiStateFamily(std::move(components), std::move(action), base);
}

Json to_json(const QuasiStateFamily& f) {
  Json out;
  Json comps = Json::array();
  for (std::size_t i = 0; i < f.size(); ++i) {
    Json chars = Json::array();
    for (const auto& c : f.component(i).chars()) chars.push_back(lattice_to_json(c.coords()));
    comps.push_back(Json{{"index", i}, {"chars", chars}});
  }
  out["components"] = comps;
  Json acts = Json::array();
  for (const auto& e : f.action().elements()) {
    if (e.element.is_identity()) continue;
    acts.push_back(Json{{"weyl_word", e.element.word}, {"perm", e.perm}});
  }
  out["index_action"] = acts;
  out["base"] = f.base_index();
  return out;
}

Json to_json(const ParabolicType& p, const RootDatum& d) {
  const auto roots = [&](const std::vector<std::size_t>& idx) {
    Json out = Json::array();
    for (auto i : idx) out.push_back(to_json(to_integral(d.roots()[i].coords())));
    return out;
  };
  Json out;
  out["proper"] = p.is_proper();
  out["nonneg_roots"] = roots(p.nonneg_roots);
  out["levi_roots"] = roots(p.levi_roots);
  out["ru_roots"] = roots(p.ru_roots);
  return out;
}

Json to_json(const OptimumValue& v) {
  switch (v.kind()) {
    case OptimumValue::Kind::NegInf:
      return Json{{"sign", "-inf"}};
    case OptimumValue::Kind::Negative:
      return Json{{"sign", "negative"}};
    case OptimumValue::Kind::Zero:
      return Json{{"sign", "zero"}, {"m_squared", "0"}};
    case OptimumValue::Kind::Positive:
      return Json{{"sign", "positive"}, {"m_squared", to_string(v.m_squared())}};
    case OptimumValue::Kind::PosInf:
      break;
  }
  return Json{{"sign", "+inf"}};
}

Json to_json(const OptimumReport& r) {
  Json out = to_json(r.value);
  if (r.ray) out["ray"] = cochar_to_json(*r.ray);
  out["feasible"] = r.feasible;
  if (!r.active_constraints.empty()) out["active_constraints"] = r.active_constraints;
  if (r.infeasibility_certificate) out["infeasibility_certificate"] = to_json(*r.infeasibility_certificate);
  return out;
}

Json to_json(const OptimalClass& c, const RootDatum& d) {
  Json out = to_json(c.value);
  Json ws = Json::array();
  for (const auto& w : c.witnesses) ws.push_back(Json{{"index", w.index}, {"ray", cochar_to_json(w.ray)}});
  if (!c.witnesses.empty()) out["ray"] = cochar_to_json(c.witnesses.front().ray);
  out["witnesses"] = ws;
  if (c.parabolic) out["parabolic"] = to_json(*c.parabolic, d);
  out["consistent"] = c.consistent;
  if (!c.diagnostics.empty()) out["diagnostics"] = c.diagnostics;
  Json per = Json::array();
  for (const auto& r : c.per_index) per.push_back(to_json(r));
  out["per_index"] = per;
  return out;
}

Json to_json(const OracleResult& r) {
  Json out;
  switch (r.status) {
    case OracleResult::Status::PosInfSentinel:
      out["status"] = "+inf";
      return out;
    case OracleResult::Status::NoFeasiblePoint:
      out["status"] = "no feasible point";
      break;
    case OracleResult::Status::Found:
      out["status"] = "found";
      out["best"] = cochar_to_json(r.best);
      out["ratio_squared"] = to_string(r.ratio_sq_signed);
      break;
  }
  out["points_scanned"] = r.points_scanned;
  return out;
}

Json to_json(const AdmissibilityReport& r) {
  Json out;
  out["passed"] = r.passed;
  out["samples"] = r.samples;
  out["failures"] = r.failures;
  out["scope"] = r.scope;
  return out;
}

OptimizeProblem optimize_problem_from_json(const RootDatum& d, const Json& j) {
  OptimizeProblem p;
  if (j.contains("gram")) {
    p.gram = zmatrix_from_json(j["gram"], "gram");
    if (p.gram->rows() != d.rank() || p.gram->cols() != d.rank()) fail("gram", "wrong shape");
    if (!is_positive_definite(*p.gram)) fail("gram", "not positive definite");
  }
  const Json& pairs = array(require(j, "pairs", ""), "pairs");
  if (pairs.empty()) fail("pairs", "at least one pair is required");
  std::set<std::size_t> seen;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string f = at("pairs", i);
    IndexedPair pr;
    pr.index = pairs[i].contains("index") ? index_from_json(pairs[i]["index"], sub(f, "index")) : i;
    if (!seen.insert(pr.index).second) fail(sub(f, "index"), "duplicate index");
    pr.a = characters_from_json(require(pairs[i], "A", f), sub(f, "A"), d.rank());
    pr.b = characters_from_json(require(pairs[i], "B", f), sub(f, "B"), d.rank());
    p.pairs.push_back(std::move(pr));
  }
  if (j.contains("identifications")) {
    const Json& ids = array(j["identifications"], "identifications");
    for (std::size_t i = 0; i < ids.size(); ++i) {
      const std::string f = at("identifications", i);
      const std::size_t idx = index_from_json(require(ids[i], "index", f), sub(f, "index"));
      if (!seen.count(idx)) fail(sub(f, "index"), "no pair with this index");
      if (!p.identifications.emplace(idx, weyl_from_json(d, ids[i], f)).second) fail(sub(f, "index"), "duplicate index");
    }
  }
  return p;
}

InstabilityProblem instability_problem_from_json(const RootDatum& d, const Json& j) {
  const Json& rj = require(j, "representation", "");
  std::vector<std::string> labels;
  const Json& lj = array(require(rj, "labels", "representation"), "representation.labels");
  for (std::size_t i = 0; i < lj.size(); ++i) {
    if (!lj[i].is_string()) fail(at("representation.labels", i), "expected a string");
    labels.push_back(lj[i].get<std::string>());
  }
  Representation rep(characters_from_json(require(rj, "weights", "representation"), "representation.weights", d.rank()),
                     std::move(labels));

  std::vector<WeightVector> vectors;
  const Json& vj = array(require(j, "vectors", ""), "vectors");
  if (vj.empty()) fail("vectors", "must be non-empty");
  for (std::size_t i = 0; i < vj.size(); ++i) {
    if (!vj[i].is_object()) fail(at("vectors", i), "expected an object {label: rational}");
    WeightVector x;
    for (const auto& [label, value] : vj[i].items()) {
      rep.index_of(label);
      x.set(label, rational_from_json(value, at("vectors", i) + "." + label));
    }
    vectors.push_back(std::move(x));
  }

  std::vector<Transform> transforms;
  if (j.contains("transforms")) {
    const Json& tj = array(j["transforms"], "transforms");
    for (std::size_t i = 0; i < tj.size(); ++i) transforms.push_back({qmatrix_from_json(tj[i], at("transforms", i)), std::nullopt});
  }
  if (j.contains("transform_words")) {
    const Json& wj = array(j["transform_words"], "transform_words");
    if (wj.size() != transforms.size()) fail("transform_words", "must be parallel to transforms");
    for (std::size_t i = 0; i < wj.size(); ++i)
      if (!wj[i].is_null()) transforms[i].weyl = d.element_from_word(word_from_json(d, wj[i], at("transform_words", i)));
  }

  if (j.contains("mode") && !j["mode"].is_string()) fail("mode", "expected a string");
  const std::string mode = j.contains("mode") ? j["mode"].get<std::string>() : "null-cone";
  std::optional<QuasiStateFamily> upsilon;
  if (mode == "state") {
    upsilon = state_from_json(d, require(j, "upsilon", ""), "upsilon");
  } else if (mode != "null-cone") {
    fail("mode", "expected \"null-cone\" or \"state\"");
  }
  return InstabilityProblem{std::move(rep), std::move(vectors), std::move(transforms), std::move(upsilon)};
}

Json to_json(const WeightVector& x) {
  Json out = Json::object();
  for (const auto& [label, value] : x.coords()) out[label] = to_string(value);
  return out;
}

Json to_json(const InstabilityResult& r, const RootDatum& d) {
  Json out = to_json(r.optimal, d);
  out["search_scope"] = r.search_scope;
  Json pairs = Json::array();
  for (const auto& p : r.pairs) {
    Json a = Json::array(), b = Json::array();
    for (const auto& c : p.a) a.push_back(lattice_to_json(c.coords()));
    for (const auto& c : p.b) b.push_back(lattice_to_json(c.coords()));
    pairs.push_back(Json{{"index", p.index}, {"A", a}, {"B", b}});
  }
  out["pairs"] = pairs;
  return out;
}

SubsetProblem subset_problem_from_json(const RootDatum& d, const Json& j) {
  Cone cone = cone_from_json(require(j, "cone", ""), "cone");
  if (cone.dim() != d.rank()) fail("cone.dim", "does not match the root datum rank");
  std::vector<WeylElement> stab;
  if (j.contains("stabilizer")) {
    const Json& sj = array(j["stabilizer"], "stabilizer");
    for (std::size_t i = 0; i < sj.size(); ++i) stab.push_back(weyl_from_json(d, sj[i], at("stabilizer", i)));
  }
  const bool saturated = j.contains("saturated") ? bool_from_json(j["saturated"], "saturated") : true;
  const bool finite_type = j.contains("finite_type") ? bool_from_json(j["finite_type"], "finite_type") : true;
  SubsetProblem p{ConvexSubset(std::move(cone), std::move(stab), saturated, finite_type), std::nullopt};
  if (j.contains("centre")) {
    const QVec c = qvec_from_json(j["centre"], "centre");
    if (c.size() != d.rank()) fail("centre", "wrong dimension");
    try {
      p.centre = BuildingPoint(Cocharacter(c));
    } catch (const InputError& e) {
      fail("centre", e.what());
    }
  }
  return p;
}

Json to_json(const CentreResult& r, const RootDatum& d) {
  Json out;
  out["centre"] = cochar_to_json(r.centre.ray());
  out["m_squared"] = to_string(r.optimal.value.m_squared());
  if (r.optimal.parabolic) out["parabolic"] = to_json(*r.optimal.parabolic, d);
  out["fixed_by_stabilizer"] = r.fixed_by_stabilizer;
  return out;
}

Json to_json(const CentreCheck& r) {
  Json out;
  out["passed"] = r.passed;
  out["failures"] = r.failures;
  out["mu"] = r.mu.str();
  return out;
}

}  // namespace kempf
