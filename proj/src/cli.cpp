#include "kempf/cli.hpp"

#include <random>

#include <CLI11.hpp>

namespace kempf {

CrossCheck cross_check_pair(const std::vector<Character>& a, const std::vector<Character>& b, const ZMatrix& gram,
                            long radius, std::uint64_t budget) {
  CrossCheck c;
  c.exact = torus_max(a, b, gram);
  if (b.empty()) {
    c.oracle.status = OracleResult::Status::PosInfSentinel;
    c.verdict = "AGREE";
    return c;
  }
  c.oracle = oracle_lattice_max(a, b, gram, radius, budget);
  const bool found = c.oracle.status == OracleResult::Status::Found;
  const Rational& r = c.oracle.ratio_sq_signed;
  const Rational r2 = Rational(radius) * radius;
  using K = OptimumValue::Kind;
  bool agree = false;
  bool bound_only = false;
  switch (c.exact.value.kind()) {
    case K::NegInf:
      agree = !found;
      break;
    case K::PosInf:
      agree = false;
      break;
    case K::Positive: {
      const Rational& m2 = c.exact.value.m_squared();
      if (gram_norm_sq(gram, *c.exact.ray) <= r2) {
        agree = found && r == m2;
      } else {
        // The maximizer is outside the ball: the scan can only stay below M^2.
        agree = !found || r <= m2;
        bound_only = agree;
      }
      break;
    }
    case K::Zero:
      agree = !found || r <= 0;
      bound_only = agree && !(found && r == 0);
      break;
    case K::Negative:
      agree = !found || r < 0;
      bound_only = agree && !found;
      break;
  }
  c.verdict = !agree ? "DISAGREE" : bound_only ? "oracle bound only" : "AGREE";
  return c;
}

Json to_json(const CrossCheck& c) {
  Json out;
  out["verdict"] = c.verdict;
  out["exact"] = to_json(c.exact);
  out["oracle"] = to_json(c.oracle);
  return out;
}

namespace {

struct Options {
  std::string datum;
  std::string problem;
  long radius = 6;
  std::uint64_t budget = 10'000'000;
  std::uint64_t seed = 20240601;
  std::string format = "json";
  bool cross_check = false;
};

void render_text(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_text(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); })) {
    if (j.empty()) out << prefix << ": []\n";
    for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const Json& report, const Options& opt, std::ostream& out) {
  if (opt.format == "text")
    render_text(report, "", out);
  else
    out << report.dump(2) << "\n";
}

RootDatum load_datum(const Options& opt) {
  if (opt.datum.empty()) throw InputError("--datum: required");
  return datum_from_json(load_json_file(opt.datum));
}

Json load_problem(const Options& opt) {
  if (opt.problem.empty()) throw InputError("--problem: required");
  return load_json_file(opt.problem);
}

/// Datum invariants must hold before any computation uses the datum.
void require_valid(const RootDatum& d) {
  const auto violations = validate_datum(d);
  if (!violations.empty()) throw InputError(violations.front().str());
}

int cmd_validate(const Options& opt, std::ostream& out) {
  const RootDatum d = load_datum(opt);
  const auto violations = validate_datum(d);
  if (!violations.empty()) throw InputError(violations.front().str());
  Json report;
  report["datum"] = "ok";
  report["weyl_order"] = weyl_group(d).size();
  if (!opt.problem.empty()) {
    const QuasiStateFamily f = state_from_json(d, load_problem(opt));
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> coord(-3, 3);
    std::vector<Cocharacter> extra;
    for (int k = 0; k < 16; ++k) {
      QVec v(d.rank());
      for (auto& x : v) x = coord(rng);
      extra.emplace_back(std::move(v));
    }
    report["seed"] = opt.seed;
    report["orbit_character_count"] = f.orbit_character_count();
    report["quasi_admissible"] = to_json(check_quasi_admissible(d, f, extra));
  }
  emit(report, opt, out);
  return kOk;
}

int cmd_optimize(const Options& opt, std::ostream& out) {
  const RootDatum d = load_datum(opt);
  require_valid(d);
  const OptimizeProblem p = optimize_problem_from_json(d, load_problem(opt));
  const RootDatum used = p.gram ? RootDatum(d.rank(), d.roots(), d.simple(), d.coroots(), *p.gram) : d;
  Json report = to_json(family_max(used, p.pairs, p.identifications), used);
  int code = kOk;
  if (opt.cross_check) {
    Json checks = Json::array();
    for (const auto& pr : p.pairs) {
      const CrossCheck c = cross_check_pair(pr.a, pr.b, used.gram(), opt.radius, opt.budget);
      if (c.verdict == "DISAGREE") code = kDisagree;
      Json j = to_json(c);
      j["index"] = pr.index;
      checks.push_back(std::move(j));
    }
    report["cross_check"] = Json{{"radius", opt.radius}, {"pairs", checks}};
  }
  emit(report, opt, out);
  return code;
}

int cmd_instability(const Options& opt, std::ostream& out) {
  const RootDatum d = load_datum(opt);
  require_valid(d);
  const Json j = load_problem(opt);
  InstabilityProblem p = instability_problem_from_json(d, j);
  const InstabilityResult res = optimal_instability(d, p.rep, p.vectors, p.upsilon, p.transforms);
  Json report;
  report["mode"] = p.upsilon ? "state" : "null-cone";
  const Json body = to_json(res, d);
  for (const auto& [k, v] : body.items()) report[k] = v;
  if (!p.upsilon && p.vectors.size() == 1) {
    const auto hm = hilbert_mumford_check(d, p.rep, p.vectors.front(), opt.radius, opt.budget);
    Json h;
    h["radius"] = opt.radius;
    h["unstable"] = hm.unstable;
    if (hm.witness) h["witness"] = lattice_to_json(hm.witness->coords());
    report["hilbert_mumford"] = h;
  }
  int code = kOk;
  if (opt.cross_check) {
    Json checks = Json::array();
    for (const auto& pr : res.pairs) {
      const CrossCheck c = cross_check_pair(pr.a, pr.b, d.gram(), opt.radius, opt.budget);
      if (c.verdict == "DISAGREE") code = kDisagree;
      Json cj = to_json(c);
      cj["index"] = pr.index;
      checks.push_back(std::move(cj));
    }
    report["cross_check"] = Json{{"radius", opt.radius}, {"pairs", checks}};
  }
  emit(report, opt, out);
  return code;
}

int cmd_centre(const Options& opt, std::ostream& out) {
  const RootDatum d = load_datum(opt);
  require_valid(d);
  const SubsetProblem p = subset_problem_from_json(d, load_problem(opt));
  emit(to_json(centre_in_apartment(d, p.subset), d), opt, out);
  return kOk;
}

int cmd_verify_centre(const Options& opt, std::ostream& out) {
  const RootDatum d = load_datum(opt);
  require_valid(d);
  const SubsetProblem p = subset_problem_from_json(d, load_problem(opt));
  if (!p.centre) throw InputError("centre: missing");
  emit(to_json(verify_centre(d, p.subset, *p.centre)), opt, out);
  return kOk;
}

int cmd_oracle(const Options& opt, std::ostream& out) {
  const RootDatum d = load_datum(opt);
  require_valid(d);
  const OptimizeProblem p = optimize_problem_from_json(d, load_problem(opt));
  const ZMatrix& gram = p.gram ? *p.gram : d.gram();
  Json results = Json::array();
  for (const auto& pr : p.pairs) {
    Json j;
    j["index"] = pr.index;
    const Json body = to_json(oracle_lattice_max(pr.a, pr.b, gram, opt.radius, opt.budget));
    for (const auto& [k, v] : body.items()) j[k] = v;
    results.push_back(std::move(j));
  }
  Json report;
  report["radius"] = opt.radius;
  report["results"] = results;
  emit(report, opt, out);
  return kOk;
}

int cmd_parabolic(const Options& opt, std::ostream& out) {
  const RootDatum d = load_datum(opt);
  require_valid(d);
  const Json j = load_problem(opt);
  if (!j.is_object() || !j.contains("cocharacter")) throw InputError("cocharacter: missing");
  const QVec v = qvec_from_json(j["cocharacter"], "cocharacter");
  if (v.size() != d.rank()) throw InputError("cocharacter: wrong dimension");
  const Cocharacter lambda(v);
  const ParabolicType p = d.parabolic_type(lambda);
  Json report;
  report["cocharacter"] = lattice_to_json(v);
  report["parabolic"] = to_json(p, d);
  report["simplex_cone"] = to_json(simplex_cone(d, p));
  emit(report, opt, out);
  return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact optimal destabilizing cocharacters, destabilizing cones and apartment centres", "kempf"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--datum", opt.datum, "Root datum JSON file");
  app.add_option("--problem", opt.problem, "Task JSON file");
  app.add_option("--radius", opt.radius, "Lattice scan radius")->check(CLI::PositiveNumber);
  app.add_option("--budget", opt.budget, "Maximum number of lattice points scanned");
  app.add_option("--seed", opt.seed, "Seed for randomized sampling");
  app.add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--cross-check", opt.cross_check, "Compare the exact optimum with the lattice oracle");
  app.fallthrough();

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"validate", "Check datum invariants (and a quasi-state given by --problem)"},
      {"optimize", "Optimal value and class over a family of (A, B) pairs"},
      {"instability", "Optimal destabilizing class of vectors in a representation"},
      {"centre", "Centre of a convex subset of the apartment"},
      {"verify-centre", "Check a candidate centre"},
      {"oracle", "Exhaustive lattice scan of the norm ball"},
      {"parabolic", "Parabolic type and simplex cone of a cocharacter"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (cmd == "validate") return cmd_validate(opt, out);
    if (cmd == "optimize") return cmd_optimize(opt, out);
    if (cmd == "instability") return cmd_instability(opt, out);
    if (cmd == "centre") return cmd_centre(opt, out);
    if (cmd == "verify-centre") return cmd_verify_centre(opt, out);
    if (cmd == "oracle") return cmd_oracle(opt, out);
    return cmd_parabolic(opt, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kResourceError;
  }
}

}  // namespace kempf
