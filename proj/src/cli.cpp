#include "qbraid/cli.hpp"

#include "qbraid/builtins.hpp"
#include "qbraid/fixture.hpp"
#include "qbraid/frt.hpp"
#include "qbraid/parse.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <optional>
#include <string>
#include <vector>

namespace qbraid {

namespace {

using Json = nlohmann::ordered_json;

/// Raised for bad usage or inputs; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Source {
  std::string label;
  std::optional<BraidedSpace> space;
  std::optional<Representation> rep;
  std::optional<RelationSet> relations;
  std::vector<std::string> reference_relations;
  /// True when the operator came from a builtin or passed validation.
  bool verified_braiding = false;
};

Source load_source(const std::string& builtin, const std::string& input) {
  if (builtin.empty() == input.empty()) throw UsageError("give exactly one of --builtin or --input");
  Source s;
  if (!builtin.empty()) {
    try {
      Builtin b = builtin_by_name(builtin);
      s.label = builtin;
      s.space = b.space;
      s.rep = b.rep;
      s.verified_braiding = true;
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    return s;
  }
  s.label = input;
  Fixture f = load_fixture(input);
  if (auto* r = std::get_if<RMatrixFixture>(&f)) {
    s.space = r->space();
  } else if (auto* r = std::get_if<RepresentationFixture>(&f)) {
    s.rep = r->rep;
    s.space = r->space;
    s.reference_relations = r->reference_relations;
  } else if (auto* r = std::get_if<RelationsFixture>(&f)) {
    s.relations = r->relations;
    s.reference_relations = r->reference_relations;
  }
  return s;
}

Representation load_rep(const std::string& spec) {
  if (spec.rfind("sl:", 0) == 0 || spec == "adjoint:sl2") {
    try {
      return builtin_by_name(spec).rep;
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  Fixture f = load_fixture(spec);
  if (auto* r = std::get_if<RepresentationFixture>(&f)) return r->rep;
  throw UsageError(spec + ": expected a representation fixture");
}

Json report_json(const CheckReport& r) {
  Json items = Json::array();
  for (const auto& i : r.items) items.push_back({{"subject", i.subject}, {"passed", i.passed}, {"detail", i.detail}});
  return {{"name", r.name},         {"passed", r.passed()},     {"failures", r.failure_count()},
          {"items", std::move(items)}, {"witnesses", r.witnesses}, {"notes", r.notes}};
}

void print_report(std::ostream& out, const CheckReport& r) {
  out << "[" << r.name << "] " << (r.passed() ? "PASS" : "FAIL") << " (" << r.items.size() - r.failure_count() << "/"
      << r.items.size() << " passed)\n";
  for (const auto& i : r.items) {
    if (i.passed) continue;
    out << "  FAIL " << i.subject << "\n";
    out << "    " << i.detail << "\n";
  }
  for (const auto& w : r.witnesses) out << "  counterexample: " << w << "\n";
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
}

std::string join(const std::vector<std::size_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + std::to_string(values[i]);
  return out;
}

void write_json(const std::string& path, const Json& doc) {
  if (path.empty()) return;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError(path + ": cannot write report");
  f << doc.dump(2) << "\n";
}

Json completion_json(const RewriteSystem& rs) {
  Json out = Json::array();
  for (const auto& s : rs.status())
    out.push_back({{"degree", s.degree},
                   {"overlaps", s.overlaps},
                   {"unresolved", s.unresolved},
                   {"rules_added", s.rules_added},
                   {"confluent", s.confluent}});
  return out;
}

const BraidedSpace& require_space(const Source& s, const std::string& command) {
  if (!s.space) throw UsageError(command + ": " + s.label + " carries no braiding");
  return *s.space;
}

// validate-r ---------------------------------------------------------------

struct ValidateArgs {
  std::string builtin, input, json_out;
  bool show_minimal_poly = false;
};

int cmd_validate_r(const ValidateArgs& a, std::ostream& out) {
  const Source s = load_source(a.builtin, a.input);
  const BraidedSpace& space = require_space(s, "validate-r");
  const SymMatrix& psi = space.braiding();
  bool invertible = true;
  try {
    (void)inverse(psi);
  } catch (const MathError&) {
    invertible = false;
  }
  const BraidCheck braid = check_braid(psi);
  const UniPoly mp = minimal_poly(psi);
  Json doc{{"command", "validate-r"},
           {"source", s.label},
           {"dim", space.dim()},
           {"operator", "braiding Ψ = R∘τ"},
           {"invertible", invertible},
           {"braid", {{"holds", braid.holds}, {"detail", braid.detail}}},
           {"minimal_polynomial", mp.to_string()},
           {"minimal_polynomial_factored", factored_string(mp)}};
  if (braid.witness) doc["braid"]["witness"] = *braid.witness;
  out << "source: " << s.label << "\n";
  out << "dimension: " << space.dim() << "\n";
  out << "braid equation: " << (braid.holds ? "holds" : "FAILS") << "\n";
  if (!braid.holds) out << "  " << braid.detail << "\n";
  out << "invertible: " << (invertible ? "yes" : "no") << "\n";
  out << "minimal polynomial: " << factored_string(mp) << "\n";
  if (a.show_minimal_poly) out << "  expanded: " << mp.to_string() << " (degree " << mp.degree() << ")\n";
  const bool ok = braid.holds && invertible;
  doc["passed"] = ok;
  write_json(a.json_out, doc);
  return ok ? kOk : kCheckFailed;
}

// chi ------------------------------------------------------------------------

struct ChiArgs {
  std::string builtin, input, json_out;
  std::string poly = "x - q";
  int max_degree = 3;
  bool show_relations = false;
  bool hilbert = false;
};

int cmd_chi(const ChiArgs& a, std::ostream& out) {
  const Source s = load_source(a.builtin, a.input);
  Json doc{{"command", "chi"}, {"source", s.label}};
  std::vector<std::string> warnings;
  RelationSet rels;
  std::size_t n = 0;
  if (s.relations) {
    rels = *s.relations;
    n = static_cast<std::size_t>(rels.alphabet());
    doc["poly"] = nullptr;
    out << "source: " << s.label << " (explicit relations)\n";
  } else {
    const BraidedSpace& space = require_space(s, "chi");
    n = space.dim();
    UniPoly f;
    try {
      f = parse_univariate(a.poly);
    } catch (const ParseError& e) {
      throw UsageError(std::string("--poly: ") + e.what());
    }
    if (!check_braid(space.braiding()).holds) warnings.push_back("operator does not satisfy the braid equation");
    const std::size_t r = rank(evaluate(f, space.braiding()));
    rels = relations_from_image(space, f);
    doc["poly"] = f.to_string();
    doc["rank_f"] = r;
    out << "source: " << s.label << "\n";
    out << "polynomial: f = " << f.to_string() << "\n";
    out << "rank f(Ψ): " << r << " of " << n * n << "\n";
    if (r == n * n) warnings.push_back("f(Ψ) is invertible: the relations span all of V⊗V");
  }
  const RewriteSystem rs = complete_rewrite(rels, a.max_degree);
  const HilbertSeries h = hilbert(rs, a.max_degree);
  if (h.dims.size() > 1 && h.dims[1] < n)
    warnings.push_back("trivial quotient: V does not inject (degree-1 dimension " + std::to_string(h.dims[1]) + " < " +
                       std::to_string(n) + ")");
  const auto rel_text = rels.to_strings();
  doc["relations"] = rel_text;
  if (!s.reference_relations.empty()) doc["reference_relations"] = s.reference_relations;
  doc["rules"] = rs.rule_strings();
  doc["completion"] = completion_json(rs);
  doc["hilbert"] = h.dims;
  doc["oracle_degrees"] = h.oracle_degrees;
  doc["warnings"] = warnings;

  out << "relations: " << rels.size() << "\n";
  if (a.show_relations) {
    for (const auto& t : rel_text) out << "  " << t << "\n";
    if (!s.reference_relations.empty()) {
      out << "reference relations (as supplied):\n";
      for (const auto& t : s.reference_relations) out << "  " << t << "\n";
    }
  }
  std::size_t added_late = 0;
  for (const auto& st : rs.status())
    if (st.degree > 2) added_late += st.rules_added;
  out << "completion through degree " << a.max_degree << ": " << rs.rules().size() << " rules"
      << (added_late ? ", " + std::to_string(added_late) + " added by overlap resolution" : std::string()) << "\n";
  if (a.hilbert) out << "hilbert: " << join(h.dims) << "\n";
  for (const auto& w : warnings) out << "warning: " << w << "\n";
  write_json(a.json_out, doc);
  return kOk;
}

// check ----------------------------------------------------------------------

struct CheckArgs {
  std::string rep, json_out;
  std::vector<std::string> subchecks;
  std::string poly = "x - q";
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  int max_degree = 3;
};

int cmd_check(const CheckArgs& a, std::ostream& out) {
  Source s;
  if (a.rep.rfind("sl:", 0) == 0 || a.rep == "adjoint:sl2") {
    s = load_source(a.rep, "");
  } else {
    s = load_source("", a.rep);
  }
  if (!s.rep) throw UsageError(a.rep + ": expected a representation");
  const Representation& rep = *s.rep;
  UniPoly f;
  try {
    f = parse_univariate(a.poly);
  } catch (const ParseError& e) {
    throw UsageError(std::string("--poly: ") + e.what());
  }
  Json checks = Json::array();
  bool ok = true;
  out << "representation: " << s.label << "\n";
  for (const auto& sub : a.subchecks) {
    CheckReport report;
    if (sub == "relations") {
      report = check_representation(rep);
    } else if (sub == "admissible") {
      report = check_preserves_R(rep, require_space(s, "admissible"));
    } else if (sub == "ideal") {
      const BraidedSpace& space = require_space(s, "ideal");
      report = check_ideal_preserved(rep, space, relations_from_image(space, f));
      report.notes.push_back("relations: f(Ψ)(V⊗V) with f = " + f.to_string());
    } else if (sub == "measuring") {
      const BraidedSpace& space = require_space(s, "measuring");
      const RewriteSystem rs = complete_rewrite(relations_from_image(space, f), a.max_degree);
      MeasuringOptions options;
      options.samples = a.samples;
      options.seed = a.seed;
      options.max_degree = a.max_degree;
      report = check_measuring(rep, rs, options);
      report.notes.push_back("quotient: f(Ψ)(V⊗V) with f = " + f.to_string());
    } else {
      throw UsageError("unknown subcheck '" + sub + "' (expected relations, admissible, ideal or measuring)");
    }
    ok = ok && report.passed();
    print_report(out, report);
    checks.push_back(report_json(report));
  }
  Json doc{{"command", "check"}, {"source", s.label}, {"checks", std::move(checks)}, {"passed", ok}};
  write_json(a.json_out, doc);
  return ok ? kOk : kCheckFailed;
}

// frt ------------------------------------------------------------------------

struct FrtArgs {
  std::string builtin, input, json_out, pair_with;
  std::string source = "braiding";
  int max_degree = 3;
  std::size_t samples = 200;
  std::uint64_t seed = 1;
};

int cmd_frt(const FrtArgs& a, std::ostream& out) {
  const Source s = load_source(a.builtin, a.input);
  const BraidedSpace& space = require_space(s, "frt");
  const FrtSource src = a.source == "rtt" ? FrtSource::Rtt : FrtSource::Braiding;
  const FRTPresentation p = frt_relations(space, src);
  const CheckReport coideal = frt_coideal_check(p);
  const FrtHilbert h = frt_hilbert(p, a.max_degree);
  std::vector<std::string> warnings = h.warnings;
  if (!s.verified_braiding && !check_braid(space.braiding()).holds)
    warnings.push_back("operator does not satisfy the braid equation: flatness is not expected");
  const auto rel_text = p.relations.to_strings(p.namer());
  bool ok = coideal.passed();

  out << "source: " << s.label << "\n";
  out << "alpha, beta built from: " << to_string(src) << "\n";
  out << "generators: " << p.alphabet() << " (t_{ij})\n";
  out << "relations: " << p.relations.size() << " (rank of α - β)\n";
  for (const auto& t : rel_text) out << "  " << t << "\n";
  if (p.relations.empty()) out << "empty relation set: A(R) is free on the t_{ij}\n";
  print_report(out, coideal);
  out << "hilbert: " << join(h.series.dims) << "\n";

  Json doc{{"command", "frt"},
           {"source", s.label},
           {"frt_source", to_string(src)},
           {"n", p.n},
           {"relation_count", p.relations.size()},
           {"relations", rel_text},
           {"coideal", report_json(coideal)},
           {"hilbert", h.series.dims},
           {"oracle_degrees", h.series.oracle_degrees}};
  if (!a.pair_with.empty()) {
    const Representation rep = load_rep(a.pair_with);
    DualityOptions options;
    options.max_degree = a.max_degree;
    options.samples = a.samples;
    options.seed = a.seed;
    options.source = src;
    const CheckReport duality = check_duality(rep, space, options);
    ok = ok && duality.passed();
    print_report(out, duality);
    doc["pair_with"] = a.pair_with;
    doc["duality"] = report_json(duality);
  }
  for (const auto& w : warnings) out << "warning: " << w << "\n";
  doc["warnings"] = warnings;
  doc["passed"] = ok;
  write_json(a.json_out, doc);
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with braidings, quantum symmetric algebras and FRT bialgebras", "qbraid"};
  app.require_subcommand(1);

  ValidateArgs va;
  auto* validate = app.add_subcommand("validate-r", "Check the braid equation and minimal polynomial of an operator");
  validate->add_option("--builtin", va.builtin, "Builtin space, e.g. sl:2");
  validate->add_option("--input", va.input, "Fixture file");
  validate->add_flag("--show-minimal-poly", va.show_minimal_poly, "Also print the expanded minimal polynomial");
  validate->add_option("--json-out", va.json_out, "Write the machine-readable report here");

  ChiArgs ca;
  auto* chi = app.add_subcommand("chi", "Relations and graded dimensions of TV / <f(Ψ)(V⊗V)>");
  chi->add_option("--builtin", ca.builtin, "Builtin space, e.g. sl:3");
  chi->add_option("--input", ca.input, "Fixture file (rmatrix, representation with braiding, or relations)");
  chi->add_option("--poly", ca.poly, "Polynomial in x")->capture_default_str();
  chi->add_option("--max-degree", ca.max_degree, "Completion and Hilbert degree bound")->capture_default_str()->check(CLI::Range(1, 12));
  chi->add_flag("--show-relations", ca.show_relations, "List the relations");
  chi->add_flag("--hilbert", ca.hilbert, "Print graded dimensions");
  chi->add_option("--json-out", ca.json_out, "Write the machine-readable report here");

  CheckArgs ka;
  auto* check = app.add_subcommand("check", "Verify a U_q representation: relations, admissible, ideal, measuring");
  check->add_option("--rep", ka.rep, "Builtin (sl:n) or representation fixture")->required();
  check->add_option("subchecks", ka.subchecks, "relations | admissible | ideal | measuring")->required();
  check->add_option("--poly", ka.poly, "Polynomial in x for ideal and measuring")->capture_default_str();
  check->add_option("--samples", ka.samples, "Sample count when pairs are not enumerated")->capture_default_str();
  check->add_option("--seed", ka.seed, "Sampling seed")->capture_default_str();
  check->add_option("--max-degree", ka.max_degree, "Degree bound")->capture_default_str()->check(CLI::Range(1, 8));
  check->add_option("--json-out", ka.json_out, "Write the machine-readable report here");

  FrtArgs fa;
  auto* frt = app.add_subcommand("frt", "FRT bialgebra relations, coideal check, dimensions and duality");
  frt->add_option("--builtin", fa.builtin, "Builtin space, e.g. sl:2");
  frt->add_option("--input", fa.input, "Fixture file");
  frt->add_option("--max-degree", fa.max_degree, "Degree bound")->capture_default_str()->check(CLI::Range(1, 6));
  frt->add_option("--pair-with", fa.pair_with, "Representation (sl:n or fixture) for the duality check");
  frt->add_option("--source", fa.source, "Operator feeding alpha and beta")
      ->capture_default_str()
      ->check(CLI::IsMember({"braiding", "rtt"}));
  frt->add_option("--samples", fa.samples, "Compatibility samples")->capture_default_str();
  frt->add_option("--seed", fa.seed, "Sampling seed")->capture_default_str();
  frt->add_option("--json-out", fa.json_out, "Write the machine-readable report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate_r(va, out);
    if (*chi) return cmd_chi(ca, out);
    if (*check) return cmd_check(ka, out);
    if (*frt) return cmd_frt(fa, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const FixtureError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DegreeBoundError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace qbraid
