// One PASS/FAIL line per acceptance criterion. All comparisons are exact
// (Q(q) arithmetic, integer dimensions); the only tolerance is the 60 s
// runtime bound on criterion 1.

#include "qbraid/builtins.hpp"
#include "qbraid/fixture.hpp"
#include "qbraid/frt.hpp"
#include "qbraid/linalg.hpp"
#include "qbraid/ncalg.hpp"
#include "qbraid/uqg.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

using namespace qbraid;

namespace {

constexpr double kCriterion1Seconds = 60.0;

const UniPoly kSym = UniPoly::linear_root(Scalar::q());
const UniPoly kWedge = UniPoly::linear_root(-Scalar::q().inverse());

std::string qbraid_binary;

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    passed = false;
    detail += (detail.empty() ? "" : "; ") + what;
  }
};

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string fixture(const char* name) { return std::string(QBRAID_FIXTURE_DIR) + "/" + name; }

Outcome braid_and_hecke() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (int n = 2; n <= 4; ++n) {
    const SymMatrix psi = builtin_sl(n).space.braiding();
    const auto nn = static_cast<std::size_t>(n * n);
    o.require(check_braid(psi).holds, "sl:" + std::to_string(n) + " braid equation");
    const SymMatrix hecke = (psi - Scalar::q() * SymMatrix::identity(nn)) * (psi + Scalar::q().inverse() * SymMatrix::identity(nn));
    o.require(hecke.is_zero(), "sl:" + std::to_string(n) + " (Ψ-q)(Ψ+q^-1) != 0");
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < kCriterion1Seconds, "runtime " + std::to_string(secs) + " s");
  if (o.passed) o.detail = "n = 2, 3, 4 in " + std::to_string(secs) + " s";
  return o;
}

Outcome relations_reproduced() {
  Outcome o;
  for (int n = 2; n <= 4; ++n) {
    std::vector<std::string> sym, wedge;
    for (int i = 1; i <= n; ++i) {
      wedge.push_back("x_" + std::to_string(i) + " x_" + std::to_string(i) + " = 0");
      for (int j = i + 1; j <= n; ++j) {
        const std::string lhs = "x_" + std::to_string(i) + " x_" + std::to_string(j);
        const std::string rhs = "x_" + std::to_string(j) + " x_" + std::to_string(i);
        sym.push_back(lhs + " = q " + rhs);
        wedge.push_back(lhs + " = -q^-1 " + rhs);
      }
    }
    const BraidedSpace s = builtin_sl(n).space;
    o.require(relations_from_image(s, kSym).to_strings() == sym, "sl:" + std::to_string(n) + " x - q");
    o.require(relations_from_image(s, kWedge).to_strings() == wedge, "sl:" + std::to_string(n) + " x + q^-1");
  }
  if (o.passed) o.detail = "x_i x_j = q x_j x_i and x_i x_i = 0, x_i x_j = -q^-1 x_j x_i for n = 2, 3, 4";
  return o;
}

Outcome hilbert_flatness() {
  Outcome o;
  for (std::size_t n = 2; n <= 4; ++n) {
    const int ni = static_cast<int>(n);
    const BraidedSpace s = builtin_sl(ni).space;
    for (const bool sym : {true, false}) {
      const RelationSet rels = relations_from_image(s, sym ? kSym : kWedge);
      const HilbertSeries h = hilbert(complete_rewrite(rels, 5), 5);
      std::size_t total = 0;
      for (std::size_t d = 0; d <= 5; ++d) {
        const std::size_t expected = sym ? binomial(n + d - 1, d) : binomial(n, d);
        o.require(h.dims[d] == expected, (sym ? "Sym" : "Λ") + std::string(" n=") + std::to_string(n) + " d=" +
                                             std::to_string(d) + ": " + std::to_string(h.dims[d]));
        if (d <= 4)
          o.require(quotient_dimension_oracle(rels.relations(), ni, static_cast<int>(d)) == h.dims[d],
                    "oracle disagrees at n=" + std::to_string(n) + " d=" + std::to_string(d));
        total += h.dims[d];
      }
      if (!sym) o.require(total == (std::size_t{1} << n), "Λ total for n=" + std::to_string(n));
    }
  }
  if (o.passed) o.detail = "Sym C(n+d-1,d), Λ C(n,d) with total 2^n, d <= 5, n <= 4; oracle agrees at d <= 4";
  return o;
}

Outcome sp4_fixture() {
  Outcome o;
  const Fixture f = load_fixture(fixture("sp4_sym.json"));
  const auto* rf = std::get_if<RelationsFixture>(&f);
  o.require(rf != nullptr, "sp4_sym.json is not a relations fixture");
  if (!rf) return o;
  const RewriteSystem rs = complete_rewrite(rf->relations, 4);
  o.require(rs.confluent_through(4), "not confluent through degree 4");
  const HilbertSeries h = hilbert(rs, 4);
  o.require(h.dims == std::vector<std::size_t>{1, 4, 10, 20, 35}, "dims " + join(h.dims));
  for (int d = 0; d <= 3; ++d)
    o.require(quotient_dimension_oracle(rf->relations.relations(), 4, d) == h.dims[static_cast<std::size_t>(d)],
              "oracle disagrees at d=" + std::to_string(d));
  if (o.passed) o.detail = "confluent, dims " + join(h.dims) + ", oracle agrees at d <= 3";
  return o;
}

Outcome verification_chain() {
  Outcome o;
  for (int n = 2; n <= 4; ++n) {
    const Builtin b = builtin_sl(n);
    const std::string tag = "sl:" + std::to_string(n);
    o.require(check_representation(b.rep).passed(), tag + " relations");
    o.require(check_preserves_R(b.rep, b.space).passed(), tag + " admissible (degrees 2 and 3)");
    for (const auto& f : {kSym, kWedge}) {
      const RelationSet rels = relations_from_image(b.space, f);
      o.require(check_ideal_preserved(b.rep, b.space, rels).passed(), tag + " ideal for f = " + f.to_string());
      MeasuringOptions opt;
      opt.max_degree = 4;
      opt.exhaustive_limit = std::numeric_limits<std::size_t>::max();
      const CheckReport m = check_measuring(b.rep, complete_rewrite(rels, 4), opt);
      o.require(m.passed() && m.witnesses.empty(), tag + " measuring for f = " + f.to_string());
      o.require(m.notes.front().rfind("exhaustive", 0) == 0, tag + " measuring was not exhaustive");
    }
  }
  if (o.passed) o.detail = "n = 2, 3, 4, both polynomials, measuring exhaustive to total degree 4";
  return o;
}

Outcome frt_counts() {
  Outcome o;
  const FRTPresentation p2 = frt_relations(builtin_sl(2).space);
  o.require(p2.relations.size() == 6, "sl:2 relation count " + std::to_string(p2.relations.size()));
  o.require(frt_coideal_check(p2).passed(), "sl:2 coideal");
  const FrtHilbert h2 = frt_hilbert(p2, 3);
  o.require(h2.series.dims == std::vector<std::size_t>{1, 4, 10, 20}, "sl:2 dims " + join(h2.series.dims));
  const FRTPresentation p3 = frt_relations(builtin_sl(3).space);
  const std::size_t rank3 = rank(p3.alpha - p3.beta);
  const std::size_t deg2 = frt_hilbert(p3, 2).series.dims[2];
  o.require(rank3 == 27, "sl:3 rank(α-β) = " + std::to_string(rank3) + ", expected 27");
  o.require(p3.relations.size() == 27, "sl:3 relation count " + std::to_string(p3.relations.size()) + ", expected 27");
  o.require(deg2 == 54, "sl:3 degree-2 dimension " + std::to_string(deg2) + ", expected 54");
  if (o.passed) o.detail = "sl:2 6 relations, coideal, 1,4,10,20; sl:3 27 relations, 54";
  return o;
}

Outcome duality() {
  Outcome o;
  for (int n = 2; n <= 3; ++n) {
    const Builtin b = builtin_sl(n);
    DualityOptions opt;
    opt.max_degree = 3;
    const CheckReport r = check_duality(b.rep, b.space, opt);
    o.require(r.passed(), "sl:" + std::to_string(n) + " duality (" + std::to_string(r.failure_count()) + " failing items)");
  }
  Representation mutated = builtin_sl(2).rep;
  mutated.mutable_matrix(mutated.presentation().letter({GenKind::E, 0}))(0, 0) = Scalar(1L);
  const CheckReport m = check_duality(mutated, builtin_sl(2).space);
  std::size_t failed = 0;
  for (const auto& i : m.items) failed += i.subject.rfind("annihilation: ", 0) == 0 && !i.passed;
  o.require(failed >= 1, "mutation left every annihilation check passing");
  if (o.passed) o.detail = "sl:2, sl:3 pass at degree 3; mutated E_1 fails " + std::to_string(failed) + " annihilation checks";
  return o;
}

Outcome classical_mode() {
  Outcome o;
  const RewriteSystem rs = complete_rewrite(relations_from_image(flip_space(2), UniPoly::linear_root(Scalar(1L))), 4);
  const CheckReport r = check_derivation_measuring(classical_sl2_actions(), rs, 4);
  o.require(r.passed(), std::to_string(r.failure_count()) + " failing items");
  o.require(hilbert(rs, 4).dims == std::vector<std::size_t>{1, 2, 3, 4, 5}, "quotient is not the polynomial ring");
  if (o.passed) o.detail = "e, f, h act by derivations on C[x_1, x_2] through degree 4";
  return o;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Outcome determinism() {
  Outcome o;
  if (qbraid_binary.empty()) {
    o.require(false, "path to the qbraid executable not given");
    return o;
  }
  std::vector<std::string> commands;
  for (int n = 2; n <= 4; ++n) {
    const std::string sl = "sl:" + std::to_string(n);
    commands.push_back("validate-r --builtin " + sl);
    commands.push_back("chi --builtin " + sl + " --poly 'x - q' --show-relations --hilbert --max-degree 5");
    commands.push_back("chi --builtin " + sl + " --poly 'x + q^-1' --show-relations --hilbert --max-degree 5");
    commands.push_back("check --rep " + sl + " relations admissible ideal measuring --poly 'x - q' --max-degree 4");
    commands.push_back("check --rep " + sl + " ideal measuring --poly 'x + q^-1' --max-degree 4");
  }
  commands.push_back("chi --input '" + fixture("sp4_sym.json") + "' --hilbert --max-degree 4");
  commands.push_back("frt --builtin sl:2 --max-degree 3 --pair-with sl:2");
  commands.push_back("frt --builtin sl:3 --max-degree 3 --pair-with sl:3");
  commands.push_back("frt --builtin sl:2 --pair-with '" + fixture("sl2_mutated.json") + "'");

  const auto dir = std::filesystem::temp_directory_path() / "qbraid_acceptance";
  std::filesystem::create_directories(dir);
  std::size_t k = 0;
  for (const auto& cmd : commands) {
    std::string reports[2];
    int codes[2] = {0, 0};
    for (int run = 0; run < 2; ++run) {
      const auto path = (dir / ("r" + std::to_string(k) + "_" + std::to_string(run) + ".json")).string();
      std::filesystem::remove(path);
      const std::string line = "'" + qbraid_binary + "' " + cmd + " --json-out '" + path + "' > /dev/null 2>&1";
      codes[run] = std::system(line.c_str());
      reports[run] = slurp(path);
    }
    o.require(!reports[0].empty(), "no report from: " + cmd);
    o.require(reports[0] == reports[1], "reports differ for: " + cmd);
    o.require(codes[0] == codes[1], "exit codes differ for: " + cmd);
    ++k;
  }
  if (o.passed) o.detail = std::to_string(commands.size()) + " commands, two runs each, byte-identical JSON";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) qbraid_binary = argv[1];
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"braid + Hecke", braid_and_hecke},
      {"relations reproduced exactly", relations_reproduced},
      {"Hilbert flatness", hilbert_flatness},
      {"sp_4 fixture", sp4_fixture},
      {"U_q(sl_n) verification chain", verification_chain},
      {"FRT counts", frt_counts},
      {"duality", duality},
      {"classical mode", classical_mode},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.passed;
    std::cout << "criterion " << i + 1 << " [PRIMARY] " << criteria[i].name << ": " << (o.passed ? "PASS" : "FAIL") << " ("
              << o.detail << ")" << std::endl;
  }
  std::cout << failures << " of " << criteria.size() << " criteria failed" << std::endl;
  return failures == 0 ? 0 : 1;
}
