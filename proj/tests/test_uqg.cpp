#include "catch_amalgamated.hpp"

#include "qbraid/builtins.hpp"
#include "qbraid/parse.hpp"
#include "qbraid/uqg.hpp"
#include "support.hpp"

#include <algorithm>

using namespace qbraid;
using namespace qbraid::testing;

namespace {

const UniPoly kSym = UniPoly::linear_root(Scalar::q());
const UniPoly kWedge = UniPoly::linear_root(-Scalar::q().inverse());

Scalar P(const char* s) { return scalar_parse(s); }

const CheckItem* find_item(const CheckReport& r, const std::string& subject) {
  for (const auto& i : r.items)
    if (i.subject == subject) return &i;
  return nullptr;
}

std::vector<std::string> relation_texts(const UqPresentation& p) {
  std::vector<std::string> out;
  for (const auto& r : p.relations()) out.push_back(r.text);
  return out;
}

bool contains(const std::vector<std::string>& v, const std::string& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

Representation trivial_rep(int dim) {
  const auto d = static_cast<std::size_t>(dim);
  return Representation(UqPresentation(CartanData::type_A(1)), {SymMatrix(d, d)}, {SymMatrix(d, d)}, {SymMatrix::identity(d)});
}

}  // namespace

TEST_CASE("Cartan data validation") {
  CHECK_NOTHROW(CartanData::type_A(3).validate());
  CartanData bad = CartanData::type_A(2);
  bad.a[0][1] = 1;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  CartanData asym = CartanData::type_A(2);
  asym.a[0][1] = 0;
  CHECK_THROWS_AS(asym.validate(), std::invalid_argument);
  // B_2 with d = (2, 1) is symmetrizable
  CartanData b2{2, {{2, -1}, {-2, 2}}, {2, 1}};
  CHECK_NOTHROW(b2.validate());
  b2.d = {1, 1};
  CHECK_THROWS_AS(b2.validate(), std::invalid_argument);
}

TEST_CASE("A_1 presentation") {
  const UqPresentation p(CartanData::type_A(1));
  CHECK(p.alphabet() == 4);
  CHECK(relation_texts(p) == std::vector<std::string>{"K1 Kinv1 = 1", "Kinv1 K1 = 1", "K1 E1 Kinv1 = q^2 E1",
                                                        "K1 F1 Kinv1 = q^-2 F1", "E1 F1 - F1 E1 = (K1 - Kinv1)/(q - q^-1)"});
  CHECK(p.find_letter("Kinv1") == 3);
  CHECK_FALSE(p.find_letter("E2").has_value());
}

TEST_CASE("A_2 Serre relation coefficients") {
  const UqPresentation p(CartanData::type_A(2));
  const Letter e1 = p.letter({GenKind::E, 0}), e2 = p.letter({GenKind::E, 1});
  const NCPoly* serre = nullptr;
  for (const auto& r : p.relations())
    if (r.poly.coefficient({e1, e1, e2}) != Scalar()) serre = &r.poly;
  REQUIRE(serre != nullptr);
  CHECK(serre->size() == 3);
  CHECK(serre->coefficient({e1, e1, e2}) == q_binomial(2, 0));
  CHECK(serre->coefficient({e1, e2, e1}) == -q_binomial(2, 1));
  CHECK(serre->coefficient({e1, e2, e1}) == P("-(q + q^-1)"));
  CHECK(serre->coefficient({e2, e1, e1}) == Scalar(1L));
  // 2 + 4 + 4 + 4 + 4 Serre (E and F, both orders)
  CHECK(p.relations().size() == 1 + 4 + 8 + 4 + 4);
}

TEST_CASE("Hopf tables") {
  for (int r = 1; r <= 3; ++r) {
    const UqPresentation p(CartanData::type_A(r));
    for (int i = 0; i < r; ++i) {
      const Letter f = p.letter({GenKind::F, i});
      const auto df = p.coproduct(f);
      REQUIRE(df.size() == 2);
      CHECK(df[0].left == Word{f});
      CHECK(df[0].right.empty());
      CHECK(df[1].left == Word{p.letter({GenKind::Kinv, i})});
      CHECK(df[1].right == Word{f});
      const Letter e = p.letter({GenKind::E, i});
      const auto de = p.coproduct(e);
      CHECK(de[0].left == Word{e});
      CHECK(de[0].right == Word{p.letter({GenKind::K, i})});
      CHECK(p.counit(e).is_zero());
      CHECK(p.counit(f).is_zero());
      CHECK(p.counit(p.letter({GenKind::K, i})).is_one());
      CHECK(p.antipode(e) == NCPoly(Word{e, p.letter({GenKind::Kinv, i})}, Scalar(-1L)));
    }
  }
}

TEST_CASE("builtin representations satisfy every relation") {
  for (int n = 2; n <= 4; ++n) {
    const CheckReport r = check_representation(builtin_sl(n).rep);
    CHECK(r.passed());
    CHECK(r.items.size() == builtin_sl(n).rep.presentation().relations().size());
    // 2(n-1) diagonal K matrices fit in an n-dimensional diagonal space only for n = 2
    CHECK(generator_independence(builtin_sl(n).rep).passed == (n == 2));
  }
  CHECK(check_representation(adjoint_sl2().rep).passed());
}

TEST_CASE("a one-entry perturbation of E breaks K E K^-1 = q^2 E") {
  Representation rep = builtin_sl(2).rep;
  rep.mutable_matrix(rep.presentation().letter({GenKind::E, 0}))(0, 0) = Scalar(1L);
  const CheckReport r = check_representation(rep);
  CHECK_FALSE(r.passed());
  const CheckItem* item = find_item(r, "K1 E1 Kinv1 = q^2 E1");
  REQUIRE(item != nullptr);
  CHECK_FALSE(item->passed);
  // K E K^-1 - q^2 E at (1,1) is (1 - q^2)
  CHECK(item->detail.find("residual") == 0);
  CHECK(item->detail.find("(1,1)") != std::string::npos);
  CHECK(item->detail.find('\n') == std::string::npos);
}

TEST_CASE("the trivial representation passes") {
  const Representation rep = trivial_rep(2);
  CHECK(check_representation(rep).passed());
  CHECK_FALSE(generator_independence(rep).passed);
  CHECK_THROWS_AS(Representation(UqPresentation(CartanData::type_A(1)), {SymMatrix(2, 2)}, {SymMatrix(2, 2)}, {SymMatrix(2, 2)}),
                  std::invalid_argument);
}

TEST_CASE("coproduct_action examples") {
  const Builtin b = builtin_sl(2);
  const UqPresentation& p = b.rep.presentation();
  const Letter e = p.letter({GenKind::E, 0}), k = p.letter({GenKind::K, 0});
  const SymMatrix& E = b.rep.matrix(e);
  const SymMatrix& K = b.rep.matrix(k);
  for (int d = 1; d <= 3; ++d) CHECK(coproduct_action(b.rep, k, d) == kron_power(K, d));
  CHECK(coproduct_action(b.rep, e, 2) == kron(E, K) + kron(SymMatrix::identity(2), E));
  CHECK(coproduct_action(b.rep, e, 0)(0, 0).is_zero());
  CHECK(coproduct_action(b.rep, k, 0)(0, 0).is_one());
  CHECK_THROWS_AS(coproduct_action(b.rep, 9, 2), std::out_of_range);
}

TEST_CASE("coproduct actions compose across tensor splits") {
  for (const Builtin& b : {builtin_sl(2), builtin_sl(3)}) {
    const GeneratorCoalgebra c = b.rep.coalgebra();
    for (std::size_t g = 0; g < c.size(); ++g)
      for (int j = 0; j <= 3; ++j)
        for (int k = 0; j + k <= 3; ++k) {
          if (j + k == 0) continue;
          SymMatrix split;
          for (const auto& t : c.element(g).coproduct) {
            const SymMatrix part = kron(c.act(t.left, j), c.act(t.right, k)) * t.coef;
            split = split.rows() == 0 ? part : split + part;
          }
          CHECK(split == c.act(g, j + k));
        }
  }
}

TEST_CASE("coalgebra laws and the antipode") {
  for (const Builtin& b : {builtin_sl(2), builtin_sl(3), adjoint_sl2()}) {
    CHECK(check_coassociativity(b.rep.coalgebra()).passed());
    CHECK(check_counit(b.rep.coalgebra()).passed());
    CHECK(check_antipode(b.rep).passed());
  }
  const GeneratorCoalgebra classical = classical_coalgebra(classical_sl2_actions());
  CHECK(check_coassociativity(classical).passed());
  CHECK(check_counit(classical).passed());
}

TEST_CASE("check_preserves_R: braiding passes, rtt fails, identity passes") {
  for (int n = 2; n <= 3; ++n) {
    const Builtin b = builtin_sl(n);
    const CheckReport ok = check_preserves_R(b.rep, b.space);
    CHECK(ok.passed());
    const CheckReport bad = check_preserves_R(b.rep, BraidedSpace::unchecked_from_braiding(b.space.rtt()));
    CHECK_FALSE(bad.passed());
    const CheckItem* e1 = find_item(bad, "E1 on V⊗V");
    REQUIRE(e1 != nullptr);
    CHECK_FALSE(e1->passed);
    CHECK(e1->detail.find("residual") == 0);
    const auto id = BraidedSpace::from_braiding(SymMatrix::identity(static_cast<std::size_t>(n * n)));
    CHECK(check_preserves_R(b.rep, id).passed());
  }
}

TEST_CASE("degree-2 admissibility implies the degree-3 extension") {
  for (const Builtin& b : {builtin_sl(2), builtin_sl(3), adjoint_sl2()}) {
    const CheckReport r = check_preserves_R(b.rep, b.space);
    bool deg2 = true, deg3 = true;
    std::size_t deg3_items = 0;
    for (const auto& i : r.items) {
      if (i.subject.find("V⊗V") != std::string::npos) {
        deg2 = deg2 && i.passed;
      } else {
        deg3 = deg3 && i.passed;
        ++deg3_items;
      }
    }
    CHECK(deg3_items == 2 * static_cast<std::size_t>(b.rep.presentation().alphabet()));
    CHECK(deg2);
    CHECK(deg3);
  }
}

TEST_CASE("act_on_quotient examples") {
  const Builtin b = builtin_sl(2);
  const RewriteSystem rs = complete_rewrite(relations_from_image(b.space, kSym), 3);
  const UqPresentation& p = b.rep.presentation();
  const Letter e = p.letter({GenKind::E, 0}), k = p.letter({GenKind::K, 0});
  CHECK(act_on_quotient(b.rep, rs, e, {0, 0}) == NCPoly(Word{1, 0}, q_integer(2)));
  CHECK(act_on_quotient(b.rep, rs, e, {}).is_zero());
  CHECK(act_on_quotient(b.rep, rs, k, {}).coefficient({}).is_one());
  Gen g(41);
  for (int t = 0; t < 20; ++t) {
    const Word w = g.word(2, g.integer(1, 3));
    const NCPoly image = act_on_quotient(b.rep, rs, k, w);
    const NCPoly nf = normal_form(rs, NCPoly(w, Scalar(1L)));
    REQUIRE(nf.size() == 1);
    REQUIRE(image.size() == 1);
    CHECK(image.leading_word() == nf.leading_word());
  }
  CHECK_THROWS_AS(act_on_quotient(b.rep, rs, e, {0, 0, 0, 0}), DegreeBoundError);
}

TEST_CASE("check_ideal_preserved") {
  for (int n = 2; n <= 3; ++n) {
    const Builtin b = builtin_sl(n);
    CHECK(check_ideal_preserved(b.rep, b.space, relations_from_image(b.space, kSym)).passed());
    CHECK(check_ideal_preserved(b.rep, b.space, relations_from_image(b.space, kWedge)).passed());
    // all of V⊗V
    CHECK(check_ideal_preserved(b.rep, b.space, relations_from_image(b.space, UniPoly({Scalar(1L)}))).passed());
  }
  // a relation set that no generator respects: x_1 x_2 alone
  const Builtin b = builtin_sl(2);
  const RelationSet lone(2, {NCPoly(Word{0, 1}, Scalar(1L))});
  CHECK_FALSE(check_ideal_preserved(b.rep, b.space, lone).passed());
}

TEST_CASE("check_measuring: builtins have no counterexamples") {
  for (int n = 2; n <= 3; ++n)
    for (const auto& f : {kSym, kWedge}) {
      const Builtin b = builtin_sl(n);
      const RewriteSystem rs = complete_rewrite(relations_from_image(b.space, f), 4);
      MeasuringOptions opt;
      opt.max_degree = 4;
      const CheckReport r = check_measuring(b.rep, rs, opt);
      CHECK(r.passed());
      CHECK(r.witnesses.empty());
      CHECK(r.notes.front().rfind("exhaustive", 0) == 0);
    }
}

TEST_CASE("check_measuring: sampling is seeded") {
  const Builtin b = builtin_sl(3);
  const RewriteSystem rs = complete_rewrite(relations_from_image(b.space, kSym), 4);
  MeasuringOptions opt;
  opt.max_degree = 4;
  opt.exhaustive_limit = 10;
  opt.samples = 30;
  const CheckReport a = check_measuring(b.rep, rs, opt);
  const CheckReport c = check_measuring(b.rep, rs, opt);
  CHECK(a.passed());
  CHECK(a.notes == c.notes);
  CHECK(a.notes.front().rfind("sampled 30", 0) == 0);
}

TEST_CASE("check_measuring: group-like elements are multiplicative") {
  const Builtin b = builtin_sl(2);
  const RewriteSystem rs = complete_rewrite(relations_from_image(b.space, kSym), 3);
  const GeneratorCoalgebra c = b.rep.coalgebra();
  const std::size_t k = *c.find("K1");
  for (const Word& a : normal_words(rs, 1))
    for (const Word& w : normal_words(rs, 2)) {
      const NCPoly lhs = normal_form(rs, c.act_on_word(k, concat(a, w)));
      const NCPoly rhs = normal_form(rs, c.act_on_word(k, a) * c.act_on_word(k, w));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("check_measuring: swapping the legs of Δ(E) is caught at degree 2") {
  const Builtin b = builtin_sl(2);
  const RewriteSystem rs = complete_rewrite(relations_from_image(b.space, kSym), 3);
  const GeneratorCoalgebra c = b.rep.coalgebra();
  const GeneratorCoalgebra swapped = c.with_swapped_coproduct(*c.find("E1"));
  MeasuringOptions opt;
  opt.max_degree = 2;
  const CheckReport r = check_measuring(swapped, rs, opt);
  CHECK_FALSE(r.passed());
  REQUIRE_FALSE(r.witnesses.empty());
  CHECK(r.witnesses.front().rfind("E1: ", 0) == 0);
  CHECK(find_item(r, "E1")->passed == false);
  CHECK(find_item(r, "F1")->passed);
  opt.max_degree = 1;
  CHECK(check_measuring(swapped, rs, opt).passed());
}

TEST_CASE("classical sl_2 acts by derivations on the polynomial quotient") {
  const BraidedSpace flip = flip_space(2);
  const RewriteSystem rs = complete_rewrite(relations_from_image(flip, UniPoly::linear_root(Scalar(1L))), 4);
  CHECK(hilbert(rs, 4).dims == std::vector<std::size_t>{1, 2, 3, 4, 5});
  const CheckReport r = check_derivation_measuring(classical_sl2_actions(), rs, 4);
  CHECK(r.passed());
  CHECK(r.witnesses.empty());
  CHECK(check_derivation_measuring({{"zero", SymMatrix(2, 2)}}, rs, 4).passed());
  CHECK(check_derivation_measuring({{"euler", SymMatrix::identity(2)}}, rs, 4).passed());

  // hand expansion: e = e12 sends x_2 to x_1, so e(x_2 x_2) = x_1 x_2 + x_2 x_1 = 2 x_2 x_1 in normal form
  const GeneratorCoalgebra c = classical_coalgebra(classical_sl2_actions());
  CHECK(normal_form(rs, c.act_on_word(*c.find("e"), {1, 1})) == NCPoly(Word{1, 0}, Scalar(2L)));
}

TEST_CASE("a non-derivation-compatible quotient is reported") {
  // x_1 x_2 = 0 is not stable under e = e12, which sends x_1 x_2 to x_1 x_1
  const RewriteSystem rs = complete_rewrite(RelationSet(2, {NCPoly(Word{0, 1}, Scalar(1L))}), 3);
  const CheckReport r = check_derivation_measuring(classical_sl2_actions(), rs, 3);
  CHECK_FALSE(r.passed());
}
