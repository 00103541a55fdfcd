#include "catch_amalgamated.hpp"

#include "qbraid/builtins.hpp"
#include "qbraid/frt.hpp"
#include "qbraid/parse.hpp"
#include "support.hpp"

#include <algorithm>

using namespace qbraid;
using namespace qbraid::testing;

namespace {

// Letter t_ij, 0-based.
Letter T(int i, int j, int n) { return i * n + j; }

// r_{ijkl} = Σ M[(i,k),(a,b)] t_aj t_bl - Σ M[(c,d),(j,l)] t_ic t_kd, specialized at q0,
// one row per (i,j,k,l), columns indexed by the word t_xy t_zw.
RatMatrix rtt_family(const SymMatrix& m, int n) {
  const RatMatrix ms = specialize(m, generic_q());
  const auto nn = static_cast<std::size_t>(n * n);
  const int a2 = n * n;
  RatMatrix rows;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          std::vector<Rational> row(nn * nn);
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
              row[word_index({T(a, j, n), T(b, l, n)}, a2)] += ms[static_cast<std::size_t>(i * n + k)][static_cast<std::size_t>(a * n + b)];
              row[word_index({T(i, a, n), T(k, b, n)}, a2)] -= ms[static_cast<std::size_t>(a * n + b)][static_cast<std::size_t>(j * n + l)];
            }
          rows.push_back(std::move(row));
        }
  return rows;
}

std::vector<Rational> specialize_vector(const NCPoly& p, int alphabet, std::size_t size) {
  std::vector<Rational> row(size);
  for (const auto& [w, c] : p.terms()) row[word_index(w, alphabet)] += scalar_eval(c, generic_q());
  return row;
}

// Δ(w) for a degree-2 t-word as a vector of (T⊗T) components, flattened left-major.
std::vector<Rational> coproduct_vector(const NCPoly& r, int n) {
  const int a2 = n * n;
  const std::size_t w2 = static_cast<std::size_t>(a2 * a2);
  std::vector<Rational> out(w2 * w2);
  for (const auto& [w, c] : r.terms()) {
    const int i = w[0] / n, j = w[0] % n, k = w[1] / n, l = w[1] % n;
    const Rational cv = scalar_eval(c, generic_q());
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const std::size_t left = word_index({T(i, a, n), T(k, b, n)}, a2);
        const std::size_t right = word_index({T(a, j, n), T(b, l, n)}, a2);
        out[left * w2 + right] += cv;
      }
  }
  return out;
}

bool in_coideal_span(const std::vector<NCPoly>& rels, const NCPoly& candidate, int n) {
  const int a2 = n * n;
  const std::size_t w2 = static_cast<std::size_t>(a2 * a2);
  RatMatrix span;
  for (const auto& r : rels) {
    const auto rv = specialize_vector(r, a2, w2);
    for (std::size_t e = 0; e < w2; ++e) {
      std::vector<Rational> left(w2 * w2), right(w2 * w2);
      for (std::size_t k = 0; k < w2; ++k) {
        left[k * w2 + e] = rv[k];
        right[e * w2 + k] = rv[k];
      }
      span.push_back(std::move(left));
      span.push_back(std::move(right));
    }
  }
  const std::size_t base = rat_rank(span);
  span.push_back(coproduct_vector(candidate, n));
  return rat_rank(span) == base;
}

FRTPresentation with_relation_replaced(const FRTPresentation& p, std::size_t index, const NCPoly& replacement) {
  std::vector<NCPoly> rels = p.relations.relations();
  rels[index] = replacement;
  FRTPresentation q = p;
  q.relations = RelationSet(p.alphabet(), rels);
  return q;
}

Representation mutated_sl2() {
  Representation rep = builtin_sl(2).rep;
  rep.mutable_matrix(rep.presentation().letter({GenKind::E, 0}))(0, 0) = Scalar(1L);
  return rep;
}

}  // namespace

TEST_CASE("n = 1: no relations, one commuting variable") {
  for (const char* r : {"q", "3", "q^2 + 1"}) {
    SymMatrix m(1, 1);
    m(0, 0) = scalar_parse(r);
    const FRTPresentation p = frt_relations(m, FrtSource::Braiding);
    CHECK(p.alpha == p.beta);
    CHECK(p.relations.empty());
    CHECK(frt_coideal_check(p).passed());
    CHECK(frt_hilbert(p, 4).series.dims == std::vector<std::size_t>{1, 1, 1, 1, 1});
  }
}

TEST_CASE("sl_2: six relations matching the RTT family") {
  const Builtin b = builtin_sl(2);
  const FRTPresentation p = frt_relations(b.space);
  CHECK(p.relations.size() == 6);
  RatMatrix family = rtt_family(b.space.braiding(), 2);
  const std::size_t rank = rat_rank(family);
  CHECK(rank == 6);
  for (const auto& r : p.relations.relations()) {
    RatMatrix with = family;
    with.push_back(specialize_vector(r, 4, 16));
    CHECK(rat_rank(with) == rank);
  }
}

TEST_CASE("sl_2: printed relations and the t_11 t_12 orientation") {
  const FRTPresentation p = frt_relations(builtin_sl(2).space);
  const auto texts = p.relations.to_strings(p.namer());
  CHECK(std::find(texts.begin(), texts.end(), "t_{11} t_{12} = q t_{12} t_{11}") != texts.end());
  CHECK(std::find(texts.begin(), texts.end(), "t_{11} t_{21} = q t_{21} t_{11}") != texts.end());
  const auto t11 = t_resolver(2)("t_{11}");
  REQUIRE(t11.has_value());
  CHECK(*t11 == 0);
  CHECK(t_namer(12)(T(0, 11, 12)) == "t_{1,12}");
}

TEST_CASE("sl_3: 36 relations by two routes") {
  const Builtin b = builtin_sl(3);
  const FRTPresentation p = frt_relations(b.space);
  CHECK(p.relations.size() == 36);
  CHECK(rat_rank(rtt_family(b.space.braiding(), 3)) == 36);
  CHECK(rank(p.alpha - p.beta) == 36);
}

TEST_CASE("coideal: sl_2 passes, agreeing with a brute-force 256-dimensional check") {
  const FRTPresentation p = frt_relations(builtin_sl(2).space);
  const CheckReport r = frt_coideal_check(p);
  CHECK(r.passed());
  CHECK(r.items.size() == 6);
  for (const auto& rel : p.relations.relations()) CHECK(in_coideal_span(p.relations.relations(), rel, 2));
}

TEST_CASE("coideal: a random replacement relation fails") {
  const FRTPresentation p = frt_relations(builtin_sl(2).space);
  Gen g(51);
  for (int t = 0; t < 3; ++t) {
    NCPoly r;
    for (int k = 0; k < 5; ++k) r.add_term(g.word(4, 2), g.nonzero_scalar());
    const auto idx = static_cast<std::size_t>(g.integer(0, 5));
    const FRTPresentation mutated = with_relation_replaced(p, idx, r);
    const bool oracle = in_coideal_span(mutated.relations.relations(), r, 2);
    CHECK_FALSE(oracle);
    CHECK_FALSE(frt_coideal_check(mutated).passed());
  }
}

TEST_CASE("frt_hilbert: sl_2 is flat, confirmed by the oracle") {
  const FRTPresentation p = frt_relations(builtin_sl(2).space);
  const FrtHilbert h = frt_hilbert(p, 3);
  CHECK(h.series.dims == std::vector<std::size_t>{1, 4, 10, 20});
  CHECK(h.confluent);
  CHECK(quotient_dimension_oracle(p.relations.relations(), 4, 3) == 20);
  const FrtHilbert h3 = frt_hilbert(frt_relations(builtin_sl(3).space), 2);
  CHECK(h3.series.dims == std::vector<std::size_t>{1, 9, 45});
}

TEST_CASE("frt_hilbert on a non-braiding operator still reports dimensions") {
  Gen g(52);
  const SymMatrix m = g.matrix(4, 4);
  const FRTPresentation p = frt_relations(m, FrtSource::Braiding);
  const FrtHilbert h = frt_hilbert(p, 2);
  REQUIRE(h.series.dims.size() == 3);
  CHECK(h.series.dims[2] == 16 - p.relations.size());
}

TEST_CASE("rank of alpha - beta is invariant under rescaling") {
  const SymMatrix psi = builtin_sl(2).space.braiding();
  const FRTPresentation base = frt_relations(psi, FrtSource::Braiding);
  Gen g(53);
  for (int t = 0; t < 3; ++t) {
    const FRTPresentation scaled = frt_relations(psi * g.nonzero_scalar(), FrtSource::Braiding);
    CHECK(scaled.relations.size() == base.relations.size());
    CHECK(scaled.relations.to_strings() == base.relations.to_strings());
  }
}

TEST_CASE("t-coproduct counit laws and counit on relations") {
  const int n = 3;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Word t{T(i, j, n)};
      NCPoly left_counit, right_counit;
      for (const auto& [l, r] : t_coproduct(t, n)) {
        left_counit.add_term(r, t_counit(l, n));
        right_counit.add_term(l, t_counit(r, n));
      }
      CHECK(left_counit == NCPoly(t, Scalar(1L)));
      CHECK(right_counit == NCPoly(t, Scalar(1L)));
      CHECK(t_counit(t, n) == Scalar(i == j ? 1L : 0L));
    }
  CHECK(t_coproduct({T(0, 1, n), T(2, 2, n)}, n).size() == 9);
  for (int dim = 2; dim <= 3; ++dim) {
    const FRTPresentation p = frt_relations(builtin_sl(dim).space);
    for (const auto& r : p.relations.relations()) {
      Scalar e;
      for (const auto& [w, c] : r.terms()) e += c * t_counit(w, dim);
      CHECK(e.is_zero());
    }
  }
}

TEST_CASE("pairing examples") {
  const Builtin b = builtin_sl(2);
  const UqPresentation& pres = b.rep.presentation();
  const Letter k = pres.letter({GenKind::K, 0}), e = pres.letter({GenKind::E, 0});
  const Scalar q = Scalar::q();
  CHECK(pairing(b.rep, {k}, {T(0, 0, 2)}) == q.inverse());
  CHECK(pairing(b.rep, {k}, {T(1, 1, 2)}) == q);
  CHECK(pairing(b.rep, {k}, {T(0, 1, 2)}).is_zero());
  CHECK(pairing(b.rep, {e}, {T(1, 0, 2)}).is_one());
  CHECK(pairing(b.rep, {e}, {T(0, 1, 2)}).is_zero());
  CHECK(pairing(b.rep, {e}, {T(0, 0, 2)}).is_zero());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(pairing(b.rep, {}, {T(i, j, 2)}) == Scalar(i == j ? 1L : 0L));
}

TEST_CASE("pairing: K is group-like, ⟨K, ab⟩ = ⟨K, a⟩⟨K, b⟩") {
  const Builtin b = builtin_sl(2);
  PairingTable table(b.rep);
  const Letter k = b.rep.presentation().letter({GenKind::K, 0});
  for (Letter a = 0; a < 4; ++a)
    for (Letter c = 0; c < 4; ++c)
      for (Letter d = 0; d < 4; ++d)
        CHECK(table.pair({k}, Word{a, c, d}) == table.pair({k}, Word{a}) * table.pair({k}, Word{c, d}));
}

TEST_CASE("check_duality passes for sl_2 and sl_3") {
  for (int n = 2; n <= 3; ++n) {
    const Builtin b = builtin_sl(n);
    const CheckReport r = check_duality(b.rep, b.space);
    CHECK(r.passed());
    CHECK(r.witnesses.empty());
    CHECK(std::find(r.notes.begin(), r.notes.end(), "orientation: plain") != r.notes.end());
    std::size_t annihilation = 0;
    for (const auto& i : r.items) annihilation += i.subject.rfind("annihilation: ", 0) == 0;
    CHECK(annihilation == frt_relations(b.space).relations.size());
  }
}

TEST_CASE("duality: a perturbed E breaks annihilation") {
  const CheckReport r = check_duality(mutated_sl2(), builtin_sl(2).space);
  CHECK_FALSE(r.passed());
  bool annihilation_failed = false;
  for (const auto& i : r.items)
    if (i.subject.rfind("annihilation: ", 0) == 0 && !i.passed) annihilation_failed = true;
  CHECK(annihilation_failed);
  CHECK_FALSE(r.witnesses.empty());
}

TEST_CASE("annihilation holds exactly when the action preserves the braiding") {
  auto annihilation_ok = [](const CheckReport& r) {
    for (const auto& i : r.items)
      if (i.subject.rfind("annihilation: ", 0) == 0 && !i.passed) return false;
    return true;
  };
  const BraidedSpace s2 = builtin_sl(2).space;
  for (const Builtin& b : {builtin_sl(2), builtin_sl(3)})
    CHECK(annihilation_ok(check_duality(b.rep, b.space)) == check_preserves_R(b.rep, b.space).passed());
  const Representation bad = mutated_sl2();
  CHECK_FALSE(check_preserves_R(bad, s2).passed());
  CHECK_FALSE(annihilation_ok(check_duality(bad, s2)));
  CHECK(annihilation_ok(check_duality(adjoint_sl2().rep, adjoint_sl2().space)));
  CHECK(check_preserves_R(adjoint_sl2().rep, adjoint_sl2().space).passed());
}

TEST_CASE("relations built from the rtt matrix are not annihilated") {
  const Builtin b = builtin_sl(2);
  DualityOptions opt;
  opt.source = FrtSource::Rtt;
  const CheckReport r = check_duality(b.rep, b.space, opt);
  CHECK_FALSE(r.passed());
  CHECK(frt_relations(b.space, FrtSource::Rtt).relations.size() == 10);
}
