#include "qbraid/frt.hpp"

#include <random>

namespace qbraid {

std::string to_string(FrtSource s) { return s == FrtSource::Braiding ? "braiding" : "rtt"; }

LetterNamer t_namer(int n) {
  return [n](Letter l) {
    const int i = l / n + 1;
    const int j = l % n + 1;
    if (n > 9) return "t_{" + std::to_string(i) + "," + std::to_string(j) + "}";
    return "t_{" + std::to_string(i) + std::to_string(j) + "}";
  };
}

LetterNamer FRTPresentation::namer() const { return t_namer(n); }

FRTPresentation frt_relations(const SymMatrix& m, FrtSource source) {
  const std::size_t n = tensor_square_root(m);
  const std::size_t n4 = n * n * n * n;
  SymMatrix tau(n4, n4);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) tau(((i * n + k) * n + j) * n + l, ((i * n + j) * n + k) * n + l) = Scalar(1L);
  const SymMatrix id = SymMatrix::identity(n * n);
  FRTPresentation p;
  p.n = static_cast<int>(n);
  p.source = source;
  p.alpha = tau * kron(m.transpose(), id) * tau;
  p.beta = tau * kron(id, m) * tau;
  std::vector<NCPoly> rels;
  for (const auto& v : image_subspace(p.alpha - p.beta)) rels.push_back(vector_to_poly(v, 2, p.alphabet()));
  p.relations = RelationSet(p.alphabet(), rels);
  return p;
}

FRTPresentation frt_relations(const BraidedSpace& space, FrtSource source) {
  return frt_relations(source == FrtSource::Braiding ? space.braiding() : space.rtt(), source);
}

std::vector<std::pair<Word, Word>> t_coproduct(const Word& w, int n) {
  std::vector<std::pair<Word, Word>> out{{Word{}, Word{}}};
  for (Letter t : w) {
    const int i = t / n;
    const int j = t % n;
    std::vector<std::pair<Word, Word>> next;
    next.reserve(out.size() * static_cast<std::size_t>(n));
    for (const auto& [left, right] : out)
      for (int k = 0; k < n; ++k) {
        Word l2 = left;
        Word r2 = right;
        l2.push_back(i * n + k);
        r2.push_back(k * n + j);
        next.emplace_back(std::move(l2), std::move(r2));
      }
    out = std::move(next);
  }
  return out;
}

Scalar t_counit(const Word& w, int n) {
  for (Letter t : w)
    if (t / n != t % n) return Scalar();
  return Scalar(1L);
}

CheckReport frt_coideal_check(const FRTPresentation& p) {
  CheckReport report{"coideal", {}, {}, {}};
  const int a = p.alphabet();
  Echelon<std::size_t> span;
  for (const auto& r : p.relations.relations()) span.insert(poly_to_vector(r, a));
  const auto texts = p.relations.to_strings(p.namer());
  for (std::size_t ri = 0; ri < p.relations.size(); ++ri) {
    const NCPoly& r = p.relations.relations()[ri];
    std::map<std::size_t, SparseVector> rows;
    Scalar counit;
    for (const auto& [w, c] : r.terms()) {
      counit += c * t_counit(w, p.n);
      for (const auto& [left, right] : t_coproduct(w, p.n))
        Echelon<std::size_t>::add_to(rows[word_index(left, a)], word_index(right, a), c);
    }
    std::map<std::size_t, SparseVector> cols;
    for (auto& [left, row] : rows)
      for (const auto& [right, c] : span.reduce(row)) cols[right].emplace(left, c);
    std::size_t outside = 0;
    for (auto& [right, col] : cols)
      if (!span.reduce(col).empty()) ++outside;
    const bool ok = outside == 0 && counit.is_zero();
    std::string detail = "ok";
    if (outside != 0) detail = "Δ(r) has " + std::to_string(outside) + " components outside J⊗W + W⊗J";
    if (!counit.is_zero()) detail = (outside ? detail + "; " : std::string()) + "ε(r) = " + counit.to_string();
    report.items.push_back({texts[ri], ok, detail});
  }
  if (p.relations.empty()) report.notes.push_back("empty relation set: coideal condition is vacuous");
  return report;
}

FrtHilbert frt_hilbert(const FRTPresentation& p, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("degree bound must be non-negative");
  FrtHilbert out;
  const RewriteSystem rs = complete_rewrite(p.relations, std::max(max_degree, 1));
  out.series = hilbert(rs, max_degree);
  out.confluent = rs.confluent_through(max_degree);
  if (!out.series.oracle_degrees.empty()) out.warnings.push_back("some degrees were answered by the linear-algebra oracle");
  return out;
}

PairingTable::PairingTable(const Representation& rep) : pres_(rep.presentation()), coalgebra_(rep.coalgebra()) {}

const SymMatrix& PairingTable::action(const Word& u, int k) {
  auto key = std::make_pair(u, k);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  SymMatrix m;
  if (u.empty()) {
    std::size_t size = 1;
    for (int i = 0; i < k; ++i) size *= dim();
    m = SymMatrix::identity(size);
  } else if (u.size() == 1) {
    if (u[0] < 0 || u[0] >= pres_.alphabet()) throw std::out_of_range("unknown generator in pairing");
    m = coalgebra_.act(static_cast<std::size_t>(u[0]) + 1, k);
  } else {
    const Word prefix(u.begin(), u.end() - 1);
    const Word last{u.back()};
    m = action(prefix, k) * action(last, k);
  }
  return memo_.emplace(std::move(key), std::move(m)).first->second;
}

Scalar PairingTable::pair(const Word& u, const Word& t) {
  const int k = static_cast<int>(t.size());
  const auto n = static_cast<int>(dim());
  std::size_t row = 0;
  std::size_t col = 0;
  for (Letter l : t) {
    if (l < 0 || l >= n * n) throw std::out_of_range("unknown t generator in pairing");
    row = row * dim() + static_cast<std::size_t>(l / n);
    col = col * dim() + static_cast<std::size_t>(l % n);
  }
  return action(u, k)(row, col);
}

Scalar PairingTable::pair(const Word& u, const NCPoly& t) {
  Scalar s;
  for (const auto& [w, c] : t.terms()) s += c * pair(u, w);
  return s;
}

Scalar pairing(const Representation& rep, const Word& u, const Word& t) {
  PairingTable table(rep);
  return table.pair(u, t);
}

namespace {

std::vector<Word> all_words(int alphabet, int max_len) {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (Letter l = 0; l < alphabet; ++l) {
        Word w = out[i];
        w.push_back(l);
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

struct CoproductSummand {
  Scalar coef;
  Word left;
  Word right;
};

std::vector<CoproductSummand> word_coproduct(const UqPresentation& pres, const Word& u) {
  std::vector<CoproductSummand> out{{Scalar(1L), {}, {}}};
  for (Letter l : u) {
    std::vector<CoproductSummand> next;
    for (const auto& s : out)
      for (const auto& t : pres.coproduct(l)) next.push_back({s.coef * t.coef, concat(s.left, t.left), concat(s.right, t.right)});
    out = std::move(next);
  }
  return out;
}

}  // namespace

CheckReport check_duality(const Representation& rep, const BraidedSpace& space, const DualityOptions& options) {
  if (rep.dim() != space.dim()) throw DimensionError("representation and braided space have different dimensions");
  if (options.max_degree < 1) throw std::invalid_argument("duality degree bound must be at least 1");
  CheckReport report{"duality", {}, {}, {}};
  const FRTPresentation p = frt_relations(space, options.source);
  const UqPresentation& pres = rep.presentation();
  const LetterNamer u_name = pres.namer();
  const LetterNamer t_name = p.namer();
  PairingTable table(rep);
  const std::size_t witness_cap = 20;
  std::size_t total_failures = 0;

  const std::vector<Word> us = all_words(pres.alphabet(), options.max_degree);
  const auto texts = p.relations.to_strings(t_name);
  for (std::size_t ri = 0; ri < p.relations.size(); ++ri) {
    std::size_t failures = 0;
    for (const Word& u : us) {
      const Scalar v = table.pair(u, p.relations.relations()[ri]);
      if (v.is_zero()) continue;
      ++failures;
      if (report.witnesses.size() < witness_cap)
        report.witnesses.push_back("⟨" + format_word(u, u_name) + ", " + texts[ri] + "⟩ = " + v.to_string());
    }
    total_failures += failures;
    report.items.push_back({"annihilation: " + texts[ri], failures == 0,
                            std::to_string(us.size()) + " words, " + std::to_string(failures) + " nonzero pairings"});
  }

  std::mt19937_64 rng(options.seed);
  const int n2 = p.alphabet();
  const int ul = pres.alphabet();
  auto below = [&](int bound) { return static_cast<int>(rng() % static_cast<std::uint64_t>(bound)); };
  auto random_word = [&](int alphabet, int len) {
    Word w;
    for (int i = 0; i < len; ++i) w.push_back(below(alphabet));
    return w;
  };
  const int d = options.max_degree;

  std::size_t product_fail = 0;
  std::size_t plain_fail = 0;
  std::size_t op_fail = 0;
  std::size_t counit_fail = 0;
  for (std::size_t s = 0; s < options.samples; ++s) {
    {
      const Word u = random_word(ul, below(d + 1));
      const int ka = d >= 2 ? 1 + below(d - 1) : 1;
      const int kb = d >= 2 ? 1 + below(d - ka) : 0;
      const Word a = random_word(n2, ka);
      const Word b = random_word(n2, kb);
      const Scalar lhs = table.pair(u, concat(a, b));
      Scalar rhs;
      for (const auto& term : word_coproduct(pres, u)) rhs += term.coef * table.pair(term.left, a) * table.pair(term.right, b);
      if (lhs != rhs) {
        ++product_fail;
        if (report.witnesses.size() < witness_cap)
          report.witnesses.push_back("⟨u, ab⟩ mismatch: u = " + format_word(u, u_name) + ", a = " + format_word(a, t_name) +
                                     ", b = " + format_word(b, t_name));
      }
    }
    {
      const int lu = below(d + 1);
      const Word u = random_word(ul, lu);
      const Word v = random_word(ul, below(d - lu + 1));
      const Word a = random_word(n2, 1 + below(d));
      Scalar rhs;
      for (const auto& [a1, a2] : t_coproduct(a, p.n)) rhs += table.pair(u, a1) * table.pair(v, a2);
      if (table.pair(concat(u, v), a) != rhs) {
        ++plain_fail;
        if (report.witnesses.size() < witness_cap)
          report.witnesses.push_back("⟨uv, a⟩ mismatch: u = " + format_word(u, u_name) + ", v = " + format_word(v, u_name) +
                                     ", a = " + format_word(a, t_name));
      }
      if (table.pair(concat(v, u), a) != rhs) ++op_fail;
      if (table.pair(Word{}, a) != t_counit(a, p.n)) ++counit_fail;
      Scalar eps(1L);
      for (Letter l : u) eps *= pres.counit(l);
      if (table.pair(u, Word{}) != eps) ++counit_fail;
    }
  }
  const std::string samples = std::to_string(options.samples) + " samples";
  report.items.push_back({"product: ⟨u, ab⟩ = Σ ⟨u(1), a⟩⟨u(2), b⟩", product_fail == 0,
                          samples + ", " + std::to_string(product_fail) + " failures"});
  report.items.push_back({"coproduct (plain): ⟨uv, a⟩ = Σ ⟨u, a(1)⟩⟨v, a(2)⟩", plain_fail == 0,
                          samples + ", " + std::to_string(plain_fail) + " failures"});
  report.items.push_back({"unit and counit: ⟨1, a⟩ = ε(a), ⟨u, 1⟩ = ε(u)", counit_fail == 0,
                          samples + ", " + std::to_string(counit_fail) + " failures"});
  report.notes.push_back("FRT relations built from: " + to_string(options.source));
  report.notes.push_back("orientation: plain");
  report.notes.push_back("op orientation ⟨vu, a⟩ = Σ ⟨u, a(1)⟩⟨v, a(2)⟩ failed on " + std::to_string(op_fail) + " of " +
                         std::to_string(options.samples) + " samples");
  report.notes.push_back("annihilation: " + std::to_string(total_failures) + " nonzero pairings over " +
                         std::to_string(us.size()) + " words of length <= " + std::to_string(d));
  return report;
}

}  // namespace qbraid
