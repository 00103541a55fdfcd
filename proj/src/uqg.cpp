#include "qbraid/uqg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <tuple>

namespace qbraid {

CartanData CartanData::type_A(int rank) {
  if (rank < 1) throw std::invalid_argument("type A needs rank >= 1");
  CartanData c;
  c.rank = rank;
  c.a.assign(static_cast<std::size_t>(rank), std::vector<int>(static_cast<std::size_t>(rank), 0));
  for (int i = 0; i < rank; ++i) {
    c.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
    if (i + 1 < rank) {
      c.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = -1;
      c.a[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i)] = -1;
    }
  }
  c.d.assign(static_cast<std::size_t>(rank), 1);
  return c;
}

void CartanData::validate() const {
  const auto r = static_cast<std::size_t>(rank);
  if (rank < 1) throw std::invalid_argument("Cartan data: rank must be positive");
  if (a.size() != r || d.size() != r) throw std::invalid_argument("Cartan data: matrix and symmetrizer sizes must equal the rank");
  for (const auto& row : a)
    if (row.size() != r) throw std::invalid_argument("Cartan data: matrix must be square");
  int g = 0;
  for (int di : d) {
    if (di <= 0) throw std::invalid_argument("Cartan data: symmetrizers must be positive");
    g = std::gcd(g, di);
  }
  if (g != 1) throw std::invalid_argument("Cartan data: symmetrizers must be coprime");
  for (std::size_t i = 0; i < r; ++i) {
    if (a[i][i] != 2) throw std::invalid_argument("Cartan data: diagonal entries must be 2");
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) throw std::invalid_argument("Cartan data: off-diagonal entries must be <= 0");
      if ((a[i][j] == 0) != (a[j][i] == 0)) throw std::invalid_argument("Cartan data: a_ij = 0 iff a_ji = 0 violated");
      if (d[i] * a[i][j] != d[j] * a[j][i]) throw std::invalid_argument("Cartan data: (d_i a_ij) is not symmetric");
    }
  }
}

std::string generator_name(const Generator& g) {
  static const char* prefix[] = {"E", "F", "K", "Kinv"};
  return prefix[static_cast<int>(g.kind)] + std::to_string(g.index + 1);
}

namespace {

Word word_of(std::initializer_list<Letter> letters) { return Word(letters); }

}  // namespace

UqPresentation::UqPresentation(CartanData cartan) : cartan_(std::move(cartan)) {
  cartan_.validate();
  const int r = cartan_.rank;
  auto L = [this](GenKind k, int i) { return letter({k, i}); };
  const LetterNamer name = namer();
  auto add = [&](std::string text, NCPoly poly) { relations_.push_back({std::move(text), std::move(poly)}); };
  auto one = [](const Word& w, const Scalar& c = Scalar(1L)) { return NCPoly(w, c); };

  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      const Word lhs = word_of({L(GenKind::K, i), L(GenKind::K, j)});
      const Word rhs = word_of({L(GenKind::K, j), L(GenKind::K, i)});
      add(format_word(lhs, name) + " = " + format_word(rhs, name), one(lhs) - one(rhs));
    }
  for (int i = 0; i < r; ++i) {
    const Word a = word_of({L(GenKind::K, i), L(GenKind::Kinv, i)});
    const Word b = word_of({L(GenKind::Kinv, i), L(GenKind::K, i)});
    add(format_word(a, name) + " = 1", one(a) - NCPoly::constant(Scalar(1L)));
    add(format_word(b, name) + " = 1", one(b) - NCPoly::constant(Scalar(1L)));
  }
  for (GenKind kind : {GenKind::E, GenKind::F}) {
    const int sign = kind == GenKind::E ? 1 : -1;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        const Word lhs = word_of({L(GenKind::K, i), L(kind, j), L(GenKind::Kinv, i)});
        const NCPoly rhs = one(Word{L(kind, j)}, cartan_.q_i(i).pow(sign * cartan_.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
        add(format_word(lhs, name) + " = " + rhs.to_string(name), one(lhs) - rhs);
      }
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const Word ef = word_of({L(GenKind::E, i), L(GenKind::F, j)});
      const Word fe = word_of({L(GenKind::F, j), L(GenKind::E, i)});
      NCPoly poly = one(ef) - one(fe);
      std::string text = format_word(ef, name) + " - " + format_word(fe, name) + " = ";
      if (i == j) {
        const Scalar qi = cartan_.q_i(i);
        const Scalar denom = qi - qi.inverse();
        poly -= (one(Word{L(GenKind::K, i)}) - one(Word{L(GenKind::Kinv, i)})) * denom.inverse();
        text += "(" + name(L(GenKind::K, i)) + " - " + name(L(GenKind::Kinv, i)) + ")/(" + denom.to_string() + ")";
      } else {
        text += "0";
      }
      add(std::move(text), std::move(poly));
    }
  for (GenKind kind : {GenKind::E, GenKind::F}) {
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        if (i == j) continue;
        const int top = 1 - cartan_.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        NCPoly poly;
        for (int s = 0; s <= top; ++s) {
          Word w(static_cast<std::size_t>(top - s), L(kind, i));
          w.push_back(L(kind, j));
          w.insert(w.end(), static_cast<std::size_t>(s), L(kind, i));
          Scalar c = q_binomial(top, s, cartan_.q_i(i));
          if (s % 2 == 1) c = -c;
          poly.add_term(w, c);
        }
        add(poly.to_string(name) + " = 0", std::move(poly));
      }
  }
}

Letter UqPresentation::letter(const Generator& g) const {
  if (g.index < 0 || g.index >= rank()) throw std::out_of_range("generator index out of range");
  return static_cast<int>(g.kind) * rank() + g.index;
}

Generator UqPresentation::generator(Letter l) const {
  if (l < 0 || l >= alphabet()) throw std::out_of_range("letter outside the U_q alphabet");
  return {static_cast<GenKind>(l / rank()), l % rank()};
}

std::optional<Letter> UqPresentation::find_letter(const std::string& name) const {
  for (Letter l = 0; l < alphabet(); ++l)
    if (generator_name(generator(l)) == name) return l;
  return std::nullopt;
}

LetterNamer UqPresentation::namer() const {
  const int r = rank();
  return [r](Letter l) { return generator_name({static_cast<GenKind>(l / r), l % r}); };
}

std::vector<CoproductTerm> UqPresentation::coproduct(Letter l) const {
  const Generator g = generator(l);
  const Letter k = letter({GenKind::K, g.index});
  const Letter kinv = letter({GenKind::Kinv, g.index});
  const Scalar one(1L);
  switch (g.kind) {
    case GenKind::E:
      return {{one, {l}, {k}}, {one, {}, {l}}};
    case GenKind::F:
      return {{one, {l}, {}}, {one, {kinv}, {l}}};
    default:
      return {{one, {l}, {l}}};
  }
}

Scalar UqPresentation::counit(Letter l) const {
  const GenKind kind = generator(l).kind;
  return (kind == GenKind::K || kind == GenKind::Kinv) ? Scalar(1L) : Scalar();
}

NCPoly UqPresentation::antipode(Letter l) const {
  const Generator g = generator(l);
  const Letter k = letter({GenKind::K, g.index});
  const Letter kinv = letter({GenKind::Kinv, g.index});
  switch (g.kind) {
    case GenKind::E:
      return NCPoly(Word{l, kinv}, Scalar(-1L));
    case GenKind::F:
      return NCPoly(Word{k, l}, Scalar(-1L));
    case GenKind::K:
      return NCPoly(Word{kinv}, Scalar(1L));
    case GenKind::Kinv:
      return NCPoly(Word{k}, Scalar(1L));
  }
  return {};
}

GeneratorCoalgebra::GeneratorCoalgebra(std::size_t dim) : dim_(dim) {
  elements_.push_back({"1", SymMatrix::identity(dim), Scalar(1L), {{Scalar(1L), 0, 0}}});
}

std::size_t GeneratorCoalgebra::add(Element e) {
  if (e.action.rows() != dim_ || e.action.cols() != dim_) throw DimensionError("coalgebra element acts on the wrong dimension");
  elements_.push_back(std::move(e));
  return elements_.size() - 1;
}

void GeneratorCoalgebra::set_coproduct(std::size_t element, std::vector<Term> terms) {
  elements_.at(element).coproduct = std::move(terms);
}

std::optional<std::size_t> GeneratorCoalgebra::find(const std::string& name) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i].name == name) return i;
  return std::nullopt;
}

SymMatrix GeneratorCoalgebra::act(std::size_t element, int k) const {
  const Element& e = elements_.at(element);
  if (k < 0) throw std::invalid_argument("tensor degree must be non-negative");
  if (k == 0) {
    SymMatrix m(1, 1);
    m(0, 0) = e.counit;
    return m;
  }
  if (k == 1) return e.action;
  SymMatrix acc;
  for (const Term& t : e.coproduct) {
    SymMatrix part = kron(elements_.at(t.left).action, act(t.right, k - 1)) * t.coef;
    acc = acc.rows() == 0 ? std::move(part) : acc + part;
  }
  return acc;
}

NCPoly GeneratorCoalgebra::act_on_word(std::size_t element, const Word& w, const MonomialOrder& order) const {
  const Element& e = elements_.at(element);
  if (w.empty()) return NCPoly::constant(e.counit, order);
  if (w.size() == 1) {
    NCPoly out(order);
    for (std::size_t row = 0; row < dim_; ++row) out.add_term(Word{static_cast<Letter>(row)}, e.action(row, static_cast<std::size_t>(w[0])));
    return out;
  }
  const Word head{w[0]};
  const Word tail(w.begin() + 1, w.end());
  NCPoly out(order);
  for (const Term& t : e.coproduct) {
    NCPoly first = act_on_word(t.left, head, order);
    if (first.is_zero()) continue;
    NCPoly rest = act_on_word(t.right, tail, order);
    if (rest.is_zero()) continue;
    out += (first * rest) * t.coef;
  }
  return out;
}

NCPoly GeneratorCoalgebra::act_on_poly(std::size_t element, const NCPoly& p) const {
  NCPoly out(p.order());
  for (const auto& [w, c] : p.terms()) out += act_on_word(element, w, p.order()) * c;
  return out;
}

GeneratorCoalgebra GeneratorCoalgebra::with_swapped_coproduct(std::size_t element) const {
  GeneratorCoalgebra copy = *this;
  for (Term& t : copy.elements_.at(element).coproduct) std::swap(t.left, t.right);
  return copy;
}

GeneratorCoalgebra classical_coalgebra(const std::vector<std::pair<std::string, SymMatrix>>& lie_actions) {
  if (lie_actions.empty()) throw std::invalid_argument("classical coalgebra needs at least one action");
  GeneratorCoalgebra c(lie_actions.front().second.rows());
  for (const auto& [name, m] : lie_actions) {
    const std::size_t idx = c.size();
    c.add({name, m, Scalar(), {{Scalar(1L), idx, 0}, {Scalar(1L), 0, idx}}});
  }
  return c;
}

Representation::Representation(UqPresentation pres, std::vector<SymMatrix> e, std::vector<SymMatrix> f,
                               std::vector<SymMatrix> k, std::optional<std::vector<SymMatrix>> kinv)
    : pres_(std::move(pres)) {
  const auto r = static_cast<std::size_t>(pres_.rank());
  if (e.size() != r || f.size() != r || k.size() != r || (kinv && kinv->size() != r))
    throw std::invalid_argument("representation must assign a matrix to every generator");
  if (!kinv) {
    kinv.emplace();
    for (const auto& m : k) {
      try {
        kinv->push_back(inverse(m));
      } catch (const MathError&) {
        throw std::invalid_argument("K generator matrix is singular");
      } catch (const DimensionError&) {
        throw std::invalid_argument("K generator matrix is not square");
      }
    }
  }
  dim_ = e.front().rows();
  for (auto* group : {&e, &f, &k, &*kinv})
    for (auto& m : *group) {
      if (m.rows() != dim_ || m.cols() != dim_) throw std::invalid_argument("generator matrices must be square of equal size");
      matrices_.push_back(std::move(m));
    }
}

SymMatrix Representation::evaluate(const NCPoly& p) const {
  SymMatrix acc(dim_, dim_);
  for (const auto& [w, c] : p.terms()) {
    SymMatrix m = SymMatrix::identity(dim_);
    for (Letter l : w) m = m * matrix(l);
    acc += m * c;
  }
  return acc;
}

GeneratorCoalgebra Representation::coalgebra() const {
  GeneratorCoalgebra c(dim_);
  auto index_of = [](const Word& w) -> std::size_t { return w.empty() ? 0 : static_cast<std::size_t>(w[0]) + 1; };
  for (Letter l = 0; l < pres_.alphabet(); ++l)
    c.add({generator_name(pres_.generator(l)), matrix(l), pres_.counit(l), {}});
  for (Letter l = 0; l < pres_.alphabet(); ++l) {
    std::vector<GeneratorCoalgebra::Term> terms;
    for (const auto& t : pres_.coproduct(l)) terms.push_back({t.coef, index_of(t.left), index_of(t.right)});
    c.set_coproduct(static_cast<std::size_t>(l) + 1, std::move(terms));
  }
  return c;
}

bool CheckReport::passed() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& i) { return i.passed; });
}

std::size_t CheckReport::failure_count() const {
  return static_cast<std::size_t>(std::count_if(items.begin(), items.end(), [](const CheckItem& i) { return !i.passed; }));
}

namespace {

std::string residual_detail(const SymMatrix& residual) {
  return residual.is_zero() ? "ok" : "residual " + residual.describe_nonzero();
}

CheckItem matrix_item(std::string subject, const SymMatrix& residual) {
  return {std::move(subject), residual.is_zero(), residual_detail(residual)};
}

}  // namespace

CheckReport check_coassociativity(const GeneratorCoalgebra& c) {
  CheckReport report{"coassociativity", {}, {}, {}};
  using Triple = std::tuple<std::size_t, std::size_t, std::size_t>;
  auto add = [](std::map<Triple, Scalar>& m, const Triple& t, const Scalar& v) {
    Scalar& slot = m[t];
    slot += v;
    if (slot.is_zero()) m.erase(t);
  };
  for (std::size_t g = 0; g < c.size(); ++g) {
    std::map<Triple, Scalar> lhs;
    std::map<Triple, Scalar> rhs;
    for (const auto& t : c.element(g).coproduct) {
      for (const auto& s : c.element(t.left).coproduct) add(lhs, {s.left, s.right, t.right}, t.coef * s.coef);
      for (const auto& s : c.element(t.right).coproduct) add(rhs, {t.left, s.left, s.right}, t.coef * s.coef);
    }
    report.items.push_back({c.element(g).name, lhs == rhs, lhs == rhs ? "ok" : "(Δ⊗1)Δ and (1⊗Δ)Δ differ"});
  }
  return report;
}

CheckReport check_counit(const GeneratorCoalgebra& c) {
  CheckReport report{"counit", {}, {}, {}};
  for (std::size_t g = 0; g < c.size(); ++g) {
    std::map<std::size_t, Scalar> left;
    std::map<std::size_t, Scalar> right;
    for (const auto& t : c.element(g).coproduct) {
      left[t.right] += t.coef * c.element(t.left).counit;
      right[t.left] += t.coef * c.element(t.right).counit;
    }
    auto is_g = [g](const std::map<std::size_t, Scalar>& m) {
      for (const auto& [idx, v] : m)
        if (v != (idx == g ? Scalar(1L) : Scalar())) return false;
      return m.count(g) == 1;
    };
    const bool ok = is_g(left) && is_g(right);
    report.items.push_back({c.element(g).name, ok, ok ? "ok" : "(ε⊗1)Δ or (1⊗ε)Δ differs from the element"});
  }
  return report;
}

CheckReport check_antipode(const Representation& rep) {
  CheckReport report{"antipode", {}, {}, {}};
  const auto& pres = rep.presentation();
  const SymMatrix id = SymMatrix::identity(rep.dim());
  auto s_of = [&](const Word& w) {
    if (w.empty()) return id;
    return rep.evaluate(pres.antipode(w[0]));
  };
  auto rho = [&](const Word& w) { return w.empty() ? id : rep.matrix(w[0]); };
  for (Letter l = 0; l < pres.alphabet(); ++l) {
    SymMatrix left(rep.dim(), rep.dim());
    SymMatrix right(rep.dim(), rep.dim());
    for (const auto& t : pres.coproduct(l)) {
      left += s_of(t.left) * rho(t.right) * t.coef;
      right += rho(t.left) * s_of(t.right) * t.coef;
    }
    const SymMatrix expected = id * pres.counit(l);
    const std::string name = generator_name(pres.generator(l));
    report.items.push_back(matrix_item("m(S⊗1)Δ(" + name + ")", left - expected));
    report.items.push_back(matrix_item("m(1⊗S)Δ(" + name + ")", right - expected));
  }
  return report;
}

CheckReport check_representation(const Representation& rep) {
  CheckReport report{"relations", {}, {}, {}};
  for (const auto& rel : rep.presentation().relations()) report.items.push_back(matrix_item(rel.text, rep.evaluate(rel.poly)));
  const CheckItem indep = generator_independence(rep);
  report.notes.push_back(indep.detail);
  return report;
}

SymMatrix coproduct_action(const Representation& rep, Letter gen, int k) {
  if (gen < 0 || gen >= rep.presentation().alphabet()) throw std::out_of_range("unknown generator");
  return rep.coalgebra().act(static_cast<std::size_t>(gen) + 1, k);
}

CheckReport check_preserves_R(const Representation& rep, const BraidedSpace& space) {
  if (rep.dim() != space.dim()) throw DimensionError("representation and braided space have different dimensions");
  CheckReport report{"admissible", {}, {}, {}};
  const GeneratorCoalgebra c = rep.coalgebra();
  const SymMatrix& psi = space.braiding();
  const SymMatrix psi21 = extend_braiding(space, 2, 1).op;
  const SymMatrix psi12 = extend_braiding(space, 1, 2).op;
  for (std::size_t g = 1; g < c.size(); ++g) {
    const SymMatrix a2 = c.act(g, 2);
    report.items.push_back(matrix_item(c.element(g).name + " on V⊗V", psi * a2 - a2 * psi));
  }
  for (std::size_t g = 1; g < c.size(); ++g) {
    const SymMatrix a3 = c.act(g, 3);
    report.items.push_back(matrix_item(c.element(g).name + " with Ψ^{2,1}", psi21 * a3 - a3 * psi21));
    report.items.push_back(matrix_item(c.element(g).name + " with Ψ^{1,2}", psi12 * a3 - a3 * psi12));
  }
  report.notes.push_back("operator: braiding Ψ = R∘τ (tabulated R composed with the flip)");
  report.notes.push_back("equation checked: a∘(1_H⊗Ψ) = Ψ∘a, i.e. Ψ commutes with every generator's coproduct action");
  return report;
}

NCPoly act_on_quotient(const Representation& rep, const RewriteSystem& rs, Letter gen, const Word& word) {
  if (static_cast<int>(word.size()) > rs.max_degree())
    throw DegreeBoundError("word degree exceeds the completion bound");
  if (gen < 0 || gen >= rep.presentation().alphabet()) throw std::out_of_range("unknown generator");
  const GeneratorCoalgebra c = rep.coalgebra();
  return normal_form(rs, c.act_on_word(static_cast<std::size_t>(gen) + 1, word, rs.order()));
}

CheckReport check_ideal_preserved(const GeneratorCoalgebra& c, const RelationSet& rels) {
  if (static_cast<std::size_t>(rels.alphabet()) != c.dim()) throw DimensionError("relations and action have different dimensions");
  CheckReport report{"ideal", {}, {}, {}};
  Echelon<std::size_t> span;
  for (const auto& r : rels.relations()) span.insert(poly_to_vector(r, rels.alphabet()));
  const auto texts = rels.to_strings();
  for (std::size_t g = 1; g < c.size(); ++g) {
    for (std::size_t i = 0; i < rels.size(); ++i) {
      const NCPoly image = c.act_on_poly(g, rels.relations()[i]);
      const bool inside = span.contains(poly_to_vector(image, rels.alphabet()));
      report.items.push_back({c.element(g).name + " · (" + texts[i] + ")", inside,
                              inside ? "ok" : "image " + image.to_string() + " leaves the relation span"});
    }
  }
  if (rels.empty()) report.notes.push_back("empty relation set: nothing to preserve");
  return report;
}

CheckReport check_ideal_preserved(const Representation& rep, const BraidedSpace& space, const RelationSet& rels) {
  if (rep.dim() != space.dim()) throw DimensionError("representation and braided space have different dimensions");
  return check_ideal_preserved(rep.coalgebra(), rels);
}

CheckReport check_measuring(const GeneratorCoalgebra& c, const RewriteSystem& rs, const MeasuringOptions& options) {
  if (options.max_degree > rs.max_degree()) throw DegreeBoundError("measuring degree exceeds the completion bound");
  if (static_cast<std::size_t>(rs.alphabet()) != c.dim()) throw DimensionError("quotient and action have different dimensions");
  CheckReport report{"measuring", {}, {}, {}};
  std::vector<std::vector<Word>> words;
  for (int d = 0; d <= options.max_degree; ++d) words.push_back(normal_words(rs, d));
  std::vector<std::pair<const Word*, const Word*>> pairs;
  for (int i = 0; i <= options.max_degree; ++i)
    for (int j = 0; i + j <= options.max_degree; ++j)
      for (const Word& a : words[static_cast<std::size_t>(i)])
        for (const Word& b : words[static_cast<std::size_t>(j)]) pairs.emplace_back(&a, &b);

  std::vector<std::size_t> chosen;
  if (pairs.size() <= options.exhaustive_limit) {
    chosen.resize(pairs.size());
    std::iota(chosen.begin(), chosen.end(), std::size_t{0});
    report.notes.push_back("exhaustive over " + std::to_string(pairs.size()) + " monomial pairs of total degree <= " +
                           std::to_string(options.max_degree));
  } else {
    std::mt19937_64 rng(options.seed);
    for (std::size_t s = 0; s < options.samples; ++s) chosen.push_back(static_cast<std::size_t>(rng() % pairs.size()));
    report.notes.push_back("sampled " + std::to_string(options.samples) + " of " + std::to_string(pairs.size()) +
                           " monomial pairs of total degree <= " + std::to_string(options.max_degree) +
                           ", seed " + std::to_string(options.seed));
  }

  const MonomialOrder& order = rs.order();
  std::map<std::pair<std::size_t, Word>, NCPoly> memo;
  auto sigma = [&](std::size_t element, const Word& w) -> const NCPoly& {
    auto key = std::make_pair(element, w);
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(std::move(key), c.act_on_word(element, w, order)).first;
    return it->second;
  };
  const LetterNamer name = x_namer();
  for (std::size_t g = 1; g < c.size(); ++g) {
    std::size_t failures = 0;
    for (std::size_t idx : chosen) {
      const Word& a = *pairs[idx].first;
      const Word& b = *pairs[idx].second;
      const NCPoly product = reduce_unchecked(rs, NCPoly(concat(a, b), Scalar(1L), order));
      const NCPoly lhs = reduce_unchecked(rs, c.act_on_poly(g, product));
      NCPoly rhs(order);
      for (const auto& t : c.element(g).coproduct) {
        const NCPoly& left = sigma(t.left, a);
        if (left.is_zero()) continue;
        rhs += (left * sigma(t.right, b)) * t.coef;
      }
      rhs = reduce_unchecked(rs, rhs);
      if (lhs == rhs) continue;
      ++failures;
      report.witnesses.push_back(c.element(g).name + ": a = " + format_word(a, name) + ", a' = " + format_word(b, name) +
                                 ": σ(c)(aa') = " + lhs.to_string(name) + " but Σ σ(c1)(a)σ(c2)(a') = " +
                                 rhs.to_string(name));
    }
    report.items.push_back({c.element(g).name, failures == 0,
                            std::to_string(chosen.size()) + " pairs, " + std::to_string(failures) + " counterexamples"});
  }
  return report;
}

CheckReport check_measuring(const Representation& rep, const RewriteSystem& rs, const MeasuringOptions& options) {
  return check_measuring(rep.coalgebra(), rs, options);
}

CheckReport check_derivation_measuring(const std::vector<std::pair<std::string, SymMatrix>>& lie_actions,
                                       const RewriteSystem& rs, int max_degree) {
  const GeneratorCoalgebra c = classical_coalgebra(lie_actions);
  MeasuringOptions options;
  options.max_degree = max_degree;
  options.exhaustive_limit = static_cast<std::size_t>(-1);
  CheckReport report = check_measuring(c, rs, options);
  report.name = "derivation-measuring";
  const CheckReport ideal = check_ideal_preserved(c, RelationSet(rs.alphabet(), rs.generators(), rs.order()));
  for (const auto& item : ideal.items) report.items.push_back({"ideal: " + item.subject, item.passed, item.detail});
  report.notes.push_back("1 group-like, each listed action primitive: σ(X)(ab) = σ(X)(a)b + aσ(X)(b)");
  report.notes.push_back(
      "the Leibniz extension of any single matrix is a derivation of TV; what is tested is descent to the quotient");
  return report;
}

CheckItem generator_independence(const Representation& rep) {
  Echelon<std::size_t> span;
  const int total = rep.presentation().alphabet();
  for (Letter l = 0; l < total; ++l) span.insert(flatten(rep.matrix(l)));
  const bool independent = static_cast<int>(span.rank()) == total;
  return {"generator matrices", independent,
          "generator matrices span a space of dimension " + std::to_string(span.rank()) + " of " + std::to_string(total) +
              (independent ? " (linearly independent)" : " (linearly dependent)") +
              "; independence is necessary for faithfulness on the generating coalgebra, not sufficient"};
}

}  // namespace qbraid
