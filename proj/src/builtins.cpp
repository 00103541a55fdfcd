#include "qbraid/builtins.hpp"

#include "qbraid/parse.hpp"

#include <charconv>

namespace qbraid {

SymMatrix sl_rtt_matrix(int n) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  const auto dim = static_cast<std::size_t>(n);
  SymMatrix r(dim * dim, dim * dim);
  const Scalar q = Scalar::q();
  const Scalar gap = q - q.inverse();
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      r(i * dim + j, i * dim + j) = i == j ? q : Scalar(1L);
      // e_ij ⊗ e_ji sends v_j⊗v_i to v_i⊗v_j.
      if (i < j) r(i * dim + j, j * dim + i) += gap;
    }
  return r;
}

Builtin builtin_sl(int n) {
  if (n < 2) throw std::invalid_argument("sl_n needs n >= 2");
  const auto dim = static_cast<std::size_t>(n);
  UqPresentation pres(CartanData::type_A(n - 1));
  std::vector<SymMatrix> e, f, k;
  for (std::size_t i = 0; i + 1 < dim; ++i) {
    e.push_back(SymMatrix::unit(dim, i + 1, i));
    f.push_back(SymMatrix::unit(dim, i, i + 1));
    std::vector<Scalar> diag(dim, Scalar(1L));
    diag[i] = Scalar::q_power(-1);
    diag[i + 1] = Scalar::q();
    k.push_back(SymMatrix::diagonal(diag));
  }
  Representation rep(std::move(pres), std::move(e), std::move(f), std::move(k));
  return {std::move(rep), BraidedSpace::from_rtt(sl_rtt_matrix(n), "sl:" + std::to_string(n))};
}

Builtin builtin_by_name(const std::string& name) {
  if (name == "adjoint:sl2") return adjoint_sl2();
  if (name.rfind("sl:", 0) != 0) throw std::invalid_argument("unknown builtin '" + name + "' (expected sl:n or adjoint:sl2)");
  int n = 0;
  const char* first = name.data() + 3;
  const char* last = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc() || ptr != last || first == last) throw std::invalid_argument("unknown builtin '" + name + "' (expected sl:n)");
  if (n < 2) throw std::invalid_argument("builtin sl:n needs n >= 2");
  return builtin_sl(n);
}

Builtin adjoint_sl2() {
  UqPresentation pres(CartanData::type_A(1));
  const Scalar two = q_integer(2);
  SymMatrix e = SymMatrix::unit(3, 1, 0) + SymMatrix::unit(3, 2, 1);
  SymMatrix f = (SymMatrix::unit(3, 0, 1) + SymMatrix::unit(3, 1, 2)) * two;
  SymMatrix k = SymMatrix::diagonal({Scalar::q_power(-2), Scalar(1L), Scalar::q_power(2)});
  Representation rep(std::move(pres), {e}, {f}, {k});

  // Casimir FE + (qK + q^-1 K^-1)/(q - q^-1)^2 on V⊗V; on the summand with
  // highest weight q^m it is (q^{m+1} + q^{-m-1})/(q - q^-1)^2.
  const GeneratorCoalgebra c = rep.coalgebra();
  const Scalar q = Scalar::q();
  const Scalar gap2 = (q - q.inverse()).pow(2);
  const SymMatrix casimir = c.act(2, 2) * c.act(1, 2) + (c.act(3, 2) * q + c.act(4, 2) * q.inverse()) * gap2.inverse();
  auto value = [&](int m) { return (Scalar::q_power(m + 1) + Scalar::q_power(-m - 1)) / gap2; };
  const std::vector<std::pair<int, Scalar>> spectrum{
      {4, Scalar::q_power(2)}, {2, -Scalar::q_power(-2)}, {0, Scalar::q_power(-4)}};
  const SymMatrix id = SymMatrix::identity(9);
  SymMatrix psi(9, 9);
  for (const auto& [m, lambda] : spectrum) {
    SymMatrix proj = id;
    for (const auto& [other, unused] : spectrum) {
      if (other == m) continue;
      proj = proj * ((casimir - id * value(other)) * (value(m) - value(other)).inverse());
    }
    psi += proj * lambda;
  }
  return {std::move(rep), BraidedSpace::from_braiding(std::move(psi), "adjoint sl:2")};
}

BraidedSpace flip_space(int n) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  return BraidedSpace::from_braiding(SymMatrix::flip(static_cast<std::size_t>(n)), "flip");
}

std::vector<std::pair<std::string, SymMatrix>> classical_sl2_actions() {
  return {{"e", SymMatrix::unit(2, 0, 1)},
          {"f", SymMatrix::unit(2, 1, 0)},
          {"h", SymMatrix::unit(2, 0, 0) - SymMatrix::unit(2, 1, 1)}};
}

std::vector<std::string> sp4_symmetric_relation_text() {
  return {"x_1 x_2 = q x_2 x_1",   "x_1 x_3 = q x_3 x_1",   "x_2 x_4 = q x_4 x_2",
          "x_3 x_4 = q x_4 x_3", "x_1 x_4 = q^2 x_4 x_1", "x_2 x_3 = q^2 x_3 x_2 + (q - q^-1) x_1 x_4"};
}

RelationSet sp4_symmetric_relations() {
  const MonomialOrder order({1, 2, 3, 0});
  std::vector<NCPoly> rels;
  for (const auto& text : sp4_symmetric_relation_text()) rels.push_back(parse_relation(text, x_resolver(4), order));
  return RelationSet(4, rels, order);
}

}  // namespace qbraid
