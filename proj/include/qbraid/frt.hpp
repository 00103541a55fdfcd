#pragma once

/**
 * @file frt.hpp
 * @brief The FRT bialgebra A(R) on generators t_ij and its pairing with U_q(g).
 *
 * Letter t_ij (0-based i, j) is i·n + j, so the degree-2 word t_ij t_kl has
 * index ((i·n + j)·n + k)·n + l in V*⊗V⊗V*⊗V.
 *
 * The pairing is ⟨u, t_{i1 j1}···t_{ik jk}⟩ = entry (i⃗, j⃗) of the action of the
 * word u on V^{⊗k}, with u acting as the product ρ(u_1)ρ(u_2)··· ("plain"
 * orientation: ⟨uv, a⟩ = Σ ⟨u, a_(1)⟩⟨v, a_(2)⟩).
 */

#include "qbraid/ncalg.hpp"
#include "qbraid/uqg.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qbraid {

/// Which operator feeds α and β. The braiding is the one whose relations are
/// annihilated by the U_q action under the plain pairing; rtt is kept for comparison.
enum class FrtSource { Braiding, Rtt };

std::string to_string(FrtSource s);

struct FRTPresentation {
  int n = 0;
  FrtSource source = FrtSource::Braiding;
  SymMatrix alpha;
  SymMatrix beta;
  /// Basis of im(α - β) over the n²-letter alphabet.
  RelationSet relations;

  int alphabet() const { return n * n; }
  LetterNamer namer() const;
};

/// Renders t_ij as "t_{12}" (1-based), or "t_{1,12}" once n exceeds 9.
LetterNamer t_namer(int n);

/// α = τ(M^T⊗1)τ and β = τ(1⊗M)τ with τ the middle flip; relations = echelonized im(α - β).
FRTPresentation frt_relations(const BraidedSpace& space, FrtSource source = FrtSource::Braiding);
/// Same construction from an explicit operator M on V⊗V.
FRTPresentation frt_relations(const SymMatrix& m, FrtSource source);

/// Δ(t_ij) = Σ_k t_ik⊗t_kj extended multiplicatively to one word: (left, right, coefficient 1) pairs.
std::vector<std::pair<Word, Word>> t_coproduct(const Word& w, int n);
Scalar t_counit(const Word& w, int n);

/// Δ(r) ∈ J⊗W + W⊗J with J = span of the relations, W the degree-2 component; ε(r) = 0.
CheckReport frt_coideal_check(const FRTPresentation& p);

struct FrtHilbert {
  HilbertSeries series;
  bool confluent = true;
  std::vector<std::string> warnings;
};

FrtHilbert frt_hilbert(const FRTPresentation& p, int max_degree);

/// Memoized action matrices of U_q words on V^{⊗k}. Not shared across threads.
class PairingTable {
 public:
  explicit PairingTable(const Representation& rep);

  std::size_t dim() const { return coalgebra_.dim(); }
  const UqPresentation& presentation() const { return pres_; }
  /// ρ(u_1)···ρ(u_m) on V^{⊗k}, each factor the coproduct action.
  const SymMatrix& action(const Word& u, int k);
  Scalar pair(const Word& u, const Word& t);
  Scalar pair(const Word& u, const NCPoly& t);

 private:
  UqPresentation pres_;
  GeneratorCoalgebra coalgebra_;
  std::map<std::pair<Word, int>, SymMatrix> memo_;
};

Scalar pairing(const Representation& rep, const Word& u, const Word& t);

struct DualityOptions {
  int max_degree = 3;
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  FrtSource source = FrtSource::Braiding;
};

/// Annihilation ⟨u, r⟩ = 0 for every U_q word |u| <= max_degree and every relation,
/// plus sampled product/coproduct compatibility. Failures carry witnesses.
CheckReport check_duality(const Representation& rep, const BraidedSpace& space, const DualityOptions& options = {});

}  // namespace qbraid
