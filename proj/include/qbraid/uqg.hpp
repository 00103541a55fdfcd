#pragma once

/**
 * @file uqg.hpp
 * @brief U_q(g) from Cartan data, its representations, and measuring checks.
 *
 * Generators are letters of a 4r-letter alphabet (r = rank):
 *   E_i = i, F_i = r + i, K_i = 2r + i, K_i^{-1} = 3r + i   (0-based i),
 * printed as E1, F1, K1, Kinv1.
 *
 * The action of a coalgebra element c on V^{⊗k} is the iterated coproduct
 * applied to ρ, with the left tensor leg acting on the first factor.
 */

#include "qbraid/linalg.hpp"
#include "qbraid/ncalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qbraid {

struct CartanData {
  int rank = 0;
  std::vector<std::vector<int>> a;
  std::vector<int> d;

  /// Cartan data of sl_{r+1}.
  static CartanData type_A(int rank);
  /// Throws std::invalid_argument on violated Cartan invariants.
  void validate() const;
  /// q_i = q^{d_i}.
  Scalar q_i(int i) const { return Scalar::q_power(d[static_cast<std::size_t>(i)]); }
};

enum class GenKind { E, F, K, Kinv };

struct Generator {
  GenKind kind = GenKind::E;
  int index = 0;
};

std::string generator_name(const Generator& g);

/// One summand coef · left ⊗ right of a coproduct, as words in the generator alphabet.
struct CoproductTerm {
  Scalar coef;
  Word left;
  Word right;
};

struct NamedRelation {
  std::string text;
  /// lhs - rhs, possibly inhomogeneous (the empty word is the unit).
  NCPoly poly;
};

class UqPresentation {
 public:
  UqPresentation() = default;
  explicit UqPresentation(CartanData cartan);

  const CartanData& cartan() const { return cartan_; }
  int rank() const { return cartan_.rank; }
  int alphabet() const { return 4 * cartan_.rank; }

  Letter letter(const Generator& g) const;
  Generator generator(Letter l) const;
  std::optional<Letter> find_letter(const std::string& name) const;
  LetterNamer namer() const;

  const std::vector<NamedRelation>& relations() const { return relations_; }
  std::vector<CoproductTerm> coproduct(Letter l) const;
  Scalar counit(Letter l) const;
  NCPoly antipode(Letter l) const;

 private:
  CartanData cartan_;
  std::vector<NamedRelation> relations_;
};

/// A finite-dimensional coalgebra spanned by elements that each act by a matrix.
/// Element 0 is the unit (group-like, acting as the identity).
class GeneratorCoalgebra {
 public:
  struct Term {
    Scalar coef;
    std::size_t left;
    std::size_t right;
  };
  struct Element {
    std::string name;
    SymMatrix action;
    Scalar counit;
    std::vector<Term> coproduct;
  };

  GeneratorCoalgebra() = default;
  explicit GeneratorCoalgebra(std::size_t dim);

  /// Appends an element; coproduct terms may refer to elements added later.
  std::size_t add(Element e);
  void set_coproduct(std::size_t element, std::vector<Term> terms);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return elements_.size(); }
  const Element& element(std::size_t i) const { return elements_[i]; }
  std::optional<std::size_t> find(const std::string& name) const;

  /// Action on V^{⊗k} via the (k-1)-fold coproduct; k = 0 gives ε(c) as a 1×1 matrix.
  SymMatrix act(std::size_t element, int k) const;
  /// The action applied to a single word, as a polynomial.
  NCPoly act_on_word(std::size_t element, const Word& w, const MonomialOrder& order = {}) const;
  NCPoly act_on_poly(std::size_t element, const NCPoly& p) const;

  /// Copy with the two tensor legs of one element's coproduct exchanged.
  GeneratorCoalgebra with_swapped_coproduct(std::size_t element) const;

 private:
  std::size_t dim_ = 0;
  std::vector<Element> elements_;
};

/// The classical coalgebra: 1 group-like, every listed matrix primitive.
GeneratorCoalgebra classical_coalgebra(const std::vector<std::pair<std::string, SymMatrix>>& lie_actions);

class Representation {
 public:
  Representation() = default;
  /// Kinv defaults to the matrix inverse of K; throws std::invalid_argument on
  /// size mismatch or a singular K.
  Representation(UqPresentation pres, std::vector<SymMatrix> e, std::vector<SymMatrix> f, std::vector<SymMatrix> k,
                 std::optional<std::vector<SymMatrix>> kinv = std::nullopt);

  const UqPresentation& presentation() const { return pres_; }
  std::size_t dim() const { return dim_; }
  const SymMatrix& matrix(Letter l) const { return matrices_[static_cast<std::size_t>(l)]; }
  SymMatrix& mutable_matrix(Letter l) { return matrices_[static_cast<std::size_t>(l)]; }
  const SymMatrix& matrix(const Generator& g) const { return matrix(pres_.letter(g)); }

  /// Multiplicative extension ρ(w) = ρ(w_1)···ρ(w_k); the empty word gives I.
  SymMatrix evaluate(const NCPoly& p) const;

  /// Unit, then every generator in letter order, with the Hopf coproduct table.
  GeneratorCoalgebra coalgebra() const;

 private:
  UqPresentation pres_;
  std::size_t dim_ = 0;
  std::vector<SymMatrix> matrices_;
};

struct CheckItem {
  std::string subject;
  bool passed = false;
  std::string detail;
};

struct CheckReport {
  std::string name;
  std::vector<CheckItem> items;
  /// Counterexamples, printed verbatim.
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;

  bool passed() const;
  std::size_t failure_count() const;
};

CheckReport check_coassociativity(const GeneratorCoalgebra& c);
CheckReport check_counit(const GeneratorCoalgebra& c);
/// m(S⊗1)Δ(g) = ε(g)1 = m(1⊗S)Δ(g), as matrices in the representation.
CheckReport check_antipode(const Representation& rep);

CheckReport check_representation(const Representation& rep);

/// (ρ⊗ρ)Δ(g) for the generator with the given letter, on V^{⊗k}.
SymMatrix coproduct_action(const Representation& rep, Letter gen, int k);

/// Ψ commutes with every generator on V⊗V, and Ψ^{2,1}, Ψ^{1,2} on V^{⊗3}.
CheckReport check_preserves_R(const Representation& rep, const BraidedSpace& space);

NCPoly act_on_quotient(const Representation& rep, const RewriteSystem& rs, Letter gen, const Word& word);

CheckReport check_ideal_preserved(const Representation& rep, const BraidedSpace& space, const RelationSet& rels);
CheckReport check_ideal_preserved(const GeneratorCoalgebra& c, const RelationSet& rels);

struct MeasuringOptions {
  std::size_t samples = 200;
  int max_degree = 3;
  std::uint64_t seed = 1;
  /// Pair lists up to this size are checked exhaustively.
  std::size_t exhaustive_limit = 500;
};

/// σ(c)(aa') = Σ σ(c_(1))(a) σ(c_(2))(a') in the quotient, for normal words a, a'.
CheckReport check_measuring(const GeneratorCoalgebra& c, const RewriteSystem& rs, const MeasuringOptions& options);
CheckReport check_measuring(const Representation& rep, const RewriteSystem& rs, const MeasuringOptions& options);

/// Leibniz identity for primitive actions on the quotient, over all pairs up to max_degree.
CheckReport check_derivation_measuring(const std::vector<std::pair<std::string, SymMatrix>>& lie_actions,
                                       const RewriteSystem& rs, int max_degree);

/// Linear independence of the generator matrices: necessary for faithfulness on C, not sufficient.
CheckItem generator_independence(const Representation& rep);

}  // namespace qbraid
