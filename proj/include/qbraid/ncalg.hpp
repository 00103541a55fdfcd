#pragma once

/**
 * @file ncalg.hpp
 * @brief Quotients TV/J of tensor algebras by homogeneous ideals.
 *
 * Relations are oriented into rewrite rules (leading word → lower terms)
 * under a degree-lexicographic order. complete_rewrite() resolves overlap
 * ambiguities degree by degree up to a bound, adding a rule whenever an
 * overlap fails to resolve, so the resulting system gives unique normal forms
 * in every degree up to the bound.
 */

#include "qbraid/linalg.hpp"
#include "qbraid/ncpoly.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qbraid {

class DegreeBoundError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Homogeneous relations, echelonized so that leading words are distinct,
/// each relation monic and free of the other relations' leading words.
class RelationSet {
 public:
  RelationSet() = default;
  RelationSet(int alphabet, const std::vector<NCPoly>& relations, MonomialOrder order = {});

  int alphabet() const { return alphabet_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<NCPoly>& relations() const { return relations_; }
  std::size_t size() const { return relations_.size(); }
  bool empty() const { return relations_.empty(); }

  /// Relations in "lead = rest" form, sorted by leading word (greatest first).
  std::vector<std::string> to_strings(const LetterNamer& name = x_namer()) const;

 private:
  int alphabet_ = 0;
  MonomialOrder order_;
  std::vector<NCPoly> relations_;
};

/// Formats a monic relation as "lead = -(rest)", e.g. "x_1 x_2 = q x_2 x_1".
std::string relation_string(const NCPoly& relation, const LetterNamer& name = x_namer());

/// Converts a vector of V^{⊗k} (index convention of matrix.hpp) into a polynomial.
NCPoly vector_to_poly(const SparseVector& v, int length, int alphabet, MonomialOrder order = {});
SparseVector poly_to_vector(const NCPoly& p, int alphabet);

/// Echelonized basis of f(Ψ)(V⊗V) re-expressed as degree-2 relations.
RelationSet relations_from_image(const BraidedSpace& space, const UniPoly& f, MonomialOrder order = {});

struct DegreeStatus {
  int degree = 0;
  std::size_t overlaps = 0;
  /// Overlaps whose two reductions differed before any rule of this degree was added.
  std::size_t unresolved = 0;
  std::size_t rules_added = 0;
  /// False only when unresolved overlaps were left in place (add_rules = false).
  bool confluent = true;
};

struct CompletionOptions {
  /// When false, unresolved overlaps are only recorded and no rule is added.
  bool add_rules = true;
};

class RewriteSystem {
 public:
  int alphabet() const { return alphabet_; }
  int max_degree() const { return max_degree_; }
  const MonomialOrder& order() const { return order_; }
  /// Leading word → replacement (the lower terms).
  const std::map<Word, NCPoly>& rules() const { return rules_; }
  const std::vector<DegreeStatus>& status() const { return status_; }
  /// The echelonized input relations.
  const std::vector<NCPoly>& generators() const { return generators_; }

  bool confluent_through(int degree) const;
  /// First degree at which an overlap failed to resolve, or -1.
  int first_failure() const;
  bool is_reducible(const Word& w) const;

  /// Rules as "lead = replacement", sorted by leading word (greatest first).
  std::vector<std::string> rule_strings(const LetterNamer& name = x_namer()) const;

 private:
  friend RewriteSystem complete_rewrite(const RelationSet&, int, CompletionOptions);
  friend NCPoly reduce_unchecked(const RewriteSystem&, const NCPoly&);

  const NCPoly* find_rule(const Word& w, std::size_t pos, std::size_t len) const;

  int alphabet_ = 0;
  int max_degree_ = 0;
  MonomialOrder order_;
  std::map<Word, NCPoly> rules_;
  std::vector<std::size_t> rule_lengths_;
  std::vector<DegreeStatus> status_;
  std::vector<NCPoly> generators_;
};

RewriteSystem complete_rewrite(const RelationSet& rels, int max_degree, CompletionOptions options = {});

/// Irreducible representative of p. Throws DegreeBoundError if deg p exceeds the bound.
NCPoly normal_form(const RewriteSystem& rs, const NCPoly& p);
/// Rewrites without the degree-bound guard.
NCPoly reduce_unchecked(const RewriteSystem& rs, const NCPoly& p);

/// Irreducible words of one degree, in increasing index order.
std::vector<Word> normal_words(const RewriteSystem& rs, int degree);

struct HilbertSeries {
  std::vector<std::size_t> dims;
  /// Degrees answered by the linear-algebra oracle because the rewrite
  /// system was not confluent there.
  std::vector<int> oracle_degrees;
};

/// Graded dimensions for degrees 0..max_degree. Throws DegreeBoundError beyond the completion bound.
HilbertSeries hilbert(const RewriteSystem& rs, int max_degree);

/// Independent oracle: n^d - dim Σ_i V^{⊗i}⊗rel⊗V^{⊗(d-|rel|-i)}, by exact rank.
std::size_t quotient_dimension_oracle(const std::vector<NCPoly>& relations, int alphabet, int degree);

}  // namespace qbraid
