#pragma once

/**
 * @file linalg.hpp
 * @brief Braided vector spaces and the exact linear algebra around them.
 *
 * A BraidedSpace keeps two operators on V⊗V:
 *  - rtt: the R-matrix in RTT form, as usually tabulated;
 *  - braiding: Ψ = rtt∘τ (τ the flip), the operator that satisfies the braid
 *    equation and commutes with the coproduct action of U_q(g).
 * Every construction on TV uses the braiding.
 */

#include "qbraid/echelon.hpp"
#include "qbraid/matrix.hpp"
#include "qbraid/ncpoly.hpp"
#include "qbraid/unipoly.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace qbraid {

struct BraidCheck {
  bool holds = false;
  /// First basis vector v_i⊗v_j⊗v_k (1-based) on which the two sides differ.
  std::optional<std::array<int, 3>> witness;
  std::string detail;
};

/// Verifies (1⊗op)(op⊗1)(1⊗op) = (op⊗1)(1⊗op)(op⊗1) on V^{⊗3}.
BraidCheck check_braid(const SymMatrix& op);

/// Dimension n of V for an operator on V⊗V; throws DimensionError otherwise.
std::size_t tensor_square_root(const SymMatrix& op);

class InvalidBraiding : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BraidedSpace {
 public:
  /// Validates invertibility and the braid equation; throws InvalidBraiding.
  static BraidedSpace from_braiding(SymMatrix braiding, std::string name = {});
  static BraidedSpace from_rtt(SymMatrix rtt, std::string name = {});
  /// Skips validation (used for deliberately broken operators).
  static BraidedSpace unchecked_from_rtt(SymMatrix rtt, std::string name = {});
  static BraidedSpace unchecked_from_braiding(SymMatrix braiding, std::string name = {});

  std::size_t dim() const { return dim_; }
  const SymMatrix& rtt() const { return rtt_; }
  const SymMatrix& braiding() const { return braiding_; }
  const std::string& name() const { return name_; }
  bool verified() const { return verified_; }

 private:
  BraidedSpace(SymMatrix rtt, SymMatrix braiding, std::string name, bool verify);

  std::size_t dim_ = 0;
  SymMatrix rtt_;
  SymMatrix braiding_;
  std::string name_;
  bool verified_ = false;
};

/// Least-degree monic polynomial annihilating op, from the first linear
/// dependence among I, op, op^2, ...
UniPoly minimal_poly(const SymMatrix& op);

/// Splits a monic polynomial into linear factors x - r with r = ±q^k, |k| <= max_exponent,
/// or ±1, ±2. Returns nullopt if it does not split over those candidates.
std::optional<std::vector<Scalar>> monomial_roots(const UniPoly& p, int max_exponent = 8);
/// "(x - q)(x + q^-1)" when the polynomial splits, else the expanded form.
std::string factored_string(const UniPoly& p);

/// p(op) for a square matrix.
SymMatrix evaluate(const UniPoly& p, const SymMatrix& op);

/// Echelonized basis of the column space, lowest-index pivots first,
/// each vector normalized to pivot coefficient 1.
std::vector<SparseVector> image_subspace(const SymMatrix& op);
std::size_t rank(const SymMatrix& op);

/// Basis of {X : XA = AX for every A in actions}; free unknowns in index order.
std::vector<SymMatrix> solve_commutant(const std::vector<SymMatrix>& actions);

enum class ExtensionRecipe {
  /// Move the left block across, last letter first: the order (1⊗Ψ) then (Ψ⊗1) for (2,1).
  MoveLeftBlock,
  /// Move the right block across, first letter first.
  MoveRightBlock,
};

struct BraidingExtension {
  int left = 0;
  int right = 0;
  /// Ψ^{m,n} on V^{⊗(m+n)}.
  SymMatrix op;
};

/// Ψ^{m,n}: V^{⊗m}⊗V^{⊗n} → V^{⊗n}⊗V^{⊗m}, from adjacent applications of Ψ.
BraidingExtension extend_braiding(const BraidedSpace& space, int m, int n,
                                  ExtensionRecipe recipe = ExtensionRecipe::MoveLeftBlock);

}  // namespace qbraid
