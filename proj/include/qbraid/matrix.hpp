#pragma once

/// @file matrix.hpp
/// Dense matrices over Q(q).
///
/// Tensor-factor convention, used everywhere: a basis vector v_{i1}⊗...⊗v_{ik}
/// of V^{⊗k} (dim V = n) has index ((i1·n + i2)·n + ...)·n + ik, first factor
/// most significant. kron() follows the same convention.

#include "qbraid/scalar.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qbraid {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using SparseVector = std::map<std::size_t, Scalar>;

class SymMatrix {
 public:
  SymMatrix() = default;
  SymMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static SymMatrix identity(std::size_t n);
  static SymMatrix diagonal(const std::vector<Scalar>& d);
  /// e_{i,j}: 1 in row i, column j (0-based).
  static SymMatrix unit(std::size_t n, std::size_t i, std::size_t j);
  /// The flip v_a⊗v_b ↦ v_b⊗v_a on V⊗V, dim V = n.
  static SymMatrix flip(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  SparseVector column(std::size_t j) const;
  /// Applies the matrix to a sparse vector.
  SparseVector apply(const SparseVector& v) const;

  SymMatrix transpose() const;
  SymMatrix& operator+=(const SymMatrix& o);
  SymMatrix& operator-=(const SymMatrix& o);
  SymMatrix& operator*=(const Scalar& c);
  friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
  friend SymMatrix operator-(SymMatrix a, const SymMatrix& b) { return a -= b; }
  friend SymMatrix operator*(SymMatrix a, const Scalar& c) { return a *= c; }
  friend SymMatrix operator*(const Scalar& c, SymMatrix a) { return a *= c; }
  friend SymMatrix operator*(const SymMatrix& a, const SymMatrix& b);
  friend bool operator==(const SymMatrix& a, const SymMatrix& b);
  friend bool operator!=(const SymMatrix& a, const SymMatrix& b) { return !(a == b); }

  /// Nonzero entries as "(row,col): value" lines, 1-based; capped at max_entries.
  std::string describe_nonzero(std::size_t max_entries = 16) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Kronecker product with the row-major convention above.
SymMatrix kron(const SymMatrix& a, const SymMatrix& b);
SymMatrix kron_power(const SymMatrix& a, int k);

/// Operator on V^{⊗k} acting by `op` (on V^{⊗m}) at factors pos..pos+m-1 (0-based).
SymMatrix embed_at(const SymMatrix& op, std::size_t dim_v, int k, int pos);

/// Inverse by Gauss-Jordan; throws MathError when singular.
SymMatrix inverse(const SymMatrix& m);

/// Flattens a matrix to a sparse vector indexed by row * cols + col.
SparseVector flatten(const SymMatrix& m);

}  // namespace qbraid
