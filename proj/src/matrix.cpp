#include "qbraid/matrix.hpp"

#include <sstream>

namespace qbraid {

SymMatrix SymMatrix::identity(std::size_t n) {
  SymMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1L);
  return m;
}

SymMatrix SymMatrix::diagonal(const std::vector<Scalar>& d) {
  SymMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

SymMatrix SymMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  SymMatrix m(n, n);
  m(i, j) = Scalar(1L);
  return m;
}

SymMatrix SymMatrix::flip(std::size_t n) {
  SymMatrix m(n * n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m(b * n + a, a * n + b) = Scalar(1L);
  return m;
}

bool SymMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

SparseVector SymMatrix::column(std::size_t j) const {
  SparseVector v;
  for (std::size_t i = 0; i < rows_; ++i)
    if (!(*this)(i, j).is_zero()) v.emplace(i, (*this)(i, j));
  return v;
}

SparseVector SymMatrix::apply(const SparseVector& v) const {
  std::vector<Scalar> acc(rows_);
  for (const auto& [j, c] : v) {
    if (j >= cols_) throw DimensionError("vector index out of range");
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& a = (*this)(i, j);
      if (!a.is_zero()) acc[i] += a * c;
    }
  }
  SparseVector out;
  for (std::size_t i = 0; i < rows_; ++i)
    if (!acc[i].is_zero()) out.emplace(i, std::move(acc[i]));
  return out;
}

SymMatrix SymMatrix::transpose() const {
  SymMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

SymMatrix& SymMatrix::operator-=(const SymMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

SymMatrix& SymMatrix::operator*=(const Scalar& c) {
  for (auto& x : data_) x *= c;
  return *this;
}

SymMatrix operator*(const SymMatrix& a, const SymMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimensions differ");
  SymMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) r(i, j) += x * y;
      }
    }
  }
  return r;
}

bool operator==(const SymMatrix& a, const SymMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string SymMatrix::describe_nonzero(std::size_t max_entries) const {
  std::ostringstream out;
  std::size_t shown = 0;
  std::size_t total = 0;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(i, j).is_zero()) continue;
      ++total;
      if (shown < max_entries) {
        if (shown > 0) out << "; ";
        out << "(" << i + 1 << "," << j + 1 << "): " << (*this)(i, j).to_string();
        ++shown;
      }
    }
  }
  if (total > shown) out << "; ... " << total - shown << " more";
  return out.str();
}

SymMatrix kron(const SymMatrix& a, const SymMatrix& b) {
  SymMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const Scalar& x = a(i1, j1);
      if (x.is_zero()) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
          const Scalar& y = b(i2, j2);
          if (!y.is_zero()) r(i1 * b.rows() + i2, j1 * b.cols() + j2) = x * y;
        }
    }
  return r;
}

SymMatrix kron_power(const SymMatrix& a, int k) {
  SymMatrix r = SymMatrix::identity(1);
  for (int i = 0; i < k; ++i) r = kron(r, a);
  return r;
}

SymMatrix embed_at(const SymMatrix& op, std::size_t dim_v, int k, int pos) {
  std::size_t block = 1;
  int m = 0;
  while (block < op.rows()) {
    block *= dim_v;
    ++m;
  }
  if (block != op.rows() || !op.is_square() || pos < 0 || pos + m > k) throw DimensionError("embed_at: operator does not fit");
  std::size_t left = 1;
  for (int i = 0; i < pos; ++i) left *= dim_v;
  std::size_t right = 1;
  for (int i = pos + m; i < k; ++i) right *= dim_v;
  return kron(kron(SymMatrix::identity(left), op), SymMatrix::identity(right));
}

SymMatrix inverse(const SymMatrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  SymMatrix a = m;
  SymMatrix inv = SymMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) throw MathError("matrix is singular");
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    const Scalar s = a(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= s;
      inv(col, j) *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      const Scalar f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (!a(col, j).is_zero()) a(i, j) -= f * a(col, j);
        if (!inv(col, j).is_zero()) inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

SparseVector flatten(const SymMatrix& m) {
  SparseVector v;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) v.emplace(i * m.cols() + j, m(i, j));
  return v;
}

}  // namespace qbraid
