#pragma once

/// @file echelon.hpp
/// Incremental row echelon form over Q(q) for sparse vectors.
///
/// The pivot of a vector is its first key under Compare. With std::less on
/// indices that is the lowest index; with MonomialOrder on words it is the
/// leading word. Stored rows are normalized to pivot coefficient 1.

#include "qbraid/scalar.hpp"

#include <functional>
#include <map>
#include <vector>

namespace qbraid {

template <typename Key, typename Compare = std::less<Key>>
class Echelon {
 public:
  using Vector = std::map<Key, Scalar, Compare>;

  Echelon() = default;
  explicit Echelon(Compare cmp) : cmp_(cmp), rows_(cmp) {}

  std::size_t rank() const { return rows_.size(); }
  bool has_pivot(const Key& k) const { return rows_.count(k) != 0; }

  /// Remainder of v modulo the stored span; zero iff v lies in the span.
  Vector reduce(Vector v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      const Key pivot = it->first;
      const Scalar factor = it->second;
      for (const auto& [k, c] : row->second) add_to(v, k, -(factor * c));
      it = v.upper_bound(pivot);
    }
    return v;
  }

  bool contains(const Vector& v) const { return reduce(v).empty(); }

  /// Inserts v; returns false if it was already in the span.
  bool insert(Vector v) {
    Vector r = reduce(std::move(v));
    if (r.empty()) return false;
    const Scalar inv = r.begin()->second.inverse();
    for (auto& [k, c] : r) c *= inv;
    const Key pivot = r.begin()->first;
    rows_.emplace(pivot, std::move(r));
    return true;
  }

  /// Fully reduced basis (reduced row echelon form), ordered by pivot.
  std::vector<Vector> reduced_basis() const {
    std::vector<Key> pivots;
    for (const auto& [p, row] : rows_) pivots.push_back(p);
    std::map<Key, Vector, Compare> done(cmp_);
    for (auto p = pivots.rbegin(); p != pivots.rend(); ++p) {
      Vector row = rows_.at(*p);
      auto it = std::next(row.begin());
      while (it != row.end()) {
        auto other = done.find(it->first);
        if (other == done.end()) {
          ++it;
          continue;
        }
        const Key key = it->first;
        const Scalar factor = it->second;
        for (const auto& [k, c] : other->second) add_to(row, k, -(factor * c));
        it = row.upper_bound(key);
      }
      done.emplace(*p, std::move(row));
    }
    std::vector<Vector> out;
    out.reserve(done.size());
    for (auto& [p, row] : done) out.push_back(std::move(row));
    return out;
  }

  static void add_to(Vector& v, const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = v.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) v.erase(it);
    }
  }

 private:
  Compare cmp_{};
  std::map<Key, Vector, Compare> rows_{cmp_};
};

}  // namespace qbraid
