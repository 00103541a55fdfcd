#include "qbraid/linalg.hpp"

#include <cmath>
#include <set>
#include <utility>

namespace qbraid {

std::size_t tensor_square_root(const SymMatrix& op) {
  if (!op.is_square()) throw DimensionError("operator on V⊗V must be square");
  std::size_t n = 0;
  while (n * n < op.rows()) ++n;
  if (n * n != op.rows() || n == 0) throw DimensionError("operator size " + std::to_string(op.rows()) + " is not a square n^2");
  return n;
}

BraidCheck check_braid(const SymMatrix& op) {
  const std::size_t n = tensor_square_root(op);
  const SymMatrix first = embed_at(op, n, 3, 0);
  const SymMatrix second = embed_at(op, n, 3, 1);
  const SymMatrix lhs = second * first * second;
  const SymMatrix rhs = first * second * first;
  BraidCheck out;
  for (std::size_t col = 0; col < lhs.cols(); ++col) {
    for (std::size_t row = 0; row < lhs.rows(); ++row) {
      if (lhs(row, col) == rhs(row, col)) continue;
      Word w = word_from_index(col, 3, static_cast<int>(n));
      out.witness = std::array<int, 3>{w[0] + 1, w[1] + 1, w[2] + 1};
      out.detail = "sides differ on v" + std::to_string(w[0] + 1) + "⊗v" + std::to_string(w[1] + 1) + "⊗v" +
                   std::to_string(w[2] + 1) + " at output component " + std::to_string(row + 1);
      return out;
    }
  }
  out.holds = true;
  out.detail = "braid equation holds on V^{⊗3}";
  return out;
}

BraidedSpace::BraidedSpace(SymMatrix rtt, SymMatrix braiding, std::string name, bool verify)
    : dim_(tensor_square_root(braiding)), rtt_(std::move(rtt)), braiding_(std::move(braiding)), name_(std::move(name)) {
  if (!verify) return;
  try {
    (void)inverse(braiding_);
  } catch (const MathError&) {
    throw InvalidBraiding("braiding is not invertible");
  }
  BraidCheck b = check_braid(braiding_);
  if (!b.holds) throw InvalidBraiding("braid equation fails: " + b.detail);
  verified_ = true;
}

BraidedSpace BraidedSpace::from_braiding(SymMatrix braiding, std::string name) {
  const std::size_t n = tensor_square_root(braiding);
  SymMatrix rtt = braiding * SymMatrix::flip(n);
  return BraidedSpace(std::move(rtt), std::move(braiding), std::move(name), true);
}

BraidedSpace BraidedSpace::from_rtt(SymMatrix rtt, std::string name) {
  const std::size_t n = tensor_square_root(rtt);
  SymMatrix braiding = rtt * SymMatrix::flip(n);
  return BraidedSpace(std::move(rtt), std::move(braiding), std::move(name), true);
}

BraidedSpace BraidedSpace::unchecked_from_rtt(SymMatrix rtt, std::string name) {
  const std::size_t n = tensor_square_root(rtt);
  SymMatrix braiding = rtt * SymMatrix::flip(n);
  return BraidedSpace(std::move(rtt), std::move(braiding), std::move(name), false);
}

BraidedSpace BraidedSpace::unchecked_from_braiding(SymMatrix braiding, std::string name) {
  const std::size_t n = tensor_square_root(braiding);
  SymMatrix rtt = braiding * SymMatrix::flip(n);
  return BraidedSpace(std::move(rtt), std::move(braiding), std::move(name), false);
}

UniPoly minimal_poly(const SymMatrix& op) {
  if (!op.is_square()) throw DimensionError("minimal polynomial of a non-square matrix");
  using Key = std::pair<int, std::size_t>;
  Echelon<Key> echelon;
  SymMatrix power = SymMatrix::identity(op.rows());
  for (std::size_t k = 0;; ++k) {
    std::map<Key, Scalar> v;
    for (const auto& [idx, c] : flatten(power)) v.emplace(Key{0, idx}, c);
    v.emplace(Key{1, k}, Scalar(1L));
    auto rem = echelon.reduce(v);
    if (!rem.empty() && rem.begin()->first.first == 1) {
      std::vector<Scalar> coeffs(k + 1);
      for (const auto& [key, c] : rem) coeffs[key.second] = c;
      return UniPoly(std::move(coeffs));
    }
    echelon.insert(std::move(rem));
    power = power * op;
  }
}

std::optional<std::vector<Scalar>> monomial_roots(const UniPoly& p, int max_exponent) {
  if (p.is_zero() || !p.coefficient(p.degree()).is_one()) return std::nullopt;
  std::vector<Scalar> candidates{Scalar(), Scalar(1L), Scalar(-1L)};
  for (int k = 1; k <= max_exponent; ++k) {
    candidates.push_back(Scalar::q_power(k));
    candidates.push_back(-Scalar::q_power(k));
    candidates.push_back(Scalar::q_power(-k));
    candidates.push_back(-Scalar::q_power(-k));
  }
  candidates.push_back(Scalar(2L));
  candidates.push_back(Scalar(-2L));
  std::vector<Scalar> roots;
  UniPoly rest = p;
  while (rest.degree() > 0) {
    bool found = false;
    for (const Scalar& r : candidates) {
      if (!rest.eval(r).is_zero()) continue;
      // Synthetic division by x - r.
      const int d = rest.degree();
      std::vector<Scalar> quot(static_cast<std::size_t>(d));
      Scalar carry;
      for (int k = d; k >= 1; --k) {
        carry = rest.coefficient(k) + carry * r;
        quot[static_cast<std::size_t>(k - 1)] = carry;
      }
      rest = UniPoly(std::move(quot));
      roots.push_back(r);
      found = true;
      break;
    }
    if (!found) return std::nullopt;
  }
  return roots;
}

std::string factored_string(const UniPoly& p) {
  auto roots = monomial_roots(p);
  if (!roots || roots->size() < 2) return p.to_string();
  std::string out;
  std::size_t i = 0;
  while (i < roots->size()) {
    std::size_t j = i;
    while (j < roots->size() && (*roots)[j] == (*roots)[i]) ++j;
    const Scalar& r = (*roots)[i];
    std::string factor;
    if (r.is_zero()) {
      factor = "x";
    } else {
      UniPoly lin = UniPoly::linear_root(r);
      factor = "(" + lin.to_string() + ")";
    }
    out += factor;
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

SymMatrix evaluate(const UniPoly& p, const SymMatrix& op) {
  if (!op.is_square()) throw DimensionError("polynomial of a non-square matrix");
  SymMatrix acc(op.rows(), op.cols());
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * op + SymMatrix::identity(op.rows()) * *it;
  return acc;
}

std::vector<SparseVector> image_subspace(const SymMatrix& op) {
  Echelon<std::size_t> echelon;
  for (std::size_t j = 0; j < op.cols(); ++j) echelon.insert(op.column(j));
  return echelon.reduced_basis();
}

std::size_t rank(const SymMatrix& op) {
  Echelon<std::size_t> echelon;
  for (std::size_t j = 0; j < op.cols(); ++j) echelon.insert(op.column(j));
  return echelon.rank();
}

std::vector<SymMatrix> solve_commutant(const std::vector<SymMatrix>& actions) {
  if (actions.empty()) throw DimensionError("solve_commutant needs at least one action");
  const std::size_t n = actions.front().rows();
  for (const auto& a : actions)
    if (a.rows() != n || a.cols() != n) throw DimensionError("commutant: actions must be square of equal size");
  Echelon<std::size_t> equations;
  for (const auto& a : actions) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        SparseVector eq;
        for (std::size_t k = 0; k < n; ++k) {
          Echelon<std::size_t>::add_to(eq, i * n + k, a(k, j));
          Echelon<std::size_t>::add_to(eq, k * n + j, -a(i, k));
        }
        if (!eq.empty()) equations.insert(std::move(eq));
      }
    }
  }
  const auto rows = equations.reduced_basis();
  std::set<std::size_t> pivots;
  for (const auto& r : rows) pivots.insert(r.begin()->first);
  std::vector<SymMatrix> basis;
  for (std::size_t f = 0; f < n * n; ++f) {
    if (pivots.count(f)) continue;
    SymMatrix x(n, n);
    x(f / n, f % n) = Scalar(1L);
    for (const auto& r : rows) {
      auto it = r.find(f);
      if (it == r.end()) continue;
      const std::size_t p = r.begin()->first;
      x(p / n, p % n) = -it->second;
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

BraidingExtension extend_braiding(const BraidedSpace& space, int m, int n, ExtensionRecipe recipe) {
  if (m < 0 || n < 0) throw std::invalid_argument("extend_braiding: negative block size");
  const int k = m + n;
  const std::size_t dim = space.dim();
  SymMatrix op = SymMatrix::identity(static_cast<std::size_t>(std::pow(static_cast<double>(dim), k) + 0.5));
  auto apply_at = [&](int pos) { op = embed_at(space.braiding(), dim, k, pos) * op; };
  if (m > 0 && n > 0) {
    if (recipe == ExtensionRecipe::MoveLeftBlock) {
      for (int letter = m - 1; letter >= 0; --letter)
        for (int step = 0; step < n; ++step) apply_at(letter + step);
    } else {
      for (int letter = 0; letter < n; ++letter)
        for (int pos = m + letter - 1; pos >= letter; --pos) apply_at(pos);
    }
  }
  return {m, n, std::move(op)};
}

}  // namespace qbraid
