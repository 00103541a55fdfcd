#include "qbraid/ncalg.hpp"

#include <algorithm>
#include <functional>

namespace qbraid {

namespace {

using WordEchelon = Echelon<Word, MonomialOrder>;

WordEchelon::Vector as_vector(const NCPoly& p, const MonomialOrder& order) {
  WordEchelon::Vector v(order);
  for (const auto& [w, c] : p.terms()) v.emplace(w, c);
  return v;
}

std::size_t int_pow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

RelationSet::RelationSet(int alphabet, const std::vector<NCPoly>& relations, MonomialOrder order)
    : alphabet_(alphabet), order_(std::move(order)) {
  if (alphabet <= 0) throw std::invalid_argument("alphabet must be nonempty");
  WordEchelon echelon(order_);
  for (const auto& r : relations) {
    if (!r.is_homogeneous()) throw std::invalid_argument("relation is not homogeneous: " + r.to_string());
    for (const auto& [w, c] : r.terms())
      for (Letter l : w)
        if (l < 0 || l >= alphabet) throw std::invalid_argument("relation uses a letter outside the alphabet");
    if (!r.is_zero()) echelon.insert(as_vector(r, order_));
  }
  for (auto& row : echelon.reduced_basis()) relations_.emplace_back(NCPoly::Terms(std::move(row)));
}

std::vector<std::string> RelationSet::to_strings(const LetterNamer& name) const {
  std::vector<std::string> out;
  out.reserve(relations_.size());
  for (const auto& r : relations_) out.push_back(relation_string(r, name));
  return out;
}

std::string relation_string(const NCPoly& relation, const LetterNamer& name) {
  if (relation.is_zero()) return "0 = 0";
  const Word lead = relation.leading_word();
  const Scalar c = relation.leading_coefficient();
  NCPoly rest = relation;
  rest.pop_leading();
  rest *= -c.inverse();
  return format_word(lead, name) + " = " + rest.to_string(name);
}

NCPoly vector_to_poly(const SparseVector& v, int length, int alphabet, MonomialOrder order) {
  NCPoly p(std::move(order));
  for (const auto& [idx, c] : v) p.add_term(word_from_index(idx, length, alphabet), c);
  return p;
}

SparseVector poly_to_vector(const NCPoly& p, int alphabet) {
  SparseVector v;
  for (const auto& [w, c] : p.terms()) v.emplace(word_index(w, alphabet), c);
  return v;
}

RelationSet relations_from_image(const BraidedSpace& space, const UniPoly& f, MonomialOrder order) {
  const int n = static_cast<int>(space.dim());
  std::vector<NCPoly> rels;
  for (const auto& v : image_subspace(evaluate(f, space.braiding()))) rels.push_back(vector_to_poly(v, 2, n, order));
  return RelationSet(n, rels, order);
}

bool RewriteSystem::confluent_through(int degree) const {
  return std::all_of(status_.begin(), status_.end(),
                     [degree](const DegreeStatus& s) { return s.degree > degree || s.confluent; });
}

int RewriteSystem::first_failure() const {
  for (const auto& s : status_)
    if (!s.confluent) return s.degree;
  return -1;
}

const NCPoly* RewriteSystem::find_rule(const Word& w, std::size_t pos, std::size_t len) const {
  auto it = rules_.find(Word(w.begin() + static_cast<std::ptrdiff_t>(pos),
                             w.begin() + static_cast<std::ptrdiff_t>(pos + len)));
  return it == rules_.end() ? nullptr : &it->second;
}

bool RewriteSystem::is_reducible(const Word& w) const {
  for (std::size_t len : rule_lengths_) {
    if (len > w.size()) break;
    for (std::size_t pos = 0; pos + len <= w.size(); ++pos)
      if (find_rule(w, pos, len)) return true;
  }
  return false;
}

std::vector<std::string> RewriteSystem::rule_strings(const LetterNamer& name) const {
  std::vector<Word> leads;
  for (const auto& [w, r] : rules_) leads.push_back(w);
  std::sort(leads.begin(), leads.end(), order_);
  std::vector<std::string> out;
  for (const auto& w : leads) out.push_back(format_word(w, name) + " = " + rules_.at(w).to_string(name));
  return out;
}

NCPoly reduce_unchecked(const RewriteSystem& rs, const NCPoly& p) {
  NCPoly work = p.reordered(rs.order_);
  NCPoly result(rs.order_);
  while (!work.is_zero()) {
    auto [w, c] = work.pop_leading();
    const NCPoly* rule = nullptr;
    std::size_t at = 0;
    std::size_t rule_len = 0;
    for (std::size_t len : rs.rule_lengths_) {
      if (len > w.size()) break;
      for (std::size_t pos = 0; pos + len <= w.size() && !rule; ++pos) {
        rule = rs.find_rule(w, pos, len);
        at = pos;
      }
      if (rule) {
        rule_len = len;
        break;
      }
    }
    if (!rule) {
      result.add_term(w, c);
      continue;
    }
    const Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(at));
    const Word suffix(w.begin() + static_cast<std::ptrdiff_t>(at + rule_len), w.end());
    for (const auto& [rw, rc] : rule->terms()) work.add_term(concat(prefix, rw, suffix), c * rc);
  }
  return result;
}

NCPoly normal_form(const RewriteSystem& rs, const NCPoly& p) {
  if (p.degree() > rs.max_degree())
    throw DegreeBoundError("degree " + std::to_string(p.degree()) + " exceeds the completion bound " +
                           std::to_string(rs.max_degree()));
  return reduce_unchecked(rs, p);
}

RewriteSystem complete_rewrite(const RelationSet& rels, int max_degree, CompletionOptions options) {
  if (max_degree < 1) throw std::invalid_argument("completion bound must be at least 1");
  RewriteSystem rs;
  rs.alphabet_ = rels.alphabet();
  rs.max_degree_ = max_degree;
  rs.order_ = rels.order();
  rs.generators_ = rels.relations();

  std::map<int, std::vector<const NCPoly*>> by_degree;
  for (const auto& r : rs.generators_) by_degree[r.degree()].push_back(&r);

  for (int d = 1; d <= max_degree; ++d) {
    DegreeStatus st;
    st.degree = d;
    std::vector<NCPoly> failures;
    std::vector<NCPoly> inputs;
    for (const NCPoly* g : by_degree[d]) {
      NCPoly r = reduce_unchecked(rs, *g);
      if (!r.is_zero()) inputs.push_back(std::move(r));
    }
    for (const auto& [l1, r1] : rs.rules_) {
      for (const auto& [l2, r2] : rs.rules_) {
        const std::size_t min_len = std::min(l1.size(), l2.size());
        for (std::size_t k = 1; k < min_len; ++k) {
          if (l1.size() + l2.size() - k != static_cast<std::size_t>(d)) continue;
          if (!std::equal(l1.end() - static_cast<std::ptrdiff_t>(k), l1.end(), l2.begin())) continue;
          ++st.overlaps;
          const Word tail(l2.begin() + static_cast<std::ptrdiff_t>(k), l2.end());
          const Word head(l1.begin(), l1.end() - static_cast<std::ptrdiff_t>(k));
          NCPoly left(rs.order_);
          for (const auto& [w, c] : r1.terms()) left.add_term(concat(w, tail), c);
          NCPoly right(rs.order_);
          for (const auto& [w, c] : r2.terms()) right.add_term(concat(head, w), c);
          NCPoly diff = reduce_unchecked(rs, left) - reduce_unchecked(rs, right);
          if (!diff.is_zero()) failures.push_back(std::move(diff));
        }
      }
    }
    st.unresolved = failures.size();
    WordEchelon echelon(rs.order_);
    for (const auto& p : inputs) echelon.insert(as_vector(p, rs.order_));
    if (options.add_rules) {
      for (const auto& p : failures) echelon.insert(as_vector(p, rs.order_));
    } else {
      st.confluent = failures.empty();
    }
    for (auto& row : echelon.reduced_basis()) {
      NCPoly rule{NCPoly::Terms(std::move(row))};
      Word lead = rule.pop_leading().first;
      rule *= Scalar(-1L);
      rs.rules_.emplace(std::move(lead), std::move(rule));
      ++st.rules_added;
    }
    rs.rule_lengths_.clear();
    for (const auto& [w, r] : rs.rules_) rs.rule_lengths_.push_back(w.size());
    std::sort(rs.rule_lengths_.begin(), rs.rule_lengths_.end());
    rs.rule_lengths_.erase(std::unique(rs.rule_lengths_.begin(), rs.rule_lengths_.end()), rs.rule_lengths_.end());
    rs.status_.push_back(st);
  }
  return rs;
}

std::vector<Word> normal_words(const RewriteSystem& rs, int degree) {
  std::vector<Word> out;
  Word current;
  std::function<void()> extend = [&]() {
    if (static_cast<int>(current.size()) == degree) {
      out.push_back(current);
      return;
    }
    for (Letter l = 0; l < rs.alphabet(); ++l) {
      current.push_back(l);
      bool reducible = false;
      for (const auto& [lead, r] : rs.rules()) {
        if (lead.size() > current.size()) continue;
        if (std::equal(lead.begin(), lead.end(), current.end() - static_cast<std::ptrdiff_t>(lead.size()))) {
          reducible = true;
          break;
        }
      }
      if (!reducible) extend();
      current.pop_back();
    }
  };
  extend();
  return out;
}

HilbertSeries hilbert(const RewriteSystem& rs, int max_degree) {
  if (max_degree > rs.max_degree())
    throw DegreeBoundError("Hilbert series requested to degree " + std::to_string(max_degree) +
                           " beyond the completion bound " + std::to_string(rs.max_degree()));
  HilbertSeries h;
  for (int d = 0; d <= max_degree; ++d) {
    if (rs.confluent_through(d)) {
      h.dims.push_back(normal_words(rs, d).size());
    } else {
      h.dims.push_back(quotient_dimension_oracle(rs.generators(), rs.alphabet(), d));
      h.oracle_degrees.push_back(d);
    }
  }
  return h;
}

std::size_t quotient_dimension_oracle(const std::vector<NCPoly>& relations, int alphabet, int degree) {
  const std::size_t n = static_cast<std::size_t>(alphabet);
  Echelon<std::size_t> span;
  for (const auto& r : relations) {
    const int e = r.degree();
    if (r.is_zero() || e > degree) continue;
    for (int i = 0; i <= degree - e; ++i) {
      const int j = degree - e - i;
      const std::size_t left_count = int_pow(n, i);
      const std::size_t right_count = int_pow(n, j);
      const std::size_t right_scale = right_count;
      const std::size_t mid_scale = int_pow(n, e) * right_count;
      for (std::size_t u = 0; u < left_count; ++u) {
        for (std::size_t v = 0; v < right_count; ++v) {
          SparseVector vec;
          for (const auto& [w, c] : r.terms()) vec.emplace(u * mid_scale + word_index(w, alphabet) * right_scale + v, c);
          span.insert(std::move(vec));
        }
      }
    }
  }
  return int_pow(n, degree) - span.rank();
}

}  // namespace qbraid
