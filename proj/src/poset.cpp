#include "dlim/poset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace dlim {

const char* to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::reflexive: return "reflexive";
    case Axiom::antisymmetric: return "antisymmetric";
    case Axiom::transitive: return "transitive";
  }
  return "?";
}

AxiomViolation::AxiomViolation(Axiom a, std::string first, std::string second)
    : InputError(std::string("AxiomViolation(") + dlim::to_string(a) + "): (" + first + ", " +
                 second + ")"),
      axiom(a),
      witness(std::move(first), std::move(second)) {}

FinitePoset::FinitePoset(std::vector<std::string> labels, std::vector<std::uint8_t> relation)
    : labels_(std::move(labels)), leq_(std::move(relation)) {
  const Index n = size();
  if (static_cast<Index>(leq_.size()) != n * n) throw InputError("relation shape mismatch");
  for (auto& v : leq_) v = v ? 1 : 0;
  {
    auto sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) throw InputError("duplicate poset element '" + *dup + "'");
  }
  for (Index p = 0; p < n; ++p)
    if (!leq(p, p)) throw AxiomViolation(Axiom::reflexive, label(p), label(p));
  for (Index p = 0; p < n; ++p)
    for (Index q = p + 1; q < n; ++q)
      if (leq(p, q) && leq(q, p)) throw AxiomViolation(Axiom::antisymmetric, label(p), label(q));
  for (Index p = 0; p < n; ++p)
    for (Index q = 0; q < n; ++q) {
      if (!leq(p, q)) continue;
      for (Index r = 0; r < n; ++r)
        if (leq(q, r) && !leq(p, r)) throw AxiomViolation(Axiom::transitive, label(p), label(r));
    }
}

std::optional<Index> FinitePoset::find(const std::string& name) const {
  auto it = std::find(labels_.begin(), labels_.end(), name);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Index>(it - labels_.begin());
}

Index FinitePoset::index_of(const std::string& name) const {
  auto p = find(name);
  if (!p) throw InputError("unknown poset element '" + name + "'");
  return *p;
}

bool FinitePoset::covers(Index p, Index q) const {
  if (!less(p, q)) return false;
  for (Index r = 0; r < size(); ++r)
    if (less(p, r) && less(r, q)) return false;
  return true;
}

std::vector<std::pair<Index, Index>> FinitePoset::covers() const {
  std::vector<std::pair<Index, Index>> out;
  for (Index p = 0; p < size(); ++p)
    for (Index q = 0; q < size(); ++q)
      if (covers(p, q)) out.emplace_back(p, q);
  return out;
}

std::vector<Index> FinitePoset::linear_extension() const {
  // Rank by the number of elements strictly below; ties by index.
  std::vector<Index> below(static_cast<std::size_t>(size()), 0);
  for (Index p = 0; p < size(); ++p)
    for (Index q = 0; q < size(); ++q)
      if (less(q, p)) ++below[static_cast<std::size_t>(p)];
  std::vector<Index> order(static_cast<std::size_t>(size()));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    return below[static_cast<std::size_t>(a)] < below[static_cast<std::size_t>(b)];
  });
  return order;
}

FinitePoset validate_poset(const std::vector<std::string>& elements,
                           const std::vector<std::pair<std::string, std::string>>& pairs) {
  const Index n = static_cast<Index>(elements.size());
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n * n), 0);
  auto lookup = [&](const std::string& s) {
    auto it = std::find(elements.begin(), elements.end(), s);
    if (it == elements.end()) throw InputError("unknown poset element '" + s + "'");
    return static_cast<Index>(it - elements.begin());
  };
  for (const auto& [a, b] : pairs) leq[static_cast<std::size_t>(lookup(a) * n + lookup(b))] = 1;
  return FinitePoset(elements, std::move(leq));
}

std::vector<std::uint8_t> reflexive_transitive_closure(
    Index n, const std::vector<std::pair<Index, Index>>& pairs) {
  std::vector<std::uint8_t> r(static_cast<std::size_t>(n * n), 0);
  for (Index p = 0; p < n; ++p) r[static_cast<std::size_t>(p * n + p)] = 1;
  for (auto [p, q] : pairs) r[static_cast<std::size_t>(p * n + q)] = 1;
  for (Index k = 0; k < n; ++k)
    for (Index i = 0; i < n; ++i)
      if (r[static_cast<std::size_t>(i * n + k)])
        for (Index j = 0; j < n; ++j)
          if (r[static_cast<std::size_t>(k * n + j)]) r[static_cast<std::size_t>(i * n + j)] = 1;
  return r;
}

FinitePoset chain_poset(Index n, const std::string& prefix) {
  std::vector<std::string> labels;
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n * n), 0);
  for (Index i = 0; i < n; ++i) {
    labels.push_back(prefix + std::to_string(i));
    for (Index j = i; j < n; ++j) leq[static_cast<std::size_t>(i * n + j)] = 1;
  }
  return FinitePoset(std::move(labels), std::move(leq));
}

FinitePoset antichain_poset(Index n, const std::string& prefix) {
  std::vector<std::string> labels;
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n * n), 0);
  for (Index i = 0; i < n; ++i) {
    labels.push_back(prefix + std::to_string(i));
    leq[static_cast<std::size_t>(i * n + i)] = 1;
  }
  return FinitePoset(std::move(labels), std::move(leq));
}

Chain Chain::face(Index k) const {
  Chain out;
  out.vertices.reserve(vertices.size() - 1);
  for (Index i = 0; i < static_cast<Index>(vertices.size()); ++i)
    if (i != k) out.vertices.push_back(vertices[static_cast<std::size_t>(i)]);
  return out;
}

bool is_chain(const FinitePoset& poset, const Chain& chain) {
  for (auto v : chain.vertices)
    if (v < 0 || v >= poset.size()) return false;
  for (std::size_t i = 1; i < chain.vertices.size(); ++i)
    if (!poset.less(chain.vertices[i - 1], chain.vertices[i])) return false;
  return !chain.vertices.empty();
}

OrderComplex::OrderComplex(std::vector<std::vector<Chain>> by_dimension)
    : simplices_(std::move(by_dimension)) {
  while (!simplices_.empty() && simplices_.back().empty()) simplices_.pop_back();
  lookup_.resize(simplices_.size());
  for (std::size_t d = 0; d < simplices_.size(); ++d) {
    std::sort(simplices_[d].begin(), simplices_[d].end());
    for (std::size_t i = 0; i < simplices_[d].size(); ++i)
      lookup_[d].emplace(simplices_[d][i].vertices, static_cast<Index>(i));
  }
}

const std::vector<Chain>& OrderComplex::simplices(Index n) const {
  static const std::vector<Chain> none;
  if (n < 0 || n >= static_cast<Index>(simplices_.size())) return none;
  return simplices_[static_cast<std::size_t>(n)];
}

Index OrderComplex::index_of(const Chain& chain) const {
  const Index d = chain.dimension();
  if (d < 0 || d >= static_cast<Index>(lookup_.size())) throw Error("chain not in complex");
  const auto& m = lookup_[static_cast<std::size_t>(d)];
  auto it = m.find(chain.vertices);
  if (it == m.end()) throw Error("chain not in complex");
  return it->second;
}

Index OrderComplex::total_count() const {
  Index t = 0;
  for (const auto& s : simplices_) t += static_cast<Index>(s.size());
  return t;
}

Integer OrderComplex::euler_characteristic() const {
  Integer chi = 0;
  for (std::size_t d = 0; d < simplices_.size(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(simplices_[d].size());
  return chi;
}

std::vector<Chain> OrderComplex::maximal_simplices() const {
  std::vector<Chain> out;
  for (std::size_t d = 0; d < simplices_.size(); ++d) {
    for (const auto& s : simplices_[d]) {
      bool maximal = true;
      if (d + 1 < simplices_.size()) {
        for (const auto& t : simplices_[d + 1]) {
          const bool contains = std::all_of(s.vertices.begin(), s.vertices.end(), [&](Index v) {
            return std::find(t.vertices.begin(), t.vertices.end(), v) != t.vertices.end();
          });
          if (contains) {
            maximal = false;
            break;
          }
        }
      }
      if (maximal) out.push_back(s);
    }
  }
  return out;
}

OrderComplex order_complex(const FinitePoset& poset) {
  std::vector<std::vector<Chain>> by_dim;
  std::vector<Index> current;
  std::function<void(Index)> extend = [&](Index top) {
    const auto d = current.size() - 1;
    if (by_dim.size() <= d) by_dim.resize(d + 1);
    by_dim[d].push_back(Chain{current});
    for (Index q = 0; q < poset.size(); ++q) {
      if (!poset.less(top, q)) continue;
      current.push_back(q);
      extend(q);
      current.pop_back();
    }
  };
  for (Index p = 0; p < poset.size(); ++p) {
    current = {p};
    extend(p);
  }
  return OrderComplex(std::move(by_dim));
}

std::vector<Index> atoms(const FinitePoset& poset) {
  std::vector<Index> out;
  for (Index p = 0; p < poset.size(); ++p) {
    bool minimal = true;
    for (Index q = 0; q < poset.size() && minimal; ++q) minimal = !poset.less(q, p);
    if (minimal) out.push_back(p);
  }
  return out;
}

FinitePoset e_subposet(const FinitePoset& poset, std::vector<std::pair<Index, Index>>* pairs_out) {
  std::vector<std::pair<Index, Index>> pairs;
  for (auto a : atoms(poset))
    for (Index p = 0; p < poset.size(); ++p)
      if (poset.leq(a, p)) pairs.emplace_back(a, p);
  const Index n = static_cast<Index>(pairs.size());
  std::vector<std::string> labels;
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n * n), 0);
  for (Index i = 0; i < n; ++i) {
    const auto [a, p] = pairs[static_cast<std::size_t>(i)];
    labels.push_back("(" + poset.label(a) + "," + poset.label(p) + ")");
    for (Index j = 0; j < n; ++j) {
      const auto [b, q] = pairs[static_cast<std::size_t>(j)];
      leq[static_cast<std::size_t>(i * n + j)] = (a == b && poset.leq(p, q)) ? 1 : 0;
    }
  }
  if (pairs_out) *pairs_out = pairs;
  return FinitePoset(std::move(labels), std::move(leq));
}

FinitePoset product(const FinitePoset& first, const FinitePoset& second) {
  const Index m = first.size(), k = second.size(), n = m * k;
  std::vector<std::string> labels;
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n * n), 0);
  for (Index p = 0; p < m; ++p)
    for (Index q = 0; q < k; ++q) labels.push_back("(" + first.label(p) + "," + second.label(q) + ")");
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      leq[static_cast<std::size_t>(i * n + j)] =
          (first.leq(i / k, j / k) && second.leq(i % k, j % k)) ? 1 : 0;
  return FinitePoset(std::move(labels), std::move(leq));
}

FinitePoset dual(const FinitePoset& poset) {
  const Index n = poset.size();
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n * n), 0);
  for (Index p = 0; p < n; ++p)
    for (Index q = 0; q < n; ++q) leq[static_cast<std::size_t>(p * n + q)] = poset.leq(q, p) ? 1 : 0;
  return FinitePoset(poset.labels(), std::move(leq));
}

FinitePoset induced_subposet(const FinitePoset& poset, const std::vector<Index>& elements) {
  const Index n = static_cast<Index>(elements.size());
  std::vector<std::string> labels;
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n * n), 0);
  for (Index i = 0; i < n; ++i) {
    labels.push_back(poset.label(elements[static_cast<std::size_t>(i)]));
    for (Index j = 0; j < n; ++j)
      leq[static_cast<std::size_t>(i * n + j)] =
          poset.leq(elements[static_cast<std::size_t>(i)], elements[static_cast<std::size_t>(j)]);
  }
  return FinitePoset(std::move(labels), std::move(leq));
}

}  // namespace dlim
