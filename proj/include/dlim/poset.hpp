// Finite posets, chains, order complexes and the atom resolution E(P).
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dlim/numeric.hpp"

namespace dlim {

enum class Axiom { reflexive, antisymmetric, transitive };

const char* to_string(Axiom axiom);

/// A relation fails one of the partial-order axioms; `witness` names the offending pair.
class AxiomViolation : public InputError {
 public:
  AxiomViolation(Axiom axiom, std::string first, std::string second);
  Axiom axiom;
  std::pair<std::string, std::string> witness;
};

/// Finite partial order over opaque string labels, stored as an index-based relation matrix.
class FinitePoset {
 public:
  FinitePoset() = default;

  /// Builds from an index relation (row-major n*n, leq[p*n+q] != 0 iff p <= q).
  /// Throws AxiomViolation unless the relation is a partial order.
  FinitePoset(std::vector<std::string> labels, std::vector<std::uint8_t> leq);

  Index size() const { return static_cast<Index>(labels_.size()); }
  bool empty() const { return labels_.empty(); }
  const std::string& label(Index p) const { return labels_[static_cast<std::size_t>(p)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Index> find(const std::string& label) const;
  /// Throws InputError for unknown labels.
  Index index_of(const std::string& label) const;

  bool leq(Index p, Index q) const { return leq_[static_cast<std::size_t>(p * size() + q)] != 0; }
  bool less(Index p, Index q) const { return p != q && leq(p, q); }
  bool comparable(Index p, Index q) const { return leq(p, q) || leq(q, p); }

  /// Pairs (p, q) with p < q and nothing strictly in between.
  std::vector<std::pair<Index, Index>> covers() const;
  bool covers(Index p, Index q) const;
  /// Indices sorted so that p < q implies p precedes q; ties break by index.
  std::vector<Index> linear_extension() const;

  const std::vector<std::uint8_t>& relation() const { return leq_; }

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
    return a.labels_ == b.labels_ && a.leq_ == b.leq_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;
};

/// Validates a labelled relation. Reflexive pairs must be present; see `load` helpers for the
/// lenient variant.
FinitePoset validate_poset(const std::vector<std::string>& elements,
                           const std::vector<std::pair<std::string, std::string>>& pairs);

/// Reflexive-transitive closure of index pairs on n points (row-major relation).
std::vector<std::uint8_t> reflexive_transitive_closure(
    Index n, const std::vector<std::pair<Index, Index>>& pairs);

FinitePoset chain_poset(Index n, const std::string& prefix = "x");
FinitePoset antichain_poset(Index n, const std::string& prefix = "x");

/// Strictly increasing sequence of poset elements; a simplex of the order complex.
struct Chain {
  std::vector<Index> vertices;

  Index dimension() const { return static_cast<Index>(vertices.size()) - 1; }
  Index front() const { return vertices.front(); }
  Index back() const { return vertices.back(); }
  /// The face omitting the k-th vertex.
  Chain face(Index k) const;

  friend bool operator==(const Chain&, const Chain&) = default;
  friend auto operator<=>(const Chain&, const Chain&) = default;
};

bool is_chain(const FinitePoset& poset, const Chain& chain);

class OrderComplex {
 public:
  OrderComplex() = default;
  explicit OrderComplex(std::vector<std::vector<Chain>> by_dimension);

  /// -1 for the empty complex.
  Index dimension() const { return static_cast<Index>(simplices_.size()) - 1; }
  /// Simplices of dimension n in canonical (lexicographic) order; empty when out of range.
  const std::vector<Chain>& simplices(Index n) const;
  Index count(Index n) const { return static_cast<Index>(simplices(n).size()); }
  Index index_of(const Chain& chain) const;
  Index total_count() const;
  Integer euler_characteristic() const;
  std::vector<Chain> maximal_simplices() const;

 private:
  std::vector<std::vector<Chain>> simplices_;
  std::vector<std::map<std::vector<Index>, Index>> lookup_;
};

OrderComplex order_complex(const FinitePoset& poset);

std::vector<Index> atoms(const FinitePoset& poset);
/// E(P): pairs (a, p) with a an atom and a <= p, ordered by (a,p) <= (b,q) iff a = b, p <= q.
/// Labels are "(a,p)"; `pairs` (if given) receives the index pair behind each element.
FinitePoset e_subposet(const FinitePoset& poset,
                       std::vector<std::pair<Index, Index>>* pairs = nullptr);
/// Componentwise order; element (p, q) has index p * |Q| + q and label "(p,q)".
FinitePoset product(const FinitePoset& first, const FinitePoset& second);
FinitePoset dual(const FinitePoset& poset);
/// The subposet on the given elements (in the given order).
FinitePoset induced_subposet(const FinitePoset& poset, const std::vector<Index>& elements);

/// A point of |P|: a chain with nonnegative weights summing to one.
template <typename Scalar = Rational>
struct WeightedChain {
  Chain chain;
  std::vector<Scalar> weights;

  friend bool operator==(const WeightedChain&, const WeightedChain&) = default;
};

class InvalidWeights : public InputError {
 public:
  using InputError::InputError;
};

/// Drops zero-weight vertices.
template <typename Scalar>
WeightedChain<Scalar> canonical(const WeightedChain<Scalar>& x) {
  WeightedChain<Scalar> out;
  for (std::size_t i = 0; i < x.weights.size(); ++i) {
    if (x.weights[i] != Scalar(0)) {
      out.chain.vertices.push_back(x.chain.vertices[i]);
      out.weights.push_back(x.weights[i]);
    }
  }
  return out;
}

/// Validates chain order, weight signs and total mass, then canonicalizes.
template <typename Scalar>
WeightedChain<Scalar> make_weighted_chain(const FinitePoset& poset, Chain chain,
                                          std::vector<Scalar> weights) {
  if (chain.vertices.empty() || chain.vertices.size() != weights.size())
    throw InvalidWeights("weighted chain needs one weight per vertex");
  if (!is_chain(poset, chain)) throw InvalidWeights("vertices do not form a strict chain");
  Scalar total(0);
  for (const auto& w : weights) {
    if (w < Scalar(0)) throw InvalidWeights("negative weight");
    total += w;
  }
  if (total != Scalar(1)) throw InvalidWeights("weights do not sum to 1");
  return canonical(WeightedChain<Scalar>{std::move(chain), std::move(weights)});
}

}  // namespace dlim
