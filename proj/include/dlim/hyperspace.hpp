// Points of the order complex of the hyperspace K(X) of a finite metric space: weighted chains
// of subsets, their embedding into functions on X (plus an adjoined point at distance one),
// exact recovery of the minimal chain, and the quantitative stability estimates.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dlim/metrics.hpp"

namespace dlim {

class NotAChain : public InputError {
 public:
  using InputError::InputError;
};

/// Strictly increasing subsets A_1 < ... < A_n with positive weights summing to one.
template <typename Scalar = Rational>
struct HyperPoint {
  std::vector<Subset> chain;
  std::vector<Scalar> weights;

  Index length() const { return static_cast<Index>(chain.size()); }
  friend bool operator==(const HyperPoint&, const HyperPoint&) = default;
};

template <typename Scalar>
HyperPoint<Scalar> make_hyperpoint(const FiniteMetricSpace<Scalar>& X, std::vector<Subset> chain,
                                   std::vector<Scalar> weights) {
  if (chain.empty() || chain.size() != weights.size())
    throw InvalidWeights("hyperpoint needs one weight per subset");
  Scalar total(0);
  for (std::size_t i = 0; i < chain.size(); ++i) {
    chain[i] = make_subset(chain[i]);
    for (Index p : chain[i])
      if (p < 0 || p >= X.size()) throw InputError("subset point outside the space");
    if (i > 0 && (!contains(chain[i], chain[i - 1]) || chain[i] == chain[i - 1]))
      throw NotAChain("subsets must increase strictly");
    if (!(weights[i] > Scalar(0))) throw InvalidWeights("hyperpoint weights must be positive");
    total += weights[i];
  }
  if (total != Scalar(1)) throw InvalidWeights("weights do not sum to 1");
  return {std::move(chain), std::move(weights)};
}

/// Values on the points of X and, when adjoined, at the extra point p with d(p, x) = 1.
template <typename Scalar = Rational>
struct FunctionVector {
  std::vector<Scalar> values;
  std::optional<Scalar> adjoined;

  friend bool operator==(const FunctionVector&, const FunctionVector&) = default;
};

class DiameterExceeded : public InputError {
 public:
  using InputError::InputError;
};

/// e(A)(x) = d(x, A); e(A)(p) = 1.
template <typename Scalar>
FunctionVector<Scalar> embed_subset(const FiniteMetricSpace<Scalar>& X, const Subset& a, bool adjoin = false) {
  FunctionVector<Scalar> f;
  for (Index x = 0; x < X.size(); ++x) f.values.push_back(point_distance(X, x, a));
  if (adjoin) f.adjoined = Scalar(1);
  return f;
}

/// F = sum of lambda_i e(A_i). Requires diameter(X) <= 1.
template <typename Scalar>
FunctionVector<Scalar> embed_hyperpoint(const FiniteMetricSpace<Scalar>& X, const HyperPoint<Scalar>& h,
                                        bool adjoin = false) {
  if (X.diameter() > Scalar(1)) throw DiameterExceeded("space diameter exceeds 1");
  FunctionVector<Scalar> f;
  f.values.assign(static_cast<std::size_t>(X.size()), Scalar(0));
  Scalar mass(0);
  for (std::size_t i = 0; i < h.chain.size(); ++i) {
    for (Index x = 0; x < X.size(); ++x)
      f.values[static_cast<std::size_t>(x)] += h.weights[i] * point_distance(X, x, h.chain[i]);
    mass += h.weights[i];
  }
  if (adjoin) f.adjoined = mass;
  return f;
}

template <typename Scalar>
Scalar supnorm_distance(const FunctionVector<Scalar>& f, const FunctionVector<Scalar>& g) {
  if (f.values.size() != g.values.size() || f.adjoined.has_value() != g.adjoined.has_value())
    throw DomainMismatch("function vectors live on different spaces");
  Scalar best(0);
  for (std::size_t i = 0; i < f.values.size(); ++i) best = std::max(best, abs_value<Scalar>(f.values[i] - g.values[i]));
  if (f.adjoined) best = std::max(best, abs_value<Scalar>(*f.adjoined - *g.adjoined));
  return best;
}

class NotInHull : public InputError {
 public:
  using InputError::InputError;
};

/// The unique hyperpoint embedding to F. The first subset is the zero set of F; its weight is
/// min over x outside it of F(x) / d(x, A_1); subtracting it exposes the next zero set. Residual
/// weight left once F is exhausted belongs to the whole space X.
template <typename Scalar>
HyperPoint<Scalar> recover_minimal_chain(const FiniteMetricSpace<Scalar>& X, const FunctionVector<Scalar>& f) {
  if (static_cast<Index>(f.values.size()) != X.size()) throw DomainMismatch("function vector size mismatch");
  if (f.adjoined && *f.adjoined != Scalar(1)) throw NotInHull("value at the adjoined point is not 1");
  std::vector<Scalar> rest = f.values;
  Scalar left(1);
  HyperPoint<Scalar> h;
  Subset all(static_cast<std::size_t>(X.size()));
  std::iota(all.begin(), all.end(), Index(0));
  for (;;) {
    Subset zero;
    for (Index x = 0; x < X.size(); ++x) {
      if (rest[static_cast<std::size_t>(x)] < Scalar(0)) throw NotInHull("negative residual");
      if (rest[static_cast<std::size_t>(x)] == Scalar(0)) zero.push_back(x);
    }
    if (zero.empty()) throw NotInHull("function has no zero");
    if (zero == all) {
      if (left > Scalar(0)) {
        h.chain.push_back(all);
        h.weights.push_back(left);
      }
      break;
    }
    if (!(left > Scalar(0))) throw NotInHull("weights exhausted before the function");
    std::optional<Scalar> weight;
    for (Index x = 0; x < X.size(); ++x) {
      if (contains_point(zero, x)) continue;
      Scalar ratio = rest[static_cast<std::size_t>(x)] / point_distance(X, x, zero);
      if (!weight || ratio < *weight) weight = ratio;
    }
    if (*weight > left) throw NotInHull("weights exceed 1");
    for (Index x = 0; x < X.size(); ++x) rest[static_cast<std::size_t>(x)] -= *weight * point_distance(X, x, zero);
    left -= *weight;
    h.chain.push_back(std::move(zero));
    h.weights.push_back(*weight);
  }
  if (embed_hyperpoint(X, h, false).values != f.values) throw NotInHull("peeling does not reproduce the function");
  return h;
}

template <typename Scalar>
Subset whole_space(const FiniteMetricSpace<Scalar>& X) {
  Subset all(static_cast<std::size_t>(X.size()));
  std::iota(all.begin(), all.end(), Index(0));
  return all;
}

/// max Gamma in (0,1] with every d(A_i, A_{i+1}) >= Gamma and every lambda_i >= Gamma.
template <typename Scalar>
Scalar gap_parameter(const FiniteMetricSpace<Scalar>& X, const HyperPoint<Scalar>& h) {
  Scalar g(1);
  for (const auto& w : h.weights) g = std::min(g, w);
  for (std::size_t i = 0; i + 1 < h.chain.size(); ++i) g = std::min(g, hausdorff_distance(X, h.chain[i], h.chain[i + 1]));
  return g;
}

class BadParameters : public InputError {
 public:
  using InputError::InputError;
};

template <typename Scalar = Rational>
struct StabilityConstants {
  Scalar eps;            // clamped to min(eps, 1, Gamma)
  Scalar delta_chain;    // (eps/2)^(2n): equal-length matching
  Integer phi;           // phi(0) = 1, phi(n) = 4 phi(n-1) + 1
  Scalar delta_block;    // (eps/6)^(4 phi(n)): block matching
};

inline Integer phi_exponent(Index n) {
  Integer p = 1;
  for (Index i = 0; i < n; ++i) p = 4 * p + 1;
  return p;
}

template <typename Scalar>
Scalar power(const Scalar& base, const Integer& exponent) {
  Scalar out(1), b = base;
  Integer e = exponent;
  while (e > 0) {
    if (e % 2 == 1) out *= b;
    b *= b;
    e /= 2;
  }
  return out;
}

template <typename Scalar>
StabilityConstants<Scalar> stability_constants(Index n, const Scalar& gamma, const Scalar& eps) {
  if (n < 0) throw BadParameters("chain length must be nonnegative");
  if (!(gamma > Scalar(0)) || gamma > Scalar(1)) throw BadParameters("Gamma must lie in (0,1]");
  if (!(eps > Scalar(0))) throw BadParameters("eps must be positive");
  StabilityConstants<Scalar> c;
  c.eps = std::min({eps, Scalar(1), gamma});
  c.delta_chain = power(Scalar(c.eps / Scalar(2)), Integer(2 * n));
  c.phi = phi_exponent(n);
  c.delta_block = power(Scalar(c.eps / Scalar(6)), Integer(4 * c.phi));
  return c;
}

/// Index decomposition 0 = l_0 <= k_1 <= l_1 <= ... <= l_n <= k_{n+1} = m: entries
/// k_i < j <= l_i of y are matched to A_i, entries l_{i-1} < j <= k_i are stray.
struct BlockDecomposition {
  std::vector<Index> k, l;  // k[i-1] = k_i, l[i-1] = l_i for i = 1..n
};

template <typename Scalar = Rational>
struct StabilityReport {
  Scalar distance{0};
  Scalar gamma{0};
  StabilityConstants<Scalar> constants;
  bool chain_applicable = false;  // y also has gap >= Gamma and distance <= delta_chain
  bool chain_holds = true;
  bool block_applicable = false;  // distance <= delta_block
  std::optional<BlockDecomposition> blocks;

  bool violation() const { return (chain_applicable && !chain_holds) || (block_applicable && !blocks); }
};

/// Searches for a block decomposition of y against x at tolerance eps.
template <typename Scalar>
std::optional<BlockDecomposition> find_block_decomposition(const FiniteMetricSpace<Scalar>& X,
                                                           const HyperPoint<Scalar>& x,
                                                           const HyperPoint<Scalar>& y, const Scalar& eps) {
  const Index n = x.length(), m = y.length();
  std::vector<Scalar> prefix(static_cast<std::size_t>(m + 1), Scalar(0));
  for (Index j = 0; j < m; ++j) prefix[static_cast<std::size_t>(j + 1)] = prefix[static_cast<std::size_t>(j)] + y.weights[static_cast<std::size_t>(j)];
  auto mass = [&](Index from, Index to) { return prefix[static_cast<std::size_t>(to)] - prefix[static_cast<std::size_t>(from)]; };
  // close[i][j]: d(A_i, B_j) <= eps (0-based).
  std::vector<std::vector<bool>> close(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(m)));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < m; ++j)
      close[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          hausdorff_distance(X, x.chain[static_cast<std::size_t>(i)], y.chain[static_cast<std::size_t>(j)]) <= eps;

  // reach[i][j]: the first i subsets of x are matched using the first j entries of y.
  std::vector<std::vector<std::optional<std::pair<Index, Index>>>> from(
      static_cast<std::size_t>(n + 1), std::vector<std::optional<std::pair<Index, Index>>>(static_cast<std::size_t>(m + 1)));
  std::vector<std::vector<bool>> reach(static_cast<std::size_t>(n + 1), std::vector<bool>(static_cast<std::size_t>(m + 1), false));
  reach[0][0] = true;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j <= m; ++j) {
      if (!reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) continue;
      for (Index k = j; k <= m; ++k) {
        if (mass(j, k) > eps) break;
        for (Index l = k; l <= m; ++l) {
          if (l > k && !close[static_cast<std::size_t>(i)][static_cast<std::size_t>(l - 1)]) break;
          if (abs_value<Scalar>(x.weights[static_cast<std::size_t>(i)] - mass(k, l)) <= eps &&
              !reach[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(l)]) {
            reach[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(l)] = true;
            from[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(l)] = std::make_pair(j, k);
          }
        }
      }
    }
  for (Index j = 0; j <= m; ++j) {
    if (!reach[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)] || mass(j, m) > eps) continue;
    BlockDecomposition d;
    d.k.assign(static_cast<std::size_t>(n), 0);
    d.l.assign(static_cast<std::size_t>(n), 0);
    Index at = j;
    for (Index i = n; i > 0; --i) {
      auto [prev, k] = *from[static_cast<std::size_t>(i)][static_cast<std::size_t>(at)];
      d.k[static_cast<std::size_t>(i - 1)] = k;
      d.l[static_cast<std::size_t>(i - 1)] = at;
      at = prev;
    }
    return d;
  }
  return std::nullopt;
}

/// Tests the two stability estimates for x (gap Gamma taken from x) against y.
template <typename Scalar>
StabilityReport<Scalar> stability_check(const FiniteMetricSpace<Scalar>& X, const HyperPoint<Scalar>& x,
                                        const HyperPoint<Scalar>& y, const Scalar& eps) {
  StabilityReport<Scalar> r;
  r.distance = supnorm_distance(embed_hyperpoint(X, x, true), embed_hyperpoint(X, y, true));
  r.gamma = gap_parameter(X, x);
  r.constants = stability_constants(x.length(), r.gamma, eps);
  const Scalar& e = r.constants.eps;

  // Equal-length matching needs the gap bound on both sides; use the smaller Gamma.
  const Scalar gamma_both = std::min(r.gamma, gap_parameter(X, y));
  auto both = stability_constants(x.length(), gamma_both, eps);
  r.chain_applicable = r.distance <= both.delta_chain;
  if (r.chain_applicable) {
    r.chain_holds = x.length() == y.length();
    for (std::size_t i = 0; r.chain_holds && i < x.chain.size(); ++i)
      r.chain_holds = hausdorff_distance(X, x.chain[i], y.chain[i]) <= both.eps &&
                      abs_value<Scalar>(x.weights[i] - y.weights[i]) <= both.eps;
  }
  r.block_applicable = r.distance <= r.constants.delta_block;
  if (r.block_applicable) r.blocks = find_block_decomposition(X, x, y, e);
  return r;
}

class PointSetMismatch : public InputError {
 public:
  using InputError::InputError;
};

/// The same chain and weights read in a second metric on the same points.
template <typename Scalar>
HyperPoint<Scalar> remetrize_transport(const FiniteMetricSpace<Scalar>& X, const FiniteMetricSpace<Scalar>& Y,
                                       const HyperPoint<Scalar>& h) {
  if (X.labels() != Y.labels()) throw PointSetMismatch("metrics are defined on different point sets");
  return h;
}

/// F -> e_Y(recovered chain of F under X).
template <typename Scalar>
FunctionVector<Scalar> transport_function(const FiniteMetricSpace<Scalar>& X, const FiniteMetricSpace<Scalar>& Y,
                                          const FunctionVector<Scalar>& f) {
  auto h = recover_minimal_chain(X, f);
  return embed_hyperpoint(Y, remetrize_transport(X, Y, h), f.adjoined.has_value());
}

/// An alpha in (0, beta] such that d_X(A, B) <= alpha forces d_Y(A, B) <= beta over every pair
/// of nonempty subsets: half the smallest d_X(A, B) with d_Y(A, B) > beta, capped at beta
/// (the space must be small: 2^|X| subsets).
template <typename Scalar>
Scalar subset_modulus(const FiniteMetricSpace<Scalar>& X, const FiniteMetricSpace<Scalar>& Y, const Scalar& beta) {
  if (X.labels() != Y.labels()) throw PointSetMismatch("metrics are defined on different point sets");
  if (X.size() > 10) throw InputError("subset modulus needs at most 10 points");
  std::vector<Subset> subsets;
  for (Index mask = 1; mask < (Index(1) << X.size()); ++mask) {
    Subset s;
    for (Index p = 0; p < X.size(); ++p)
      if (mask >> p & 1) s.push_back(p);
    subsets.push_back(std::move(s));
  }
  Scalar alpha = beta;
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (std::size_t j = i + 1; j < subsets.size(); ++j)
      if (hausdorff_distance(Y, subsets[i], subsets[j]) > beta)
        alpha = std::min(alpha, Scalar(hausdorff_distance(X, subsets[i], subsets[j]) / Scalar(2)));
  return alpha;
}

template <typename Scalar = Rational>
struct ContinuityReport {
  Scalar beta, alpha, delta;
  Scalar distance;     // ||x - y|| under X
  Scalar transported;  // ||T(x) - T(y)|| under Y
  bool applicable = false;
  bool holds = true;
};

/// For y within the block-matching delta of x at tolerance alpha, the transported points are
/// within (3n + 1) beta = eps.
template <typename Scalar>
ContinuityReport<Scalar> continuity_check(const FiniteMetricSpace<Scalar>& X, const FiniteMetricSpace<Scalar>& Y,
                                          const HyperPoint<Scalar>& x, const HyperPoint<Scalar>& y,
                                          const Scalar& eps) {
  ContinuityReport<Scalar> r;
  const Index n = x.length();
  r.beta = eps / Scalar(3 * n + 1);
  r.alpha = subset_modulus(X, Y, r.beta);
  r.delta = stability_constants(n, gap_parameter(X, x), r.alpha).delta_block;
  r.distance = supnorm_distance(embed_hyperpoint(X, x, true), embed_hyperpoint(X, y, true));
  r.transported = supnorm_distance(embed_hyperpoint(Y, remetrize_transport(X, Y, x), true),
                                   embed_hyperpoint(Y, remetrize_transport(X, Y, y), true));
  r.applicable = r.distance <= r.delta;
  if (r.applicable) r.holds = r.transported <= eps;
  return r;
}

/// The subsets of a set of hyperpoints as points of a metric space under the Hausdorff metric.
template <typename Scalar>
struct HyperspaceSlice {
  FiniteMetricSpace<Scalar> space;
  std::vector<Subset> subsets;

  Index index_of(const Subset& s) const {
    auto it = std::find(subsets.begin(), subsets.end(), s);
    if (it == subsets.end()) throw DomainMismatch("subset not in the hyperspace slice");
    return static_cast<Index>(it - subsets.begin());
  }
  /// The hyperpoint as a weighted chain of slice points.
  WeightedChain<Scalar> chain_of(const HyperPoint<Scalar>& h) const {
    WeightedChain<Scalar> w;
    for (const auto& s : h.chain) w.chain.vertices.push_back(index_of(s));
    w.weights = h.weights;
    return w;
  }
};

template <typename Scalar>
std::string subset_label(const FiniteMetricSpace<Scalar>& X, const Subset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + X.label(s[i]);
  return out + "}";
}

template <typename Scalar>
HyperspaceSlice<Scalar> hyperspace_slice(const FiniteMetricSpace<Scalar>& X,
                                         const std::vector<HyperPoint<Scalar>>& points) {
  std::vector<Subset> subsets;
  for (const auto& h : points)
    for (const auto& s : h.chain)
      if (std::find(subsets.begin(), subsets.end(), s) == subsets.end()) subsets.push_back(s);
  std::sort(subsets.begin(), subsets.end());
  const Index k = static_cast<Index>(subsets.size());
  Matrix<Scalar> d(k, k);
  std::vector<std::string> labels;
  for (Index i = 0; i < k; ++i) {
    labels.push_back(subset_label(X, subsets[static_cast<std::size_t>(i)]));
    for (Index j = 0; j < k; ++j)
      d(i, j) = hausdorff_distance(X, subsets[static_cast<std::size_t>(i)], subsets[static_cast<std::size_t>(j)]);
  }
  return {FiniteMetricSpace<Scalar>(std::move(labels), std::move(d)), std::move(subsets)};
}

template <typename Scalar = Rational>
struct PhiComparison {
  Scalar supnorm, l1, ky_fan, kantorovich;
  bool supnorm_below_l1 = true;
  bool kantorovich_below_l1 = true;
  bool ky_fan_applicable = false;  // supnorm <= delta_block(eps, n, Gamma_x)
  Scalar ky_fan_bound{0};          // ((4n + 1)(n + 1) + 1) eps
  bool ky_fan_holds = true;

  bool passed() const { return supnorm_below_l1 && kantorovich_below_l1 && ky_fan_holds; }
};

/// Sup-norm distance of the embeddings against the L1, Ky Fan and Kantorovich distances of the
/// step functions and measures in K(X).
template <typename Scalar>
PhiComparison<Scalar> phi_comparison(const FiniteMetricSpace<Scalar>& X, const HyperPoint<Scalar>& x,
                                     const HyperPoint<Scalar>& y, const std::optional<Scalar>& eps = std::nullopt) {
  PhiComparison<Scalar> r;
  auto slice = hyperspace_slice(X, std::vector<HyperPoint<Scalar>>{x, y});
  auto cx = slice.chain_of(x), cy = slice.chain_of(y);
  auto fx = step_function_of(cx), fy = step_function_of(cy);
  r.supnorm = supnorm_distance(embed_hyperpoint(X, x, true), embed_hyperpoint(X, y, true));
  r.l1 = l1_step_distance(slice.space, fx, fy);
  r.ky_fan = ky_fan_distance(slice.space, fx, fy);
  r.kantorovich = kantorovich_distance(slice.space, measure_of(cx), measure_of(cy));
  r.supnorm_below_l1 = r.supnorm <= r.l1;
  r.kantorovich_below_l1 = r.kantorovich <= r.l1;
  if (eps) {
    const Index n = x.length();
    auto c = stability_constants(n, gap_parameter(X, x), *eps);
    r.ky_fan_bound = Scalar((4 * n + 1) * (n + 1) + 1) * c.eps;
    r.ky_fan_applicable = r.supnorm <= c.delta_block;
    if (r.ky_fan_applicable) r.ky_fan_holds = r.ky_fan <= r.ky_fan_bound;
  }
  return r;
}

}  // namespace dlim
