// Exact metric computations on finite metric spaces: Hausdorff distance between subsets,
// Kantorovich distance between finite measures, L1 distance between step functions and the
// atom deformation of weighted chains.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "dlim/numeric.hpp"
#include "dlim/poset.hpp"

namespace dlim {

class MetricViolation : public InputError {
 public:
  using InputError::InputError;
};

/// Points with an exact symmetric distance matrix satisfying the metric axioms.
template <typename Scalar = Rational>
class FiniteMetricSpace {
 public:
  FiniteMetricSpace() = default;

  /// Throws MetricViolation naming the offending points.
  FiniteMetricSpace(std::vector<std::string> points, Matrix<Scalar> dist)
      : points_(std::move(points)), dist_(std::move(dist)) {
    const Index n = size();
    if (dist_.rows() != n || dist_.cols() != n) throw MetricViolation("distance matrix shape mismatch");
    for (Index i = 0; i < n; ++i) {
      if (dist_(i, i) != Scalar(0)) throw MetricViolation("d(" + label(i) + "," + label(i) + ") != 0");
      for (Index j = 0; j < n; ++j) {
        if (dist_(i, j) != dist_(j, i))
          throw MetricViolation("asymmetric distance between " + label(i) + " and " + label(j));
        if (i != j && !(dist_(i, j) > Scalar(0)))
          throw MetricViolation("nonpositive distance between " + label(i) + " and " + label(j));
      }
    }
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        for (Index k = 0; k < n; ++k)
          if (dist_(i, k) > dist_(i, j) + dist_(j, k))
            throw MetricViolation("triangle inequality fails at " + label(i) + ", " + label(j) + ", " +
                                  label(k));
  }

  Index size() const { return static_cast<Index>(points_.size()); }
  const std::string& label(Index i) const { return points_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& labels() const { return points_; }
  Index index_of(const std::string& name) const {
    auto it = std::find(points_.begin(), points_.end(), name);
    if (it == points_.end()) throw InputError("unknown point '" + name + "'");
    return static_cast<Index>(it - points_.begin());
  }
  const Scalar& operator()(Index i, Index j) const { return dist_(i, j); }
  const Matrix<Scalar>& matrix() const { return dist_; }

  Scalar diameter() const {
    Scalar best(0);
    for (Index i = 0; i < size(); ++i)
      for (Index j = 0; j < size(); ++j) best = std::max(best, dist_(i, j));
    return best;
  }

 private:
  std::vector<std::string> points_;
  Matrix<Scalar> dist_;
};

/// All distances equal to one.
template <typename Scalar = Rational>
FiniteMetricSpace<Scalar> discrete_space(Index n, const std::string& prefix = "x") {
  std::vector<std::string> labels;
  Matrix<Scalar> d(n, n);
  for (Index i = 0; i < n; ++i) {
    labels.push_back(prefix + std::to_string(i));
    for (Index j = 0; j < n; ++j) d(i, j) = i == j ? Scalar(0) : Scalar(1);
  }
  return FiniteMetricSpace<Scalar>(std::move(labels), std::move(d));
}

/// Distinct points of the real line with |s - t|.
template <typename Scalar = Rational>
FiniteMetricSpace<Scalar> line_space(const std::vector<Scalar>& coordinates,
                                     const std::string& prefix = "x") {
  const Index n = static_cast<Index>(coordinates.size());
  std::vector<std::string> labels;
  Matrix<Scalar> d(n, n);
  for (Index i = 0; i < n; ++i) {
    labels.push_back(prefix + std::to_string(i));
    for (Index j = 0; j < n; ++j)
      d(i, j) = abs_value<Scalar>(coordinates[static_cast<std::size_t>(i)] -
                                  coordinates[static_cast<std::size_t>(j)]);
  }
  return FiniteMetricSpace<Scalar>(std::move(labels), std::move(d));
}

// ---------------------------------------------------------------------------------------------
// Subsets and the Hausdorff distance

class EmptySubset : public InputError {
 public:
  using InputError::InputError;
};

/// Sorted, duplicate-free, nonempty list of point indices.
using Subset = std::vector<Index>;

inline Subset make_subset(std::vector<Index> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.empty()) throw EmptySubset("subset must be nonempty");
  return points;
}

inline bool contains(const Subset& a, const Subset& b) {
  return std::includes(a.begin(), a.end(), b.begin(), b.end());
}

inline bool contains_point(const Subset& a, Index x) { return std::binary_search(a.begin(), a.end(), x); }

/// d(x, A) = min over a in A of d(x, a).
template <typename Scalar>
Scalar point_distance(const FiniteMetricSpace<Scalar>& X, Index x, const Subset& a) {
  if (a.empty()) throw EmptySubset("distance to the empty set");
  Scalar best = X(x, a.front());
  for (Index p : a) best = std::min(best, X(x, p));
  return best;
}

template <typename Scalar>
Scalar hausdorff_distance(const FiniteMetricSpace<Scalar>& X, const Subset& a, const Subset& b) {
  if (a.empty() || b.empty()) throw EmptySubset("Hausdorff distance needs nonempty subsets");
  Scalar best(0);
  for (Index p : a) best = std::max(best, point_distance(X, p, b));
  for (Index q : b) best = std::max(best, point_distance(X, q, a));
  return best;
}

/// sup over x in X of |d(x, A) - d(x, B)|.
template <typename Scalar>
Scalar embedding_distance(const FiniteMetricSpace<Scalar>& X, const Subset& a, const Subset& b) {
  if (a.empty() || b.empty()) throw EmptySubset("embedding distance needs nonempty subsets");
  Scalar best(0);
  for (Index x = 0; x < X.size(); ++x)
    best = std::max(best, abs_value<Scalar>(point_distance(X, x, a) - point_distance(X, x, b)));
  return best;
}

/// When A does not contain B: max over b in B of d(A, b) / 3, a radius within which no
/// perturbation of (A, B) becomes a containment. None when A contains B.
template <typename Scalar>
std::optional<Scalar> nonorder_margin(const FiniteMetricSpace<Scalar>& X, const Subset& a,
                                      const Subset& b) {
  if (a.empty() || b.empty()) throw EmptySubset("margin needs nonempty subsets");
  if (contains(a, b)) return std::nullopt;
  Scalar best(0);
  for (Index q : b) best = std::max(best, point_distance(X, q, a));
  return best / Scalar(3);
}

// ---------------------------------------------------------------------------------------------
// Finite measures and the Kantorovich distance

class NotProbability : public InputError {
 public:
  using InputError::InputError;
};

/// Point index -> weight, zero weights dropped.
template <typename Scalar = Rational>
using FiniteMeasure = std::map<Index, Scalar>;

template <typename Scalar>
FiniteMeasure<Scalar> canonical(const FiniteMeasure<Scalar>& m) {
  FiniteMeasure<Scalar> out;
  for (const auto& [x, w] : m)
    if (w != Scalar(0)) out.emplace(x, w);
  return out;
}

template <typename Scalar>
FiniteMeasure<Scalar> make_probability(const FiniteMetricSpace<Scalar>& X, const FiniteMeasure<Scalar>& m) {
  Scalar total(0);
  for (const auto& [x, w] : m) {
    if (x < 0 || x >= X.size()) throw NotProbability("measure supported outside the space");
    if (w < Scalar(0)) throw NotProbability("negative weight at " + X.label(x));
    total += w;
  }
  if (total != Scalar(1)) throw NotProbability("weights do not sum to 1");
  return canonical(m);
}

template <typename Scalar>
FiniteMeasure<Scalar> dirac(Index x) {
  return {{x, Scalar(1)}};
}

/// Total variation l1(lambda, mu) = sum over points of |lambda(x) - mu(x)|.
template <typename Scalar>
Scalar l1_distance(const FiniteMeasure<Scalar>& a, const FiniteMeasure<Scalar>& b) {
  Scalar total(0);
  for (const auto& [x, w] : a) {
    auto it = b.find(x);
    total += abs_value<Scalar>(w - (it == b.end() ? Scalar(0) : it->second));
  }
  for (const auto& [x, w] : b)
    if (!a.count(x)) total += abs_value<Scalar>(w);
  return total;
}

template <typename Scalar>
struct TransportPlan {
  Scalar cost{0};
  /// (source point, target point, mass) over the basic cells with positive mass.
  std::vector<std::tuple<Index, Index, Scalar>> flows;
};

namespace detail {

template <typename Scalar>
struct TransportProblem {
  std::vector<Index> sources, targets;
  std::vector<Scalar> supply, demand;
  Matrix<Scalar> cost;
};

template <typename Scalar>
TransportProblem<Scalar> transport_problem(const FiniteMetricSpace<Scalar>& X,
                                           const FiniteMeasure<Scalar>& lambda,
                                           const FiniteMeasure<Scalar>& mu) {
  TransportProblem<Scalar> t;
  auto a = make_probability(X, lambda), b = make_probability(X, mu);
  for (const auto& [x, w] : a) t.sources.push_back(x), t.supply.push_back(w);
  for (const auto& [y, w] : b) t.targets.push_back(y), t.demand.push_back(w);
  const Index m = static_cast<Index>(t.sources.size()), n = static_cast<Index>(t.targets.size());
  t.cost.resize(m, n);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < n; ++j)
      t.cost(i, j) = X(t.sources[static_cast<std::size_t>(i)], t.targets[static_cast<std::size_t>(j)]);
  return t;
}

}  // namespace detail

/// Optimal coupling by the transportation simplex: northwest-corner start, potentials for the
/// reduced costs, Bland's rule on entering and leaving cells.
template <typename Scalar>
TransportPlan<Scalar> optimal_transport(const FiniteMetricSpace<Scalar>& X,
                                        const FiniteMeasure<Scalar>& lambda,
                                        const FiniteMeasure<Scalar>& mu) {
  auto t = detail::transport_problem(X, lambda, mu);
  const Index m = static_cast<Index>(t.supply.size()), n = static_cast<Index>(t.demand.size());
  Matrix<Scalar> flow = Matrix<Scalar>::Zero(m, n);
  std::vector<std::vector<bool>> basic(static_cast<std::size_t>(m), std::vector<bool>(static_cast<std::size_t>(n)));

  {
    std::vector<Scalar> a = t.supply, b = t.demand;
    Index i = 0, j = 0;
    for (;;) {
      Scalar q = std::min(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]);
      flow(i, j) = q;
      basic[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
      a[static_cast<std::size_t>(i)] -= q;
      b[static_cast<std::size_t>(j)] -= q;
      if (i == m - 1 && j == n - 1) break;
      if (i < m - 1 && (a[static_cast<std::size_t>(i)] == Scalar(0) || j == n - 1)) ++i;
      else ++j;
    }
  }

  // Nodes 0..m-1 are sources, m..m+n-1 targets; basic cells form a spanning tree.
  auto adjacency = [&] {
    std::vector<std::vector<Index>> adj(static_cast<std::size_t>(m + n));
    for (Index i = 0; i < m; ++i)
      for (Index j = 0; j < n; ++j)
        if (basic[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
          adj[static_cast<std::size_t>(i)].push_back(m + j);
          adj[static_cast<std::size_t>(m + j)].push_back(i);
        }
    return adj;
  };

  for (;;) {
    auto adj = adjacency();
    std::vector<Scalar> pot(static_cast<std::size_t>(m + n));
    std::vector<bool> seen(static_cast<std::size_t>(m + n), false);
    std::vector<Index> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      Index v = stack.back();
      stack.pop_back();
      for (Index w : adj[static_cast<std::size_t>(v)]) {
        if (seen[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = true;
        // u_i + v_j = c_ij on basic cells.
        const Scalar& c = v < m ? t.cost(v, w - m) : t.cost(w, v - m);
        pot[static_cast<std::size_t>(w)] = c - pot[static_cast<std::size_t>(v)];
        stack.push_back(w);
      }
    }
    Index ei = -1, ej = -1;
    for (Index i = 0; i < m && ei < 0; ++i)
      for (Index j = 0; j < n; ++j) {
        if (basic[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) continue;
        if (t.cost(i, j) - pot[static_cast<std::size_t>(i)] - pot[static_cast<std::size_t>(m + j)] < Scalar(0)) {
          ei = i;
          ej = j;
          break;
        }
      }
    if (ei < 0) break;

    // Tree path from source ei to target ej closes the cycle through the entering cell.
    std::vector<Index> parent(static_cast<std::size_t>(m + n), -1);
    std::vector<Index> queue{ei};
    parent[static_cast<std::size_t>(ei)] = ei;
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (Index w : adj[static_cast<std::size_t>(queue[h])])
        if (parent[static_cast<std::size_t>(w)] < 0) {
          parent[static_cast<std::size_t>(w)] = queue[h];
          queue.push_back(w);
        }
    std::vector<std::pair<Index, Index>> path;  // cells from ej back to ei
    for (Index v = m + ej; v != ei;) {
      Index u = parent[static_cast<std::size_t>(v)];
      path.push_back(v < m ? std::make_pair(v, u - m) : std::make_pair(u, v - m));
      v = u;
    }
    // path[0] touches ej and receives -, then signs alternate.
    std::optional<Scalar> theta;
    std::pair<Index, Index> leaving{-1, -1};
    for (std::size_t k = 0; k < path.size(); k += 2) {
      auto [i, j] = path[k];
      if (!theta || flow(i, j) < *theta || (flow(i, j) == *theta && path[k] < leaving)) {
        theta = flow(i, j);
        leaving = path[k];
      }
    }
    flow(ei, ej) += *theta;
    for (std::size_t k = 0; k < path.size(); ++k) {
      auto [i, j] = path[k];
      if (k % 2 == 0) flow(i, j) -= *theta;
      else flow(i, j) += *theta;
    }
    basic[static_cast<std::size_t>(leaving.first)][static_cast<std::size_t>(leaving.second)] = false;
    basic[static_cast<std::size_t>(ei)][static_cast<std::size_t>(ej)] = true;
  }

  TransportPlan<Scalar> plan;
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < n; ++j)
      if (basic[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] && flow(i, j) != Scalar(0)) {
        plan.cost += flow(i, j) * t.cost(i, j);
        plan.flows.emplace_back(t.sources[static_cast<std::size_t>(i)], t.targets[static_cast<std::size_t>(j)],
                                flow(i, j));
      }
  return plan;
}

template <typename Scalar>
Scalar kantorovich_distance(const FiniteMetricSpace<Scalar>& X, const FiniteMeasure<Scalar>& lambda,
                            const FiniteMeasure<Scalar>& mu) {
  return optimal_transport(X, lambda, mu).cost;
}

/// Minimum over every basic feasible solution of the transportation polytope, found by
/// enumerating all spanning trees of the source/target bipartite graph. Supports up to 5x5.
template <typename Scalar>
Scalar kantorovich_by_enumeration(const FiniteMetricSpace<Scalar>& X, const FiniteMeasure<Scalar>& lambda,
                                  const FiniteMeasure<Scalar>& mu) {
  auto t = detail::transport_problem(X, lambda, mu);
  const Index m = static_cast<Index>(t.supply.size()), n = static_cast<Index>(t.demand.size());
  if (m > 5 || n > 5) throw InputError("enumeration oracle supports at most 5 points per side");
  const Index need = m + n - 1;
  std::vector<std::pair<Index, Index>> cells;
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < n; ++j) cells.emplace_back(i, j);

  std::optional<Scalar> best;
  std::vector<std::pair<Index, Index>> chosen;

  auto evaluate = [&] {
    // Peel leaves: a leaf's single cell carries all of that node's remaining mass.
    std::vector<Scalar> rest(static_cast<std::size_t>(m + n));
    for (Index i = 0; i < m; ++i) rest[static_cast<std::size_t>(i)] = t.supply[static_cast<std::size_t>(i)];
    for (Index j = 0; j < n; ++j) rest[static_cast<std::size_t>(m + j)] = t.demand[static_cast<std::size_t>(j)];
    std::vector<bool> used(chosen.size(), false);
    std::vector<Index> degree(static_cast<std::size_t>(m + n), 0);
    for (auto [i, j] : chosen) ++degree[static_cast<std::size_t>(i)], ++degree[static_cast<std::size_t>(m + j)];
    Scalar cost(0);
    for (std::size_t round = 0; round < chosen.size(); ++round) {
      std::size_t pick = chosen.size();
      Index leaf = -1;
      for (std::size_t e = 0; e < chosen.size() && pick == chosen.size(); ++e) {
        if (used[e]) continue;
        auto [i, j] = chosen[e];
        if (degree[static_cast<std::size_t>(i)] == 1) pick = e, leaf = i;
        else if (degree[static_cast<std::size_t>(m + j)] == 1) pick = e, leaf = m + j;
      }
      auto [i, j] = chosen[pick];
      const Index other = leaf == i ? m + j : i;
      Scalar x = rest[static_cast<std::size_t>(leaf)];
      if (x < Scalar(0)) return;
      used[pick] = true;
      rest[static_cast<std::size_t>(leaf)] -= x;
      rest[static_cast<std::size_t>(other)] -= x;
      --degree[static_cast<std::size_t>(i)];
      --degree[static_cast<std::size_t>(m + j)];
      cost += x * t.cost(i, j);
    }
    for (const auto& r : rest)
      if (r != Scalar(0)) return;
    if (!best || cost < *best) best = cost;
  };

  std::function<void(std::size_t, std::vector<Index>)> search = [&](std::size_t k, std::vector<Index> comp) {
    if (static_cast<Index>(chosen.size()) == need) {
      evaluate();
      return;
    }
    if (k == cells.size() || static_cast<Index>(cells.size() - k) < need - static_cast<Index>(chosen.size()))
      return;
    auto [i, j] = cells[k];
    const Index ci = comp[static_cast<std::size_t>(i)], cj = comp[static_cast<std::size_t>(m + j)];
    if (ci != cj) {
      std::vector<Index> merged = comp;
      for (auto& c : merged)
        if (c == cj) c = ci;
      chosen.push_back(cells[k]);
      search(k + 1, std::move(merged));
      chosen.pop_back();
    }
    search(k + 1, std::move(comp));
  };
  std::vector<Index> comp(static_cast<std::size_t>(m + n));
  std::iota(comp.begin(), comp.end(), Index(0));
  search(0, comp);
  return *best;
}

// ---------------------------------------------------------------------------------------------
// Step functions [0, 1) -> X

class DomainMismatch : public InputError {
 public:
  using InputError::InputError;
};

/// Constant value values[i] on [breakpoints[i], breakpoints[i+1]); breakpoints run from 0 to 1.
template <typename Scalar = Rational>
struct StepFunction {
  std::vector<Scalar> breakpoints;
  std::vector<Index> values;

  friend bool operator==(const StepFunction&, const StepFunction&) = default;
};

template <typename Scalar>
StepFunction<Scalar> make_step_function(std::vector<Scalar> breakpoints, std::vector<Index> values) {
  if (breakpoints.size() < 2 || values.size() + 1 != breakpoints.size())
    throw DomainMismatch("step function needs one value per interval");
  if (breakpoints.front() != Scalar(0) || breakpoints.back() != Scalar(1))
    throw DomainMismatch("step function must be defined on [0,1)");
  for (std::size_t i = 1; i < breakpoints.size(); ++i)
    if (!(breakpoints[i - 1] < breakpoints[i])) throw DomainMismatch("breakpoints must increase strictly");
  return {std::move(breakpoints), std::move(values)};
}

namespace detail {

/// Visits (length, f value, g value) over the common refinement.
template <typename Scalar, typename Visit>
void refine(const StepFunction<Scalar>& f, const StepFunction<Scalar>& g, Visit visit) {
  if (f.breakpoints.empty() || g.breakpoints.empty() || f.breakpoints.front() != g.breakpoints.front() ||
      f.breakpoints.back() != g.breakpoints.back())
    throw DomainMismatch("step functions have different domains");
  std::size_t i = 0, j = 0;
  Scalar at = f.breakpoints.front();
  while (i < f.values.size() && j < g.values.size()) {
    const Scalar& fe = f.breakpoints[i + 1];
    const Scalar& ge = g.breakpoints[j + 1];
    Scalar end = std::min(fe, ge);
    visit(Scalar(end - at), f.values[i], g.values[j]);
    at = end;
    if (fe == end) ++i;
    if (ge == end) ++j;
  }
}

template <typename Scalar>
void check_values(const FiniteMetricSpace<Scalar>& X, const StepFunction<Scalar>& f) {
  for (Index v : f.values)
    if (v < 0 || v >= X.size()) throw DomainMismatch("step function takes a value outside the space");
}

}  // namespace detail

/// Integral over [0,1) of d(f(t), g(t)).
template <typename Scalar>
Scalar l1_step_distance(const FiniteMetricSpace<Scalar>& X, const StepFunction<Scalar>& f,
                        const StepFunction<Scalar>& g) {
  detail::check_values(X, f);
  detail::check_values(X, g);
  Scalar total(0);
  detail::refine(f, g, [&](const Scalar& len, Index a, Index b) { total += len * X(a, b); });
  return total;
}

/// inf over eps > 0 of eps + measure{t : d(f(t), g(t)) > eps}. The function is piecewise linear
/// with jumps at the pointwise distances, so the infimum is attained over the limit eps -> 0 and
/// the distinct positive distances.
template <typename Scalar>
Scalar ky_fan_distance(const FiniteMetricSpace<Scalar>& X, const StepFunction<Scalar>& f,
                       const StepFunction<Scalar>& g) {
  detail::check_values(X, f);
  detail::check_values(X, g);
  std::vector<std::pair<Scalar, Scalar>> pieces;  // (distance, length)
  detail::refine(f, g, [&](const Scalar& len, Index a, Index b) { pieces.emplace_back(X(a, b), len); });
  std::vector<Scalar> candidates{Scalar(0)};
  for (const auto& [d, len] : pieces)
    if (d > Scalar(0)) candidates.push_back(d);
  std::optional<Scalar> best;
  for (const auto& eps : candidates) {
    Scalar value = eps;
    for (const auto& [d, len] : pieces)
      if (d > eps) value += len;
    if (!best || value < *best) best = value;
  }
  return *best;
}

/// phi_x(t) = x_k for t in [lambda_1 + ... + lambda_{k-1}, lambda_1 + ... + lambda_k).
template <typename Scalar>
StepFunction<Scalar> step_function_of(const WeightedChain<Scalar>& x) {
  auto c = canonical(x);
  StepFunction<Scalar> f;
  f.breakpoints.push_back(Scalar(0));
  Scalar at(0);
  for (std::size_t i = 0; i < c.weights.size(); ++i) {
    at += c.weights[i];
    f.breakpoints.push_back(at);
    f.values.push_back(c.chain.vertices[i]);
  }
  return f;
}

/// Inverse of step_function_of: interval lengths, merging equal neighbouring values.
template <typename Scalar>
WeightedChain<Scalar> weights_of(const StepFunction<Scalar>& f) {
  WeightedChain<Scalar> x;
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    Scalar len = f.breakpoints[i + 1] - f.breakpoints[i];
    if (!x.chain.vertices.empty() && x.chain.vertices.back() == f.values[i]) {
      x.weights.back() += len;
    } else {
      x.chain.vertices.push_back(f.values[i]);
      x.weights.push_back(len);
    }
  }
  return x;
}

/// mu_x = sum of lambda_i delta_{x_i}.
template <typename Scalar>
FiniteMeasure<Scalar> measure_of(const WeightedChain<Scalar>& x) {
  FiniteMeasure<Scalar> m;
  for (std::size_t i = 0; i < x.weights.size(); ++i) m[x.chain.vertices[i]] += x.weights[i];
  return canonical(m);
}

template <typename Scalar = Rational>
struct GapFamilyValues {
  Index n = 0;
  Scalar l1, kantorovich;
};

/// p_n = (x_0 + ... + x_{n-1})/n and q_n = (x_1 + ... + x_n)/n on the chain x_0 < ... < x_n with
/// all distances 1: L1 of the step functions and Kantorovich distance of the measures.
template <typename Scalar = Rational>
GapFamilyValues<Scalar> gap_family(Index n) {
  if (n < 1) throw InputError("gap family needs n >= 1");
  auto P = chain_poset(n + 1);
  auto X = discrete_space<Scalar>(n + 1);
  Chain pc, qc;
  std::vector<Scalar> w(static_cast<std::size_t>(n), Scalar(1) / Scalar(n));
  for (Index i = 0; i < n; ++i) {
    pc.vertices.push_back(i);
    qc.vertices.push_back(i + 1);
  }
  auto p = make_weighted_chain(P, pc, w), q = make_weighted_chain(P, qc, w);
  return {n, l1_step_distance(X, step_function_of(p), step_function_of(q)),
          kantorovich_distance(X, measure_of(p), measure_of(q))};
}

class NotInE : public InputError {
 public:
  using InputError::InputError;
};

/// X_t = t a + (1 - t) X, where a <= x_1 is prepended with weight 0 when a != x_1.
template <typename Scalar>
WeightedChain<Scalar> deformation_point(const FinitePoset& poset, Index a, const WeightedChain<Scalar>& x,
                                        const Scalar& t) {
  auto c = canonical(x);
  if (c.chain.vertices.empty()) throw InvalidWeights("empty weighted chain");
  if (!poset.leq(a, c.chain.front())) throw NotInE("atom is not below the first vertex");
  if (t < Scalar(0) || t > Scalar(1)) throw InputError("deformation parameter outside [0,1]");
  WeightedChain<Scalar> out;
  if (a != c.chain.front()) {
    out.chain.vertices.push_back(a);
    out.weights.push_back(t);
  }
  for (std::size_t i = 0; i < c.weights.size(); ++i) {
    out.chain.vertices.push_back(c.chain.vertices[i]);
    Scalar w = (Scalar(1) - t) * c.weights[i];
    if (i == 0 && a == c.chain.front()) w += t;
    out.weights.push_back(w);
  }
  return canonical(out);
}

}  // namespace dlim
