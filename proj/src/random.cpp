#include "dlim/random.hpp"

#include <algorithm>
#include <numeric>

namespace dlim {

namespace {

std::vector<Index> heights(const FinitePoset& poset) {
  std::vector<Index> h(static_cast<std::size_t>(poset.size()), 0);
  for (Index q : poset.linear_extension())
    for (Index p = 0; p < poset.size(); ++p)
      if (poset.less(p, q)) h[static_cast<std::size_t>(q)] = std::max(h[static_cast<std::size_t>(q)], h[static_cast<std::size_t>(p)] + 1);
  return h;
}

Integer int_power(Integer base, Index e) {
  Integer out = 1;
  for (Index i = 0; i < e; ++i) out *= base;
  return out;
}

struct Summand {
  std::vector<bool> support;
  Integer order;  // 0 for Z
  Integer factor;
};

Index find_root(std::vector<Index>& parent, Index x) {
  while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
  return x;
}

}  // namespace

Index uniform(Rng& rng, Index lo, Index hi) {
  return std::uniform_int_distribution<Index>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

FinitePoset random_poset(Rng& rng, Index n, double edge_probability) {
  std::vector<std::pair<Index, Index>> edges;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (coin(rng, edge_probability)) edges.emplace_back(i, j);
  auto leq = reflexive_transitive_closure(n, edges);
  std::vector<Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), Index(0));
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::uint8_t> permuted(static_cast<std::size_t>(n * n), 0);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      permuted[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)] * n + perm[static_cast<std::size_t>(j)])] =
          leq[static_cast<std::size_t>(i * n + j)];
  std::vector<std::string> labels;
  for (Index i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  return FinitePoset(std::move(labels), std::move(permuted));
}

FiniteMetricSpace<Rational> random_metric_space(Rng& rng, Index n, Index max_weight) {
  std::vector<std::vector<Index>> d(static_cast<std::size_t>(n), std::vector<Index>(static_cast<std::size_t>(n), 0));
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = d[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = uniform(rng, 1, max_weight);
  for (Index k = 0; k < n; ++k)
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            std::min(d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                     d[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] + d[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
  Index diameter = 1;
  for (const auto& row : d) diameter = std::max(diameter, *std::max_element(row.begin(), row.end()));
  RatMatrix m(n, n);
  std::vector<std::string> labels;
  for (Index i = 0; i < n; ++i) {
    labels.push_back("x" + std::to_string(i));
    for (Index j = 0; j < n; ++j) m(i, j) = Rational(d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], diameter);
  }
  return FiniteMetricSpace<Rational>(std::move(labels), std::move(m));
}

std::vector<Rational> random_weights(Rng& rng, Index n, Index max_part) {
  std::vector<Index> parts;
  Index total = 0;
  for (Index i = 0; i < n; ++i) {
    parts.push_back(uniform(rng, 1, max_part));
    total += parts.back();
  }
  std::vector<Rational> w;
  for (Index p : parts) w.emplace_back(p, total);
  return w;
}

FiniteMeasure<Rational> random_measure(Rng& rng, Index points, Index max_support) {
  const Index s = uniform(rng, 1, std::min(points, max_support));
  std::vector<Index> all(static_cast<std::size_t>(points));
  std::iota(all.begin(), all.end(), Index(0));
  std::shuffle(all.begin(), all.end(), rng);
  auto w = random_weights(rng, s);
  FiniteMeasure<Rational> m;
  for (Index i = 0; i < s; ++i) m[all[static_cast<std::size_t>(i)]] = w[static_cast<std::size_t>(i)];
  return m;
}

WeightedChain<Rational> random_weighted_chain(Rng& rng, const FinitePoset& poset, Index max_length) {
  Chain c{{uniform(rng, 0, poset.size() - 1)}};
  while (static_cast<Index>(c.vertices.size()) < max_length && coin(rng, 0.7)) {
    std::vector<Index> above;
    for (Index q = 0; q < poset.size(); ++q)
      if (poset.less(c.back(), q)) above.push_back(q);
    if (above.empty()) break;
    c.vertices.push_back(above[static_cast<std::size_t>(uniform(rng, 0, static_cast<Index>(above.size()) - 1))]);
  }
  auto w = random_weights(rng, static_cast<Index>(c.vertices.size()));
  return make_weighted_chain(poset, std::move(c), std::move(w));
}

HyperPoint<Rational> random_hyperpoint(Rng& rng, const FiniteMetricSpace<Rational>& space, Index max_length) {
  const Index n = space.size();
  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index(0));
  std::shuffle(order.begin(), order.end(), rng);
  const Index k = uniform(rng, 1, std::min(max_length, n));
  std::vector<Index> sizes(static_cast<std::size_t>(n));
  std::iota(sizes.begin(), sizes.end(), Index(1));
  std::shuffle(sizes.begin(), sizes.end(), rng);
  sizes.resize(static_cast<std::size_t>(k));
  std::sort(sizes.begin(), sizes.end());
  std::vector<Subset> chain;
  for (Index s : sizes) chain.push_back(make_subset(std::vector<Index>(order.begin(), order.begin() + s)));
  return make_hyperpoint(space, std::move(chain), random_weights(rng, k));
}

IntMatrix random_unimodular(Rng& rng, Index n, Index steps) {
  IntMatrix u = identity<Integer>(n);
  if (n == 0) return u;
  for (Index s = 0; s < steps; ++s) {
    const Index i = uniform(rng, 0, n - 1), j = uniform(rng, 0, n - 1);
    if (i != j) {
      u.row(i) += Integer(uniform(rng, -2, 2)) * u.row(j);
    } else if (coin(rng, 0.3)) {
      u.row(i) = -u.row(i);
    }
  }
  return u;
}

PosetDiagram random_diagram(Rng& rng, const FinitePoset& poset, Index max_generators) {
  const Index n = poset.size();
  const auto h = heights(poset);
  static const Integer orders[] = {0, 0, 2, 4, 12};
  static const Integer factors[] = {1, 1, -1, 2, 3};

  std::vector<Summand> summands;
  const Index count = uniform(rng, 1, max_generators);
  for (Index s = 0; s < count; ++s) {
    Summand sm;
    sm.support.assign(static_cast<std::size_t>(n), false);
    const Index a = uniform(rng, 0, n - 1), b = uniform(rng, 0, n - 1);
    const Index kind = uniform(rng, 0, 3);
    for (Index p = 0; p < n; ++p) {
      bool in = true;
      if (kind == 0) in = poset.leq(a, p);
      if (kind == 1) in = poset.leq(p, b);
      if (kind == 2) in = poset.leq(a, b) ? poset.leq(a, p) && poset.leq(p, b) : poset.leq(a, p);
      sm.support[static_cast<std::size_t>(p)] = in;
    }
    sm.order = orders[uniform(rng, 0, 4)];
    sm.factor = factors[uniform(rng, 0, 4)];
    summands.push_back(std::move(sm));
  }

  // Canonical coordinates at p: free summands first, then torsion by increasing order.
  std::vector<std::vector<Index>> slots(static_cast<std::size_t>(n));
  std::vector<FgAbGroup> groups;
  for (Index p = 0; p < n; ++p) {
    auto& s = slots[static_cast<std::size_t>(p)];
    for (Index k = 0; k < count; ++k)
      if (summands[static_cast<std::size_t>(k)].support[static_cast<std::size_t>(p)]) s.push_back(k);
    std::stable_sort(s.begin(), s.end(), [&](Index x, Index y) {
      return summands[static_cast<std::size_t>(x)].order < summands[static_cast<std::size_t>(y)].order;
    });
    Index free = 0;
    std::vector<Integer> torsion;
    for (Index k : s) {
      if (summands[static_cast<std::size_t>(k)].order == 0) ++free;
      else torsion.push_back(summands[static_cast<std::size_t>(k)].order);
    }
    groups.emplace_back(free, torsion);
  }

  // Automorphisms [[U, 0], [X, 1]] per element.
  std::vector<IntMatrix> aut, aut_inv;
  for (Index p = 0; p < n; ++p) {
    const auto& g = groups[static_cast<std::size_t>(p)];
    const Index r = g.free_rank(), t = g.generator_count() - r;
    IntMatrix U = random_unimodular(rng, r);
    IntMatrix Ui = unimodular_inverse(U);
    IntMatrix X = IntMatrix::Zero(t, r);
    for (Index i = 0; i < t; ++i)
      for (Index j = 0; j < r; ++j) X(i, j) = uniform(rng, -1, 1);
    IntMatrix A = identity<Integer>(r + t), Ai = identity<Integer>(r + t);
    if (r > 0) {
      A.topLeftCorner(r, r) = U;
      Ai.topLeftCorner(r, r) = Ui;
      if (t > 0) {
        A.bottomLeftCorner(t, r) = X;
        Ai.bottomLeftCorner(t, r) = -X * Ui;
      }
    }
    aut.push_back(std::move(A));
    aut_inv.push_back(std::move(Ai));
  }

  CoverMaps maps;
  for (auto [p, q] : poset.covers()) {
    const auto& sp = slots[static_cast<std::size_t>(p)];
    const auto& sq = slots[static_cast<std::size_t>(q)];
    IntMatrix m = IntMatrix::Zero(static_cast<Index>(sq.size()), static_cast<Index>(sp.size()));
    for (std::size_t j = 0; j < sp.size(); ++j) {
      auto it = std::find(sq.begin(), sq.end(), sp[j]);
      if (it == sq.end()) continue;
      const auto& sm = summands[static_cast<std::size_t>(sp[j])];
      m(static_cast<Index>(it - sq.begin()), static_cast<Index>(j)) =
          int_power(sm.factor, h[static_cast<std::size_t>(q)] - h[static_cast<std::size_t>(p)]);
    }
    maps[{p, q}] = aut[static_cast<std::size_t>(q)] * m * aut_inv[static_cast<std::size_t>(p)];
  }
  return PosetDiagram::from_covers(poset, std::move(groups), maps);
}

PosetDiagram random_invertible_diagram(Rng& rng, const FinitePoset& poset, Index rank) {
  std::vector<FgAbGroup> groups(static_cast<std::size_t>(poset.size()), FgAbGroup(rank));
  for (int attempt = 0; attempt < 20; ++attempt) {
    CoverMaps maps;
    for (auto pq : poset.covers()) {
      if (coin(rng, 0.5)) maps[pq] = (coin(rng) ? Integer(1) : Integer(-1)) * identity<Integer>(rank);
      else maps[pq] = random_unimodular(rng, rank);
    }
    try {
      return PosetDiagram::from_covers(poset, groups, maps);
    } catch (const Nonfunctorial&) {
    }
  }
  std::vector<IntMatrix> a;
  for (Index p = 0; p < poset.size(); ++p) a.push_back(random_unimodular(rng, rank));
  CoverMaps maps;
  for (auto [p, q] : poset.covers())
    maps[{p, q}] = a[static_cast<std::size_t>(q)] * unimodular_inverse(a[static_cast<std::size_t>(p)]);
  return PosetDiagram::from_covers(poset, groups, maps);
}

SpaceDiagram random_space_diagram(Rng& rng, const FinitePoset& poset, Index max_vertices) {
  const Index n = poset.size();
  const Index L = max_vertices;
  std::vector<std::vector<Index>> parent(static_cast<std::size_t>(n));
  std::vector<std::vector<bool>> used(static_cast<std::size_t>(n));
  std::vector<std::vector<Index>> vertex_of(static_cast<std::size_t>(n));  // label -> vertex, -1 unused
  std::vector<SimplicialComplex> complexes(static_cast<std::size_t>(n));
  std::vector<std::vector<Index>> lower(static_cast<std::size_t>(n));
  for (auto [p, q] : poset.covers()) lower[static_cast<std::size_t>(q)].push_back(p);

  for (Index q : poset.linear_extension()) {
    auto& par = parent[static_cast<std::size_t>(q)];
    auto& use = used[static_cast<std::size_t>(q)];
    par.resize(static_cast<std::size_t>(L));
    std::iota(par.begin(), par.end(), Index(0));
    use.assign(static_cast<std::size_t>(L), false);
    const auto& below = lower[static_cast<std::size_t>(q)];
    for (Index p : below)
      for (Index l = 0; l < L; ++l) {
        if (used[static_cast<std::size_t>(p)][static_cast<std::size_t>(l)]) use[static_cast<std::size_t>(l)] = true;
        Index a = find_root(par, l), b = find_root(par, find_root(parent[static_cast<std::size_t>(p)], l));
        if (a != b) par[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    if (below.empty()) {
      const Index k = uniform(rng, 1, std::min<Index>(L, 4));
      for (Index i = 0; i < k; ++i) use[static_cast<std::size_t>(uniform(rng, 0, L - 1))] = true;
    } else if (coin(rng, 0.3)) {
      use[static_cast<std::size_t>(uniform(rng, 0, L - 1))] = true;
    }
    if (coin(rng, 0.35)) {
      Index a = find_root(par, uniform(rng, 0, L - 1)), b = find_root(par, uniform(rng, 0, L - 1));
      if (a != b) par[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
    // Vertices: classes meeting the used labels, ordered by root.
    auto& vx = vertex_of[static_cast<std::size_t>(q)];
    vx.assign(static_cast<std::size_t>(L), -1);
    std::vector<Index> roots;
    for (Index l = 0; l < L; ++l)
      if (use[static_cast<std::size_t>(l)]) roots.push_back(find_root(par, l));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    for (Index l = 0; l < L; ++l) {
      auto it = std::find(roots.begin(), roots.end(), find_root(par, l));
      if (it != roots.end()) vx[static_cast<std::size_t>(l)] = static_cast<Index>(it - roots.begin());
    }
    const Index nv = static_cast<Index>(roots.size());
    std::vector<SimplicialComplex::Simplex> simplices;
    for (Index p : below) {
      const auto& X = complexes[static_cast<std::size_t>(p)];
      // A vertex of X_p is named by any used label of its class.
      std::vector<Index> rep(static_cast<std::size_t>(X.vertex_count()), -1);
      for (Index l = 0; l < L; ++l) {
        Index v = vertex_of[static_cast<std::size_t>(p)][static_cast<std::size_t>(l)];
        if (v >= 0 && rep[static_cast<std::size_t>(v)] < 0) rep[static_cast<std::size_t>(v)] = l;
      }
      for (const auto& s : X.maximal_simplices()) {
        SimplicialComplex::Simplex img;
        for (Index v : s) img.push_back(vx[static_cast<std::size_t>(rep[static_cast<std::size_t>(v)])]);
        simplices.push_back(std::move(img));
      }
    }
    const Index extra = uniform(rng, 0, 2);
    for (Index e = 0; e < extra && nv >= 2; ++e) {
      const Index size = uniform(rng, 2, std::min<Index>(3, nv));
      std::vector<Index> all(static_cast<std::size_t>(nv));
      std::iota(all.begin(), all.end(), Index(0));
      std::shuffle(all.begin(), all.end(), rng);
      simplices.emplace_back(all.begin(), all.begin() + size);
    }
    std::vector<std::string> labels;
    for (Index r : roots) labels.push_back("v" + std::to_string(r));
    complexes[static_cast<std::size_t>(q)] = SimplicialComplex(std::move(labels), simplices);
  }

  CoverSpaceMaps maps;
  for (auto [p, q] : poset.covers()) {
    SimplicialMap f;
    f.vertex_map.assign(static_cast<std::size_t>(complexes[static_cast<std::size_t>(p)].vertex_count()), -1);
    for (Index l = 0; l < L; ++l) {
      Index v = vertex_of[static_cast<std::size_t>(p)][static_cast<std::size_t>(l)];
      if (v >= 0) f.vertex_map[static_cast<std::size_t>(v)] = vertex_of[static_cast<std::size_t>(q)][static_cast<std::size_t>(l)];
    }
    maps[{p, q}] = std::move(f);
  }
  return SpaceDiagram::from_covers(poset, std::move(complexes), maps);
}

}  // namespace dlim
