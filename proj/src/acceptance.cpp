#include "dlim/acceptance.hpp"

#include <array>
#include <chrono>
#include <functional>

#include "dlim/oracles.hpp"
#include "dlim/random.hpp"

namespace dlim {

namespace {

Rng rng_for(int id, std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(id)};
  return Rng(seq);
}

Subset random_subset(Rng& rng, Index n) {
  const Index mask = uniform(rng, 1, (Index(1) << n) - 1);
  Subset s;
  for (Index p = 0; p < n; ++p)
    if (mask >> p & 1) s.push_back(p);
  return s;
}

Rational random_unit_rational(Rng& rng, Index max_den = 12) {
  const Index b = uniform(rng, 1, max_den);
  return Rational(uniform(rng, 1, b), b);
}

FiniteMetricSpace<Rational> metric_from(std::vector<std::string> labels, const std::vector<std::vector<Rational>>& d) {
  const Index n = static_cast<Index>(labels.size());
  RatMatrix m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(i, j) = d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return FiniteMetricSpace<Rational>(std::move(labels), std::move(m));
}

CriterionResult hausdorff_identity(Rng& rng) {
  CriterionResult r;
  Index mismatches = 0;
  const auto start = std::chrono::steady_clock::now();
  for (int trial = 0; trial < 1000; ++trial) {
    auto X = random_metric_space(rng, uniform(rng, 1, 6));
    auto a = random_subset(rng, X.size()), b = random_subset(rng, X.size());
    if (embedding_distance(X, a, b) != hausdorff_distance(X, a, b)) ++mismatches;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.passed = mismatches == 0 && seconds < 5.0;
  r.detail = std::to_string(mismatches) + " mismatches in 1000 instances";
  r.data = Json{{"instances", 1000}, {"mismatches", mismatches}, {"within_time_limit", seconds < 5.0}};
  return r;
}

CriterionResult three_point_simplex(Rng& rng) {
  CriterionResult r;
  Index failures = 0;
  Json first;
  for (int trial = 0; trial < 100; ++trial) {
    Rational p, q, r_;
    do {
      p = random_unit_rational(rng);
      q = random_unit_rational(rng);
      r_ = random_unit_rational(rng);
    } while (p > q + r_ || q > p + r_ || r_ > p + q);
    auto X = metric_from({"a", "b", "c"}, {{0, p, r_}, {p, 0, q}, {r_, q, 0}});
    const Subset a1{0}, a2{0, 1}, a3{0, 1, 2};
    const Rational P = hausdorff_distance(X, a1, a2), Q = hausdorff_distance(X, a2, a3),
                   R = hausdorff_distance(X, a1, a3);
    auto e1 = embed_subset(X, a1), e2 = embed_subset(X, a2), e3 = embed_subset(X, a3);
    bool ok = P == p && Q == std::min(q, r_) && R == std::max(p, r_);
    ok = ok && e1.values == std::vector<Rational>{0, p, r_} && e2.values == std::vector<Rational>{0, 0, Q} &&
         e3.values == std::vector<Rational>{0, 0, 0};
    const Rational e23 = supnorm_distance(e2, e3), e13 = supnorm_distance(e1, e3), e12 = supnorm_distance(e1, e2);
    ok = ok && e23 == Q && e13 == std::max(p, r_) && e12 == std::max(p, Rational(r_ - Q));
    ok = ok && e13 == R && e12 == P;
    if (!ok) ++failures;
    if (trial == 0)
      first = Json{{"p", to_string(p)}, {"q", to_string(q)}, {"r", to_string(r_)},
                   {"edges", {to_string(e23), to_string(e13), to_string(e12)}}};
  }
  r.passed = failures == 0;
  r.detail = std::to_string(100 - failures) + "/100 triples reproduce (Q, max(p,r), max(p,r-Q))";
  r.data = Json{{"instances", 100}, {"failures", failures}, {"first", first}};
  return r;
}

CriterionResult four_point_nondetermination() {
  CriterionResult r;
  const Rational p(1, 4), Q(1, 2), R(5, 8);
  Json instances = Json::array();
  std::vector<Rational> lengths;
  bool ok = true;
  std::optional<std::array<Rational, 3>> edges;
  for (const Rational& eps : {Rational(1, 16), Rational(1, 32)}) {
    const Rational qp = Q - eps, qm = Q, rp = R, rm = R - eps;
    // points a, b, c+, c-
    auto Y = metric_from({"a", "b", "c+", "c-"}, {{0, p, rp, rm}, {p, 0, qp, qm}, {rp, qp, 0, Rational(1, 2)},
                                                {rm, qm, Rational(1, 2), 0}});
    const Subset b1{0}, b2{0, 1}, b3{0, 1, 2, 3};
    std::array<Rational, 3> e{hausdorff_distance(Y, b1, b2), hausdorff_distance(Y, b2, b3),
                              hausdorff_distance(Y, b1, b3)};
    ok = ok && e[0] == p && e[1] == Q && e[2] == R;
    if (edges) ok = ok && *edges == e;
    edges = e;
    auto mid = embed_hyperpoint(Y, make_hyperpoint(Y, {b1, b2}, {Rational(1, 2), Rational(1, 2)}));
    const Rational L = supnorm_distance(mid, embed_subset(Y, b3));
    const Rational formula = std::max({p, Rational((rp + std::min(qp, rp)) / 2), Rational((rm + std::min(qm, rm)) / 2)});
    ok = ok && L == formula;
    lengths.push_back(L);
    instances.push_back(Json{{"eps", to_string(eps)},
                             {"space", to_json(Y)},
                             {"P", to_string(e[0])},
                             {"Q", to_string(e[1])},
                             {"R", to_string(e[2])},
                             {"L", to_string(L)},
                             {"L_formula", to_string(formula)}});
  }
  ok = ok && lengths[0] != lengths[1];
  r.passed = ok;
  r.detail = "equal (P,Q,R) = (1/4,1/2,5/8), L = " + to_string(lengths[0]) + " vs " + to_string(lengths[1]);
  r.data = Json{{"instances", instances}};
  return r;
}

CriterionResult kantorovich_discrete(Rng& rng) {
  CriterionResult r;
  Index failures = 0, cross_checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const Index n = uniform(rng, 1, 6);
    auto X = discrete_space<Rational>(n);
    auto lambda = random_measure(rng, n, n), mu = random_measure(rng, n, n);
    const Rational rho = kantorovich_distance(X, lambda, mu);
    bool ok = rho == l1_distance(lambda, mu) / 2;
    if (lambda.size() <= 5 && mu.size() <= 5) {
      ++cross_checked;
      ok = ok && kantorovich_by_enumeration(X, lambda, mu) == rho;
    }
    if (!ok) ++failures;
  }
  r.passed = failures == 0;
  r.detail = std::to_string(500 - failures) + "/500 pairs satisfy rho = l1/2";
  r.data = Json{{"instances", 500}, {"failures", failures}, {"enumeration_cross_checks", cross_checked}};
  return r;
}

CriterionResult hm_ae_gap() {
  CriterionResult r;
  Index failures = 0;
  Json samples = Json::array();
  for (Index n = 2; n <= 50; ++n) {
    auto g = gap_family(n);
    if (g.l1 != 1 || g.kantorovich != Rational(1, n)) ++failures;
    if (n == 2 || n == 10 || n == 50)
      samples.push_back(Json{{"n", n}, {"L1", to_string(g.l1)}, {"rho", to_string(g.kantorovich)}});
  }
  r.passed = failures == 0;
  r.detail = std::to_string(49 - failures) + "/49 values of n give L1 = 1, rho = 1/n";
  r.data = Json{{"failures", failures}, {"samples", samples}};
  return r;
}

CriterionResult skew_simplex(Rng& rng) {
  CriterionResult r;
  Index failures = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const Index n = uniform(rng, 1, 6);
    auto P = chain_poset(n + 1);
    std::vector<Rational> coords;
    for (Index i = 0; i <= n; ++i) coords.emplace_back(i);
    auto X = line_space(coords);
    auto x = random_weighted_chain(rng, P, n + 1), y = random_weighted_chain(rng, P, n + 1);
    // t_i = mass strictly below vertex i.
    auto skew = [&](const WeightedChain<Rational>& w) {
      std::vector<Rational> t(static_cast<std::size_t>(n), Rational(0));
      for (Index i = 1; i <= n; ++i)
        for (std::size_t k = 0; k < w.weights.size(); ++k)
          if (w.chain.vertices[k] < i) t[static_cast<std::size_t>(i - 1)] += w.weights[k];
      return t;
    };
    auto tx = skew(x), ty = skew(y);
    Rational l1(0);
    for (Index i = 0; i < n; ++i) l1 += abs_value<Rational>(tx[static_cast<std::size_t>(i)] - ty[static_cast<std::size_t>(i)]);
    if (l1_step_distance(X, step_function_of(x), step_function_of(y)) != l1) ++failures;
  }
  r.passed = failures == 0;
  r.detail = std::to_string(500 - failures) + "/500 pairs: L1 equals l1 of skew coordinates";
  r.data = Json{{"instances", 500}, {"failures", failures}};
  return r;
}

CriterionResult retraction_bounds(Rng& rng) {
  CriterionResult r;
  Index rho_l1 = 0, l1_lipschitz = 0, rho_lipschitz = 0, convexity = 0, convexity_strict = 0;
  Json strict_witness;
  for (int trial = 0; trial < 1000; ++trial) {
    const Index n = uniform(rng, 1, 6);
    auto P = random_poset(rng, n);
    auto X = random_metric_space(rng, n);
    auto x = random_weighted_chain(rng, P, n), y = random_weighted_chain(rng, P, n);
    auto rho = [&](const WeightedChain<Rational>& a, const WeightedChain<Rational>& b) {
      return kantorovich_distance(X, measure_of(a), measure_of(b));
    };
    auto l1 = [&](const WeightedChain<Rational>& a, const WeightedChain<Rational>& b) {
      return l1_step_distance(X, step_function_of(a), step_function_of(b));
    };
    if (rho(x, y) > l1(x, y)) ++rho_l1;

    auto atom_below = [&](Index v) {
      std::vector<Index> below;
      for (Index a : atoms(P))
        if (P.leq(a, v)) below.push_back(a);
      return below[static_cast<std::size_t>(uniform(rng, 0, static_cast<Index>(below.size()) - 1))];
    };
    const Index a = atom_below(x.chain.front()), b = atom_below(y.chain.front());
    const Rational s(uniform(rng, 0, 12), 12);
    const Rational t(uniform(rng, 0, 12), 12);
    auto xs = deformation_point(P, a, x, s), xt = deformation_point(P, a, x, t);
    const Index padded = static_cast<Index>(x.chain.vertices.size()) + (a != x.chain.front() ? 1 : 0);
    const Rational gap = abs_value<Rational>(s - t);
    if (l1(xs, xt) > Rational(padded) * gap) ++l1_lipschitz;
    if (rho(xs, xt) > gap) ++rho_lipschitz;
    auto yt = deformation_point(P, b, y, t);
    const Rational bound = t * X(a, b) + (1 - t) * rho(x, y);
    const Rational value = rho(xt, yt);
    if (value > bound) ++convexity;
    if (value < bound && ++convexity_strict == 1) {
      auto chain_json = [&](const WeightedChain<Rational>& w) {
        Json c = Json::array(), ws = Json::array();
        for (std::size_t k = 0; k < w.weights.size(); ++k) {
          c.push_back(P.label(w.chain.vertices[k]));
          ws.push_back(to_string(w.weights[k]));
        }
        return Json{{"chain", c}, {"weights", ws}};
      };
      strict_witness = Json{{"poset", to_json(P)}, {"space", to_json(X)},  {"x", chain_json(x)},
                            {"y", chain_json(y)},  {"a", P.label(a)},      {"b", P.label(b)},
                            {"t", to_string(t)},   {"rho_t", to_string(value)}, {"bound", to_string(bound)}};
    }
  }
  r.passed = rho_l1 == 0 && l1_lipschitz == 0 && rho_lipschitz == 0;
  r.detail = "violations: rho<=L1 " + std::to_string(rho_l1) + ", L1 Lipschitz " + std::to_string(l1_lipschitz) +
             ", rho Lipschitz " + std::to_string(rho_lipschitz) + " (1000 instances)";
  r.data = Json{{"instances", 1000},
                {"rho_le_l1_violations", rho_l1},
                {"l1_lipschitz_violations", l1_lipschitz},
                {"rho_lipschitz_violations", rho_lipschitz},
                {"convexity_violations", convexity},
                {"convexity_strict_inequalities", convexity_strict},
                {"first_strict_inequality", strict_witness}};
  return r;
}

CriterionResult constant_diagram_law(Rng& rng) {
  CriterionResult r;
  const std::vector<FgAbGroup> coefficients{FgAbGroup::integers(), FgAbGroup::cyclic(2), FgAbGroup::integers(2)};
  Index failures = 0, nonzero_higher = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto P = random_poset(rng, uniform(rng, 1, 6));
    const auto& G = coefficients[static_cast<std::size_t>(trial % 3)];
    auto D = constant_diagram(P, G);
    const Index top = order_complex(P).dimension();
    auto limits = derived_limits(D, top + 1);
    bool ok = true;
    const auto chains = simplicial_chain_complex(to_simplicial_complex(P));
    for (Index p = 0; p <= top + 1; ++p) {
      const auto& got = limits[static_cast<std::size_t>(p)];
      ok = ok && got == order_complex_cohomology(P, p, G);
      if (G == FgAbGroup::cyclic(2)) ok = ok && got == G.power(mod2_cohomology_dimension(chains, p));
      if (p > 0 && !got.is_trivial()) ++nonzero_higher;
    }
    ok = ok && limits[static_cast<std::size_t>(top + 1)].is_trivial();
    if (!ok) ++failures;
  }
  r.passed = failures == 0;
  r.detail = std::to_string(200 - failures) + "/200 posets: lim^p(const G) = H^p(|P|; G)";
  r.data = Json{{"instances", 200}, {"failures", failures}, {"nonzero_higher_limits", nonzero_higher}};
  return r;
}

CriterionResult oracle_agreement(Rng& rng) {
  CriterionResult r;
  Index lim_fail = 0, colim_fail = 0, torsion_seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto P = random_poset(rng, uniform(rng, 1, 6));
    auto D = random_diagram(rng, P, 3);
    if (derived_limit(D, 0) != lim_direct(D)) ++lim_fail;
    if (colim_via_homology(D) != colim_direct(D)) ++colim_fail;
    for (const auto& g : D.groups())
      if (!g.is_free()) {
        ++torsion_seen;
        break;
      }
  }
  r.passed = lim_fail == 0 && colim_fail == 0;
  r.detail = "mismatches: lim " + std::to_string(lim_fail) + ", colim " + std::to_string(colim_fail) + " (200 diagrams)";
  r.data = Json{{"instances", 200}, {"lim_mismatches", lim_fail}, {"colim_mismatches", colim_fail},
                {"diagrams_with_torsion", torsion_seen}};
  return r;
}

CriterionResult chain_recovery(Rng& rng) {
  CriterionResult r;
  Index round_trip = 0, collisions = 0, distinct_pairs = 0;
  for (int trial = 0; trial < 500; ++trial) {
    auto X = random_metric_space(rng, uniform(rng, 1, 6));
    auto h = random_hyperpoint(rng, X, X.size());
    const bool adjoin = trial % 2 == 1;
    auto f = embed_hyperpoint(X, h, adjoin);
    try {
      if (!(recover_minimal_chain(X, f) == h)) ++round_trip;
    } catch (const InputError&) {
      ++round_trip;
    }
    auto g = random_hyperpoint(rng, X, X.size());
    if (!(g == h)) {
      ++distinct_pairs;
      if (embed_hyperpoint(X, g, adjoin) == f) ++collisions;
    }
  }
  r.passed = round_trip == 0 && collisions == 0;
  r.detail = "round-trip failures " + std::to_string(round_trip) + ", collisions " + std::to_string(collisions) +
             " in " + std::to_string(distinct_pairs) + " distinct pairs";
  r.data = Json{{"instances", 500}, {"round_trip_failures", round_trip}, {"collisions", collisions},
                {"distinct_pairs", distinct_pairs}};
  return r;
}

// A base space with a twin z' of every point z: d(z, z') = eta, d(z', w) = d(z, w).
FiniteMetricSpace<Rational> with_twins(const FiniteMetricSpace<Rational>& base, const Rational& eta) {
  const Index m = base.size();
  RatMatrix d(2 * m, 2 * m);
  std::vector<std::string> labels = base.labels();
  for (Index i = 0; i < m; ++i) labels.push_back(base.label(i) + "'");
  for (Index i = 0; i < 2 * m; ++i)
    for (Index j = 0; j < 2 * m; ++j) {
      const Index bi = i % m, bj = j % m;
      d(i, j) = i == j ? Rational(0) : bi == bj ? eta : base(bi, bj);
    }
  return FiniteMetricSpace<Rational>(std::move(labels), std::move(d));
}

struct Perturbation {
  HyperPoint<Rational> y;
  bool split = false, strays = false, jitter = false;
};

// y is built from x by adding twins (Hausdorff moves of at most eta), splitting entries along
// twins, inserting stray subsets of tiny weight and jittering weights; each effect on the
// adjoined embedding is at most delta/4.
Perturbation perturb(Rng& rng, const FiniteMetricSpace<Rational>& X, Index m, const HyperPoint<Rational>& x,
                     const Rational& delta) {
  const Index n = x.length();
  Perturbation out;
  // level[z]: first entry whose subset receives the twin of z (n means never).
  std::vector<Index> level(static_cast<std::size_t>(m), n);
  for (Index z = 0; z < m; ++z) {
    Index first = n;
    for (Index i = 0; i < n && first == n; ++i)
      if (contains_point(x.chain[static_cast<std::size_t>(i)], z)) first = i;
    if (first < n && coin(rng, 0.6)) level[static_cast<std::size_t>(z)] = uniform(rng, first, n);
  }
  std::vector<Subset> sets;
  std::vector<Rational> weights = x.weights;
  for (Index i = 0; i < n; ++i) {
    Subset s = x.chain[static_cast<std::size_t>(i)];
    for (Index z = 0; z < m; ++z)
      if (level[static_cast<std::size_t>(z)] <= i) s.push_back(z + m);
    sets.push_back(make_subset(s));
  }
  if (n >= 2 && coin(rng)) {
    out.jitter = true;
    const Index i = uniform(rng, 0, n - 1), j = (i + uniform(rng, 1, n - 1)) % n;
    const Rational amount = delta / 4 * Rational(uniform(rng, 1, 4), 4);
    weights[static_cast<std::size_t>(i)] += amount;
    weights[static_cast<std::size_t>(j)] -= amount;
  }
  std::vector<std::pair<Subset, Rational>> entries;
  for (Index i = 0; i < n; ++i) {
    const Subset& s = sets[static_cast<std::size_t>(i)];
    Subset extra;
    for (Index z = 0; z < m; ++z)
      if (contains_point(x.chain[static_cast<std::size_t>(i)], z) && !contains_point(s, z + m) &&
          (level[static_cast<std::size_t>(z)] == i + 1 || (i == n - 1 && level[static_cast<std::size_t>(z)] == n)))
        extra.push_back(z + m);
    const Rational w = weights[static_cast<std::size_t>(i)];
    if (!extra.empty() && coin(rng)) {
      out.split = true;
      Subset bigger = s;
      bigger.insert(bigger.end(), extra.begin(), extra.end());
      const Rational part = w * Rational(uniform(rng, 1, 4), 5);
      entries.emplace_back(s, w - part);
      entries.emplace_back(make_subset(bigger), part);
    } else {
      entries.emplace_back(s, w);
    }
  }
  if (coin(rng)) {
    // One stray subset strictly between two consecutive entries (or at either end).
    const Index slot = uniform(rng, 0, static_cast<Index>(entries.size()));
    const Subset* lower = slot > 0 ? &entries[static_cast<std::size_t>(slot - 1)].first : nullptr;
    const Subset* upper = slot < static_cast<Index>(entries.size()) ? &entries[static_cast<std::size_t>(slot)].first : nullptr;
    std::optional<Subset> stray;
    if (!lower && upper->size() >= 2) {
      stray = Subset(upper->begin(), upper->end() - 1);
    } else if (lower && upper && upper->size() >= lower->size() + 2) {
      Subset s = *lower;
      for (Index p : *upper)
        if (!contains_point(*lower, p)) {
          s.push_back(p);
          break;
        }
      stray = make_subset(s);
    } else if (lower && !upper && static_cast<Index>(lower->size()) < X.size()) {
      Subset s = *lower;
      for (Index p = 0; p < X.size(); ++p)
        if (!contains_point(*lower, p)) {
          s.push_back(p);
          break;
        }
      stray = make_subset(s);
    }
    if (stray) {
      out.strays = true;
      const Rational w = delta / 4 * Rational(uniform(rng, 1, 4), 4);
      std::size_t heaviest = 0;
      for (std::size_t k = 1; k < entries.size(); ++k)
        if (entries[k].second > entries[heaviest].second) heaviest = k;
      entries[heaviest].second -= w;
      entries.insert(entries.begin() + slot, {*stray, w});
    }
  }
  std::vector<Subset> chain;
  std::vector<Rational> ws;
  for (auto& [s, w] : entries) {
    chain.push_back(s);
    ws.push_back(w);
  }
  out.y = make_hyperpoint(X, std::move(chain), std::move(ws));
  return out;
}

CriterionResult stability_harness(Rng& rng) {
  CriterionResult r;
  Index violations = 0, outside = 0, chain_applicable = 0, splits = 0, strays = 0, harness_errors = 0;
  const std::vector<Rational> epsilons{Rational(1, 2), Rational(1, 3), Rational(1, 4), Rational(1, 5)};
  for (int trial = 0; trial < 1000; ++trial) {
    const Index m = uniform(rng, 2, 4);
    auto base = random_metric_space(rng, m);
    auto x0 = random_hyperpoint(rng, base, std::min<Index>(3, m));
    const Rational eps = epsilons[static_cast<std::size_t>(uniform(rng, 0, 3))];
    const auto constants = stability_constants(x0.length(), gap_parameter(base, x0), eps);
    const Rational delta = constants.delta_block;
    auto X = with_twins(base, delta / 4);
    auto x = make_hyperpoint(X, x0.chain, x0.weights);
    try {
      auto p = perturb(rng, X, m, x, delta);
      auto report = stability_check(X, x, p.y, eps);
      if (report.violation()) ++violations;
      if (!report.block_applicable) ++outside;
      if (report.chain_applicable) ++chain_applicable;
      splits += p.split;
      strays += p.strays;
    } catch (const InputError&) {
      ++harness_errors;
    }
  }
  r.passed = violations == 0 && outside == 0 && harness_errors == 0;
  r.detail = std::to_string(violations) + " violations in 1000 trials (" + std::to_string(1000 - outside) +
             " within delta)";
  r.data = Json{{"trials", 1000},
                {"violations", violations},
                {"outside_delta", outside},
                {"chain_estimate_applicable", chain_applicable},
                {"with_split_blocks", splits},
                {"with_stray_subsets", strays},
                {"harness_errors", harness_errors}};
  return r;
}

CriterionResult spectral_checks(Rng& rng) {
  CriterionResult r;
  Index euler_fail = 0, milnor_fail = 0, milnor_applicable = 0;
  const auto start = std::chrono::steady_clock::now();
  for (int trial = 0; trial < 200; ++trial) {
    auto P = random_poset(rng, uniform(rng, 1, 5));
    auto D = random_space_diagram(rng, P, 8);
    if (!check_euler(D).passed()) ++euler_fail;
    if (order_complex(P).dimension() <= 1) {
      ++milnor_applicable;
      if (!check_milnor(D).passed()) ++milnor_fail;
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.passed = euler_fail == 0 && milnor_fail == 0 && seconds < 60.0;
  r.detail = "Euler failures " + std::to_string(euler_fail) + "/200, Milnor failures " + std::to_string(milnor_fail) +
             "/" + std::to_string(milnor_applicable);
  r.data = Json{{"instances", 200},
                {"euler_failures", euler_fail},
                {"milnor_applicable", milnor_applicable},
                {"milnor_failures", milnor_fail},
                {"within_time_limit", seconds < 60.0}};
  return r;
}

CriterionResult leray_finite_shadow(Rng& rng) {
  CriterionResult r;
  bool ok = true;
  Json cases = Json::array();
  for (Index n = 1; n <= 4; ++n) {
    auto report = leray_shadow(random_metric_space(rng, n));
    ok = ok && report.passed() && report.poset_size == (Index(1) << n) - 1;
    Json limits = Json::array();
    for (const auto& g : report.limits) limits.push_back(g.to_string());
    cases.push_back(Json{{"points", n}, {"poset_size", report.poset_size}, {"limits", limits},
                         {"passed", report.passed()}});
  }
  r.passed = ok;
  r.detail = ok ? "lim^0 = Z^|X|, higher limits vanish for |X| = 1..4" : "mismatch in the finite shadow";
  r.data = Json{{"cases", cases}};
  return r;
}

}  // namespace

std::optional<Suite> parse_suite(const std::string& name) {
  if (name == "all") return Suite::all;
  if (name == "metrics") return Suite::metrics;
  if (name == "limits") return Suite::limits;
  if (name == "spectral") return Suite::spectral;
  return std::nullopt;
}

const char* to_string(Suite suite) {
  switch (suite) {
    case Suite::all: return "all";
    case Suite::metrics: return "metrics";
    case Suite::limits: return "limits";
    case Suite::spectral: return "spectral";
  }
  return "?";
}

std::vector<int> suite_criteria(Suite suite) {
  switch (suite) {
    case Suite::metrics: return {1, 2, 3, 4, 5, 6, 7, 10, 11};
    case Suite::limits: return {8, 9, 13};
    case Suite::spectral: return {12, 13};
    case Suite::all: break;
  }
  std::vector<int> all(criterion_count);
  for (int i = 0; i < criterion_count; ++i) all[static_cast<std::size_t>(i)] = i + 1;
  return all;
}

std::string criterion_name(int id) {
  static const char* names[] = {"Hausdorff identity",       "3-point simplex",
                                "4-point non-determination", "Kantorovich discrete law",
                                "HM/AE gap",                 "skew-simplex isometry",
                                "rho <= L1 and retraction bounds", "constant-diagram law",
                                "oracle agreement",          "chain recovery and uniqueness",
                                "stability harness",         "spectral checks",
                                "Leray finite shadow"};
  if (id < 1 || id > criterion_count) throw InputError("no criterion " + std::to_string(id));
  return names[id - 1];
}

CriterionResult run_criterion(int id, std::uint64_t seed) {
  Rng rng = rng_for(id, seed);
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  switch (id) {
    case 1: r = hausdorff_identity(rng); break;
    case 2: r = three_point_simplex(rng); break;
    case 3: r = four_point_nondetermination(); break;
    case 4: r = kantorovich_discrete(rng); break;
    case 5: r = hm_ae_gap(); break;
    case 6: r = skew_simplex(rng); break;
    case 7: r = retraction_bounds(rng); break;
    case 8: r = constant_diagram_law(rng); break;
    case 9: r = oracle_agreement(rng); break;
    case 10: r = chain_recovery(rng); break;
    case 11: r = stability_harness(rng); break;
    case 12: r = spectral_checks(rng); break;
    case 13: r = leray_finite_shadow(rng); break;
    default: throw InputError("no criterion " + std::to_string(id));
  }
  r.id = id;
  r.name = criterion_name(id);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_suite(Suite suite, std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id : suite_criteria(suite)) out.push_back(run_criterion(id, seed));
  return out;
}

Json suite_report(Suite suite, std::uint64_t seed, const std::vector<CriterionResult>& results, bool with_timing) {
  Json criteria = Json::array();
  bool all = true;
  for (const auto& r : results) {
    Json c{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"data", r.data}};
    if (with_timing) c["seconds"] = r.seconds;
    criteria.push_back(std::move(c));
    all = all && r.passed;
  }
  return Json{{"suite", to_string(suite)}, {"seed", seed}, {"passed", all}, {"criteria", criteria}};
}

}  // namespace dlim
