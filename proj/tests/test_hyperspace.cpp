#include <functional>
#include <iterator>
#include <set>

#include "support.hpp"

using namespace test;

namespace {

FiniteMetricSpace<Rational> triangle(const Rational& p, const Rational& q, const Rational& r) {
  RatMatrix d(3, 3);
  d << 0, p, r, p, 0, q, r, q, 0;
  return FiniteMetricSpace<Rational>({"a", "b", "c"}, d);
}

FiniteMetricSpace<Rational> scaled(const FiniteMetricSpace<Rational>& X, const Rational& c) {
  return FiniteMetricSpace<Rational>(X.labels(), RatMatrix(X.matrix() * c));
}

// Weight vectors with entries in {0, 1/den, ..., 1} summing to one.
std::vector<std::vector<Rational>> weight_grid(std::size_t parts, long den) {
  std::vector<std::vector<Rational>> out;
  std::vector<long> cur;
  std::function<void(long)> go = [&](long left) {
    if (cur.size() + 1 == parts) {
      cur.push_back(left);
      std::vector<Rational> w;
      for (long c : cur) w.push_back(q(c, den));
      out.push_back(w);
      cur.pop_back();
      return;
    }
    for (long c = 0; c <= left; ++c) {
      cur.push_back(c);
      go(left - c);
      cur.pop_back();
    }
  };
  go(den);
  return out;
}

// Embeddings of every grid point of the closed simplex spanned by a chain of subsets.
std::set<std::vector<Rational>> simplex_image(const FiniteMetricSpace<Rational>& X, const std::vector<Subset>& chain,
                                             long den) {
  std::set<std::vector<Rational>> out;
  for (const auto& w : weight_grid(chain.size(), den)) {
    std::vector<Subset> c;
    std::vector<Rational> ws;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] != 0) c.push_back(chain[i]), ws.push_back(w[i]);
    out.insert(embed_hyperpoint(X, make_hyperpoint(X, c, ws)).values);
  }
  return out;
}

}  // namespace

TEST_CASE("embedding of the three-point example") {
  const Rational p(1, 3), qq(1, 2), r(2, 3);
  auto X = triangle(p, qq, r);
  const Subset a1{0}, a2{0, 1}, a3{0, 1, 2};
  const Rational Q = std::min(qq, r);
  auto e1 = embed_subset(X, a1), e2 = embed_subset(X, a2), e3 = embed_subset(X, a3);
  CHECK(e1.values == std::vector<Rational>{0, p, r});
  CHECK(e2.values == std::vector<Rational>{0, 0, Q});
  CHECK(e3.values == std::vector<Rational>{0, 0, 0});
  CHECK(supnorm_distance(e2, e3) == Q);
  CHECK(supnorm_distance(e1, e3) == std::max(p, r));
  CHECK(supnorm_distance(e1, e2) == std::max(p, Rational(r - Q)));
  CHECK(embed_hyperpoint(X, make_hyperpoint(X, {a2}, {q(1)})) == e2);
  CHECK(supnorm_distance(e1, e1) == 0);
}

TEST_CASE("hyperpoint validation") {
  auto X = discrete_space(3);
  CHECK_THROWS_AS(make_hyperpoint(X, {Subset{0, 1}, Subset{0}}, {q(1, 2), q(1, 2)}), NotAChain);
  CHECK_THROWS_AS(make_hyperpoint(X, {Subset{0}, Subset{0, 1}}, {q(1, 2), q(1, 3)}), InvalidWeights);
  CHECK_THROWS_AS(make_hyperpoint(X, {Subset{0}, Subset{1}}, {q(1, 2), q(1, 2)}), NotAChain);
  auto far = scaled(X, q(2));
  CHECK_THROWS_AS(embed_hyperpoint(far, make_hyperpoint(far, {Subset{0}}, {q(1)})), DiameterExceeded);
}

TEST_CASE("adjoined and plain embeddings give the same distances") {
  auto r = rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    auto X = random_metric_space(r, uniform(r, 1, 6));
    auto x = random_hyperpoint(r, X, 4), y = random_hyperpoint(r, X, 4);
    CHECK(supnorm_distance(embed_hyperpoint(X, x, true), embed_hyperpoint(X, y, true)) ==
          supnorm_distance(embed_hyperpoint(X, x), embed_hyperpoint(X, y)));
    for (std::size_t i = 0; i < x.chain.size(); ++i)
      for (std::size_t j = 0; j < y.chain.size(); ++j)
        CHECK(supnorm_distance(embed_subset(X, x.chain[i]), embed_subset(X, y.chain[j])) ==
              hausdorff_distance(X, x.chain[i], y.chain[j]));
  }
}

TEST_CASE("minimal chains are recovered from embeddings") {
  auto X = discrete_space(3);
  CHECK(recover_minimal_chain(X, embed_subset(X, Subset{1})) == make_hyperpoint(X, {Subset{1}}, {q(1)}));
  FunctionVector<Rational> off{{q(1), q(0), q(-1, 2)}, std::nullopt};
  CHECK_THROWS_AS(recover_minimal_chain(X, off), NotInHull);
  FunctionVector<Rational> bad_point{{q(0), q(1), q(1)}, q(1, 2)};
  CHECK_THROWS_AS(recover_minimal_chain(X, bad_point), NotInHull);

  auto r = rng(52);
  for (int trial = 0; trial < 300; ++trial) {
    auto Y = random_metric_space(r, uniform(r, 1, 6));
    auto h = random_hyperpoint(r, Y, 5);
    CHECK(recover_minimal_chain(Y, embed_hyperpoint(Y, h)) == h);
    CHECK(recover_minimal_chain(Y, embed_hyperpoint(Y, h, true)) == h);
  }
}

TEST_CASE("distinct hyperpoints on a four-point space embed to distinct functions") {
  auto r = rng(53);
  auto X = random_metric_space(r, 4);
  std::map<std::vector<Rational>, HyperPoint<Rational>> seen;
  for (int trial = 0; trial < 2000; ++trial) {
    auto h = random_hyperpoint(r, X, 4);
    auto f = embed_hyperpoint(X, h).values;
    auto [it, fresh] = seen.emplace(f, h);
    if (!fresh) CHECK(it->second == h);
  }
  CHECK(seen.size() > 100);
}

TEST_CASE("closed simplices of two chains meet in the simplex of their common subchain") {
  auto r = rng(54);
  auto X = random_metric_space(r, 4);
  const std::vector<Subset> subsets{{0}, {1}, {0, 1}, {0, 2}, {0, 1, 2}, {0, 1, 3}, {0, 1, 2, 3}};
  for (int trial = 0; trial < 40; ++trial) {
    auto chain = [&] {
      std::vector<Subset> c;
      for (const auto& s : subsets)
        if ((c.empty() || (contains(s, c.back()) && s != c.back())) && coin(r, 0.5)) c.push_back(s);
      if (c.empty()) c.push_back(subsets[static_cast<std::size_t>(uniform(r, 0, 6))]);
      return c;
    };
    auto a = chain(), b = chain();
    std::vector<Subset> common;
    for (const auto& s : a)
      if (std::find(b.begin(), b.end(), s) != b.end()) common.push_back(s);
    auto ia = simplex_image(X, a, 4), ib = simplex_image(X, b, 4);
    std::set<std::vector<Rational>> meet;
    std::set_intersection(ia.begin(), ia.end(), ib.begin(), ib.end(), std::inserter(meet, meet.end()));
    if (common.empty()) CHECK(meet.empty());
    else CHECK(meet == simplex_image(X, common, 4));
  }
}

TEST_CASE("stability constants") {
  auto c0 = stability_constants<Rational>(0, q(1), q(1, 2));
  CHECK(c0.delta_chain == 1);
  CHECK(c0.phi == 1);
  auto c1 = stability_constants<Rational>(1, q(1), q(1, 2));
  CHECK(c1.delta_chain == q(1, 16));
  CHECK(c1.phi == 5);
  CHECK(c1.delta_block == power(q(1, 12), Integer(20)));
  CHECK(phi_exponent(2) == 21);
  CHECK(stability_constants<Rational>(1, q(1, 4), q(1, 2)).eps == q(1, 4));
  CHECK(stability_constants<Rational>(1, q(1), q(3)).eps == 1);
  CHECK_THROWS_AS(stability_constants<Rational>(-1, q(1), q(1)), BadParameters);
  CHECK_THROWS_AS(stability_constants<Rational>(1, q(0), q(1)), BadParameters);
  CHECK_THROWS_AS(stability_constants<Rational>(1, q(2), q(1)), BadParameters);
  CHECK_THROWS_AS(stability_constants<Rational>(1, q(1), q(0)), BadParameters);
}

TEST_CASE("stability check on identical and perturbed hyperpoints") {
  auto X = discrete_space(3);
  auto x = make_hyperpoint(X, {Subset{0}, Subset{0, 1}}, {q(1, 2), q(1, 2)});
  auto same = stability_check(X, x, x, q(1, 2));
  CHECK(same.distance == 0);
  CHECK(same.chain_applicable);
  CHECK(same.block_applicable);
  REQUIRE(same.blocks.has_value());
  CHECK_FALSE(same.violation());
  CHECK(find_block_decomposition(X, x, x, q(1, 2)).has_value());

  // Weight jitter far below every delta.
  const Rational tiny = stability_constants<Rational>(2, q(1, 2), q(1, 2)).delta_block / 4;
  auto y = make_hyperpoint(X, {Subset{0}, Subset{0, 1}}, {Rational(q(1, 2) + tiny), Rational(q(1, 2) - tiny)});
  auto jitter = stability_check(X, x, y, q(1, 2));
  CHECK(jitter.distance == tiny);
  CHECK(jitter.block_applicable);
  CHECK(jitter.blocks.has_value());
  CHECK_FALSE(jitter.violation());

  auto far = make_hyperpoint(X, {Subset{2}}, {q(1)});
  auto apart = stability_check(X, x, far, q(1, 2));
  CHECK_FALSE(apart.block_applicable);
  CHECK_FALSE(apart.violation());
}

TEST_CASE("remetrized transport") {
  auto r = rng(55);
  for (int trial = 0; trial < 50; ++trial) {
    auto X = random_metric_space(r, uniform(r, 1, 5));
    auto half = scaled(X, q(1, 2));
    auto x = random_hyperpoint(r, X, 3), y = random_hyperpoint(r, X, 3);
    CHECK(remetrize_transport(X, X, x) == x);
    CHECK(supnorm_distance(embed_hyperpoint(half, remetrize_transport(X, half, x)),
                           embed_hyperpoint(half, remetrize_transport(X, half, y))) ==
          supnorm_distance(embed_hyperpoint(X, x), embed_hyperpoint(X, y)) / 2);
    CHECK(transport_function(X, half, embed_hyperpoint(X, x)) == embed_hyperpoint(half, x));
    const Rational beta(1, uniform(r, 2, 6));
    const Rational alpha = subset_modulus(X, half, beta);
    CHECK(alpha > 0);
    CHECK(alpha <= beta);
    for (Index m1 = 1; m1 < (Index(1) << X.size()); ++m1)
      for (Index m2 = 1; m2 < (Index(1) << X.size()); ++m2) {
        Subset s1, s2;
        for (Index i = 0; i < X.size(); ++i) {
          if (m1 >> i & 1) s1.push_back(i);
          if (m2 >> i & 1) s2.push_back(i);
        }
        if (hausdorff_distance(X, s1, s2) <= alpha) CHECK(hausdorff_distance(half, s1, s2) <= beta);
      }
  }
  auto a = discrete_space(2), b = discrete_space(2, "y");
  CHECK_THROWS_AS(remetrize_transport(a, b, make_hyperpoint(a, {Subset{0}}, {q(1)})), PointSetMismatch);
}

TEST_CASE("continuity of the transport at the block-matching modulus") {
  auto X = discrete_space(3);
  RatMatrix d(3, 3);
  d << 0, q(1, 2), q(1, 2), q(1, 2), 0, q(1, 4), q(1, 2), q(1, 4), 0;
  FiniteMetricSpace<Rational> Y(X.labels(), d);
  auto x = make_hyperpoint(X, {Subset{0}}, {q(1)});
  auto near = stability_check(X, x, x, q(1, 2));
  CHECK(near.distance == 0);
  auto rep = continuity_check(X, Y, x, x, q(1, 2));
  CHECK(rep.beta == q(1, 8));
  CHECK(rep.alpha <= rep.beta);
  CHECK(rep.applicable);
  CHECK(rep.holds);

  auto r = rng(56);
  for (int trial = 0; trial < 40; ++trial) {
    auto P = random_metric_space(r, uniform(r, 2, 4));
    auto Q = scaled(P, q(uniform(r, 1, 4), 4));
    auto h = make_hyperpoint(P, {Subset{0}}, {q(1)});
    const Rational tiny = power(q(1, 12), Integer(20)) / 8;
    auto k = make_hyperpoint(P, {Subset{0}, whole_space(P)}, {Rational(1 - tiny), tiny});
    auto c = continuity_check(P, Q, h, k, q(1, 2));
    if (c.applicable) CHECK(c.holds);
    CHECK(c.transported <= c.distance);
  }
}

TEST_CASE("comparison of the four distances") {
  auto X = discrete_space(3);
  auto x = make_hyperpoint(X, {Subset{0}, Subset{0, 1}}, {q(1, 3), q(2, 3)});
  auto zero = phi_comparison(X, x, x, std::optional<Rational>(q(1, 2)));
  CHECK(zero.supnorm == 0);
  CHECK(zero.l1 == 0);
  CHECK(zero.ky_fan == 0);
  CHECK(zero.kantorovich == 0);
  CHECK(zero.passed());

  auto line = line_space<Rational>({q(0), q(1, 3), q(1)});
  auto a = make_hyperpoint(line, {Subset{0}, Subset{0, 1}}, {q(1, 2), q(1, 2)});
  auto b = make_hyperpoint(line, {Subset{1}, Subset{0, 1, 2}}, {q(3, 4), q(1, 4)});
  auto cmp = phi_comparison(line, a, b);
  CHECK(cmp.supnorm == q(1, 3));
  CHECK(cmp.l1 == q(5, 12));
  CHECK(cmp.passed());

  auto r = rng(57);
  for (int trial = 0; trial < 100; ++trial) {
    auto Y = random_metric_space(r, uniform(r, 1, 5));
    auto u = random_hyperpoint(r, Y, 3), v = random_hyperpoint(r, Y, 3);
    auto c = phi_comparison(Y, u, v, std::optional<Rational>(q(1, 4)));
    CHECK(c.supnorm_below_l1);
    CHECK(c.kantorovich_below_l1);
    CHECK(c.passed());
  }
}
