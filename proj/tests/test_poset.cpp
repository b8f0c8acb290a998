#include "support.hpp"

using namespace test;

TEST_CASE("validate_poset accepts a singleton and rejects a two-cycle") {
  auto p = validate_poset({"a"}, {{"a", "a"}});
  CHECK(p.size() == 1);
  try {
    validate_poset({"a", "b"}, {{"a", "a"}, {"b", "b"}, {"a", "b"}, {"b", "a"}});
    FAIL("two-cycle accepted");
  } catch (const AxiomViolation& e) {
    CHECK(e.axiom == Axiom::antisymmetric);
    CHECK(((e.witness.first == "a" && e.witness.second == "b") || (e.witness.first == "b" && e.witness.second == "a")));
  }
  CHECK_THROWS_AS(validate_poset({"a", "b"}, {{"a", "a"}}), AxiomViolation);
  CHECK_THROWS_AS(validate_poset({"a", "b", "c"}, {{"a", "a"}, {"b", "b"}, {"c", "c"}, {"a", "b"}, {"b", "c"}}),
                  AxiomViolation);
}

TEST_CASE("closures of random relations are partial orders") {
  auto r = rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = uniform(r, 1, 7);
    std::vector<std::pair<Index, Index>> pairs;
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j)
        if (coin(r, 0.3)) pairs.emplace_back(i, j);
    auto leq = reflexive_transitive_closure(n, pairs);
    std::vector<std::string> labels;
    for (Index i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> named;
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        if (leq[static_cast<std::size_t>(i * n + j)]) named.emplace_back(labels[static_cast<std::size_t>(i)], labels[static_cast<std::size_t>(j)]);
    CHECK_NOTHROW(validate_poset(labels, named));
  }
}

TEST_CASE("order complexes of small posets") {
  auto two = chain_poset(2);
  auto k2 = order_complex(two);
  CHECK(k2.count(0) == 2);
  CHECK(k2.count(1) == 1);
  CHECK(k2.dimension() == 1);

  auto c4 = order_complex(circle_poset());
  CHECK(c4.count(0) == 4);
  CHECK(c4.count(1) == 4);
  CHECK(c4.count(2) == 0);
  CHECK(c4.euler_characteristic() == 0);

  // K({x,y}) by inclusion: {x}, {y} below {x,y}.
  auto k = order_complex(poset({"x", "y", "xy"}, {{"x", "xy"}, {"y", "xy"}}));
  CHECK(k.count(0) == 3);
  CHECK(k.count(1) == 2);
  CHECK(k.euler_characteristic() == 1);
}

TEST_CASE("order complex invariants on random posets") {
  auto r = rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    auto P = random_poset(r, uniform(r, 1, 6));
    auto k = order_complex(P);
    CHECK(k.count(0) == P.size());
    for (Index d = 0; d <= k.dimension(); ++d)
      for (const auto& s : k.simplices(d)) {
        CHECK(is_chain(P, s));
        for (Index f = 0; d > 0 && f <= d; ++f) CHECK_NOTHROW(k.index_of(s.face(f)));
      }
    // Maximal simplices are maximal chains: nothing can be inserted anywhere.
    for (const auto& s : k.maximal_simplices())
      for (Index x = 0; x < P.size(); ++x) {
        if (std::find(s.vertices.begin(), s.vertices.end(), x) != s.vertices.end()) continue;
        bool comparable_to_all = true;
        for (Index v : s.vertices) comparable_to_all = comparable_to_all && P.comparable(v, x);
        CHECK_FALSE(comparable_to_all);
      }
    auto kd = order_complex(dual(P));
    CHECK(kd.dimension() == k.dimension());
    for (Index d = 0; d <= k.dimension(); ++d) CHECK(kd.count(d) == k.count(d));
    CHECK(dual(dual(P)) == P);
  }
}

TEST_CASE("atoms and the resolution subposet") {
  auto two = chain_poset(2);
  CHECK(atoms(two) == std::vector<Index>{0});
  std::vector<std::pair<Index, Index>> pairs;
  auto e = e_subposet(two, &pairs);
  REQUIRE(e.size() == 2);
  CHECK(pairs == std::vector<std::pair<Index, Index>>{{0, 0}, {0, 1}});
  CHECK(e.less(0, 1));

  auto k = poset({"x", "y", "xy"}, {{"x", "xy"}, {"y", "xy"}});
  CHECK(atoms(k) == std::vector<Index>{0, 1});

  auto anti = antichain_poset(3);
  CHECK(atoms(anti).size() == 3);
  CHECK(order_complex(e_subposet(anti)).count(1) == 0);
  CHECK(e_subposet(anti).size() == 3);
}

TEST_CASE("atoms form an antichain and E(P) restricted to (a,a) is discrete") {
  auto r = rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    auto P = random_poset(r, uniform(r, 1, 6));
    auto A = atoms(P);
    for (Index a : A)
      for (Index b : A) CHECK((a == b || !P.comparable(a, b)));
    std::vector<std::pair<Index, Index>> pairs;
    auto E = e_subposet(P, &pairs);
    std::vector<Index> diagonal;
    for (Index i = 0; i < E.size(); ++i)
      if (pairs[static_cast<std::size_t>(i)].first == pairs[static_cast<std::size_t>(i)].second) diagonal.push_back(i);
    CHECK(static_cast<Index>(diagonal.size()) == static_cast<Index>(A.size()));
    auto D = induced_subposet(E, diagonal);
    CHECK(order_complex(D).count(1) == 0);
  }
}

TEST_CASE("products and duals") {
  auto sq = product(chain_poset(2), chain_poset(2));
  CHECK(sq.size() == 4);
  CHECK(order_complex(sq).count(2) == 2);
  CHECK(order_complex(sq).euler_characteristic() == 1);

  auto r = rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    auto P = random_poset(r, uniform(r, 1, 5));
    auto anti = antichain_poset(uniform(r, 1, 3));
    auto prod = product(anti, P);
    CHECK(order_complex(prod).total_count() == anti.size() * order_complex(P).total_count());
  }
}

TEST_CASE("weighted chains are validated and canonicalized") {
  auto P = chain_poset(3);
  auto w = make_weighted_chain(P, Chain{{0, 1, 2}}, std::vector<Rational>{q(1, 2), q(0), q(1, 2)});
  CHECK(w.chain.vertices == std::vector<Index>{0, 2});
  CHECK_THROWS_AS(make_weighted_chain(P, Chain{{0, 1}}, std::vector<Rational>{q(1, 2), q(1, 3)}), InvalidWeights);
  CHECK_THROWS_AS(make_weighted_chain(P, Chain{{1, 0}}, std::vector<Rational>{q(1, 2), q(1, 2)}), InvalidWeights);
  CHECK_THROWS_AS(make_weighted_chain(P, Chain{{0, 1}}, std::vector<Rational>{q(3, 2), q(-1, 2)}), InvalidWeights);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == q(1, 2));
  CHECK(parse_rational(" -4 ") == q(-4));
  CHECK(to_string(q(6, 4)) == "3/2");
  CHECK(to_string(q(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("x"), InputError);
}
