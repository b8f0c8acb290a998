#include "support.hpp"

using namespace test;

namespace {

PosetDiagram doubling_chain() {
  return PosetDiagram::from_covers(chain_poset(2), {FgAbGroup::integers(), FgAbGroup::integers()},
                                   {{{0, 1}, int_matrix({{2}})}});
}

FinitePoset pullback_poset() { return poset({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}}); }
FinitePoset pushout_poset() { return poset({"a", "b", "c"}, {{"c", "a"}, {"c", "b"}}); }

}  // namespace

TEST_CASE("cochain complexes of small diagrams") {
  auto point = build_cochain_complex(constant_diagram(chain_poset(1), FgAbGroup::integers()));
  CHECK(point.complex.ranks == std::vector<Index>{1});

  auto two = build_cochain_complex(doubling_chain());
  CHECK(two.complex.ranks == std::vector<Index>{2, 1});
  auto d = two.complex.coboundary(0);
  REQUIRE(d.rows() == 1);
  REQUIRE(d.cols() == 2);
  // One entry is the identity face, the other carries the map.
  CHECK(((abs_value(d(0, 0)) == 2 && abs_value(d(0, 1)) == 1) || (abs_value(d(0, 0)) == 1 && abs_value(d(0, 1)) == 2)));
  CHECK(d(0, 0) * d(0, 1) < 0);
  CHECK(cohomology(two.complex, 0) == FgAbGroup::integers());
  CHECK(cohomology(two.complex, 1).is_trivial());

  auto c4 = build_cochain_complex(constant_diagram(circle_poset(), FgAbGroup::integers()));
  CHECK(cohomology(c4.complex, 0) == FgAbGroup::integers());
  CHECK(cohomology(c4.complex, 1) == FgAbGroup::integers());
}

TEST_CASE("derived limits of worked examples") {
  auto Z = FgAbGroup::integers();
  auto pullback = constant_diagram(pullback_poset(), Z);
  CHECK(derived_limit(pullback, 0) == Z);
  CHECK(derived_limit(pullback, 1).is_trivial());
  CHECK(lim_direct(pullback) == Z);

  auto c4 = constant_diagram(circle_poset(), Z);
  CHECK(derived_limit(c4, 1) == Z);
  CHECK(derived_limit(c4, 2).is_trivial());
  CHECK(derived_limit(c4, -1).is_trivial());

  // A maximum element makes the order complex a cone.
  auto cone = poset({"a", "b", "c", "m"}, {{"a", "m"}, {"b", "m"}, {"c", "m"}, {"a", "c"}});
  const FgAbGroup G(1, {6});
  auto constant = constant_diagram(cone, G);
  CHECK(derived_limit(constant, 0) == G);
  for (Index p = 1; p <= 3; ++p) CHECK(derived_limit(constant, p).is_trivial());

  CHECK(lim_direct(doubling_chain()) == Z);
  auto zero_map = PosetDiagram::from_covers(chain_poset(2), {Z, Z}, {{{0, 1}, int_matrix({{0}})}});
  CHECK(lim_direct(zero_map) == Z);
  CHECK(derived_limit(zero_map, 0) == Z);
  CHECK(derived_limit(zero_map, 1).is_trivial());
}

TEST_CASE("colimits of worked examples") {
  auto Z = FgAbGroup::integers();
  CHECK(colim_via_homology(doubling_chain()) == Z);
  CHECK(colim_direct(doubling_chain()) == Z);
  auto pushout = constant_diagram(pushout_poset(), Z);
  CHECK(colim_via_homology(pushout) == Z);
  CHECK(colim_direct(pushout) == Z);
  auto c4 = constant_diagram(circle_poset(), Z);
  CHECK(colim_via_homology(c4) == Z);
  CHECK(colim_direct(c4) == Z);
  CHECK(colim_homology(c4, 1) == Z);

  auto into_torsion = PosetDiagram::from_covers(chain_poset(2), {Z, FgAbGroup::cyclic(4)},
                                                {{{0, 1}, int_matrix({{1}})}});
  CHECK(colim_direct(into_torsion) == FgAbGroup::cyclic(4));
  CHECK(colim_via_homology(into_torsion) == FgAbGroup::cyclic(4));
  CHECK(lim_direct(into_torsion) == FgAbGroup::integers());
}

TEST_CASE("nonfunctorial cover maps are rejected with a witness") {
  auto Z = FgAbGroup::integers();
  auto diamond = poset({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
  CoverMaps maps{{{0, 1}, int_matrix({{1}})}, {{0, 2}, int_matrix({{1}})},
                 {{1, 3}, int_matrix({{1}})}, {{2, 3}, int_matrix({{2}})}};
  try {
    PosetDiagram::from_covers(diamond, {Z, Z, Z, Z}, maps);
    FAIL("accepted");
  } catch (const Nonfunctorial& e) {
    CHECK(e.p == "a");
    CHECK(e.r == "d");
    CHECK((e.q == "b" || e.q == "c"));
  }
  maps[{2, 3}] = int_matrix({{1}});
  CHECK_NOTHROW(PosetDiagram::from_covers(diamond, {Z, Z, Z, Z}, maps));

  CoverMaps all{{{0, 1}, int_matrix({{1}})}, {{1, 2}, int_matrix({{1}})}, {{0, 2}, int_matrix({{3}})}};
  CHECK_THROWS_AS(PosetDiagram::from_all_pairs(chain_poset(3), {Z, Z, Z}, all), Nonfunctorial);
  CHECK_THROWS_AS(PosetDiagram::from_covers(chain_poset(2), {FgAbGroup::cyclic(2), Z}, {{{0, 1}, int_matrix({{1}})}}),
                  IllDefined);
}

TEST_CASE("constant-diagram law on random posets") {
  auto r = rng(31);
  const std::vector<FgAbGroup> groups{FgAbGroup::integers(), FgAbGroup::cyclic(2), FgAbGroup(1, {3})};
  for (int trial = 0; trial < 40; ++trial) {
    auto P = random_poset(r, uniform(r, 1, 6));
    const auto& G = groups[static_cast<std::size_t>(trial) % groups.size()];
    auto D = constant_diagram(P, G);
    const Index top = order_complex(P).dimension();
    auto limits = derived_limits(D, top + 1);
    for (Index p = 0; p <= top; ++p) {
      CHECK(limits[static_cast<std::size_t>(p)] == order_complex_cohomology(P, p, G));
      CHECK(derived_limit(D, p) == limits[static_cast<std::size_t>(p)]);
    }
    CHECK(limits[static_cast<std::size_t>(top + 1)].is_trivial());
    auto h0 = homology(simplicial_chain_complex(to_simplicial_complex(P)), 0);
    CHECK(colim_via_homology(D) == G.power(h0.free_rank()));
  }
}

TEST_CASE("oracle agreement and vanishing on random diagrams") {
  auto r = rng(32);
  for (int trial = 0; trial < 80; ++trial) {
    auto P = random_poset(r, uniform(r, 1, 6));
    auto D = random_diagram(r, P, 3);
    CHECK(derived_limit(D, 0) == lim_direct(D));
    CHECK(colim_via_homology(D) == colim_direct(D));
    const Index top = order_complex(P).dimension();
    CHECK(derived_limit(D, top + 1).is_trivial());
    CHECK(derived_limit(D, top + 2).is_trivial());
  }
}

TEST_CASE("invertible diagrams have the same limits over the dual poset") {
  auto r = rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    auto P = random_poset(r, uniform(r, 1, 5));
    auto D = random_invertible_diagram(r, P, uniform(r, 1, 2));
    auto inverse = inverse_diagram(D);
    CHECK(inverse.base() == dual(P));
    const Index top = order_complex(P).dimension();
    for (Index p = 0; p <= top; ++p) CHECK(derived_limit(D, p) == derived_limit(inverse, p));
    for (Index p = 0; p < P.size(); ++p)
      for (Index q = 0; q < P.size(); ++q)
        if (P.leq(p, q)) CHECK(D.map(p, q) * inverse.map(q, p) == identity<Integer>(D.group(p).generator_count()));
  }
}

TEST_CASE("unimodular inverses") {
  auto r = rng(34);
  for (int trial = 0; trial < 30; ++trial) {
    auto u = random_unimodular(r, uniform(r, 1, 4));
    CHECK(u * unimodular_inverse(u) == identity<Integer>(u.rows()));
  }
  CHECK_THROWS_AS(unimodular_inverse(int_matrix({{2}})), Error);
}
