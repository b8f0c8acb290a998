#include <numeric>

#include "support.hpp"

using namespace test;

namespace {

SimplicialComplex circle() { return SimplicialComplex({"u", "v", "w"}, {{0, 1}, {1, 2}, {0, 2}}); }
SimplicialComplex point() { return SimplicialComplex({"o"}, {{0}}); }

SpaceDiagram over_two_chain(const SimplicialComplex& low, const SimplicialComplex& high, std::vector<Index> map) {
  return SpaceDiagram::from_covers(chain_poset(2), {low, high}, {{{0, 1}, SimplicialMap{std::move(map)}}});
}

SpaceDiagram constant_space(const FinitePoset& P, const SimplicialComplex& K) {
  std::vector<Index> id(static_cast<std::size_t>(K.vertex_count()));
  std::iota(id.begin(), id.end(), Index(0));
  CoverSpaceMaps maps;
  for (const auto& c : P.covers()) maps[c] = SimplicialMap{id};
  return SpaceDiagram::from_covers(P, std::vector<SimplicialComplex>(static_cast<std::size_t>(P.size()), K), maps);
}

std::vector<Index> betti(const SimplicialComplex& k) {
  auto c = simplicial_chain_complex(k);
  std::vector<Index> out;
  for (Index n = 0; n <= k.dimension(); ++n) out.push_back(rational_betti(c, n));
  return out;
}

// Drops trailing zeros so Betti vectors of different lengths compare.
std::vector<Index> trim(std::vector<Index> b) {
  while (!b.empty() && b.back() == 0) b.pop_back();
  return b;
}

}  // namespace

TEST_CASE("simplicial complexes and maps") {
  auto k = circle();
  CHECK(k.count(0) == 3);
  CHECK(k.count(1) == 3);
  CHECK(k.euler_characteristic() == 0);
  CHECK(k.maximal_simplices().size() == 3);
  CHECK_THROWS_AS(SimplicialComplex({"a"}, {{0, 1}}), InputError);
  CHECK(is_simplicial(k, point(), SimplicialMap{{0, 0, 0}}));
  CHECK_FALSE(is_simplicial(SimplicialComplex({"a", "b"}, {{0}, {1}}), SimplicialComplex({"a", "b"}, {{0}, {1}}),
                            SimplicialMap{{0, 1, 1}}));
  auto triangle = SimplicialComplex({"u", "v", "w"}, {{0, 1, 2}});
  CHECK(chain_map_matrix(triangle, k, SimplicialMap{{1, 0, 2}}, 1) == int_matrix({{-1, 0, 0}, {0, 0, 1}, {0, 1, 0}}) );
  CHECK(is_zero(chain_map_matrix(k, point(), SimplicialMap{{0, 0, 0}}, 1)));
  CHECK(compose(SimplicialMap{{0, 0}}, SimplicialMap{{1, 0, 1}}) == SimplicialMap{{0, 0, 0}});
}

TEST_CASE("space diagrams reject bad maps") {
  CHECK_THROWS_AS(over_two_chain(circle(), SimplicialComplex({"a", "b"}, {{0}, {1}}), {0, 1, 0}), InputError);
  auto diamond = poset({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
  auto two = SimplicialComplex({"x", "y"}, {{0}, {1}});
  CoverSpaceMaps maps{{{0, 1}, SimplicialMap{{0, 1}}}, {{0, 2}, SimplicialMap{{0, 1}}},
                      {{1, 3}, SimplicialMap{{0, 1}}}, {{2, 3}, SimplicialMap{{1, 0}}}};
  CHECK_THROWS_AS(SpaceDiagram::from_covers(diamond, {two, two, two, two}, maps), Nonfunctorial);
}

TEST_CASE("homotopy colimits of small diagrams") {
  auto single = SpaceDiagram::from_covers(chain_poset(1), {circle()}, {});
  CHECK(trim(betti(hocolim_complex(single))) == std::vector<Index>{1, 1});
  CHECK(trim(hocolim_betti(single)) == std::vector<Index>{1, 1});

  auto boundary = SimplicialComplex({"u", "v", "w"}, {{0, 1}, {1, 2}, {0, 2}});
  auto cone = over_two_chain(boundary, point(), {0, 0, 0});
  CHECK(trim(betti(hocolim_complex(cone))) == std::vector<Index>{1});
  CHECK(trim(hocolim_betti(cone)) == std::vector<Index>{1});
  CHECK(homology(simplicial_chain_complex(hocolim_complex(cone)), 1).is_trivial());

  auto cylinder = over_two_chain(circle(), circle(), {0, 1, 2});
  CHECK(homology(simplicial_chain_complex(hocolim_complex(cylinder)), 1) == FgAbGroup::integers());
  CHECK(homology(cylinder_chain_complex(cylinder), 1) == FgAbGroup::integers());
  CHECK(trim(hocolim_betti(cylinder)) == std::vector<Index>{1, 1});

  // Degree-two self-map of a hexagon: the mapping cylinder has H_1 = Z.
  auto hexagon = SimplicialComplex({"0", "1", "2", "3", "4", "5"}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  auto wrap = over_two_chain(hexagon, circle(), {0, 1, 2, 0, 1, 2});
  CHECK(homology(simplicial_chain_complex(hocolim_complex(wrap)), 1) == FgAbGroup::integers());
  CHECK(homology(cylinder_chain_complex(wrap), 1) == FgAbGroup::integers());
}

TEST_CASE("both hocolim models agree on random diagrams") {
  auto r = rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    auto P = random_poset(r, uniform(r, 1, 4));
    auto D = random_space_diagram(r, P, 5);
    auto k = hocolim_complex(D);
    auto counts = hocolim_simplex_counts(D);
    const Index top = k.dimension();
    REQUIRE(static_cast<Index>(counts.size()) >= top + 1);
    for (Index n = 0; n <= top; ++n) CHECK(counts[static_cast<std::size_t>(n)] == Integer(k.count(n)));
    auto cyl = cylinder_chain_complex(D), simp = simplicial_chain_complex(k);
    for (Index n = 0; n <= std::max(top, cyl.top_degree()); ++n) CHECK(homology(cyl, n) == homology(simp, n));
  }
}

TEST_CASE("identity diagrams follow the Kunneth formula") {
  auto r = rng(62);
  for (int trial = 0; trial < 20; ++trial) {
    auto P = random_poset(r, uniform(r, 1, 5));
    const auto& K = trial % 2 ? circle() : SimplicialComplex({"a", "b"}, {{0}, {1}});
    auto bp = betti(to_simplicial_complex(P)), bk = betti(K);
    std::vector<Index> expected(bp.size() + bk.size(), 0);
    for (std::size_t i = 0; i < bp.size(); ++i)
      for (std::size_t j = 0; j < bk.size(); ++j) expected[i + j] += bp[i] * bk[j];
    CHECK(trim(hocolim_betti(constant_space(P, K))) == trim(expected));
  }
}

TEST_CASE("fiber (co)homology diagrams") {
  auto pts = constant_space(chain_poset(3), point());
  auto d0 = fiber_cohomology_diagram(pts, 0);
  CHECK(d0.base() == dual(chain_poset(3)));
  for (Index p = 0; p < 3; ++p) CHECK(d0.group(p) == FgAbGroup::integers());
  CHECK(d0.map(2, 0) == int_matrix({{1}}));

  auto collapse = over_two_chain(circle(), point(), {0, 0, 0});
  auto d1 = fiber_cohomology_diagram(collapse, 1);
  CHECK(d1.group(0) == FgAbGroup::integers());
  CHECK(d1.group(1).is_trivial());
  auto h1 = fiber_homology_diagram(collapse, 1);
  CHECK(h1.base() == chain_poset(2));
  CHECK(h1.group(0) == FgAbGroup::integers());
  CHECK(h1.group(1).is_trivial());
  auto h0 = fiber_homology_diagram(over_two_chain(SimplicialComplex({"a", "b"}, {{0}, {1}}), point(), {0, 0}), 0);
  CHECK(h0.map(0, 1) == int_matrix({{1, 1}}));
}

TEST_CASE("E2 pages of worked examples") {
  auto c4 = constant_space(circle_poset(), point());
  auto e = bk_e2(c4);
  CHECK(e.dim(0, 0) == 1);
  CHECK(e.dim(1, 0) == 1);
  CHECK(check_euler(c4).passed());
  auto m = check_milnor(c4);
  CHECK(m.hocolim == std::vector<Index>{1, 1});
  CHECK(m.passed());

  auto cylinder = over_two_chain(circle(), circle(), {0, 1, 2});
  auto ec = bk_e2(cylinder);
  CHECK(ec.dims == std::vector<std::vector<Index>>{{1, 1}, {0, 0}});
  auto euler = check_euler(cylinder);
  CHECK(euler.e2_side == 0);
  CHECK(euler.passed());
  CHECK(check_milnor(cylinder).passed());

  auto collapse = over_two_chain(circle(), point(), {0, 0, 0});
  auto ez = bk_e2(collapse, Field::integers);
  CHECK(ez.dim(0, 0) == 1);
  CHECK(ez.dim(0, 1) == 0);
  CHECK(ez.dim(1, 1) == 0);
  CHECK(ez.integral[0][0] == FgAbGroup::integers());
  CHECK(check_euler(collapse).hocolim_side == 1);
  CHECK(check_milnor(collapse).passed());

  CHECK_THROWS_AS(check_milnor(constant_space(chain_poset(3), point())), DimensionTooHigh);
}

TEST_CASE("point fibers give the cohomology of the base") {
  auto r = rng(63);
  for (int trial = 0; trial < 20; ++trial) {
    auto P = random_poset(r, uniform(r, 1, 5));
    auto e = bk_e2(constant_space(P, point()));
    auto b = betti(to_simplicial_complex(P));
    for (Index p = 0; p < static_cast<Index>(b.size()); ++p) CHECK(e.dim(p, 0) == b[static_cast<std::size_t>(p)]);
    CHECK(trim(hocolim_betti(constant_space(P, point()))) == trim(b));
  }
}

TEST_CASE("Euler and Milnor checks on random diagrams") {
  auto r = rng(64);
  for (int trial = 0; trial < 40; ++trial) {
    auto P = random_poset(r, uniform(r, 1, 5));
    auto D = random_space_diagram(r, P, 6);
    CHECK(check_euler(D).passed());
    CHECK(check_euler(D, Field::integers).passed());
    if (order_complex(P).dimension() <= 1) {
      CHECK(check_milnor(D).passed());
      CHECK(check_milnor(D, Field::integers).passed());
    } else {
      CHECK_THROWS_AS(check_milnor(D), DimensionTooHigh);
    }
  }
}

TEST_CASE("finite shadow of the hyperspace spectral sequence") {
  for (Index n = 1; n <= 4; ++n) {
    auto rep = leray_shadow(discrete_space(n));
    CHECK(rep.points == n);
    CHECK(rep.poset_size == (Index(1) << n) - 1);
    REQUIRE(!rep.limits.empty());
    CHECK(rep.limits[0] == FgAbGroup::integers(n));
    for (std::size_t p = 1; p < rep.limits.size(); ++p) CHECK(rep.limits[p].is_trivial());
    for (const auto& g : rep.higher) CHECK(g.is_trivial());
    CHECK(rep.passed());
  }
  CHECK(leray_shadow(line_space<Rational>({q(0), q(1, 3), q(1)})).passed());
  CHECK_THROWS_AS(leray_shadow(discrete_space(5)), TooLarge);
}
