#include <functional>

#include "support.hpp"

using namespace test;

namespace {

// gcd of all k x k minors, by expansion over row and column subsets.
Integer gcd_of_minors(const IntMatrix& m, Index k) {
  Integer g = 0;
  std::vector<Index> rows, cols;
  std::function<void(Index)> pick_cols;
  std::function<void(Index)> pick_rows = [&](Index from) {
    if (static_cast<Index>(rows.size()) == k) {
      pick_cols(0);
      return;
    }
    for (Index i = from; i < m.rows(); ++i) {
      rows.push_back(i);
      pick_rows(i + 1);
      rows.pop_back();
    }
  };
  pick_cols = [&](Index from) {
    if (static_cast<Index>(cols.size()) == k) {
      IntMatrix sub(k, k);
      for (Index i = 0; i < k; ++i)
        for (Index j = 0; j < k; ++j) sub(i, j) = m(rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]);
      g = boost::multiprecision::gcd(g, abs_value(determinant(sub)));
      return;
    }
    for (Index j = from; j < m.cols(); ++j) {
      cols.push_back(j);
      pick_cols(j + 1);
      cols.pop_back();
    }
  };
  pick_rows(0);
  return g;
}

IntMatrix random_matrix(Rng& r, Index rows, Index cols, long bound) {
  IntMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = uniform(r, -bound, bound);
  return m;
}

// Hom(C_n, Z/m) presented as Z^{c_n} modulo m.
CochainComplexZ with_coefficients(CochainComplexZ c, long m) {
  c.relations.clear();
  for (Index r : c.ranks) c.relations.push_back(IntMatrix(Integer(m) * identity<Integer>(r)));
  return c;
}

SimplicialComplex projective_plane() {
  std::vector<SimplicialComplex::Simplex> faces{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                                {1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5}};
  return SimplicialComplex({"1", "2", "3", "4", "5", "6"}, faces);
}

}  // namespace

TEST_CASE("Smith normal form of small matrices") {
  auto id = smith_normal_form(identity<Integer>(3));
  CHECK(id.D == identity<Integer>(3));
  CHECK(id.rank == 3);

  auto s = smith_normal_form(int_matrix({{2, 4}, {6, 8}}));
  CHECK(s.D == int_matrix({{2, 0}, {0, 4}}));
  CHECK(s.U * int_matrix({{2, 4}, {6, 8}}) * s.V == s.D);

  auto z = smith_normal_form(IntMatrix(IntMatrix::Zero(2, 3)));
  CHECK(z.rank == 0);
  CHECK(is_zero(z.D));
}

TEST_CASE("invariant factors match gcds of minors and transforms are unimodular") {
  auto r = rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    const Index rows = uniform(r, 1, 4), cols = uniform(r, 1, 4);
    IntMatrix m = random_matrix(r, rows, cols, 6);
    auto s = smith_normal_form(m);
    CHECK(s.U * m * s.V == s.D);
    CHECK(s.U * s.U_inv == identity<Integer>(rows));
    CHECK(s.V * s.V_inv == identity<Integer>(cols));
    CHECK(abs_value(determinant(s.U)) == 1);
    CHECK(abs_value(determinant(s.V)) == 1);
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < cols; ++j)
        if (i != j) CHECK(s.D(i, j) == 0);
    auto d = s.invariant_factors();
    for (std::size_t i = 1; i < d.size(); ++i) CHECK(d[i] % d[i - 1] == 0);
    Integer product = 1;
    for (Index k = 1; k <= std::min(rows, cols); ++k) {
      if (k <= s.rank) product *= d[static_cast<std::size_t>(k - 1)];
      CHECK(gcd_of_minors(m, k) == (k <= s.rank ? product : Integer(0)));
    }
    CHECK(s.rank == rational_rank(m));
  }
}

TEST_CASE("homology of a point, the 4-cycle and the projective plane") {
  auto point = simplicial_chain_complex(SimplicialComplex({"p"}, {{0}}));
  CHECK(homology(point, 0) == FgAbGroup::integers());
  CHECK(homology(point, 1).is_trivial());

  auto cycle = to_simplicial_complex(circle_poset());
  auto c = simplicial_chain_complex(cycle);
  CHECK(homology(c, 0) == FgAbGroup::integers());
  CHECK(homology(c, 1) == FgAbGroup::integers());

  auto rp2 = simplicial_chain_complex(projective_plane());
  CHECK(projective_plane().euler_characteristic() == 1);
  CHECK(homology(rp2, 0) == FgAbGroup::integers());
  CHECK(homology(rp2, 1) == FgAbGroup::cyclic(2));
  CHECK(homology(rp2, 2).is_trivial());
  CHECK(homology_by_invariant_factors(rp2, 1) == FgAbGroup::cyclic(2));
  CHECK(cohomology_by_uct(rp2, 2, FgAbGroup::integers()) == FgAbGroup::cyclic(2));
  CHECK(cohomology(simplicial_cochain_complex(projective_plane()), 2) == FgAbGroup::cyclic(2));
  CHECK(mod2_cohomology_dimension(rp2, 1) == 1);
  CHECK(mod2_cohomology_dimension(rp2, 2) == 1);
}

TEST_CASE("homology rejects a non-complex") {
  ChainComplexZ bad;
  bad.ranks = {1, 1, 1};
  bad.boundaries = {IntMatrix(0, 1), int_matrix({{1}}), int_matrix({{1}})};
  CHECK_THROWS_AS(homology(bad, 1), NotAComplex);
}

TEST_CASE("kernels, cokernels and images") {
  auto Z = FgAbGroup::integers();
  auto twice = make_homomorphism(Z, Z, int_matrix({{2}}));
  CHECK(kernel(twice).is_trivial());
  CHECK(cokernel(twice) == FgAbGroup::cyclic(2));
  CHECK(image(twice) == Z);

  auto zero = make_homomorphism(Z, Z, int_matrix({{0}}));
  CHECK(kernel(zero) == Z);
  CHECK(cokernel(zero) == Z);

  auto m = make_homomorphism(FgAbGroup::integers(2), FgAbGroup::integers(2), int_matrix({{1, 2}, {3, 4}}));
  CHECK(cokernel(m) == FgAbGroup::cyclic(2));
  CHECK(kernel(m).is_trivial());

  CHECK_THROWS_AS(make_homomorphism(FgAbGroup::cyclic(2), Z, int_matrix({{1}})), IllDefined);
  CHECK_NOTHROW(make_homomorphism(FgAbGroup::cyclic(2), FgAbGroup::cyclic(4), int_matrix({{2}})));
  auto proj = make_homomorphism(Z, FgAbGroup::cyclic(6), int_matrix({{4}}));
  CHECK(kernel(proj) == Z);
  CHECK(image(proj) == FgAbGroup::cyclic(3));
  CHECK(cokernel(proj) == FgAbGroup::cyclic(2));
}

TEST_CASE("rank-nullity over Q on random homomorphisms of free groups") {
  auto r = rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const Index a = uniform(r, 1, 4), b = uniform(r, 1, 4);
    auto h = make_homomorphism(FgAbGroup::integers(a), FgAbGroup::integers(b), random_matrix(r, b, a, 4));
    CHECK(kernel(h).free_rank() + image(h).free_rank() == a);
    CHECK(cokernel(h).free_rank() + image(h).free_rank() == b);
    CHECK(image(h).is_free());
  }
}

TEST_CASE("group construction and formatting") {
  CHECK(FgAbGroup::from_orders(1, {4, 6}) == FgAbGroup(1, {2, 12}));
  CHECK(FgAbGroup::from_orders(0, {1, 3, 5}) == FgAbGroup::cyclic(15));
  CHECK(FgAbGroup(2, {2, 6}).to_string() == "Z^2 + Z/2 + Z/6");
  CHECK(FgAbGroup().to_string() == "0");
  CHECK_THROWS_AS(FgAbGroup(0, {4, 6}), InputError);
  CHECK(FgAbGroup::from_relations(int_matrix({{2, 0}, {0, 3}})) == FgAbGroup::cyclic(6));
  CHECK(FgAbGroup::cyclic(2).direct_sum(FgAbGroup::cyclic(3)) == FgAbGroup::cyclic(6));
  CHECK(FgAbGroup::cyclic(2).power(2) == FgAbGroup(0, {2, 2}));
}

TEST_CASE("integral and rational homology agree in rank on random complexes") {
  auto r = rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const Index n = uniform(r, 2, 7);
    std::vector<std::string> labels;
    for (Index i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    std::vector<SimplicialComplex::Simplex> faces;
    for (int f = 0; f < 6; ++f) {
      SimplicialComplex::Simplex s;
      for (Index v = 0; v < n; ++v)
        if (coin(r, 0.4)) s.push_back(v);
      if (!s.empty() && s.size() <= 4) faces.push_back(s);
    }
    for (Index v = 0; v < n; ++v) faces.push_back({v});
    SimplicialComplex k(labels, faces);
    auto c = simplicial_chain_complex(k);
    Integer euler = 0;
    for (Index d = 0; d <= k.dimension(); ++d) {
      auto h = homology(c, d);
      CHECK(h == homology_by_invariant_factors(c, d));
      CHECK(h.free_rank() == rational_betti(c, d));
      euler += d % 2 == 0 ? Integer(h.free_rank()) : Integer(-h.free_rank());
      for (long m : {2L, 3L, 4L})
        CHECK(cohomology(with_coefficients(simplicial_cochain_complex(k), m), d) ==
              cohomology_by_uct(c, d, FgAbGroup::cyclic(m)));
      CHECK(cohomology(simplicial_cochain_complex(k), d) == cohomology_by_uct(c, d, FgAbGroup::integers()));
      CHECK(mod2_cohomology_dimension(c, d) ==
            cohomology_by_uct(c, d, FgAbGroup::cyclic(2)).generator_count());
    }
    CHECK(euler == k.euler_characteristic());
  }
}

TEST_CASE("subquotient coordinates invert the representatives") {
  auto r = rng(24);
  for (int trial = 0; trial < 50; ++trial) {
    const Index n = uniform(r, 1, 4);
    IntMatrix in = random_matrix(r, n, uniform(r, 0, 2), 3);
    IntMatrix out(0, n);
    Subquotient sq(in, out, IntMatrix(n, 0), IntMatrix(0, 0));
    CHECK(sq.group() == cokernel(make_homomorphism(FgAbGroup::integers(in.cols()), FgAbGroup::integers(n), in)));
    const IntMatrix& reps = sq.representatives();
    for (Index g = 0; g < sq.group().generator_count(); ++g) {
      IntVector e = IntVector::Zero(sq.group().generator_count());
      e(g) = 1;
      CHECK(sq.group().reduce(sq.coordinates(reps.col(g))) == sq.group().reduce(e));
    }
  }
}
