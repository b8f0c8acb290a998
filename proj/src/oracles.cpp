#include "dlim/oracles.hpp"

#include <numeric>

namespace dlim {

namespace {

Integer gcd(const Integer& a, const Integer& b) {
  Integer x = abs_value(a), y = abs_value(b);
  while (y != 0) {
    Integer r = x % y;
    x = y;
    y = r;
  }
  return x;
}

// Hom(A, G) and Ext(A, G) for A, G in invariant-factor form.
FgAbGroup hom(const FgAbGroup& a, const FgAbGroup& g) {
  std::vector<Integer> orders;
  for (Index i = 0; i < a.free_rank(); ++i) orders.insert(orders.end(), g.torsion().begin(), g.torsion().end());
  for (const auto& t : a.torsion()) {
    for (const auto& m : g.torsion()) orders.push_back(gcd(t, m));
  }
  return FgAbGroup::from_orders(a.free_rank() * g.free_rank(), orders);
}

FgAbGroup ext(const FgAbGroup& a, const FgAbGroup& g) {
  std::vector<Integer> orders;
  for (const auto& t : a.torsion()) {
    for (Index i = 0; i < g.free_rank(); ++i) orders.push_back(t);
    for (const auto& m : g.torsion()) orders.push_back(gcd(t, m));
  }
  return FgAbGroup::from_orders(0, orders);
}

}  // namespace

FgAbGroup homology_by_invariant_factors(const ChainComplexZ& complex, Index n) {
  if (n < 0 || n > complex.top_degree()) return FgAbGroup();
  auto out = smith_normal_form(complex.boundary(n));
  auto in = smith_normal_form(complex.boundary(n + 1));
  std::vector<Integer> torsion;
  for (const auto& d : in.invariant_factors())
    if (d > 1) torsion.push_back(d);
  return FgAbGroup::from_orders(complex.rank(n) - out.rank - in.rank, torsion);
}

FgAbGroup cohomology_by_uct(const ChainComplexZ& complex, Index n, const FgAbGroup& coefficients) {
  if (n < 0) return FgAbGroup();
  return hom(homology_by_invariant_factors(complex, n), coefficients)
      .direct_sum(ext(homology_by_invariant_factors(complex, n - 1), coefficients));
}

Index mod2_cohomology_dimension(const ChainComplexZ& complex, Index n) {
  if (n < 0 || n > complex.top_degree()) return 0;
  return complex.rank(n) - rank_mod2(complex.boundary(n)) - rank_mod2(complex.boundary(n + 1));
}

FgAbGroup order_complex_cohomology(const FinitePoset& poset, Index n, const FgAbGroup& coefficients) {
  return cohomology_by_uct(simplicial_chain_complex(to_simplicial_complex(poset)), n, coefficients);
}

}  // namespace dlim
