// Seeded generators of random posets, diagrams, metric spaces, measures and chains.
#pragma once

#include <random>

#include "dlim/derived_limits.hpp"
#include "dlim/hocolim.hpp"
#include "dlim/hyperspace.hpp"

namespace dlim {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
Index uniform(Rng& rng, Index lo, Index hi);
bool coin(Rng& rng, double p = 0.5);

/// Transitive closure of a random DAG on n elements, relabelled by a random permutation.
FinitePoset random_poset(Rng& rng, Index n, double edge_probability = 0.4);

/// Shortest-path metric of a random complete graph with integer weights 1..max_weight,
/// scaled to diameter exactly 1.
FiniteMetricSpace<Rational> random_metric_space(Rng& rng, Index n, Index max_weight = 10);

/// Random positive weights summing to one (denominators from sums of small integers).
std::vector<Rational> random_weights(Rng& rng, Index n, Index max_part = 9);
/// Probability measure supported on a random nonempty subset of at most max_support points.
FiniteMeasure<Rational> random_measure(Rng& rng, Index points, Index max_support);

/// Random strict chain with random positive weights.
WeightedChain<Rational> random_weighted_chain(Rng& rng, const FinitePoset& poset, Index max_length);

/// Random strict chain of subsets (prefixes of a random ordering) with positive weights.
HyperPoint<Rational> random_hyperpoint(Rng& rng, const FiniteMetricSpace<Rational>& space, Index max_length);

/// Functorial diagram built from indicator summands of convex subsets (coefficients Z, Z/2,
/// Z/4 or Z/12, maps scaled by k^(height difference)), mixed by random automorphisms per element.
/// At most max_generators generators per group.
PosetDiagram random_diagram(Rng& rng, const FinitePoset& poset, Index max_generators = 3);

/// Free groups of rank r with invertible maps on covers; retries random unimodular cover maps
/// until functorial, falling back to a twisted trivialization.
PosetDiagram random_invertible_diagram(Rng& rng, const FinitePoset& poset, Index rank);

/// Random unimodular matrix built from elementary operations.
IntMatrix random_unimodular(Rng& rng, Index n, Index steps = 6);

/// Functorial diagram of complexes on at most max_vertices vertices: vertices at p are the
/// classes of an equivalence relation on labels that coarsens upward, maps send each class to
/// the class containing it.
SpaceDiagram random_space_diagram(Rng& rng, const FinitePoset& poset, Index max_vertices = 8);

}  // namespace dlim
