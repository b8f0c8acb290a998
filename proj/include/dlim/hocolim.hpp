// Diagrams of finite simplicial complexes over a finite poset: the homotopy colimit (as the
// order complex of the simplex-level Grothendieck poset and as an iterated mapping cylinder),
// fiberwise (co)homology diagrams and the E2 page of the cohomology spectral sequence.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dlim/derived_limits.hpp"
#include "dlim/metrics.hpp"

namespace dlim {

/// Face-closed family of nonempty vertex sets; every vertex is a 0-simplex.
class SimplicialComplex {
 public:
  using Simplex = std::vector<Index>;  // sorted vertex indices

  SimplicialComplex() = default;
  /// Closes `simplices` under faces. Throws InputError for out-of-range or empty simplices.
  SimplicialComplex(std::vector<std::string> vertices, const std::vector<Simplex>& simplices);

  Index vertex_count() const { return static_cast<Index>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  Index dimension() const { return static_cast<Index>(simplices_.size()) - 1; }
  /// Simplices of dimension n in lexicographic order; empty when out of range.
  const std::vector<Simplex>& simplices(Index n) const;
  Index count(Index n) const { return static_cast<Index>(simplices(n).size()); }
  bool contains(const Simplex& s) const;
  Index index_of(const Simplex& s) const;
  std::vector<Simplex> maximal_simplices() const;
  Integer euler_characteristic() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Simplex>> simplices_;
  std::vector<std::map<Simplex, Index>> lookup_;
};

/// The order complex of a poset as a simplicial complex on its elements.
SimplicialComplex to_simplicial_complex(const FinitePoset& poset);

/// Simplicial chains with the boundary sum (-1)^k d_k.
ChainComplexZ simplicial_chain_complex(const SimplicialComplex& k);
/// Simplicial cochains; coboundaries are transposed boundaries.
CochainComplexZ simplicial_cochain_complex(const SimplicialComplex& k);

/// A vertex assignment between complexes.
struct SimplicialMap {
  std::vector<Index> vertex_map;

  friend bool operator==(const SimplicialMap&, const SimplicialMap&) = default;
};

/// Sorted, duplicate-free image of a simplex.
SimplicialComplex::Simplex image(const SimplicialMap& f, const SimplicialComplex::Simplex& s);
bool is_simplicial(const SimplicialComplex& source, const SimplicialComplex& target, const SimplicialMap& f);
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);  // g after f

/// Chain map C_n(source) -> C_n(target): sigma -> signed sorted image, or 0 when it collapses.
IntMatrix chain_map_matrix(const SimplicialComplex& source, const SimplicialComplex& target,
                           const SimplicialMap& f, Index n);

using CoverSpaceMaps = std::map<std::pair<Index, Index>, SimplicialMap>;

/// p -> X_p, (p <= q) -> f^p_q with all composites generated from covering pairs.
class SpaceDiagram {
 public:
  SpaceDiagram() = default;
  /// Throws InputError when a cover map is not simplicial, Nonfunctorial when composites differ.
  static SpaceDiagram from_covers(FinitePoset base, std::vector<SimplicialComplex> complexes,
                                  const CoverSpaceMaps& maps);

  const FinitePoset& base() const { return base_; }
  const SimplicialComplex& complex(Index p) const { return complexes_[static_cast<std::size_t>(p)]; }
  const std::vector<SimplicialComplex>& complexes() const { return complexes_; }
  const SimplicialMap& map(Index p, Index q) const;
  Index max_fiber_dimension() const;

 private:
  FinitePoset base_;
  std::vector<SimplicialComplex> complexes_;
  std::vector<std::optional<SimplicialMap>> maps_;
};

/// Pairs (p, sigma), sigma a simplex of X_p, with (p, sigma) <= (q, tau) iff p <= q and
/// f^p_q(sigma) is a face of tau. `pairs` (if given) receives the pair behind each element.
FinitePoset grothendieck_poset(const SpaceDiagram& diagram,
                               std::vector<std::pair<Index, SimplicialComplex::Simplex>>* pairs = nullptr);
/// The order complex of the Grothendieck poset.
SimplicialComplex hocolim_complex(const SpaceDiagram& diagram);
/// Number of n-simplices of hocolim_complex, counted without building it.
std::vector<Integer> hocolim_simplex_counts(const SpaceDiagram& diagram);

/// Cellular chains of the iterated mapping cylinder: C_n = sum over k + j = n, chains
/// p_0 < ... < p_k and j-simplices x of X_{p_0};
/// d(sigma x) = sum_i (-1)^i d_i sigma (f_# x when i = 0, else x) + (-1)^k sigma dx.
ChainComplexZ cylinder_chain_complex(const SpaceDiagram& diagram);

/// H^q(X_p; Z) over dual(P) with the induced maps (f^p_q)^*.
PosetDiagram fiber_cohomology_diagram(const SpaceDiagram& diagram, Index q);
/// H_n(X_p; Z) over P with the induced maps (f^p_q)_*.
PosetDiagram fiber_homology_diagram(const SpaceDiagram& diagram, Index n);

enum class Field { rational, integers };

/// E2^{pq} = lim^p over dual(P) of H^q(X_-). Rows p = 0..order-complex dimension,
/// columns q = 0..max fiber dimension.
struct E2Page {
  Field field = Field::rational;
  std::vector<std::vector<Index>> dims;            // dims[p][q], dimension over Q
  std::vector<std::vector<FgAbGroup>> integral;    // filled when field == integers

  Index p_size() const { return static_cast<Index>(dims.size()); }
  Index q_size() const { return dims.empty() ? 0 : static_cast<Index>(dims.front().size()); }
  Index dim(Index p, Index q) const;
};

/// Over Q the rows are computed from the torsion-free quotient diagrams by rational ranks;
/// over Z the groups are computed exactly and the dimensions are their free ranks.
E2Page bk_e2(const SpaceDiagram& diagram, Field field = Field::rational);

/// Rational Betti numbers of the hocolim via the mapping-cylinder chains.
std::vector<Index> hocolim_betti(const SpaceDiagram& diagram);

struct EulerReport {
  Integer e2_side{0};          // sum of (-1)^(p+q) dim E2^{pq}
  Integer hocolim_side{0};     // sum of (-1)^n dim H^n(hocolim)
  Integer simplex_count{0};    // alternating simplex count of hocolim_complex
  bool passed() const { return e2_side == hocolim_side && hocolim_side == simplex_count; }
};

EulerReport check_euler(const SpaceDiagram& diagram, Field field = Field::rational);

class DimensionTooHigh : public InputError {
 public:
  using InputError::InputError;
};

struct MilnorReport {
  std::vector<Index> hocolim;    // dim H^q(hocolim)
  std::vector<Index> predicted;  // dim E2^{0,q} + dim E2^{1,q-1}
  bool passed() const { return hocolim == predicted; }
};

/// Requires an order complex of dimension <= 1; throws DimensionTooHigh otherwise.
MilnorReport check_milnor(const SpaceDiagram& diagram, Field field = Field::rational);

class TooLarge : public InputError {
 public:
  using InputError::InputError;
};

struct LerayReport {
  Index points = 0;
  Index poset_size = 0;
  std::vector<FgAbGroup> limits;     // lim^p H^0 over K(X)*, p = 0..dim
  std::vector<FgAbGroup> higher;     // lim^p H^q for q >= 1 (all zero: the fibers are discrete)
  std::vector<FgAbGroup> abutment;   // H^n(X; Z)
  std::vector<Index> hocolim_betti;  // of the diagram of subsets over K(X)
  bool passed() const;
};

/// For |X| <= 4: the diagram alpha -> alpha (discrete) over K(X) by inclusion, its H^0 diagram
/// over K(X) by reverse inclusion with restriction maps, and the comparison of lim^p with H^*(X).
LerayReport leray_shadow(const FiniteMetricSpace<Rational>& space);

}  // namespace dlim
