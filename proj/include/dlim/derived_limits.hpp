// Diagrams of abelian groups over finite posets and the (co)chain complexes on the order
// complex whose (co)homology gives lim^p and colim.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dlim/abgroup.hpp"
#include "dlim/poset.hpp"

namespace dlim {

/// Two composites p -> r disagree; the witness is the triple p <= q <= r.
class Nonfunctorial : public InputError {
 public:
  Nonfunctorial(std::string p, std::string q, std::string r);
  std::string p, q, r;
};

using CoverMaps = std::map<std::pair<Index, Index>, IntMatrix>;

/// p -> G_p, (p <= q) -> phi^p_q; every composite is materialized and checked.
class PosetDiagram {
 public:
  PosetDiagram() = default;

  /// Maps given on covering pairs only; composites are generated along all paths and must agree.
  static PosetDiagram from_covers(FinitePoset base, std::vector<FgAbGroup> groups,
                                  const CoverMaps& maps);
  /// Maps given on every pair p < q (identities implied); functoriality is checked on all triples.
  static PosetDiagram from_all_pairs(FinitePoset base, std::vector<FgAbGroup> groups,
                                     const CoverMaps& maps);

  const FinitePoset& base() const { return base_; }
  Index size() const { return base_.size(); }
  const FgAbGroup& group(Index p) const { return groups_[static_cast<std::size_t>(p)]; }
  const std::vector<FgAbGroup>& groups() const { return groups_; }
  /// phi^p_q for p <= q; throws Error otherwise.
  const IntMatrix& map(Index p, Index q) const;

 private:
  PosetDiagram(FinitePoset base, std::vector<FgAbGroup> groups);
  FinitePoset base_;
  std::vector<FgAbGroup> groups_;
  std::vector<std::optional<IntMatrix>> maps_;  // row-major n x n, set where p <= q
};

PosetDiagram constant_diagram(const FinitePoset& base, const FgAbGroup& group);

/// `complex` with the simplex-indexed block structure: in degree n the block of the i-th
/// n-simplex starts at offsets[n][i].
template <typename Complex>
struct LocalSystemComplex {
  OrderComplex order_complex;
  std::vector<std::vector<Index>> offsets;
  Complex complex;
};

/// C^n = sum over n-simplices (p_0 < ... < p_n) of G_{p_n}. The face omitting p_n contributes
/// phi^{p_{n-1}}_{p_n}, every other face the identity; the k-th face carries sign (-1)^k.
LocalSystemComplex<CochainComplexZ> build_cochain_complex(const PosetDiagram& diagram);
/// C_n = sum over n-simplices of G_{p_0}. The face omitting p_0 contributes phi^{p_0}_{p_1}.
LocalSystemComplex<ChainComplexZ> build_chain_complex(const PosetDiagram& diagram);

/// lim^p; zero for p < 0 or p above the order-complex dimension.
FgAbGroup derived_limit(const PosetDiagram& diagram, Index p);
/// lim^0 .. lim^max_degree from one complex.
std::vector<FgAbGroup> derived_limits(const PosetDiagram& diagram, Index max_degree);
/// Compatible families: kernel of prod G_p -> prod over covers (p,q) of G_q, g -> phi(g_p) - g_q.
FgAbGroup lim_direct(const PosetDiagram& diagram);

/// H_0 of the chain complex.
FgAbGroup colim_via_homology(const PosetDiagram& diagram);
/// H_n of the chain complex (reported, no vanishing claim).
FgAbGroup colim_homology(const PosetDiagram& diagram, Index n);
/// Coequalizer presentation: sum G_p modulo g - phi^p_q(g) over covers.
FgAbGroup colim_direct(const PosetDiagram& diagram);

/// Inverse of a unimodular integer matrix; throws Error if not invertible over Z.
IntMatrix unimodular_inverse(const IntMatrix& m);
/// For a diagram of free groups with invertible maps, the diagram over dual(P) with
/// (q <=* p) -> (phi^p_q)^{-1}.
PosetDiagram inverse_diagram(const PosetDiagram& diagram);

}  // namespace dlim
