// Reference computations used to cross-check the derived-limit and metric engines. Each one
// follows a different route from the code it checks.
#pragma once

#include "dlim/hocolim.hpp"

namespace dlim {

/// Homology of a free chain complex read off the invariant factors of its boundary matrices.
FgAbGroup homology_by_invariant_factors(const ChainComplexZ& complex, Index n);

/// H^n(C; G) = Hom(H_n, G) + Ext(H_{n-1}, G) for a free chain complex and any f.g. group G.
FgAbGroup cohomology_by_uct(const ChainComplexZ& complex, Index n, const FgAbGroup& coefficients);

/// dim over F_2 of H^n(C; Z/2) from ranks of the boundaries mod 2.
Index mod2_cohomology_dimension(const ChainComplexZ& complex, Index n);

/// H^n(|P|; G) from the simplicial chains of the order complex.
FgAbGroup order_complex_cohomology(const FinitePoset& poset, Index n, const FgAbGroup& coefficients);

}  // namespace dlim
