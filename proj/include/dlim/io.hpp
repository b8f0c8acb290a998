// JSON readers and writers for posets, diagrams, metric spaces, measures, hyperpoints and
// diagrams of complexes. Rationals are written as "a/b" strings, integers as decimal strings.
#pragma once

#include <string>

#include "json.hpp"

#include "dlim/hocolim.hpp"
#include "dlim/hyperspace.hpp"

namespace dlim {

using Json = nlohmann::ordered_json;

/// Malformed JSON or a document that does not match the expected shape. Syntax errors carry
/// "line:column" of the offending byte.
class ParseError : public InputError {
 public:
  using InputError::InputError;
};

Json parse_json(const std::string& text, const std::string& source = "<input>");
/// Reads and parses a file; ParseError if it cannot be opened.
Json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);

/// {"elements": [...], "leq": [[p, q], ...]}; reflexive pairs are added, the closure is not.
FinitePoset poset_from_json(const Json& j);
Json to_json(const FinitePoset& poset);  // every strict pair

/// {"poset": ..., "groups": {p: {"rank": r, "torsion": [...]}}, "maps": {"p<q": [[...]]}}.
/// Maps are given on covering pairs; a missing map is allowed only when it is forced to be zero.
PosetDiagram diagram_from_json(const Json& j);
Json to_json(const PosetDiagram& diagram);

/// {"points": [...], "dist": [[...]]} with rational entries as strings or integers.
FiniteMetricSpace<Rational> metric_space_from_json(const Json& j);
Json to_json(const FiniteMetricSpace<Rational>& space);

/// {"point": "weight", ...}; validated as a probability measure.
FiniteMeasure<Rational> measure_from_json(const Json& j, const FiniteMetricSpace<Rational>& space);
Json to_json(const FiniteMeasure<Rational>& measure, const FiniteMetricSpace<Rational>& space);

Subset subset_from_json(const Json& j, const FiniteMetricSpace<Rational>& space);

/// {"chain": [["x"], ["x", "y"]], "weights": ["1/3", "2/3"]}.
HyperPoint<Rational> hyperpoint_from_json(const Json& j, const FiniteMetricSpace<Rational>& space);
Json to_json(const HyperPoint<Rational>& h, const FiniteMetricSpace<Rational>& space);

/// {"chain": ["p", "q"], "weights": [...]} over a poset.
WeightedChain<Rational> weighted_chain_from_json(const Json& j, const FinitePoset& poset);

/// {"vertices": [...], "simplices": [[...], ...]} (maximal simplices suffice).
SimplicialComplex complex_from_json(const Json& j);
Json to_json(const SimplicialComplex& complex);  // maximal simplices

/// {"poset": ..., "complexes": {p: complex}, "maps": {"p<q": {"v": "w", ...}}}.
SpaceDiagram space_diagram_from_json(const Json& j);
Json to_json(const SpaceDiagram& diagram);

Json to_json(const FgAbGroup& group);
Json to_json(const IntMatrix& m);
std::string label_of(const Json& j);
Rational rational_from_json(const Json& j);
Integer integer_from_json(const Json& j);

}  // namespace dlim
