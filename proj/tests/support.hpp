// Small fixtures shared by the unit tests.
#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "dlim/oracles.hpp"
#include "dlim/random.hpp"

namespace test {

using namespace dlim;

// Partial order generated by the given strict pairs.
inline FinitePoset poset(const std::vector<std::string>& labels,
                         const std::vector<std::pair<std::string, std::string>>& less) {
  std::vector<std::pair<Index, Index>> pairs;
  auto at = [&](const std::string& s) {
    return static_cast<Index>(std::find(labels.begin(), labels.end(), s) - labels.begin());
  };
  for (const auto& [p, q] : less) pairs.emplace_back(at(p), at(q));
  return FinitePoset(labels, reflexive_transitive_closure(static_cast<Index>(labels.size()), pairs));
}

// a, b minimal; c, d maximal; every minimal below every maximal.
inline FinitePoset circle_poset() {
  return poset({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
}

inline IntMatrix int_matrix(const std::vector<std::vector<long>>& rows) {
  const Index r = static_cast<Index>(rows.size()), c = r ? static_cast<Index>(rows[0].size()) : 0;
  IntMatrix m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

inline Rng rng(std::uint64_t seed) { return Rng(seed); }

inline Rational q(long a, long b = 1) { return Rational(a, b); }

}  // namespace test
