// Command implementations behind the dlim executable: each takes the raw input text and returns
// a human-readable summary together with a deterministic JSON report.
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "dlim/acceptance.hpp"

namespace dlim {

struct Report {
  std::string text;
  Json json;
  bool passed = true;  // every assertion in the report holds

  int exit_code() const { return passed ? 0 : 1; }
};

/// lim^p for p = 0..max_degree (default: dimension of the order complex).
Report cmd_limp(const std::string& input, const std::string& source, std::optional<Index> max_degree);

/// hausdorff: pairwise distances of "subsets"; kantorovich: of "measures"; hm: L1 and rho of
/// weighted "chains" over "leq", or the gap family when gap_family is set; simhyp: sup-norm,
/// L1, Ky Fan and Kantorovich distances of "hyperpoints".
Report cmd_metric(const std::string& subcommand, const std::optional<std::string>& input,
                  const std::string& source, std::optional<Index> gap_family);

/// E2 page, hocolim Betti numbers and the Euler/Milnor checks of a diagram of complexes.
Report cmd_e2(const std::string& input, const std::string& source, Field field);

Report cmd_verify(Suite suite, std::uint64_t seed, bool with_timing);

}  // namespace dlim
