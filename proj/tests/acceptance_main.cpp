// Runs every acceptance criterion and prints one line per criterion.
#include <cstdlib>
#include <iostream>

#include "dlim/acceptance.hpp"

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 42;
  bool all = true;
  for (int id = 1; id <= dlim::criterion_count; ++id) {
    dlim::CriterionResult r;
    try {
      r = dlim::run_criterion(id, seed);
    } catch (const std::exception& e) {
      r.id = id;
      r.name = dlim::criterion_name(id);
      r.detail = std::string("exception: ") + e.what();
    }
    all = all && r.passed;
    std::cout << (r.passed ? "PASS" : "FAIL") << "  criterion " << id << " (" << r.name << "): " << r.detail
              << "  [" << r.seconds << " s]" << std::endl;
  }
  std::cout << (all ? "all criteria pass" : "some criteria fail") << std::endl;
  return all ? 0 : 1;
}
