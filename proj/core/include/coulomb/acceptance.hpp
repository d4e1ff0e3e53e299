#pragma once

#include <functional>
#include <string>
#include <vector>

namespace coulomb::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct Options {
  // Computes a radius from CLI-style arguments, e.g. {"--family", "f", "--L", "-0.5", ...}.
  // When empty, the library is called directly.
  std::function<double(const std::vector<std::string>&)> radius_runner;
  std::vector<int> only;  // run just these criteria; all when empty
};

std::vector<CriterionResult> run_acceptance(const Options& opts = {});

// "PASS  3  bessel reduction identity  ...  (0.12 s)"
std::string format_line(const CriterionResult& r);

}  // namespace coulomb::acceptance
