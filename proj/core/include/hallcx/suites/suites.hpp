#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hallcx/localized/relations.hpp"

namespace hallcx {

/// Inputs shared by every verification suite.
struct SuiteConfig {
  PathAlgebra algebra;
  DimVec dmax;                       // module classes and complex building blocks
  std::vector<std::size_t> ms{2, 3}; // window / cyclic lengths
  LevelRange levels;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 1;
  std::size_t samples = 50;          // random triples, words, round trips
  std::size_t max_summands = 1;      // complex grids: sums of at most this many indecomposables
};

using SuiteFn = std::function<Report(const SuiteConfig&)>;

struct SuiteInfo {
  std::string name;
  std::string summary;
  SuiteFn run;
};

/// Every suite by name, in a fixed order.
const std::vector<SuiteInfo>& suite_registry();
/// Throws std::out_of_range for an unknown name.
Report run_suite(const std::string& name, const SuiteConfig& cfg);

}  // namespace hallcx
