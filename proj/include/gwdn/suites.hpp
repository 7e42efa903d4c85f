#pragma once

#include "gwdn/gwsymbol.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gwdn {

struct CaseResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CaseResult> cases;
  bool ok() const;
};

/// Zero fields select the suite's default parameters.
struct SuiteOptions {
  int n = 0;
  int q_max = 0;
  int trials = 0;
  int symbols = 0;
  std::uint64_t seed = 1;
};

const std::vector<std::string>& suite_names();

/// Runs paths, restriction, universality, appendix, flatness or confluence.
/// Throws PreconditionFailed for an unknown suite.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {});

/// Random canonical symbols with n <= 5, exponents <= 4, sum d <= 3 and 0 <= degree <= 6.
std::vector<GWSymbol> random_symbols(std::size_t count, std::uint64_t seed);

}  // namespace gwdn
