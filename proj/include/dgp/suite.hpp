#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "dgp/count.hpp"
#include "dgp/graph.hpp"
#include "dgp/identities.hpp"

namespace dgp {

struct SuiteOptions {
  std::vector<std::uint32_t> qs{2, 3};
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultBudget;
  bool timing = true;
  bool symbolic = true;
  bool counting = true;
  /// Repeat eliminated counts by enumeration up to this many points (0: off).
  std::uint64_t cross_check = 0;
};

struct SuiteResult {
  nlohmann::json records = nlohmann::json::array();
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  CountStats stats;
};

nlohmann::json to_json(const VerificationRecord& r, const std::string& graph);

/// Every applicable statement on one graph: the symbolic identities on
/// seeded edge choices, then the point-count statements at each q.
/// Statements whose hypotheses fail are recorded as skipped.
void run_suite(const MultiGraph& g, const std::string& id, const SuiteOptions& opt, SuiteResult& out);

}  // namespace dgp
