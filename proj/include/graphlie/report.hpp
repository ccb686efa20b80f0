#pragma once

#include <json.hpp>

#include "graphlie/automorphism.hpp"

namespace graphlie {

struct VerifyOptions {
  int n = 5;
  Method method = Method::Both;
  int brute_cap = kDefaultBruteCap;
  bool with_timing = true;
};

/// Full verification pipeline for one odd n: builds both graph families,
/// enumerates and identifies their symmetry groups, constructs the algebra,
/// and runs every structural check. The report is deterministic except for
/// the optional timing block.
nlohmann::json run_verify(const VerifyOptions& opts);

bool report_all_pass(const nlohmann::json& report);

}  // namespace graphlie
