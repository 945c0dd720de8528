#pragma once

#include <vector>

#include "genfourier/config.hpp"
#include "genfourier/report.hpp"

namespace genfourier {

// Named verification suites (algebra, kernel, transform, convolution,
// schwartz, density) run at the config's (k, n).
std::vector<CheckReport> run_suite(const std::string& name, const RunConfig& config);
std::vector<CheckReport> run_suites(const RunConfig& config);

}  // namespace genfourier
