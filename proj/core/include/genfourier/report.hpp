#pragma once

#include <string>
#include <vector>

namespace genfourier {

// One verified identity: pass iff residual <= tolerance.
struct CheckReport {
    std::string name;
    std::string status;  // "pass" | "fail" | "skipped"
    double residual = 0.0;
    double tolerance = 0.0;
    std::string details;
};

CheckReport make_check(const std::string& name, double residual, double tolerance,
                       const std::string& details = "");

bool all_passed(const std::vector<CheckReport>& reports);

// Deterministic JSON array (insertion-ordered keys, shortest round-trip doubles).
std::string reports_to_json(const std::vector<CheckReport>& reports);

}  // namespace genfourier
