#include "genfourier/report.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

namespace genfourier {

CheckReport make_check(const std::string& name, double residual, double tolerance,
                       const std::string& details) {
    CheckReport r;
    r.name = name;
    r.residual = residual;
    r.tolerance = tolerance;
    r.details = details;
    r.status = (std::isfinite(residual) && residual <= tolerance) ? "pass" : "fail";
    return r;
}

bool all_passed(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports)
        if (r.status == "fail") return false;
    return true;
}

std::string reports_to_json(const std::vector<CheckReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json item;
        item["name"] = r.name;
        item["status"] = r.status;
        item["residual"] = r.residual;
        item["tolerance"] = r.tolerance;
        item["details"] = r.details;
        arr.push_back(item);
    }
    return arr.dump(2) + "\n";
}

}  // namespace genfourier
