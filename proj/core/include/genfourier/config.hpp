#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "genfourier/params.hpp"

namespace genfourier {

struct GridSpec {
    double u_max = 8.0;
    int points = 1024;
    int panels = 32;
};

// CLI/config-file settings. Flags override file values; validation happens in
// validated_params() before any computation.
struct RunConfig {
    double k = 1.0;
    int n = 1;
    GridSpec grid;
    std::map<std::string, double> tolerances;           // check-name prefix -> tolerance
    std::vector<std::string> suites;                    // empty = all
    std::string output;                                 // report path ("" = stdout)
    std::string format = "json";                        // "json" | "csv"

    Params validated_params() const { return Params::create(k, n); }
    // tolerance for a check, honoring the longest matching prefix override
    double tolerance_for(const std::string& check_name, double fallback) const;
};

// Parse a JSON config file body. Unknown fields are rejected; malformed JSON
// reports the parse position.
RunConfig parse_config(const std::string& json_text);

inline const std::vector<std::string> kAllSuites = {"algebra", "kernel",   "transform",
                                                    "convolution", "schwartz", "density"};

}  // namespace genfourier
