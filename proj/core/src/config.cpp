#include "genfourier/config.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace genfourier {

double RunConfig::tolerance_for(const std::string& check_name, double fallback) const {
    std::size_t best_len = 0;
    double best = fallback;
    for (const auto& [prefix, tol] : tolerances) {
        if (check_name.rfind(prefix, 0) == 0 && prefix.size() >= best_len) {
            best_len = prefix.size();
            best = tol;
        }
    }
    return best;
}

RunConfig parse_config(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("config: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("config: top level must be a JSON object");
    RunConfig cfg;
    for (const auto& [key, val] : j.items()) {
        if (key == "k") {
            cfg.k = val.get<double>();
        } else if (key == "n") {
            cfg.n = val.get<int>();
        } else if (key == "grid") {
            if (!val.is_object()) throw std::invalid_argument("config: field 'grid' must be an object");
            for (const auto& [gk, gv] : val.items()) {
                if (gk == "u_max")
                    cfg.grid.u_max = gv.get<double>();
                else if (gk == "points")
                    cfg.grid.points = gv.get<int>();
                else if (gk == "panels")
                    cfg.grid.panels = gv.get<int>();
                else
                    throw std::invalid_argument("config: unknown field 'grid." + gk + "'");
            }
        } else if (key == "tolerances") {
            if (!val.is_object())
                throw std::invalid_argument("config: field 'tolerances' must be an object");
            for (const auto& [tk, tv] : val.items()) cfg.tolerances[tk] = tv.get<double>();
        } else if (key == "suites") {
            if (!val.is_array()) throw std::invalid_argument("config: field 'suites' must be an array");
            for (const auto& s : val) {
                const auto name = s.get<std::string>();
                if (std::find(kAllSuites.begin(), kAllSuites.end(), name) == kAllSuites.end())
                    throw std::invalid_argument("config: unknown suite '" + name + "'");
                cfg.suites.push_back(name);
            }
        } else if (key == "output") {
            cfg.output = val.get<std::string>();
        } else if (key == "format") {
            const auto f = val.get<std::string>();
            if (f != "json" && f != "csv")
                throw std::invalid_argument("config: field 'format' must be 'json' or 'csv'");
            cfg.format = f;
        } else {
            throw std::invalid_argument("config: unknown field '" + key + "'");
        }
    }
    return cfg;
}

}  // namespace genfourier
