#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "genfourier/config.hpp"

using namespace genfourier;

TEST_CASE("parse_config: full object round trip") {
    const RunConfig cfg = parse_config(R"({
        "k": 0.8, "n": 2,
        "grid": {"u_max": 6.5, "points": 512, "panels": 16},
        "tolerances": {"transform.gaussian_pair": 2e-6, "transform": 1e-5},
        "suites": ["algebra", "transform"],
        "output": "report.json",
        "format": "json"
    })");
    CHECK(cfg.k == 0.8);
    CHECK(cfg.n == 2);
    CHECK(cfg.grid.u_max == 6.5);
    CHECK(cfg.grid.points == 512);
    CHECK(cfg.grid.panels == 16);
    CHECK(cfg.suites == std::vector<std::string>({"algebra", "transform"}));
    CHECK(cfg.output == "report.json");
    // longest matching prefix wins
    CHECK(cfg.tolerance_for("transform.gaussian_pair.k1n1.s0.4", 1e-6) == 2e-6);
    CHECK(cfg.tolerance_for("transform.roundtrip.k1n1", 1e-6) == 1e-5);
    CHECK(cfg.tolerance_for("kernel.symmetry", 1e-12) == 1e-12);
}

TEST_CASE("parse_config: malformed and unknown fields") {
    CHECK_THROWS_AS(parse_config("{"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config("[1,2]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config(R"({"bogus": 1})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config(R"({"grid": {"bogus": 1}})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config(R"({"suites": ["nope"]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config(R"({"format": "xml"})"), std::invalid_argument);
    // parse errors carry position information
    try {
        parse_config("{\"k\": }");
        CHECK(false);
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("parse error") != std::string::npos);
    }
}

TEST_CASE("validated_params honors the standing assumption") {
    RunConfig cfg;
    cfg.k = 0.1;
    cfg.n = 1;
    CHECK_NOTHROW(cfg.validated_params());  // nu = -0.4
    cfg.k = 0.0;
    CHECK_THROWS_AS(cfg.validated_params(), std::domain_error);  // nu = -0.5 rejected
    cfg.k = 1.0;
    cfg.n = 0;
    CHECK_THROWS_AS(cfg.validated_params(), std::domain_error);
}
