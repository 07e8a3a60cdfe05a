#include "doctest.h"

#include "prismreal/verify.hpp"

using namespace prismreal;

TEST_CASE("verification suite passes and is reproducible")
{
    VerifyConfig cfg;
    cfg.seed = 7;
    cfg.trials = 100;
    VerifyReport a = run_verification(cfg);
    CHECK(a.passed());
    CHECK(a.properties.size() == 9);
    for (const auto& p : a.properties) {
        CHECK(p.trials == 100);
        CHECK(p.failures == 0);
    }
    VerifyReport b = run_verification(cfg);
    CHECK(report_to_json(a) == report_to_json(b));
    CHECK(report_to_text(a).find("all properties passed") != std::string::npos);
}

TEST_CASE("verification at other integer bases")
{
    for (long b : {3L, 7L, 16L}) {
        VerifyConfig cfg;
        cfg.trials = 40;
        cfg.base = b;
        cfg.r = Rational(1, 2);
        cfg.max_digits = 30;
        CHECK(run_verification(cfg).passed());
    }
}

TEST_CASE("report JSON schema")
{
    VerifyConfig cfg;
    cfg.trials = 5;
    auto j = report_to_json(run_verification(cfg));
    CHECK(j["command"] == "verify");
    CHECK(j["seed"] == 42);
    CHECK(j["passed"] == true);
    CHECK(j["properties"].is_array());
    CHECK(j["properties"][0].contains("name"));
    CHECK(j["properties"][0].contains("failures"));
}
