#include <doctest.h>

#include "ecgl/errors.hpp"
#include "ecgl/report_json.hpp"

using namespace ecgl;
using nlohmann::ordered_json;

TEST_CASE("verification report round trip, including the audit residuals") {
    VerificationReport report;
    for (LemmaId id : {LemmaId::NegDistributes, LemmaId::PmbSimplification, LemmaId::TranscriptionAudit})
        report.checks.push_back(check_lemma(id));
    const std::string text = dump(to_json(report));
    const auto back = verification_report_from_json(ordered_json::parse(text));
    CHECK(back == report);
    CHECK(dump(to_json(back)) == text);
}

TEST_CASE("verification report layout") {
    VerificationReport report;
    report.checks.push_back(check_lemma(LemmaId::PmbSimplification));
    const auto j = to_json(report);
    CHECK(j["tool"] == "ecgl");
    CHECK(j["summary"]["pass"] == 1);
    CHECK(j["summary"]["fail"] == 0);
    CHECK(j["summary"]["flagged"] == 0);
    const auto& c = j["checks"][0];
    CHECK(c["id"] == "PmbSimplification");
    CHECK(c["status"] == "pass");
    CHECK(c["residual_terms"] == 0);
    CHECK(c["residual_text"] == "0");
    CHECK(dump(j).back() == '\n');
}

TEST_CASE("harness report round trip") {
    HarnessConfig cfg;
    cfg.trials = 50;
    const auto r = randomized_check(cfg);
    const std::string text = dump(to_json(r));
    CHECK(harness_report_from_json(ordered_json::parse(text)) == r);

    HarnessReport with_cx = r;
    with_cx.counterexample = Counterexample{Property::Associativity, 7, 1, 1, {"0,1", "O", "2,5"}, 17};
    CHECK(harness_report_from_json(to_json(with_cx)) == with_cx);
    with_cx.counterexample->trial.reset();
    CHECK(harness_report_from_json(to_json(with_cx)) == with_cx);
}

TEST_CASE("harness report layout") {
    const auto j = to_json(check_curve_exhaustive(CurveParams(Prime(7), 1, 1)));
    CHECK(j["mode"] == "exhaustive");
    CHECK(j["points"] == 5);
    CHECK(j["failures"] == 0);
    CHECK(j["counterexample"].is_null());
    CHECK(j["properties"].size() == kNumProperties);
    CHECK(j["properties"][18]["id"] == "associativity");
    CHECK(j["properties"][18]["tested"] == 125);
}

TEST_CASE("malformed reports are rejected") {
    CHECK_THROWS_AS(verification_report_from_json(ordered_json::parse(R"({"tool":"other","checks":[]})")), ParseError);
    CHECK_THROWS_AS(verification_report_from_json(ordered_json::parse(R"({"tool":"ecgl"})")), ParseError);
    CHECK_THROWS_AS(verification_report_from_json(ordered_json::parse(
                        R"({"tool":"ecgl","checks":[{"id":"Bogus","status":"pass","elapsed_ms":0,"residual_terms":0}]})")),
                    UnknownLemma);
    CHECK_THROWS_AS(harness_report_from_json(ordered_json::parse(R"({"tool":"ecgl","mode":"x"})")), ParseError);
}
