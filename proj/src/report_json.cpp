#include "ecgl/report_json.hpp"

#include "ecgl/errors.hpp"

namespace ecgl {

using nlohmann::ordered_json;

namespace {

template <class T>
T get(const ordered_json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("report is missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad field '") + key + "': " + e.what());
    }
}

}  // namespace

ordered_json to_json(const VerificationReport& report) {
    ordered_json checks = ordered_json::array();
    for (const CheckResult& c : report.checks) {
        ordered_json residuals = ordered_json::array();
        for (const Residual& r : c.residuals) {
            residuals.push_back({{"label", r.label}, {"polynomial", to_string(r.poly)}});
        }
        checks.push_back({
            {"id", std::string(lemma_name(c.id))},
            {"status", std::string(status_name(c.status))},
            {"residual_terms", c.residual_terms()},
            {"residual_text", c.residual_text()},
            {"elapsed_ms", c.elapsed_millis},
            {"peak_terms", c.peak_term_count},
            {"residuals", std::move(residuals)},
            {"detail", c.detail},
        });
    }
    return {
        {"tool", kToolName},
        {"checks", std::move(checks)},
        {"summary",
         {{"pass", report.count(Status::pass)},
          {"fail", report.count(Status::fail)},
          {"flagged", report.count(Status::flagged)}}},
    };
}

VerificationReport verification_report_from_json(const ordered_json& j) {
    if (get<std::string>(j, "tool") != kToolName) throw ParseError("report was not written by ecgl");
    VerificationReport report;
    for (const ordered_json& c : get<ordered_json>(j, "checks")) {
        CheckResult r;
        r.id = parse_lemma_id(get<std::string>(c, "id"));
        r.status = parse_status(get<std::string>(c, "status"));
        r.elapsed_millis = get<std::int64_t>(c, "elapsed_ms");
        r.peak_term_count = c.value("peak_terms", std::size_t{0});
        r.detail = c.value("detail", std::string{});
        if (c.contains("residuals")) {
            for (const ordered_json& res : c.at("residuals")) {
                r.residuals.push_back({get<std::string>(res, "label"), parse_mpoly(get<std::string>(res, "polynomial"))});
            }
        }
        if (r.residual_terms() != get<std::size_t>(c, "residual_terms")) {
            throw ParseError("residual_terms disagrees with residuals for " + std::string(lemma_name(r.id)));
        }
        report.checks.push_back(std::move(r));
    }
    return report;
}

ordered_json to_json(const HarnessReport& report) {
    ordered_json properties = ordered_json::array();
    for (std::size_t i = 0; i < kNumProperties; ++i) {
        const PropertyCounters& c = report.properties[i];
        properties.push_back({{"id", std::string(property_name(static_cast<Property>(i)))},
                              {"tested", c.tested},
                              {"failures", c.failures},
                              {"skipped", c.skipped}});
    }
    ordered_json cx = nullptr;
    if (report.counterexample) {
        const Counterexample& c = *report.counterexample;
        cx = {{"property", std::string(property_name(c.property))},
              {"p", c.p},
              {"a", c.a},
              {"b", c.b},
              {"points", c.points}};
        cx["trial"] = c.trial ? ordered_json(*c.trial) : ordered_json(nullptr);
    }
    return {
        {"tool", kToolName},
        {"mode", report.mode},
        {"configurations", report.configurations},
        {"points", report.points},
        {"failures", report.total_failures()},
        {"properties", std::move(properties)},
        {"special_case_parts", report.special_case_parts},
        {"counterexample", std::move(cx)},
    };
}

HarnessReport harness_report_from_json(const ordered_json& j) {
    if (get<std::string>(j, "tool") != kToolName) throw ParseError("report was not written by ecgl");
    HarnessReport report;
    report.mode = get<std::string>(j, "mode");
    report.configurations = get<std::uint64_t>(j, "configurations");
    report.points = get<std::uint64_t>(j, "points");
    for (const ordered_json& p : get<ordered_json>(j, "properties")) {
        PropertyCounters& c = report[parse_property(get<std::string>(p, "id"))];
        c.tested = get<std::uint64_t>(p, "tested");
        c.failures = get<std::uint64_t>(p, "failures");
        c.skipped = get<std::uint64_t>(p, "skipped");
    }
    report.special_case_parts = get<std::array<std::uint64_t, 3>>(j, "special_case_parts");
    const ordered_json cx = get<ordered_json>(j, "counterexample");
    if (!cx.is_null()) {
        Counterexample c;
        c.property = parse_property(get<std::string>(cx, "property"));
        c.p = get<std::uint64_t>(cx, "p");
        c.a = get<std::uint64_t>(cx, "a");
        c.b = get<std::uint64_t>(cx, "b");
        c.points = get<std::vector<std::string>>(cx, "points");
        if (!cx.value("trial", ordered_json()).is_null()) c.trial = get<std::uint64_t>(cx, "trial");
        report.counterexample = std::move(c);
    }
    return report;
}

std::string dump(const ordered_json& j) {
    return j.dump(2) + "\n";
}

}  // namespace ecgl
