#include "ecgl/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>

#include <CLI11.hpp>

#include "ecgl/curve.hpp"
#include "ecgl/errors.hpp"
#include "ecgl/harness.hpp"
#include "ecgl/prover.hpp"
#include "ecgl/report_json.hpp"

namespace ecgl {

namespace {

struct CurveFlags {
    std::uint64_t p = 0;
    std::int64_t a = 0;
    std::int64_t b = 0;

    void attach(CLI::App& cmd) {
        cmd.add_option("--p", p, "prime modulus > 3")->required();
        cmd.add_option("--a", a, "coefficient a")->required();
        cmd.add_option("--b", b, "coefficient b")->required();
    }

    CurveParams curve() const {
        const Prime prime(p);
        return CurveParams(FpElement::from_signed(a, prime), FpElement::from_signed(b, prime));
    }
};

void write_json_file(const std::string& path, const nlohmann::ordered_json& j) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw ParseError("cannot open '" + path + "' for writing");
    file << dump(j);
    if (!file) throw ParseError("failed writing '" + path + "'");
}

void print_report(std::ostream& out, const VerificationReport& report, bool with_detail) {
    for (const CheckResult& c : report.checks) {
        out << std::left << std::setw(20) << lemma_name(c.id) << ' ' << std::setw(7) << status_name(c.status)
            << " residual_terms=" << c.residual_terms() << " peak_terms=" << c.peak_term_count << '\n';
        if (with_detail && !c.detail.empty()) out << c.detail;
    }
    out << "summary: pass=" << report.count(Status::pass) << " fail=" << report.count(Status::fail)
        << " flagged=" << report.count(Status::flagged) << '\n';
}

void print_harness(std::ostream& out, const HarnessReport& report) {
    out << report.mode << ": configurations=" << report.configurations << " points=" << report.points
        << " failures=" << report.total_failures() << '\n';
    for (std::size_t i = 0; i < kNumProperties; ++i) {
        const PropertyCounters& c = report.properties[i];
        out << "  " << std::left << std::setw(22) << property_name(static_cast<Property>(i)) << " tested=" << c.tested
            << " failures=" << c.failures << " skipped=" << c.skipped << '\n';
    }
    out << "  special-case parts (1)/(2)/(3): " << report.special_case_parts[0] << '/'
        << report.special_case_parts[1] << '/' << report.special_case_parts[2] << '\n';
    if (report.counterexample) {
        const Counterexample& c = *report.counterexample;
        out << "counterexample: " << property_name(c.property) << " on p=" << c.p << " a=" << c.a << " b=" << c.b
            << " points";
        for (const auto& p : c.points) out << ' ' << p;
        if (c.trial) out << " (trial " << *c.trial << ')';
        out << '\n';
    }
}

int harness_exit(const HarnessReport& report) {
    return report.total_failures() == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of the elliptic-curve group law", "ecgl"};
    app.require_subcommand(1);

    // prove
    auto* prove = app.add_subcommand("prove", "replay the symbolic identities modulo the curve ideal");
    std::string lemma;
    bool audit = false;
    bool sequential = false;
    std::string prove_json;
    prove->add_option("--lemma", lemma, "run a single check by id");
    prove->add_flag("--audit", audit, "run only the transcription audit and print its diff");
    prove->add_flag("--sequential", sequential, "run checks one after another");
    prove->add_option("--json", prove_json, "write the JSON report here");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "exhaustive check over all curves with 5 <= p <= max-p");
    std::uint64_t max_p = 13;
    std::string sweep_json;
    sweep->add_option("--max-p", max_p, "largest prime")->required();
    sweep->add_option("--json", sweep_json, "write the JSON report here");

    // random
    auto* random = app.add_subcommand("random", "randomized check over random curves");
    HarnessConfig config;
    std::string random_json;
    random->add_option("--trials", config.trials, "number of trials")->check(CLI::PositiveNumber);
    random->add_option("--bits", config.prime_bits, "prime size in bits")->check(CLI::Range(3u, 62u));
    random->add_option("--seed", config.seed, "64-bit seed");
    random->add_option("--inject-percent", config.injection_percent, "percentage of special-case trials")
        ->check(CLI::Range(0u, 100u));
    random->add_option("--json", random_json, "write the JSON report here");

    // axioms
    auto* axioms = app.add_subcommand("axioms", "check every property on one curve");
    CurveFlags axiom_curve;
    axiom_curve.attach(*axioms);
    bool exhaustive = false;
    HarnessConfig axiom_config;
    std::string axioms_json;
    axioms->add_flag("--exhaustive", exhaustive, "all tuples of enumerated points");
    axioms->add_option("--trials", axiom_config.trials, "random trials when not exhaustive")
        ->check(CLI::PositiveNumber);
    axioms->add_option("--seed", axiom_config.seed, "64-bit seed");
    axioms->add_option("--json", axioms_json, "write the JSON report here");

    // add
    auto* add_cmd = app.add_subcommand("add", "add two points");
    CurveFlags add_curve;
    add_curve.attach(*add_cmd);
    std::vector<std::string> add_points;
    add_cmd->add_option("--point", add_points, "O or x,y (give twice)")->required()->expected(2);

    // mul
    auto* mul_cmd = app.add_subcommand("mul", "scalar multiple of a point");
    CurveFlags mul_curve;
    mul_curve.attach(*mul_cmd);
    std::string mul_point;
    std::uint64_t scalar = 0;
    mul_cmd->add_option("--point", mul_point, "O or x,y")->required();
    mul_cmd->add_option("--k,--scalar", scalar, "nonnegative multiplier")->required();

    // points
    auto* points_cmd = app.add_subcommand("points", "list every point of a small curve");
    CurveFlags points_curve;
    points_curve.attach(*points_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (prove->parsed()) {
            if (audit && !lemma.empty() && parse_lemma_id(lemma) != LemmaId::TranscriptionAudit) {
                err << "ecgl: --audit and --lemma select different checks\n";
                return kExitUsage;
            }
            VerificationReport report;
            if (audit) {
                report.checks.push_back(check_lemma(LemmaId::TranscriptionAudit));
            } else if (!lemma.empty()) {
                report.checks.push_back(check_lemma(parse_lemma_id(lemma)));
            } else {
                report = run_all(!sequential);
            }
            print_report(out, report, audit);
            if (!prove_json.empty()) write_json_file(prove_json, to_json(report));
            return report.all_passed() ? kExitOk : kExitCheckFailed;
        }
        if (sweep->parsed()) {
            const HarnessReport report = exhaustive_check(max_p);
            print_harness(out, report);
            if (!sweep_json.empty()) write_json_file(sweep_json, to_json(report));
            return harness_exit(report);
        }
        if (random->parsed()) {
            const HarnessReport report = randomized_check(config);
            print_harness(out, report);
            if (!random_json.empty()) write_json_file(random_json, to_json(report));
            return harness_exit(report);
        }
        if (axioms->parsed()) {
            const CurveParams curve = axiom_curve.curve();
            HarnessReport report;
            if (exhaustive) {
                report = check_curve_exhaustive(curve);
            } else {
                axiom_config.fixed_curve = curve;
                report = randomized_check(axiom_config);
            }
            print_harness(out, report);
            if (!axioms_json.empty()) write_json_file(axioms_json, to_json(report));
            return harness_exit(report);
        }
        if (add_cmd->parsed()) {
            const CurveParams curve = add_curve.curve();
            out << add(parse_point(curve, add_points.at(0)), parse_point(curve, add_points.at(1))) << '\n';
            return kExitOk;
        }
        if (mul_cmd->parsed()) {
            const CurveParams curve = mul_curve.curve();
            out << scalar_mul(scalar, parse_point(curve, mul_point)) << '\n';
            return kExitOk;
        }
        if (points_cmd->parsed()) {
            for (const Point& p : enumerate_points(points_curve.curve())) out << p << '\n';
            return kExitOk;
        }
    } catch (const Error& e) {
        err << "ecgl: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace ecgl
