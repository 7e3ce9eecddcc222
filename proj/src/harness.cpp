#include "ecgl/harness.hpp"

#include <algorithm>
#include <initializer_list>
#include <thread>

#include "ecgl/errors.hpp"
#include "ecgl/sampling.hpp"

namespace ecgl {

namespace {

constexpr std::array<std::string_view, kNumProperties> kPropertyNames{
    "closure",           "commutativity",   "neutral",         "inverse",
    "double_zero_iff_y0", "equal_x_plus_minus", "neg_distributes", "plus_minus_b",
    "neutral_unique",    "double_minus_a",  "opposite_sum",    "cancellation",
    "add_sub",           "solve_for_a",     "assoc_generic",   "assoc_double",
    "assoc_quad",        "assoc_special_cases", "associativity",
};

constexpr std::array<std::string_view, kNumInjections> kInjectionNames{
    "B=A",  "B=-A", "C=A+B", "C=-(A+B)", "C=A",     "B=O",
    "B=C",  "A=-(B+C)", "B=-A-A", "B 2-torsion", "B=A+A", "A=O",
};

}  // namespace

std::string_view property_name(Property p) {
    return kPropertyNames.at(static_cast<std::size_t>(p));
}

Property parse_property(std::string_view name) {
    for (std::size_t i = 0; i < kPropertyNames.size(); ++i) {
        if (kPropertyNames[i] == name) return static_cast<Property>(i);
    }
    throw ParseError("unknown property '" + std::string(name) + "'");
}

std::string_view injection_name(Injection k) {
    return kInjectionNames.at(static_cast<std::size_t>(k));
}

std::uint64_t HarnessReport::total_failures() const {
    std::uint64_t n = 0;
    for (const auto& c : properties) n += c.failures;
    return n;
}

void HarnessReport::merge(const HarnessReport& other) {
    configurations += other.configurations;
    points += other.points;
    for (std::size_t i = 0; i < kNumProperties; ++i) {
        properties[i].tested += other.properties[i].tested;
        properties[i].failures += other.properties[i].failures;
        properties[i].skipped += other.properties[i].skipped;
    }
    for (std::size_t i = 0; i < special_case_parts.size(); ++i) special_case_parts[i] += other.special_case_parts[i];
    if (!counterexample && other.counterexample) counterexample = other.counterexample;
}

namespace {

// Group operations over concrete points.
struct PointOps {
    using Elem = Point;
    const CurveParams& curve;

    Elem add(const Elem& a, const Elem& b) const { return ecgl::add(a, b); }
    Elem neg(const Elem& a) const { return ecgl::negate(a); }
    Elem zero() const { return Point::infinity(curve); }
    bool is_zero(const Elem& a) const { return a.is_infinity(); }
    bool y_is_zero(const Elem& a) const { return a.y().is_zero(); }
    bool same_x(const Elem& a, const Elem& b) const { return a.x() == b.x(); }
    bool valid(const Elem& a) const { return a.is_infinity() || is_on_curve(curve, a.x(), a.y()); }
    const Point& point(const Elem& a) const { return a; }
};

// Group operations over indices into an enumerated point list with a
// precomputed addition table.
struct TableOps {
    using Elem = std::size_t;
    const std::vector<Point>& pts;
    const std::vector<std::size_t>& sum;
    const std::vector<std::size_t>& negation;

    Elem add(Elem a, Elem b) const { return sum[a * pts.size() + b]; }
    Elem neg(Elem a) const { return negation[a]; }
    Elem zero() const { return 0; }
    bool is_zero(Elem a) const { return a == 0; }
    bool y_is_zero(Elem a) const { return pts[a].y().is_zero(); }
    bool same_x(Elem a, Elem b) const { return pts[a].x() == pts[b].x(); }
    bool valid(Elem) const { return true; }
    const Point& point(Elem a) const { return pts[a]; }
};

template <class Ops>
class Evaluator {
public:
    using E = typename Ops::Elem;

    Evaluator(const Ops& ops, HarnessReport& report, std::optional<std::uint64_t> trial)
        : ops_(ops), report_(report), trial_(trial) {}

    void unary(const E& A) {
        const E O = ops_.zero();
        const E AA = ops_.add(A, A);
        const E nA = ops_.neg(A);
        record(Property::Neutral, true, ops_.add(A, O) == A && ops_.add(O, A) == A, {A});
        record(Property::Inverse, true, ops_.is_zero(ops_.add(A, nA)), {A});
        if (ops_.is_zero(A)) {
            skip(Property::DoubleIsZeroIffYZero);
        } else {
            record(Property::DoubleIsZeroIffYZero, true, ops_.is_zero(AA) == ops_.y_is_zero(A), {A});
        }
        const bool dm_hyp = A != nA && AA != nA;
        record(Property::DoubleMinusA, dm_hyp, dm_hyp && ops_.add(AA, nA) == A, {A});

        const E AAA = ops_.add(AA, A);
        const bool quad_hyp = !ops_.is_zero(A) && A != nA && AA != ops_.neg(AA) && !pm(AAA, A) && !pm(AA, A);
        record(Property::AssocQuad, quad_hyp,
               quad_hyp && ops_.add(AA, AA) == ops_.add(A, ops_.add(A, AA)), {A});
    }

    void binary(const E& A, const E& B) {
        const E AB = ops_.add(A, B);
        const E nA = ops_.neg(A);
        const E nB = ops_.neg(B);
        record(Property::Closure, true, ops_.valid(AB), {A, B});
        record(Property::Commutativity, true, AB == ops_.add(B, A), {A, B});
        if (ops_.is_zero(A) || ops_.is_zero(B) || !ops_.same_x(A, B)) {
            skip(Property::EqualXMeansPlusMinus);
        } else {
            record(Property::EqualXMeansPlusMinus, true, A == B || A == nB, {A, B});
        }
        record(Property::NegDistributes, true, ops_.add(nA, nB) == ops_.neg(AB), {A, B});

        const bool pmb_hyp = AB == ops_.add(A, nB) && A != nA;
        record(Property::PlusMinusB, pmb_hyp, pmb_hyp && B == nB, {A, B});

        const bool null_hyp = AB == A;
        record(Property::NeutralUnique, null_hyp, null_hyp && ops_.is_zero(B), {A, B});

        const bool opp_hyp = AB == nA;
        record(Property::OppositeSum, opp_hyp, opp_hyp && B == ops_.add(nA, nA), {A, B});

        record(Property::AddSub, true, ops_.add(AB, nB) == A, {A, B});

        const E AA = ops_.add(A, A);
        const bool dbl_hyp = !ops_.is_zero(A) && !ops_.is_zero(B) && A != nA && !pm(A, B) && !pm(AA, B) &&
                             !pm(AB, A);
        record(Property::AssocDouble, dbl_hyp, dbl_hyp && ops_.add(AA, B) == ops_.add(A, AB), {A, B});
    }

    void ternary(const E& A, const E& B, const E& C) {
        const E AB = ops_.add(A, B);
        const E BC = ops_.add(B, C);
        const E left = ops_.add(AB, C);
        const E right = ops_.add(A, BC);
        const bool assoc = left == right;
        record(Property::Associativity, true, assoc, {A, B, C});

        const bool cancel_hyp = AB == ops_.add(A, C);
        record(Property::Cancellation, cancel_hyp, cancel_hyp && B == C, {A, B, C});

        const bool solve_hyp = AB == C;
        record(Property::SolveForA, solve_hyp, solve_hyp && A == ops_.add(C, ops_.neg(B)), {A, B, C});

        const bool none_zero = !ops_.is_zero(A) && !ops_.is_zero(B) && !ops_.is_zero(C);
        const bool generic_hyp = none_zero && !pm(A, B) && !pm(B, C) && !pm(AB, C) && !pm(BC, A);
        record(Property::AssocGeneric, generic_hyp, generic_hyp && assoc, {A, B, C});

        const bool part1 = AB != C && A != BC;
        const bool part2 = A == B || B == C || A == C;
        bool part3 = false;
        for (const E& e : {A, B, C, AB, BC, left, right}) part3 = part3 || ops_.is_zero(e);
        const bool special_hyp = part1 || part2 || part3;
        if (special_hyp) {
            report_.special_case_parts[0] += part1 ? 1 : 0;
            report_.special_case_parts[1] += part2 ? 1 : 0;
            report_.special_case_parts[2] += part3 ? 1 : 0;
        }
        record(Property::AssocSpecialCases, special_hyp, special_hyp && assoc, {A, B, C});
    }

private:
    bool pm(const E& x, const E& y) const { return x == y || x == ops_.neg(y); }

    void skip(Property p) { ++report_[p].skipped; }

    void record(Property p, bool hypothesis, bool ok, std::initializer_list<E> tuple) {
        PropertyCounters& c = report_[p];
        if (!hypothesis) {
            ++c.skipped;
            return;
        }
        ++c.tested;
        if (ok) return;
        ++c.failures;
        if (report_.counterexample) return;
        Counterexample cx;
        cx.property = p;
        const CurveParams& curve = ops_.point(*tuple.begin()).curve();
        cx.p = curve.p();
        cx.a = curve.a().residue();
        cx.b = curve.b().residue();
        for (const E& e : tuple) cx.points.push_back(to_string(ops_.point(e)));
        cx.trial = trial_;
        report_.counterexample = std::move(cx);
    }

    const Ops& ops_;
    HarnessReport& report_;
    std::optional<std::uint64_t> trial_;
};

std::vector<std::uint64_t> primes_up_to(std::uint64_t max_p) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 5; p <= max_p; ++p) {
        if (is_prime_u64(p)) out.push_back(p);
    }
    return out;
}

}  // namespace

HarnessReport check_curve_exhaustive(const CurveParams& curve) {
    if (curve.p() > kExhaustiveLimit) {
        throw TooLarge("exhaustive checks limited to p <= " + std::to_string(kExhaustiveLimit));
    }
    HarnessReport report;
    report.mode = "exhaustive";
    report.configurations = 1;

    const std::vector<Point> pts = enumerate_points(curve);
    const std::size_t n = pts.size();
    report.points = n;
    auto index_of = [&](const Point& q) -> std::optional<std::size_t> {
        const auto it = std::lower_bound(pts.begin(), pts.end(), q);
        if (it == pts.end() || !(*it == q)) return std::nullopt;
        return static_cast<std::size_t>(it - pts.begin());
    };

    // Closure is checked while filling the table: every sum must be one of
    // the enumerated points.
    std::vector<std::size_t> sum(n * n);
    std::vector<std::size_t> negation(n);
    bool closed = true;
    for (std::size_t i = 0; i < n; ++i) {
        const auto ni = index_of(negate(pts[i]));
        if (!ni) throw std::logic_error("negation left the point set");
        negation[i] = *ni;
        for (std::size_t j = 0; j < n; ++j) {
            const Point s = add(pts[i], pts[j]);
            const auto k = index_of(s);
            ++report[Property::Closure].tested;
            if (!k || (!s.is_infinity() && !is_on_curve(curve, s.x(), s.y()))) {
                ++report[Property::Closure].failures;
                if (!report.counterexample) {
                    report.counterexample =
                        Counterexample{Property::Closure, curve.p(), curve.a().residue(), curve.b().residue(),
                                       {to_string(pts[i]), to_string(pts[j])}, std::nullopt};
                }
                closed = false;
                continue;
            }
            sum[i * n + j] = *k;
        }
    }
    if (!closed) return report;

    const TableOps ops{pts, sum, negation};
    Evaluator<TableOps> eval(ops, report, std::nullopt);
    for (std::size_t i = 0; i < n; ++i) eval.unary(i);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) eval.binary(i, j);
    }
    // The table already covered closure; binary() recounts it, so undo that.
    report[Property::Closure].tested -= n * n;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) eval.ternary(i, j, k);
        }
    }
    return report;
}

HarnessReport exhaustive_check(std::uint64_t max_p) {
    if (max_p > kExhaustiveLimit) {
        throw TooLarge("exhaustive sweep limited to max_p <= " + std::to_string(kExhaustiveLimit));
    }
    HarnessReport report;
    report.mode = "exhaustive";
    for (std::uint64_t pv : primes_up_to(max_p)) {
        const Prime p(pv);
        for (std::uint64_t a = 0; a < pv; ++a) {
            for (std::uint64_t b = 0; b < pv; ++b) {
                if (discriminant(FpElement(a, p), FpElement(b, p)).is_zero()) continue;
                report.merge(check_curve_exhaustive(CurveParams(p, a, b)));
            }
        }
    }
    return report;
}

namespace {

// A curve with a rational 2-torsion point (r, 0): b = -r^3 - a r.
std::pair<CurveParams, Point> curve_with_two_torsion(const Prime& p, Rng& rng) {
    for (;;) {
        const FpElement r(rng.below(p.value()), p);
        const FpElement a(rng.below(p.value()), p);
        const FpElement b = -(r * r * r) - a * r;
        if (discriminant(a, b).is_zero()) continue;
        const CurveParams curve(a, b);
        return {curve, Point::affine(curve, r, FpElement(0, p))};
    }
}

std::optional<Point> two_torsion_point(const CurveParams& curve, Rng& rng) {
    // Small fields: search; large fields would need root finding.
    if (curve.p() > kEnumerationLimit) return std::nullopt;
    std::vector<Point> candidates;
    for (std::uint64_t x = 0; x < curve.p(); ++x) {
        if (curve.rhs(curve.element(x)).is_zero()) candidates.push_back(Point::affine(curve, x, 0));
    }
    if (candidates.empty()) return std::nullopt;
    return candidates[rng.below(candidates.size())];
}

HarnessReport run_trial(const HarnessConfig& config, std::uint64_t trial) {
    Rng rng = Rng(config.seed).split(trial);

    std::optional<Injection> injection = config.forced;
    if (!injection && trial % 100 < config.injection_percent) {
        const std::uint64_t ordinal = (trial / 100) * config.injection_percent + trial % 100;
        injection = static_cast<Injection>(ordinal % kNumInjections);
    }

    std::optional<CurveParams> curve = config.fixed_curve;
    std::optional<Point> torsion;
    if (!curve) {
        const Prime p = random_prime(config.prime_bits, rng);
        if (injection == Injection::TwoTorsion) {
            auto [c, t] = curve_with_two_torsion(p, rng);
            curve = c;
            torsion = t;
        } else {
            curve = random_curve(p, rng);
        }
    } else if (injection == Injection::TwoTorsion) {
        torsion = two_torsion_point(*curve, rng);
    }

    Point A = random_point(*curve, rng);
    Point B = random_point(*curve, rng);
    Point C = random_point(*curve, rng);
    if (injection) {
        switch (*injection) {
            case Injection::BEqualsA: B = A; break;
            case Injection::BIsMinusA: B = negate(A); break;
            case Injection::CIsSum: C = add(A, B); break;
            case Injection::CIsMinusSum: C = negate(add(A, B)); break;
            case Injection::CEqualsA: C = A; break;
            case Injection::BIsO: B = Point::infinity(*curve); break;
            case Injection::BEqualsC: B = C; break;
            case Injection::AIsMinusBC: A = negate(add(B, C)); break;
            case Injection::BIsMinusDouble: B = add(negate(A), negate(A)); break;
            case Injection::TwoTorsion:
                if (torsion) B = *torsion;
                break;
            case Injection::BIsDouble: B = add(A, A); break;
            case Injection::AIsO: A = Point::infinity(*curve); break;
        }
    }

    HarnessReport report;
    report.mode = "randomized";
    report.configurations = 1;
    report.points = 3;
    const PointOps ops{*curve};
    Evaluator<PointOps> eval(ops, report, trial);
    eval.unary(A);
    eval.unary(B);
    eval.unary(C);
    eval.binary(A, B);
    eval.binary(B, A);
    eval.binary(A, C);
    eval.binary(B, C);
    eval.ternary(A, B, C);
    eval.ternary(C, B, A);
    return report;
}

}  // namespace

HarnessReport randomized_check(const HarnessConfig& config) {
    if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
    std::vector<HarnessReport> per_trial(config.trials);
    unsigned workers = config.workers ? config.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, config.trials));
    if (workers <= 1) {
        for (std::uint64_t t = 0; t < config.trials; ++t) per_trial[t] = run_trial(config, t);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::uint64_t t = w; t < config.trials; t += workers) per_trial[t] = run_trial(config, t);
            });
        }
    }
    HarnessReport report;
    report.mode = "randomized";
    for (const HarnessReport& r : per_trial) report.merge(r);
    return report;
}

}  // namespace ecgl
