#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ecgl/curve.hpp"

namespace ecgl {

/// Every numerically checked statement: the group axioms, the two opening
/// facts about "+", and each lemma statement with its exact hypotheses.
enum class Property {
    Closure,
    Commutativity,
    Neutral,
    Inverse,
    DoubleIsZeroIffYZero,  // A + A = O iff y = 0
    EqualXMeansPlusMinus,  // x_A = x_B implies A = B or A = -B
    NegDistributes,        // -A - B = -(A + B)
    PlusMinusB,            // A + B = A - B and A != -A implies B = -B
    NeutralUnique,         // A + B = A implies B = O
    DoubleMinusA,          // A != -A, A + A != -A implies (A + A) - A = A
    OppositeSum,           // A + B = -A implies B = -A - A
    Cancellation,          // A + B = A + B' implies B = B'
    AddSub,                // (A + B) - B = A
    SolveForA,             // A + B = C implies A = C - B
    AssocGeneric,          // associativity under the generic-case hypotheses
    AssocDouble,           // (A + A) + B = A + (A + B) under its hypotheses
    AssocQuad,             // (A + A) + (A + A) = A + (A + (A + A)) under its hypotheses
    AssocSpecialCases,     // associativity under the trichotomy hypotheses
    Associativity,         // (A + B) + C = A + (B + C) for all triples
};

inline constexpr std::size_t kNumProperties = 19;
std::string_view property_name(Property p);
Property parse_property(std::string_view name);

struct PropertyCounters {
    std::uint64_t tested = 0;
    std::uint64_t failures = 0;
    std::uint64_t skipped = 0;  // hypotheses not met
    friend bool operator==(const PropertyCounters&, const PropertyCounters&) = default;
};

struct Counterexample {
    Property property{};
    std::uint64_t p = 0;
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::vector<std::string> points;  // "O" or "x,y"
    std::optional<std::uint64_t> trial;
    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct HarnessReport {
    std::string mode;  // "exhaustive" or "randomized"
    std::uint64_t configurations = 0;  // curves (exhaustive) or trials (randomized)
    std::uint64_t points = 0;          // points enumerated or sampled
    std::array<PropertyCounters, kNumProperties> properties{};
    /// How often each part (1), (2), (3) of the special-case trichotomy held
    /// for an associativity triple.
    std::array<std::uint64_t, 3> special_case_parts{};
    std::optional<Counterexample> counterexample;

    std::uint64_t total_failures() const;
    const PropertyCounters& operator[](Property p) const { return properties[static_cast<std::size_t>(p)]; }
    PropertyCounters& operator[](Property p) { return properties[static_cast<std::size_t>(p)]; }
    /// Adds counters; keeps this report's counterexample if it has one.
    void merge(const HarnessReport& other);

    friend bool operator==(const HarnessReport&, const HarnessReport&) = default;
};

/// Exhaustive triple checks are capped here.
inline constexpr std::uint64_t kExhaustiveLimit = 1000;

/// Every property over every applicable tuple of points of one curve.
HarnessReport check_curve_exhaustive(const CurveParams& curve);

/// check_curve_exhaustive for every prime 5 <= p <= max_p and every (a, b)
/// with nonzero discriminant. Throws TooLarge above kExhaustiveLimit.
HarnessReport exhaustive_check(std::uint64_t max_p);

/// Correlated inputs injected into a fraction of randomized trials to reach
/// the special cases uniform sampling never hits.
enum class Injection {
    BEqualsA,
    BIsMinusA,
    CIsSum,
    CIsMinusSum,
    CEqualsA,
    BIsO,
    BEqualsC,
    AIsMinusBC,
    BIsMinusDouble,
    TwoTorsion,
    BIsDouble,
    AIsO,
};
inline constexpr std::size_t kNumInjections = 12;
std::string_view injection_name(Injection k);

struct HarnessConfig {
    unsigned prime_bits = 31;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 1;
    /// Injection applies to trials with index % 100 < injection_percent.
    unsigned injection_percent = 25;
    /// Use this injection in every trial instead of the rotating schedule.
    std::optional<Injection> forced;
    /// Curve to use in every trial instead of a random one.
    std::optional<CurveParams> fixed_curve;
    unsigned workers = 0;  // 0 = hardware concurrency
};

/// Independent trials, each with its own stream split from the seed; the
/// report does not depend on the worker count.
HarnessReport randomized_check(const HarnessConfig& config);

}  // namespace ecgl
