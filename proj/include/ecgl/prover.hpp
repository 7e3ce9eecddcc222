#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ecgl/ratfunc.hpp"

namespace ecgl {

/// A point whose coordinates are rational expressions in the eight variables.
struct SymPoint {
    RatFunc x;
    RatFunc y;
    friend bool operator==(const SymPoint&, const SymPoint&) = default;
};

/// (xA, yA), (xB, yB) or (xC, yC) for label 0, 1, 2.
SymPoint generic_point(int label);

SymPoint symbolic_negate(const SymPoint& p);

enum class Slope { chord, tangent };

/// Receives every slope denominator factor created by symbolic_add.
using DenominatorLog = std::vector<RatFunc>;

/// Addition by the explicit formula with the chosen slope:
///   chord   alpha = (yA - yB) / (xA - xB)
///   tangent alpha = (3xA^2 + a) / (2yA), requires A == B structurally
/// then x = alpha^2 - xA - xB, y = -yA + alpha (xA - x). Coordinates are
/// returned with numerator and denominator in normal form.
/// Throws DegenerateSlope when the chord's x-difference is zero modulo I,
/// or when tangent is requested for distinct points.
SymPoint symbolic_add(const SymPoint& lhs, const SymPoint& rhs, Slope slope,
                      DenominatorLog* log = nullptr);

enum class LemmaId {
    Assoc3Generic,
    AssocDouble,
    AssocQuad,
    NegDistributes,
    PmbSimplification,
    DoubleMinusA,
    AddMinusB,
    Claim5Square,
    Claim5Factorization,
    TranscriptionAudit,
};

inline constexpr std::array<LemmaId, 10> kAllLemmas{
    LemmaId::Assoc3Generic,       LemmaId::AssocDouble,       LemmaId::AssocQuad,
    LemmaId::NegDistributes,      LemmaId::PmbSimplification, LemmaId::DoubleMinusA,
    LemmaId::AddMinusB,           LemmaId::Claim5Square,      LemmaId::Claim5Factorization,
    LemmaId::TranscriptionAudit,
};

std::string_view lemma_name(LemmaId id);
/// Throws UnknownLemma.
LemmaId parse_lemma_id(std::string_view name);

enum class Status { pass, fail, flagged };
std::string_view status_name(Status s);
Status parse_status(std::string_view name);

/// Normal form of one cleared coordinate difference.
struct Residual {
    std::string label;
    MPoly poly;
    friend bool operator==(const Residual&, const Residual&) = default;
};

struct CheckResult {
    LemmaId id{};
    Status status = Status::fail;
    std::vector<Residual> residuals;
    std::size_t peak_term_count = 0;
    std::int64_t elapsed_millis = 0;
    /// Free-form notes; the transcription audit puts its diff here.
    std::string detail;

    bool residual_is_zero() const;
    std::size_t residual_terms() const;
    /// "0" when every residual vanishes; otherwise the nonzero residuals as
    /// "label: <polynomial>" joined by "; ".
    std::string residual_text() const;

    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    std::size_t count(Status s) const;
    /// Every check other than the audit passed, and nothing failed.
    bool all_passed() const;

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Throws UnknownLemma for a value outside the enumeration.
CheckResult check_lemma(LemmaId id);

/// Every lemma, results in enumeration order. Checks run concurrently when
/// `parallel` is set.
VerificationReport run_all(bool parallel = true);

// --- symbolic/numeric cross-checking ----------------------------------------

/// One rational identity lhs == rhs that a check reduces modulo I.
struct Identity {
    std::string label;
    RatFunc lhs;
    RatFunc rhs;
};

/// The symbolic content of a check: the identities and every slope
/// denominator introduced while composing them.
struct Derivation {
    std::vector<Identity> identities;
    DenominatorLog denominators;
};

/// Rebuilds the identities of a non-audit check. Throws UnknownLemma for the
/// audit, which has no single derivation.
Derivation derive(LemmaId id);

struct NumericCrosscheck {
    LemmaId id{};
    std::size_t configurations = 0;
    std::size_t rejected = 0;             // sampled tuples failing the hypotheses
    std::size_t cleared_nonzero = 0;      // cleared difference != 0 mod p
    std::size_t denominator_zero = 0;     // a slope factor vanished
    std::size_t curve_mismatch = 0;       // symbolic value != curve-module value
    bool ok() const { return configurations > 0 && cleared_nonzero == 0 && denominator_zero == 0 && curve_mismatch == 0; }
};

/// Evaluates the check's cleared differences at `configurations` random
/// on-curve tuples over random primes of `prime_bits` bits that satisfy the
/// lemma's hypotheses, and compares the symbolic coordinates with the curve
/// module's arithmetic.
NumericCrosscheck numeric_crosscheck(LemmaId id, std::size_t configurations, unsigned prime_bits,
                                     std::uint64_t seed);

// --- printed identities -----------------------------------------------------

/// Which transcription fixes to apply to the printed cleared identities.
struct AuditCorrections {
    bool alpha_uses_yA = false;         // alpha~ := yB - yA instead of yB - xA
    bool c_factor_uses_mu = false;      // (xA+xB+xC) mu~^2 - gamma~^2 where eta~ is printed
    bool beta_factor_uses_alpha = false;  // ... eta~^2 - alpha~^2 where eta~^2 - eta~^2 is printed
};

/// The printed polynomial whose vanishing is claimed equivalent to x1 = x2.
MPoly printed_x_identity(const AuditCorrections& fix);
/// Same for y1 = y2.
MPoly printed_y_identity(const AuditCorrections& fix);

}  // namespace ecgl
