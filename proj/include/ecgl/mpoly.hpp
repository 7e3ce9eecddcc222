#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ecgl {

/// The eight indeterminates of Z[xA, yA, xB, yB, xC, yC, a, b], listed in
/// decreasing precedence.
enum class Var : std::uint8_t { xA, yA, xB, yB, xC, yC, a, b };

inline constexpr std::size_t kNumVars = 8;
inline constexpr std::array<Var, kNumVars> kAllVars{Var::xA, Var::yA, Var::xB, Var::yB,
                                                    Var::xC, Var::yC, Var::a,  Var::b};
std::string_view var_name(Var v);

/// Per-variable exponent cap; products that exceed it throw ExponentOverflow.
inline constexpr unsigned kMaxExponent = 0x7fff;

using Exponents = std::array<unsigned, kNumVars>;

/// Exponent vector packed sixteen bits per variable, xA in the most
/// significant field, so integer comparison is lexicographic comparison.
class Monomial {
public:
    using Bits = unsigned __int128;

    constexpr Monomial() = default;
    explicit Monomial(const Exponents& e);
    static constexpr Monomial from_bits(Bits bits) { return Monomial(bits, 0); }
    static Monomial of(Var v, unsigned e = 1);

    constexpr Bits bits() const noexcept { return bits_; }
    constexpr unsigned exponent(Var v) const noexcept {
        return static_cast<unsigned>((bits_ >> shift(v)) & 0xffff);
    }
    unsigned degree() const noexcept;
    Exponents exponents() const noexcept;
    bool is_one() const noexcept { return bits_ == 0; }

    /// Product; throws ExponentOverflow past kMaxExponent.
    Monomial operator*(Monomial rhs) const;
    Monomial with_exponent(Var v, unsigned e) const;

    friend constexpr bool operator==(Monomial, Monomial) = default;

    static constexpr unsigned shift(Var v) noexcept {
        return 16u * (kNumVars - 1 - static_cast<unsigned>(v));
    }

private:
    constexpr Monomial(Bits bits, int) : bits_(bits) {}
    Bits bits_ = 0;
};

/// Graded lexicographic order: total degree first, then lex by precedence.
bool grlex_greater(Monomial lhs, Monomial rhs) noexcept;

struct Term {
    Monomial mono;
    mpz_class coef;
    friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial with arbitrary-precision integer coefficients.
///
/// Terms are kept in strictly decreasing grlex order with no zero
/// coefficients, so structural equality is polynomial equality.
class MPoly {
public:
    MPoly() = default;
    MPoly(long constant);  // NOLINT(google-explicit-constructor)
    explicit MPoly(const mpz_class& constant);
    static MPoly var(Var v);
    static MPoly monomial(Monomial m, mpz_class c = 1);
    /// Canonicalizes: merges duplicates, drops zeros, sorts.
    static MPoly build(std::vector<Term> terms);
    static MPoly build(std::initializer_list<std::pair<Exponents, long>> terms);

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    std::span<const Term> terms() const noexcept { return terms_; }
    bool is_constant() const noexcept;
    unsigned degree() const noexcept;
    unsigned degree_in(Var v) const noexcept;
    bool uses(Var v) const noexcept { return degree_in(v) > 0; }

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& rhs);
    MPoly& operator-=(const MPoly& rhs);
    MPoly& operator*=(const MPoly& rhs);
    friend MPoly operator+(MPoly lhs, const MPoly& rhs) { return lhs += rhs; }
    friend MPoly operator-(MPoly lhs, const MPoly& rhs) { return lhs -= rhs; }
    friend MPoly operator*(const MPoly& lhs, const MPoly& rhs);
    friend MPoly operator*(const mpz_class& c, const MPoly& f);

    friend bool operator==(const MPoly&, const MPoly&) = default;

private:
    explicit MPoly(std::vector<Term> sorted_terms) : terms_(std::move(sorted_terms)) {}
    std::vector<Term> terms_;

    friend class TermAccumulator;
};

MPoly pow(const MPoly& f, unsigned n);


/// Canonical text: descending grlex, "c*xA^2*yB" style factors, " + "/" - "
/// separators, "0" for the zero polynomial.
std::string to_string(const MPoly& f);
std::ostream& operator<<(std::ostream& os, const MPoly& f);

/// Inverse of to_string. Also accepts parentheses and integer powers of
/// subexpressions, e.g. "(xA - xB)^2*yA".
MPoly parse_mpoly(std::string_view text);

/// Value of f at integer points modulo a 64-bit modulus. `values` is indexed
/// by Var.
std::uint64_t evaluate_mod(const MPoly& f, const std::array<std::uint64_t, kNumVars>& values,
                           std::uint64_t modulus);

// --- the curve ideal I = (gA, gB, gC) ---------------------------------------

/// yV^2 - xV^3 - a*xV - b for the point label 0 = A, 1 = B, 2 = C.
const MPoly& curve_generator(int point);
/// xV^3 + a*xV + b, the replacement for yV^2.
const MPoly& curve_rhs(int point);

/// Unique remainder modulo I with every y-exponent at most 1. Rewrites
/// yV^2 -> xV^3 + a*xV + b. NF(f) = 0 iff f lies in I.
MPoly normal_form(const MPoly& f);

/// NF(f * g); operands need not be reduced. Reduction is fused into the
/// product so the unreduced product is never materialized.
MPoly mul_nf(const MPoly& f, const MPoly& g);
MPoly pow_nf(const MPoly& f, unsigned n);

/// Largest term count of any polynomial built on this thread since the last
/// reset; the prover uses it to report intermediate expression swell.
std::size_t peak_term_count() noexcept;
void reset_peak_term_count() noexcept;

}  // namespace ecgl
