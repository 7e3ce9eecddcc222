#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ecgl {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

/// A prime modulus p > 3. Construction fails with InvalidPrime otherwise.
class Prime {
public:
    explicit Prime(std::uint64_t value);

    std::uint64_t value() const noexcept { return value_; }

    friend bool operator==(const Prime&, const Prime&) = default;
    friend auto operator<=>(const Prime&, const Prime&) = default;

private:
    std::uint64_t value_;
};

/// Residue class modulo a Prime, stored canonically in [0, p).
///
/// Binary arithmetic between elements of different fields throws
/// ModulusMismatch. All operations are pure.
class FpElement {
public:
    FpElement(std::uint64_t residue, Prime modulus);
    /// Accepts any signed integer and reduces it into [0, p).
    static FpElement from_signed(std::int64_t value, Prime modulus);

    std::uint64_t residue() const noexcept { return residue_; }
    const Prime& modulus() const noexcept { return modulus_; }
    std::uint64_t p() const noexcept { return modulus_.value(); }
    bool is_zero() const noexcept { return residue_ == 0; }

    FpElement operator+(const FpElement& rhs) const;
    FpElement operator-(const FpElement& rhs) const;
    FpElement operator*(const FpElement& rhs) const;
    FpElement operator-() const;
    FpElement pow(std::uint64_t exponent) const;

    friend bool operator==(const FpElement& lhs, const FpElement& rhs) noexcept {
        return lhs.residue_ == rhs.residue_ && lhs.modulus_ == rhs.modulus_;
    }
    // Ordering by residue; only meaningful within one field.
    friend auto operator<=>(const FpElement& lhs, const FpElement& rhs) noexcept {
        if (auto c = lhs.modulus_ <=> rhs.modulus_; c != 0) return c;
        return lhs.residue_ <=> rhs.residue_;
    }

private:
    struct Unchecked {};
    FpElement(Unchecked, std::uint64_t residue, Prime modulus) noexcept
        : residue_(residue), modulus_(modulus) {}
    void require_same_field(const FpElement& rhs) const;

    std::uint64_t residue_;
    Prime modulus_;

    friend FpElement fp_inv(const FpElement&);
};

std::ostream& operator<<(std::ostream& os, const FpElement& x);

/// Multiplicative inverse; throws ZeroInverse on 0.
FpElement fp_inv(const FpElement& x);

/// Legendre symbol x^((p-1)/2) mapped to {-1, 0, +1}.
int fp_legendre(const FpElement& x);

/// Both square roots of x, smaller residue first; a single element for x = 0.
/// Tonelli-Shanks with the smallest quadratic nonresidue (2, 3, 5, ...).
/// Throws NotASquare when x is a nonresidue.
std::vector<FpElement> fp_sqrt(const FpElement& x);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m) noexcept;

}  // namespace ecgl
