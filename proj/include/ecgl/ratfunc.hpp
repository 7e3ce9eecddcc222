#pragma once

#include <string>

#include "ecgl/mpoly.hpp"

namespace ecgl {

/// num / den with den != 0 as a polynomial. Never reduced to lowest terms;
/// compare with rf_equal_mod_ideal.
class RatFunc {
public:
    RatFunc(MPoly num);  // NOLINT(google-explicit-constructor)
    /// Throws DivisionByZeroPolynomial if den is zero.
    RatFunc(MPoly num, MPoly den);

    const MPoly& num() const noexcept { return num_; }
    const MPoly& den() const noexcept { return den_; }

    friend RatFunc operator+(const RatFunc& f, const RatFunc& g);
    friend RatFunc operator-(const RatFunc& f, const RatFunc& g);
    friend RatFunc operator*(const RatFunc& f, const RatFunc& g);
    /// Throws DivisionByZeroPolynomial if g.num() is zero.
    friend RatFunc operator/(const RatFunc& f, const RatFunc& g);
    RatFunc operator-() const { return RatFunc(-num_, den_); }

    /// Structural equality of the (num, den) pair, not of the quotient.
    friend bool operator==(const RatFunc&, const RatFunc&) = default;

private:
    MPoly num_;
    MPoly den_;
};

enum class RfOp { add, sub, mul, div };
RatFunc rf_arith(RfOp op, const RatFunc& f, const RatFunc& g);

/// f.num * g.den - g.num * f.den, the numerator of f - g after clearing.
MPoly cleared_difference(const RatFunc& f, const RatFunc& g);

/// NF(f.num * g.den - g.num * f.den) == 0.
bool rf_equal_mod_ideal(const RatFunc& f, const RatFunc& g);

/// Numerator and denominator each replaced by their normal form. The
/// denominator must stay nonzero modulo I.
RatFunc normal_form(const RatFunc& f);

std::string to_string(const RatFunc& f);

}  // namespace ecgl
