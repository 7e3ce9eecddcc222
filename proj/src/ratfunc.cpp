#include "ecgl/ratfunc.hpp"

#include <utility>

#include "ecgl/errors.hpp"

namespace ecgl {

RatFunc::RatFunc(MPoly num) : num_(std::move(num)), den_(1) {}

RatFunc::RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZeroPolynomial("rational function with zero denominator");
}

RatFunc operator+(const RatFunc& f, const RatFunc& g) {
    return {f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_};
}

RatFunc operator-(const RatFunc& f, const RatFunc& g) {
    return {f.num_ * g.den_ - g.num_ * f.den_, f.den_ * g.den_};
}

RatFunc operator*(const RatFunc& f, const RatFunc& g) {
    return {f.num_ * g.num_, f.den_ * g.den_};
}

RatFunc operator/(const RatFunc& f, const RatFunc& g) {
    if (g.num_.is_zero()) throw DivisionByZeroPolynomial("division by the zero rational function");
    return {f.num_ * g.den_, f.den_ * g.num_};
}

RatFunc rf_arith(RfOp op, const RatFunc& f, const RatFunc& g) {
    switch (op) {
        case RfOp::add: return f + g;
        case RfOp::sub: return f - g;
        case RfOp::mul: return f * g;
        case RfOp::div: return f / g;
    }
    throw std::logic_error("bad RfOp");
}

MPoly cleared_difference(const RatFunc& f, const RatFunc& g) {
    return f.num() * g.den() - g.num() * f.den();
}

bool rf_equal_mod_ideal(const RatFunc& f, const RatFunc& g) {
    return (mul_nf(f.num(), g.den()) - mul_nf(g.num(), f.den())).is_zero();
}

RatFunc normal_form(const RatFunc& f) {
    MPoly den = normal_form(f.den());
    if (den.is_zero()) throw DivisionByZeroPolynomial("denominator lies in the curve ideal");
    return {normal_form(f.num()), std::move(den)};
}

std::string to_string(const RatFunc& f) {
    return "(" + to_string(f.num()) + ") / (" + to_string(f.den()) + ")";
}

}  // namespace ecgl
