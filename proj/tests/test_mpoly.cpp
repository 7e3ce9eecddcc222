#include <doctest.h>

#include <sstream>

#include "ecgl/errors.hpp"
#include "ecgl/mpoly.hpp"
#include "ecgl/ratfunc.hpp"
#include "ecgl/sampling.hpp"
#include "support/oracles.hpp"

using namespace ecgl;

namespace {

MPoly v(Var x) { return MPoly::var(x); }
MPoly P(const char* text) { return parse_mpoly(text); }

}  // namespace

TEST_CASE("building canonical polynomials") {
    CHECK(MPoly::build(std::vector<Term>{}).is_zero());
    const Monomial ya2 = Monomial::of(Var::yA, 2);
    CHECK(MPoly::build({Term{ya2, 1}, Term{ya2, -1}}).is_zero());
    const Monomial xa = Monomial::of(Var::xA);
    const Monomial b = Monomial::of(Var::b);
    const auto f = MPoly::build({Term{xa, 2}, Term{b, 1}, Term{xa, 1}});
    CHECK(f == MPoly(3) * v(Var::xA) + v(Var::b));
    CHECK(to_string(f) == "3*xA + b");
}

TEST_CASE("stored terms are nonzero, distinct and in grlex order") {
    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        const auto f = oracle::random_poly(rng, 10, 4, 3) * oracle::random_poly(rng, 10, 4, 3);
        const auto t = f.terms();
        for (std::size_t k = 0; k < t.size(); ++k) {
            CHECK(t[k].coef != 0);
            if (k + 1 < t.size()) CHECK(grlex_greater(t[k].mono, t[k + 1].mono));
        }
    }
}

TEST_CASE("grlex order follows the variable precedence") {
    const Var order[] = {Var::xA, Var::yA, Var::xB, Var::yB, Var::xC, Var::yC, Var::a, Var::b};
    for (int i = 0; i + 1 < 8; ++i) CHECK(grlex_greater(Monomial::of(order[i]), Monomial::of(order[i + 1])));
    CHECK(grlex_greater(Monomial::of(Var::b, 2), Monomial::of(Var::xA)));
    CHECK(to_string(P("b + xA^2 + yA*xA + 1")) == "xA^2 + xA*yA + b + 1");
}

TEST_CASE("multiplication") {
    const auto f = P("3*xA^2*yB - 7*a + 2");
    CHECK((f * MPoly(0)).is_zero());
    CHECK((v(Var::xA) + v(Var::yA)) * (v(Var::xA) - v(Var::yA)) == P("xA^2 - yA^2"));
    const auto cube = pow(v(Var::xB) - v(Var::xA), 3);
    REQUIRE(cube.size() == 4);
    std::vector<long> coefs;
    for (const auto& t : cube.terms()) coefs.push_back(t.coef.get_si());
    CHECK(coefs == std::vector<long>{-1, 3, -3, 1});  // xA^3, xA^2 xB, xA xB^2, xB^3
    CHECK(to_string(cube) == "-xA^3 + 3*xA^2*xB - 3*xA*xB^2 + xB^3");
}

TEST_CASE("ring laws on random polynomials") {
    Rng rng(17);
    for (int i = 0; i < 100; ++i) {
        const auto f = oracle::random_poly(rng, 6, 3, 9);
        const auto g = oracle::random_poly(rng, 6, 3, 9);
        const auto h = oracle::random_poly(rng, 6, 3, 9);
        CHECK(f * g == g * f);
        CHECK((f + g) * h == f * h + g * h);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f - f == MPoly(0));
        CHECK(-(-f) == f);
    }
}

TEST_CASE("coefficients are unbounded") {
    const auto f = pow(MPoly(1000000007) * v(Var::a) + MPoly(1), 12);
    mpz_class lead;
    mpz_ui_pow_ui(lead.get_mpz_t(), 1000000007, 12);
    CHECK(f.terms().front().coef == lead);
    CHECK(f.terms().back().coef == 1);
    CHECK(f.degree() == 12);
}

TEST_CASE("exponent overflow is detected") {
    CHECK_NOTHROW(pow(v(Var::yA), kMaxExponent));
    CHECK_THROWS_AS(pow(v(Var::yA), kMaxExponent) * v(Var::yA), ExponentOverflow);
}

TEST_CASE("text round trip") {
    Rng rng(23);
    for (int i = 0; i < 200; ++i) {
        const auto f = oracle::random_poly(rng, 8, 5, 1000);
        CHECK(parse_mpoly(to_string(f)) == f);
    }
    CHECK(to_string(MPoly(0)) == "0");
    CHECK(to_string(MPoly(-5)) == "-5");
    CHECK(to_string(P("-yA^2 + 1")) == "-yA^2 + 1");
    CHECK_THROWS_AS(parse_mpoly("xA +"), ParseError);
    CHECK_THROWS_AS(parse_mpoly("zz"), ParseError);
}

TEST_CASE("normal form examples") {
    CHECK(normal_form(P("yA^2")) == P("xA^3 + a*xA + b"));
    CHECK(normal_form(P("xA*b + 3")) == P("xA*b + 3"));
    CHECK(normal_form(P("yA^3")) == P("yA*xA^3 + a*xA*yA + b*yA"));
    CHECK(normal_form(curve_generator(0)).is_zero());
    CHECK(normal_form(curve_generator(1)).is_zero());
    CHECK(normal_form(curve_generator(2)).is_zero());
    Rng rng(29);
    const auto h = oracle::random_poly(rng, 5, 3, 10);
    const auto k = oracle::random_poly(rng, 5, 3, 10);
    CHECK(normal_form(curve_generator(0) * h + curve_generator(1) * k).is_zero());
}

TEST_CASE("normal form is idempotent and fully reduced") { CHECK(oracle::nf_idempotence_failures(200, 101) == 0); }
TEST_CASE("normal form is linear") { CHECK(oracle::nf_linearity_failures(200, 102) == 0); }
TEST_CASE("normal form respects products") { CHECK(oracle::nf_multiplicativity_failures(200, 103) == 0); }
TEST_CASE("normal form does not depend on the rewrite schedule") { CHECK(oracle::nf_schedule_failures(100, 104) == 0); }
TEST_CASE("ideal members reduce to zero") { CHECK(oracle::nf_membership_failures(100, 105) == 0); }
TEST_CASE("normal form preserves values at curve points") { CHECK(oracle::nf_evaluation_failures(200, 106) == 0); }

TEST_CASE("powers under reduction") {
    const auto f = P("yA + yB*xC - 2");
    CHECK(pow_nf(f, 5) == normal_form(pow(f, 5)));
    CHECK(pow_nf(f, 0) == MPoly(1));
}

TEST_CASE("rational function arithmetic keeps factors") {
    const RatFunc f(v(Var::yA) - v(Var::yB), v(Var::xA) - v(Var::xB));
    const RatFunc g(v(Var::xA) - v(Var::xB));
    const RatFunc prod = f * g;
    CHECK(prod.num() == (v(Var::yA) - v(Var::yB)) * (v(Var::xA) - v(Var::xB)));
    CHECK(prod.den() == v(Var::xA) - v(Var::xB));
    CHECK(rf_equal_mod_ideal(f + RatFunc(MPoly(0)), f));
    CHECK(rf_arith(RfOp::add, f, g) == f + g);
    CHECK(rf_arith(RfOp::sub, f, g) == f - g);
    CHECK(rf_arith(RfOp::mul, f, g) == f * g);
    CHECK(rf_arith(RfOp::div, f, g) == f / g);
    CHECK_THROWS_AS(f / RatFunc(MPoly(0)), DivisionByZeroPolynomial);
    CHECK_THROWS_AS(RatFunc(MPoly(1), MPoly(0)), DivisionByZeroPolynomial);
}

TEST_CASE("rational equality modulo the ideal") {
    CHECK(rf_equal_mod_ideal(RatFunc(P("yA^2 - b - a*xA")), RatFunc(P("xA^3"))));
    const RatFunc f(P("yA*xB + 7"), P("xA - xC"));
    CHECK(rf_equal_mod_ideal(f, f));
    CHECK_FALSE(rf_equal_mod_ideal(RatFunc(v(Var::xA)), RatFunc(v(Var::xB))));
    // Same value with different representation.
    const RatFunc scaled(f.num() * P("yB^2"), f.den() * P("xB^3 + a*xB + b"));
    CHECK(rf_equal_mod_ideal(f, scaled));
    CHECK(cleared_difference(f, f).is_zero());
}
