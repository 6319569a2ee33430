#include "doctest.h"

#include "degen/errors.hpp"
#include "degen/polynomial.hpp"
#include "degen/power_series.hpp"
#include "degen/rational.hpp"
#include "degen/rational_function.hpp"
#include "generators.hpp"

using namespace degen;
using degen::testing::Gen;

namespace
{

Rational q(const char* s)
{
    return Rational::parse(s);
}

RationalPolynomial poly(std::vector<Rational> c)
{
    return RationalPolynomial::from_coeffs(std::move(c));
}

const RationalPolynomial X = RationalPolynomial::variable();

} // namespace

TEST_CASE("rational parsing and canonical form")
{
    CHECK(q("6/4") == Rational(3, 2));
    CHECK(q("6/4").denominator() == 2);
    CHECK(q("-1/-2") == Rational(1, 2));
    CHECK(q("0.125") == Rational(1, 8));
    CHECK(q("-2.5") == Rational(-5, 2));
    CHECK(q("1e-3") == Rational(1, 1000));
    CHECK(q("2.5e2") == Rational(250));
    CHECK(q(".5") == Rational(1, 2));
    CHECK(q("7").str() == "7");
    CHECK(Rational(-3, 6).str() == "-1/2");
    CHECK_THROWS_AS(q("1/0"), ZeroDenominator);
    CHECK_THROWS_AS(q("abc"), ParseError);
    CHECK_THROWS_AS(q(""), ParseError);
    CHECK_THROWS_AS(q("1.2.3"), ParseError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), ZeroDenominator);
}

TEST_CASE("rational helpers")
{
    CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(factorial(5) == Rational(120));
    CHECK(binomial(5, 2) == Rational(10));
    CHECK(binomial(-1, 3) == Rational(-1));
    CHECK(binomial(-2, 3) == Rational(-4));
    CHECK(binomial(3, 5) == Rational(0));
    CHECK(Rational::from_double(0.25) == Rational(1, 4));
    CHECK(Rational(7, 2).to_long() == std::nullopt);
    CHECK(Rational(-4).to_long() == -4);
}

TEST_CASE("rational ring axioms on random inputs")
{
    Gen gen(11);
    for (int i = 0; i < 200; ++i) {
        const Rational a = gen.rational(), b = gen.rational(), c = gen.rational();
        CHECK((a + b) - b == a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a.denominator() > 0);
    }
}

TEST_CASE("polynomial canonical degree and evaluation")
{
    const auto p = poly({1, 2, 0, 0});
    CHECK(p.degree() == 1);
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);
    CHECK(p(Rational(3)) == Rational(7));
    CHECK(to_string(poly({q("-1/2"), q("1/2")}), "lambda") == "1/2*lambda - 1/2");
    CHECK(to_string(poly({q("1/6"), 0, q("-1/6")}), "lambda") == "-1/6*lambda^2 + 1/6");
    CHECK(to_string(X) == "x");
    CHECK(to_string(RationalPolynomial{}) == "0");
}

TEST_CASE("polynomial evaluation is a ring homomorphism")
{
    Gen gen(12);
    for (int i = 0; i < 100; ++i) {
        const auto p = gen.polynomial(6), r = gen.polynomial(6), s = gen.polynomial(4);
        const Rational a = gen.rational();
        CHECK((p * r)(a) == p(a) * r(a));
        CHECK((p + r)(a) == p(a) + r(a));
        CHECK((p * r) * s == p * (r * s));
        CHECK(p * (r + s) == p * r + p * s);
    }
}

TEST_CASE("polynomial division and gcd")
{
    Gen gen(13);
    for (int i = 0; i < 60; ++i) {
        const auto a = gen.polynomial(7);
        auto b = gen.polynomial(4);
        if (b.is_zero()) {
            continue;
        }
        const auto [quot, rem] = divmod(a, b);
        CHECK(quot * b + rem == a);
        CHECK(rem.degree() < b.degree());
    }
    // gcd((x+1)(x-2), (x+1)(x+3)) = x + 1
    const auto g = gcd((X + 1) * (X - 2), (X + 1) * (X + 3));
    CHECK(g == X + 1);
    CHECK_THROWS_AS(divmod(X, RationalPolynomial{}), ZeroDenominator);
}

TEST_CASE("ps_mul examples")
{
    const PowerSeries<Rational> one_plus_t(2, {1, 1});
    const PowerSeries<Rational> one_minus_t(2, {1, -1});
    CHECK(ps_mul(one_plus_t, one_minus_t) == PowerSeries<Rational>(2, {1, 0, -1}));

    Gen gen(14);
    const auto s = gen.series(5);
    CHECK(ps_mul(s, PowerSeries<Rational>::one(5)) == s);

    // e^t * e^t = e^{2t}: coefficients 2^n/n!.
    const auto e = exp_series(3);
    CHECK(ps_mul(e, e) == PowerSeries<Rational>(3, {1, 2, 2, q("4/3")}));
}

TEST_CASE("mixing orders truncates to the minimum")
{
    const auto a = exp_series(5);
    const auto b = exp_series(2);
    CHECK((a * b).order() == 2);
    CHECK((a + b).order() == 2);
}

TEST_CASE("ps_recip examples")
{
    const PowerSeries<Rational> one_plus_t(3, {1, 1});
    CHECK(ps_recip(one_plus_t) == PowerSeries<Rational>(3, {1, -1, 1, -1}));
    CHECK(ps_recip(PowerSeries<Rational>::one(4)) == PowerSeries<Rational>::one(4));
    CHECK_THROWS_AS(ps_recip(PowerSeries<Rational>(3, {0, 1})), ZeroConstantTerm);

    // Coefficients in Q[lambda]: 1 + (1-l)t/2 + (1-l)(1-2l)t^2/6.
    const auto L = RationalPolynomial::variable();
    const RationalPolynomial one(Rational(1));
    const PowerSeries<RationalPolynomial> f(
        2, {one, (one - L) * q("1/2"), (one - L) * (one - L * Rational(2)) * q("1/6")});
    const auto r = ps_recip(f);
    CHECK(r[0] == one);
    CHECK(r[1] == (one - L) * q("-1/2"));
    CHECK(r[2] == (one - L * L) * q("1/12"));

    CHECK_THROWS_AS(ps_recip(PowerSeries<RationalPolynomial>(2, {L, one})), ZeroConstantTerm);
}

TEST_CASE("series times its reciprocal is exactly one")
{
    Gen gen(15);
    for (int i = 0; i < 40; ++i) {
        auto s = gen.series(8);
        if (s[0].is_zero()) {
            continue;
        }
        CHECK(ps_mul(s, ps_recip(s)) == PowerSeries<Rational>::one(8));
    }
}

TEST_CASE("power series ring axioms")
{
    Gen gen(16);
    for (int i = 0; i < 30; ++i) {
        const auto a = gen.series(6), b = gen.series(6), c = gen.series(6);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("unit power matches repeated multiplication and inverse")
{
    Gen gen(17);
    for (int i = 0; i < 20; ++i) {
        auto c = gen.series(6).coeffs();
        c[0] = Rational(1);
        const PowerSeries<Rational> f(6, c);
        CHECK(ps_unit_power(f, Rational(3)) == ps_pow(f, 3));
        CHECK(ps_unit_power(f, Rational(-1)) == ps_recip(f));
        const auto h = ps_unit_power(f, Rational(1, 2));
        CHECK(h * h == f);
    }
}

TEST_CASE("ratfun_normalize")
{
    const auto f = ratfun_normalize(X * X + X, X + 1);
    CHECK(f.numerator() == X);
    CHECK(f.denominator() == RationalPolynomial(Rational(1)));

    // x/(1 + x/2) is stored as 2x/(x + 2).
    const auto g = ratfun_normalize(X, RationalPolynomial(Rational(1)) + X * q("1/2"));
    CHECK(g.numerator() == X * Rational(2));
    CHECK(g.denominator() == X + 2);

    CHECK(ratfun_normalize(X, X + 1) == ratfun_normalize(X * X, X + X * X));
    CHECK_THROWS_AS(ratfun_normalize(X, RationalPolynomial{}), ZeroDenominator);
    CHECK(RationalFunction(RationalPolynomial{}, X) == RationalFunction());
}

TEST_CASE("ratfun_normalize is invariant under common factors")
{
    Gen gen(18);
    for (int i = 0; i < 40; ++i) {
        const auto p = gen.polynomial(4), d = gen.polynomial(3), g = gen.polynomial(2);
        if (d.is_zero() || g.is_zero()) {
            continue;
        }
        CHECK(ratfun_normalize(p * g, d * g) == ratfun_normalize(p, d));
    }
}

TEST_CASE("ratfun_derivative")
{
    const RationalPolynomial one(Rational(1));
    CHECK(ratfun_derivative(RationalFunction(X, X + 1)) == RationalFunction(one, (X + 1) * (X + 1)));
    CHECK(ratfun_derivative(RationalFunction(Rational(5))).is_zero());
    CHECK(ratfun_derivative(RationalFunction(X * X, X + 1)) == RationalFunction(X * X + X * Rational(2), (X + 1) * (X + 1)));
}

TEST_CASE("rational function equality agrees with evaluation")
{
    Gen gen(19);
    for (int i = 0; i < 30; ++i) {
        const auto n1 = gen.polynomial(3), d1 = gen.polynomial(3), n2 = gen.polynomial(3), d2 = gen.polynomial(3);
        if (d1.is_zero() || d2.is_zero()) {
            continue;
        }
        const RationalFunction f(n1, d1), g(n2, d2);
        const RationalFunction same(n1 * (X + 3), d1 * (X + 3));
        int checked = 0;
        while (checked < 5) {
            const Rational a = gen.rational();
            if (d1(a).is_zero() || d2(a).is_zero() || (a + 3).is_zero()) {
                continue;
            }
            ++checked;
            CHECK(same(a) == f(a));
            if (f == g) {
                CHECK(f(a) == g(a));
            }
        }
        CHECK(same == f);
        // Field identities.
        CHECK((f + g) - g == f);
        if (!g.is_zero()) {
            CHECK((f / g) * g == f);
        }
    }
}

TEST_CASE("rational function pole evaluation throws")
{
    const RationalFunction f(RationalPolynomial(Rational(1)), X - 2);
    CHECK_THROWS_AS(f(Rational(2)), DomainError);
    CHECK(f(Rational(3)) == Rational(1));
}
