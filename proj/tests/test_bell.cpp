#include <doctest.h>

#include <cmath>

#include "degen/bell.hpp"
#include "degen/errors.hpp"
#include "degen/sequences.hpp"

using namespace degen;

namespace
{

const RationalPolynomial X = RationalPolynomial::variable();

RationalPolynomial one_plus(const Rational& lambda)
{
    return RationalPolynomial::from_coeffs({Rational(1), lambda});
}

// Classical Bell polynomials from Bel_{n+1}(x) = x sum_l C(n, l) Bel_l(x).
std::vector<RationalPolynomial> classical_bell_by_recurrence(unsigned n_max)
{
    std::vector<RationalPolynomial> b{RationalPolynomial(Rational(1))};
    for (unsigned n = 0; n < n_max; ++n) {
        RationalPolynomial acc;
        for (unsigned l = 0; l <= n; ++l) {
            acc = acc + b[l] * binomial(n, l);
        }
        b.push_back(X * acc);
    }
    return b;
}

} // namespace

TEST_CASE("Bel_{n,lambda} sample values")
{
    for (auto l : {Rational(1, 2), Rational(1), Rational(-1, 3), Rational(0)}) {
        CHECK(bell_deg(0, l).f == RationalFunction(1));
        CHECK(bell_deg(1, l).f == RationalFunction(X, one_plus(l)));
        CHECK(bell_deg(3, l)(Rational(0)) == Rational(0));
    }
    CHECK(bell_deg(2, Rational(1))(Rational(1)) == Rational(1, 2));
    CHECK(bell_deg_value(2, Rational(1), Rational(1)) == Rational(1, 2));
    CHECK_THROWS_AS(bell_deg_value(2, Rational(1, 2), Rational(-2)), DomainError);
}

TEST_CASE("denominator of Bel_{n,lambda} divides (1 + lambda x)^n")
{
    for (auto l : {Rational(1, 2), Rational(1), Rational(-1, 3), Rational(2)}) {
        for (unsigned n = 0; n <= 8; ++n) {
            const RationalFunction f = bell_deg(n, l).f;
            const RationalPolynomial full = make_monic(pow(one_plus(l), n));
            CHECK(divmod(full, f.denominator()).second.is_zero());
        }
    }
}

TEST_CASE("lambda = 0 gives the classical Bell polynomials")
{
    const auto expect = classical_bell_by_recurrence(12);
    for (unsigned n = 0; n <= 12; ++n) {
        const RationalFunction f = bell_deg(n, Rational(0)).f;
        CHECK(f.is_polynomial());
        CHECK(f.numerator() == expect[n]);
        CHECK(bell_classical(n) == expect[n]);
        CHECK(bell_partial(n, Rational(0)).p == expect[n]);
    }
}

TEST_CASE("closed form agrees with the generating function over Q(x)")
{
    for (auto l : {Rational(1, 2), Rational(1), Rational(-1, 3), Rational(2), Rational(3, 7)}) {
        const auto egf = bell_deg_egf(l, 8);
        for (unsigned n = 0; n <= 8; ++n) {
            CHECK(egf[n] == bell_deg(n, l).f);
        }
    }
}

TEST_CASE("a perturbed Stirling row breaks the generating-function agreement")
{
    const Rational l(1, 2);
    const auto egf = bell_deg_egf(l, 5);
    auto row = stirling2_triangle(5)[5];
    row[2] += Rational(1);
    CHECK_FALSE(bell_deg_from_stirling(5, l, row) == egf[5]);
}

TEST_CASE("terminating generating function coefficients")
{
    const auto seq = bell_egf_terminating(LambdaParam(1), Rational(1), 6);
    CHECK(seq[0] == Rational(1));
    for (unsigned n = 1; n <= 6; ++n) {
        CHECK(seq[n] == Rational(1, 2));
    }
    const auto zero = bell_egf_terminating(LambdaParam(Rational(1, 3)), Rational(0), 5);
    CHECK(zero[0] == Rational(1));
    for (unsigned n = 1; n <= 5; ++n) {
        CHECK(zero[n] == Rational(0));
    }
    for (long m : {1L, 2L, 3L}) {
        const LambdaParam l(Rational(1, m));
        for (auto x : {Rational(1), Rational(2), Rational(-1, 3)}) {
            const auto s = bell_egf_terminating(l, x, 10);
            for (unsigned n = 0; n <= 10; ++n) {
                CHECK(s[n] == bell_deg(n, l.value())(x));
            }
        }
    }
    CHECK_THROWS_AS(bell_egf_terminating(LambdaParam(Rational(2, 5)), Rational(1), 4), NotTerminating);
}

TEST_CASE("Dobinski evaluation of Bel_{n,lambda}")
{
    CHECK(bell_deg_dobinski(0, LambdaParam(Rational(2, 7)), 0.9).value == doctest::Approx(1.0));
    CHECK(bell_deg_dobinski(1, LambdaParam(1), 1.0).value == doctest::Approx(0.5));
    CHECK(std::fabs(bell_deg_dobinski(2, LambdaParam(Rational(1, 2)), 0.5).value -
                    bell_deg(2, Rational(1, 2))(Rational(1, 2)).to_double()) <= 1e-10);
    for (auto l : {Rational(1, 2), Rational(-1, 3), Rational(2, 7), Rational(1, 5), Rational(-3, 5)}) {
        for (auto x : {Rational(-1, 2), Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
            if (abs(l * x) > Rational(1, 2)) {
                continue;
            }
            for (unsigned n = 0; n <= 8; ++n) {
                const EvalResult r = bell_deg_dobinski(n, LambdaParam(l), x.to_double());
                REQUIRE(r.ok());
                const double exact = bell_deg(n, l)(x).to_double();
                CHECK(std::fabs(r.value - exact) <= r.error_bound + 1e-13 * std::max(1.0, std::fabs(exact)));
            }
        }
    }
    CHECK_THROWS_AS(bell_deg_dobinski(2, LambdaParam(Rational(2, 5)), 3.0), DomainError);
}

TEST_CASE("partially degenerate Bell polynomials")
{
    CHECK(bell_partial(0, Rational(3, 4)).p == RationalPolynomial(Rational(1)));
    for (unsigned n = 1; n <= 6; ++n) {
        CHECK(bell_partial(n, Rational(1, 3))(Rational(0)) == Rational(0));
    }
    for (auto l : {Rational(1, 2), Rational(-2), Rational(0)}) {
        CHECK(bell_partial(2, l).p == RationalPolynomial::from_coeffs({Rational(0), Rational(1) - l, Rational(1)}));
    }
    const auto in_lambda = bell_partial_in_lambda(5);
    for (auto l : {Rational(1, 2), Rational(-2)}) {
        CHECK(in_lambda.map_coeffs([&](const RationalPolynomial& c, std::size_t) { return c(l); }) == bell_partial(5, l).p);
    }
}

TEST_CASE("Dobinski evaluation of bel_{n,lambda}")
{
    CHECK(bell_partial_dobinski(0, LambdaParam(Rational(1, 2)), 1.3).value == doctest::Approx(1.0));
    CHECK(std::fabs(bell_partial_dobinski(2, LambdaParam(0), 1.0).value - 2.0) <= 1e-12);
    CHECK(std::fabs(bell_partial_dobinski(2, LambdaParam(Rational(1, 2)), 1.0).value - 1.5) <= 1e-12);
    for (auto l : {Rational(1, 2), Rational(-3, 2), Rational(2)}) {
        for (double x : {-2.0, 0.5, 3.0}) {
            for (unsigned n = 0; n <= 7; ++n) {
                const EvalResult r = bell_partial_dobinski(n, LambdaParam(l), x);
                REQUIRE(r.ok());
                const double exact = bell_partial(n, l)(Rational::from_double(x)).to_double();
                CHECK(std::fabs(r.value - exact) <= r.error_bound + 1e-12 * std::max(1.0, std::fabs(exact)));
            }
        }
    }
}
