#include <doctest.h>

#include <cmath>
#include <numbers>

#include "degen/errors.hpp"
#include "degen/polyexp.hpp"
#include "degen/zeta_gamma.hpp"

using namespace degen;

namespace
{

LambdaParam lam(long p, long q)
{
    return LambdaParam(Rational(p, q));
}

} // namespace

TEST_CASE("quadrature sample integrals")
{
    const QuadratureConfig cfg;
    CHECK(std::fabs(adaptive_quadrature([](double t) { return t; }, 0.0, 1.0, cfg).value - 0.5) <= cfg.abs_tol);
    CHECK(std::fabs(adaptive_quadrature([](double t) { return std::exp(-2 * t); }, 0.0, INFINITY, cfg).value - 0.5) <=
          cfg.abs_tol);
    CHECK(std::fabs(adaptive_quadrature([](double t) { return 1 - t; }, 0.0, 0.5, cfg).value - 0.375) <= cfg.abs_tol);
}

TEST_CASE("degenerate gamma at s = 1")
{
    CHECK(std::fabs(gamma_deg(0.5, 1.0).value - 2.0) <= 1e-10);
    for (double l : {0.25, 1.0 / 3.0, 0.5}) {
        CHECK(std::fabs(gamma_deg(l, 1.0).value - 1.0 / (1.0 - l)) <= 1e-10);
    }
    double previous = INFINITY;
    for (double l : {0.5, 0.25, 0.125, 0.0625}) {
        const double d = std::fabs(gamma_deg(l, 1.0).value - 1.0);
        CHECK(d < previous);
        previous = d;
    }
    CHECK_THROWS_AS(gamma_deg(0.5, 2.0), DomainError);
    CHECK_THROWS_AS(gamma_deg(0.5, 0.0), DomainError);
    CHECK_THROWS_AS(gamma_deg(1.5, 0.5), DomainError);
}

TEST_CASE("beta closed forms")
{
    CHECK(beta_closed_form(Rational(1, 2), Rational(1, 2))->value() == doctest::Approx(std::numbers::pi));
    CHECK(beta_closed_form(Rational(1), Rational(1))->value() == doctest::Approx(1.0));
    CHECK(beta_closed_form(Rational(1, 2), Rational(3, 2))->value() == doctest::Approx(std::numbers::pi / 2));
    CHECK(beta_closed_form(Rational(1), Rational(1, 2))->coefficient == Rational(2));
    CHECK(beta_closed_form(Rational(2), Rational(3))->coefficient == Rational(1, 12));
    CHECK_FALSE(beta_closed_form(Rational(1, 3), Rational(1)).has_value());
    for (auto [a, b] : {std::pair{0.5, 0.5}, {1.5, 2.0}, {0.5, 3.5}, {2.0, 5.0}}) {
        const auto cf = beta_closed_form(Rational::from_double(a), Rational::from_double(b));
        REQUIRE(cf.has_value());
        CHECK(std::fabs(beta_quadrature(a, b).value - cf->value()) <= 1e-10);
    }
}

TEST_CASE("degenerate gamma: direct quadrature, beta quadrature and closed form agree")
{
    const QuadratureConfig cfg;
    for (auto [p, q] : {std::pair{1L, 4L}, {1L, 3L}, {1L, 2L}}) {
        const double l = static_cast<double>(p) / static_cast<double>(q);
        for (auto s : {Rational(1, 2), Rational(1), Rational(3, 2)}) {
            const double sd = s.to_double();
            if (!(sd < 1.0 / l)) {
                continue;
            }
            const EvalResult direct = gamma_deg(l, sd, cfg);
            const EvalResult beta = gamma_deg_beta(l, sd, cfg);
            REQUIRE(direct.ok());
            REQUIRE(beta.ok());
            const double allowed = 2 * std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(direct.value));
            CHECK(std::fabs(direct.value - beta.value) <= allowed);
            const auto cf = beta_closed_form(s, Rational(q, p) - s);
            REQUIRE(cf.has_value());
            CHECK(std::fabs(direct.value - std::pow(l, -sd) * cf->value()) <= allowed);
        }
    }
}

TEST_CASE("incomplete degenerate gamma")
{
    CHECK(gamma_deg_incomplete(lam(1, 3), 2.0, 0.0).value == 0.0);
    CHECK(std::fabs(gamma_deg_incomplete(lam(1, 1), 1.0, 0.5).value - 0.375) <= 1e-12);
    CHECK(polyexp_deg_exact(lam(1, 1), Rational(-1, 2), Rational(1), 1) * Rational(1, 2) == Rational(3, 8));
    CHECK_THROWS_AS(gamma_deg_incomplete(lam(2, 5), 1.0, 3.0), DomainError);
    CHECK_THROWS_AS(gamma_deg_incomplete(lam(1, 3), 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(gamma_deg_incomplete(lam(1, 3), 1.0, -1.0), DomainError);
    // terminating lambda: the integrand is a polynomial, any x is allowed
    CHECK(gamma_deg_incomplete(lam(1, 2), 1.0, 7.0).ok());
}

TEST_CASE("derivative of x^delta e_lambda(-x, delta | 1) by central difference")
{
    const LambdaParam l = lam(1, 2);
    const double delta = 2.0;
    const double x = 0.5;
    const double h = 1e-4;
    const auto g = [&](double y) { return std::pow(y, delta) * polyexp_deg({l, -y, delta, 1.0}).value; };
    const double fd = (g(x + h) - g(x - h)) / (2 * h);
    CHECK(std::fabs(fd - std::pow(x, delta - 1) * degexp(l, -x)) <= 1e-6);
}

TEST_CASE("incomplete gamma tends to Gamma_{-lambda} for negative lambda")
{
    for (auto [p, q, delta] : {std::tuple{-1L, 3L, 1.0}, {-1L, 4L, 1.5}, {-1L, 2L, 0.5}}) {
        const LambdaParam l = lam(p, q);
        const double mu = -l.as_double();
        const EvalResult limit = gamma_deg_incomplete(l, delta, INFINITY);
        CHECK(std::fabs(limit.value - gamma_deg(mu, delta).value) <= 1e-9);
        double previous = INFINITY;
        for (double x : {10.0, 100.0, 1000.0}) {
            const double gap = std::fabs(limit.value - gamma_deg_incomplete(l, delta, x).value);
            CHECK(gap < previous);
            previous = gap;
        }
    }
    CHECK_THROWS_AS(gamma_deg_incomplete(lam(-1, 2), 3.0, INFINITY), DomainError);
}

TEST_CASE("incomplete gamma matches the polyexponential exactly for terminating lambda")
{
    for (long m = 1; m <= 5; ++m) {
        const LambdaParam l(Rational(1, m));
        for (auto delta : {Rational(1, 2), Rational(1), Rational(3)}) {
            for (auto x : {Rational(1, 3), Rational(2), Rational(5, 2)}) {
                CHECK(gamma_deg_incomplete_scaled_exact(l, delta, x) == polyexp_deg_exact(l, -x, delta, 1));
            }
        }
    }
}

TEST_CASE("degenerate Lerch zeta")
{
    CHECK(lerch_deg_exact(lam(1, 2), Rational(1), 2, Rational(1)) == Rational(47, 36));
    CHECK(lerch_deg({lam(1, 2), 1.0, 2.0, 1.0}).value == doctest::Approx(47.0 / 36.0));
    CHECK(lerch_deg({lam(1, 2), 1.0, 2.0, 1.0}).status == EvalStatus::terminated_exactly);
    CHECK(lerch_deg_exact(lam(1, 5), Rational(0), 3, Rational(2)) == Rational(1, 8));
    for (double s : {1.5, 2.0, 3.0}) {
        for (double d : {0.5, 1.0, 2.0}) {
            CHECK(lerch_deg({lam(1, 1), 1.0, s, d}).value == doctest::Approx(std::pow(d, -s) + std::pow(1 + d, -s)));
        }
    }
    CHECK_THROWS_AS(lerch_deg({lam(2, 5), 1.0, 2.0, 1.0}), NotTerminating);
    CHECK_THROWS_AS(lerch_deg({LambdaParam(0), 0.5, 2.0, 1.0}), NotTerminating);
}

TEST_CASE("degenerate Hurwitz and Riemann zeta")
{
    for (double s : {2.0, 3.5}) {
        CHECK(riemann_deg(lam(1, 1), s).value == doctest::Approx(1 + std::pow(2.0, -s)));
        CHECK(hurwitz_deg(lam(1, 1), s, 0.5).value == doctest::Approx(std::pow(0.5, -s) + std::pow(1.5, -s)));
    }
    CHECK(riemann_deg_exact(lam(1, 2), 2) == Rational(47, 36));
    CHECK_THROWS_AS(riemann_deg(lam(1, 2), 1.0), DomainError);
    CHECK_THROWS_AS(hurwitz_deg(lam(1, 2), 0.5, 1.0), DomainError);
    CHECK_THROWS_AS(riemann_deg(lam(3, 7), 2.0), NotTerminating);
    for (long m = 1; m <= 6; ++m) {
        const LambdaParam l(Rational(1, m));
        for (long s : {2L, 3L, 4L}) {
            CHECK(riemann_deg_exact(l, s) == hurwitz_deg_exact(l, s, Rational(1)));
            CHECK(riemann_deg(l, static_cast<double>(s)).value == doctest::Approx(riemann_deg_exact(l, s).to_double()));
        }
    }
}

TEST_CASE("zeta_{1/m}(2) increases with m and stays below zeta(2)")
{
    Rational previous(0);
    for (long m = 1; m <= 6; ++m) {
        const LambdaParam l(Rational(1, m));
        // independent finite sum: (1)_{n-1,1/m} = prod_{j<n-1} (1 - j/m)
        Rational expect(0);
        Rational coef(1);
        for (long n = 1; n <= m + 1; ++n) {
            if (n > 1) {
                coef *= Rational(m - (n - 2), m);
            }
            expect += coef / Rational(n * n);
        }
        const Rational z = riemann_deg_exact(l, 2);
        CHECK(z == expect);
        CHECK(z > previous);
        CHECK(z.to_double() < std::numbers::pi * std::numbers::pi / 6);
        previous = z;
    }
}

TEST_CASE("Laplace transform of the polyexponential by moments")
{
    CHECK(laplace_moment_exact(lam(1, 2), Rational(1), 2, Rational(1)) == Rational(47, 36));
    CHECK(laplace_moment_exact(lam(1, 1), Rational(1), 1, Rational(1)) == Rational(3, 2));
    CHECK(laplace_moment_exact(lam(1, 3), Rational(0), 2, Rational(3)) == Rational(1, 9));
    for (long m = 1; m <= 4; ++m) {
        const LambdaParam l(Rational(1, m));
        for (auto x : {Rational(-1, 2), Rational(3)}) {
            CHECK(laplace_moment_exact(l, x, 3, Rational(2, 3)) == lerch_deg_exact(l, x, 3, Rational(2, 3)));
        }
    }
}
