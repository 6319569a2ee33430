#include "degen/zeta_gamma.hpp"

#include <cmath>
#include <numbers>

#include "degen/errors.hpp"
#include "degen/polyexp.hpp"
#include "degen/polynomial.hpp"
#include "degen/sequences.hpp"

namespace degen
{

namespace
{

long require_terminating(const LambdaParam& lambda, const char* what)
{
    auto m = lambda.terminating_order();
    if (!m) {
        throw NotTerminating(std::string(what) + " is only supported for lambda = 1/m (finite sum)");
    }
    return *m;
}

void require_gamma_domain(double lambda, double s)
{
    if (!(lambda > 0.0 && lambda < 1.0)) {
        throw DomainError("degenerate gamma requires 0 < lambda < 1");
    }
    if (!(s > 0.0 && s < 1.0 / lambda)) {
        throw DomainError("degenerate gamma requires 0 < s < 1/lambda");
    }
}

} // namespace

EvalResult gamma_deg(double lambda, double s, const QuadratureConfig& cfg)
{
    require_gamma_domain(lambda, s);
    const auto f = [=](double t) { return std::pow(t, s - 1.0) * std::pow(1.0 + lambda * t, -1.0 / lambda); };
    return adaptive_quadrature(f, 0.0, INFINITY, cfg);
}

EvalResult beta_quadrature(double a, double b, const QuadratureConfig& cfg)
{
    if (!(a > 0.0 && b > 0.0)) {
        throw DomainError("beta integral requires a, b > 0");
    }
    const auto left = [=](double u) { return std::pow(u, a - 1.0) * std::pow(1.0 - u, b - 1.0); };
    const auto right = [=](double u) { return std::pow(u, b - 1.0) * std::pow(1.0 - u, a - 1.0); };
    const EvalResult l = adaptive_quadrature(left, 0.0, 0.5, cfg);
    const EvalResult r = adaptive_quadrature(right, 0.0, 0.5, cfg);
    const EvalStatus st = l.ok() && r.ok() ? EvalStatus::converged : EvalStatus::max_depth_reached;
    return {l.value + r.value, l.error_bound + r.error_bound, l.terms_used + r.terms_used, st};
}

EvalResult gamma_deg_beta(double lambda, double s, const QuadratureConfig& cfg)
{
    require_gamma_domain(lambda, s);
    const double scale = std::pow(lambda, -s);
    EvalResult b = beta_quadrature(s, 1.0 / lambda - s, cfg);
    b.value *= scale;
    b.error_bound *= scale;
    return b;
}

std::optional<std::pair<Rational, int>> gamma_half_integer(const Rational& a)
{
    if (a.sign() <= 0) {
        return std::nullopt;
    }
    if (a.is_integer()) {
        return std::pair{factorial(static_cast<unsigned>(*a.to_long() - 1)), 0};
    }
    const Rational twice = a * Rational(2);
    if (!twice.is_integer()) {
        return std::nullopt;
    }
    // Gamma(n + 1/2) = (2n)! / (4^n n!) sqrt(pi)
    const unsigned n = static_cast<unsigned>((*twice.to_long() - 1) / 2);
    return std::pair{factorial(2 * n) / (pow(Rational(4), n) * factorial(n)), 1};
}

double BetaClosedForm::value() const
{
    return coefficient.to_double() * std::pow(std::numbers::pi, pi_power);
}

std::optional<BetaClosedForm> beta_closed_form(const Rational& a, const Rational& b)
{
    auto ga = gamma_half_integer(a);
    auto gb = gamma_half_integer(b);
    auto gab = gamma_half_integer(a + b);
    if (!ga || !gb || !gab) {
        return std::nullopt;
    }
    const int sqrt_pi = ga->second + gb->second - gab->second;
    return BetaClosedForm{ga->first * gb->first / gab->first, sqrt_pi / 2};
}

EvalResult gamma_deg_incomplete(const LambdaParam& lambda, double delta, double x, const QuadratureConfig& cfg)
{
    if (!(delta > 0.0)) {
        throw DomainError("incomplete degenerate gamma requires delta > 0");
    }
    if (!(x >= 0.0)) {
        throw DomainError("incomplete degenerate gamma requires x >= 0");
    }
    const double lam = lambda.as_double();
    if (lam > 0.0 && !lambda.terminating() && !(x < 1.0 / lam)) {
        throw DomainError("incomplete degenerate gamma requires x < 1/lambda for this lambda");
    }
    if (std::isinf(x)) {
        if (lam > 0.0) {
            throw DomainError("incomplete degenerate gamma diverges as x -> infinity for lambda > 0");
        }
        if (lam < 0.0 && !(delta < -1.0 / lam)) {
            throw DomainError("incomplete degenerate gamma diverges as x -> infinity unless delta < -1/lambda");
        }
    }
    const auto f = [&](double t) { return std::pow(t, delta - 1.0) * degexp(lambda, -t); };
    return adaptive_quadrature(f, 0.0, x, cfg);
}

Rational gamma_deg_incomplete_scaled_exact(const LambdaParam& lambda, const Rational& delta, const Rational& x)
{
    const long m = require_terminating(lambda, "exact incomplete degenerate gamma");
    if (delta.sign() <= 0) {
        throw DomainError("incomplete degenerate gamma requires delta > 0");
    }
    // (1 - lambda t)^m = sum_j C(m, j) (-lambda)^j t^j
    Rational acc(0);
    for (long j = 0; j <= m; ++j) {
        acc += binomial(m, j) * pow(-lambda.value() * x, j) / (Rational(j) + delta);
    }
    return acc;
}

EvalResult lerch_deg(const ZetaQuery& q)
{
    const long m = require_terminating(q.lambda, "degenerate Lerch zeta");
    if (!(q.delta > 0.0)) {
        throw DomainError("degenerate Lerch zeta requires delta > 0");
    }
    long double acc = 0.0L;
    long double xn = 1.0L;
    for (long n = 0; n <= m; ++n) {
        acc += unit_falling_factorial(static_cast<unsigned>(n), q.lambda) * xn *
               std::pow(static_cast<long double>(n) + q.delta, -static_cast<long double>(q.s));
        xn *= q.x;
    }
    return {static_cast<double>(acc), 0.0, m + 1, EvalStatus::terminated_exactly};
}

Rational lerch_deg_exact(const LambdaParam& lambda, const Rational& x, long s, const Rational& delta)
{
    const long m = require_terminating(lambda, "degenerate Lerch zeta");
    if (delta.sign() <= 0) {
        throw DomainError("degenerate Lerch zeta requires delta > 0");
    }
    Rational acc(0);
    for (long n = 0; n <= m; ++n) {
        acc += falling_factorial_deg(Rational(1), static_cast<unsigned>(n), lambda.value()) * pow(x, n) /
               pow(Rational(n) + delta, s);
    }
    return acc;
}

EvalResult hurwitz_deg(const LambdaParam& lambda, double s, double delta)
{
    if (!(s > 1.0)) {
        throw DomainError("degenerate Hurwitz zeta requires s > 1");
    }
    return lerch_deg({lambda, 1.0, s, delta});
}

Rational hurwitz_deg_exact(const LambdaParam& lambda, long s, const Rational& delta)
{
    if (s <= 1) {
        throw DomainError("degenerate Hurwitz zeta requires s > 1");
    }
    return lerch_deg_exact(lambda, Rational(1), s, delta);
}

EvalResult riemann_deg(const LambdaParam& lambda, double s)
{
    const long m = require_terminating(lambda, "degenerate Riemann zeta");
    if (!(s > 1.0)) {
        throw DomainError("degenerate Riemann zeta requires s > 1");
    }
    long double acc = 0.0L;
    for (long n = 1; n <= m + 1; ++n) {
        acc += unit_falling_factorial(static_cast<unsigned>(n - 1), lambda) *
               std::pow(static_cast<long double>(n), -static_cast<long double>(s));
    }
    return {static_cast<double>(acc), 0.0, m + 1, EvalStatus::terminated_exactly};
}

Rational riemann_deg_exact(const LambdaParam& lambda, long s)
{
    const long m = require_terminating(lambda, "degenerate Riemann zeta");
    if (s <= 1) {
        throw DomainError("degenerate Riemann zeta requires s > 1");
    }
    Rational acc(0);
    for (long n = 1; n <= m + 1; ++n) {
        acc += falling_factorial_deg(Rational(1), static_cast<unsigned>(n - 1), lambda.value()) / pow(Rational(n), s);
    }
    return acc;
}

Rational laplace_moment_exact(const LambdaParam& lambda, const Rational& x, long s, const Rational& delta)
{
    const long m = require_terminating(lambda, "Laplace relation");
    if (delta.sign() <= 0) {
        throw DomainError("polyexponential requires delta > 0");
    }
    // e_lambda(t x, delta | s) as a polynomial in t
    std::vector<Rational> coeffs;
    Rational base(1);
    for (long n = 0; n <= m; ++n) {
        if (n > 0) {
            base *= x * (Rational(1) - Rational(n - 1) * lambda.value()) / Rational(n);
        }
        coeffs.push_back(base / pow(Rational(n) + delta, s));
    }
    const RationalPolynomial p = RationalPolynomial::from_coeffs(std::move(coeffs));
    Rational acc(0);
    for (int n = 0; n <= p.degree(); ++n) {
        acc += p.coeff(static_cast<std::size_t>(n)) * factorial(static_cast<unsigned>(n));
    }
    return acc;
}

} // namespace degen
