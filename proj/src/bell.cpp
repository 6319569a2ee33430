#include "degen/bell.hpp"

#include <cmath>
#include <limits>

#include "degen/errors.hpp"
#include "degen/power_series.hpp"
#include "degen/sequences.hpp"

namespace degen
{

namespace
{

RationalPolynomial one_plus_lambda_x(const Rational& lambda)
{
    return RationalPolynomial::from_coeffs({Rational(1), lambda});
}

long double unit_step(long k, const LambdaParam& lambda)
{
    if (auto m = lambda.terminating_order()) {
        return static_cast<long double>(*m - k) / static_cast<long double>(*m);
    }
    return 1.0L - static_cast<long double>(k) * lambda.as_long_double();
}

} // namespace

RationalFunction bell_deg_from_stirling(unsigned n, const Rational& lambda, const std::vector<Rational>& stirling_row)
{
    // Over the common denominator (1 + lambda x)^n:
    //   sum_k (1)_{k,lambda} S_2(n, k) x^k (1 + lambda x)^{n-k}
    const RationalPolynomial d = one_plus_lambda_x(lambda);
    const RationalPolynomial x = RationalPolynomial::variable();
    RationalPolynomial num;
    for (unsigned k = 0; k <= n && k < stirling_row.size(); ++k) {
        if (stirling_row[k].is_zero()) {
            continue;
        }
        const Rational c = falling_factorial_deg(Rational(1), k, lambda) * stirling_row[k];
        num = num + pow(x, k) * pow(d, n - k) * c;
    }
    return RationalFunction(num, pow(d, n));
}

BellRatFun bell_deg(unsigned n, const Rational& lambda)
{
    return {n, lambda, bell_deg_from_stirling(n, lambda, stirling2_triangle(n)[n])};
}

Rational bell_deg_value(unsigned n, const Rational& lambda, const Rational& x)
{
    const Rational d = Rational(1) + lambda * x;
    if (d.is_zero()) {
        throw DomainError("Bel_{n,lambda}(x) has a pole at 1 + lambda x = 0");
    }
    const Rational u = x / d;
    const auto row = stirling2_triangle(n)[n];
    Rational acc(0);
    Rational uk(1);
    for (unsigned k = 0; k <= n; ++k) {
        acc += falling_factorial_deg(Rational(1), k, lambda) * uk * row[k];
        uk *= u;
    }
    return acc;
}

std::vector<Rational> bell_deg_values(unsigned n_max, const Rational& lambda, const Rational& x)
{
    const Rational d = Rational(1) + lambda * x;
    if (d.is_zero()) {
        throw DomainError("Bel_{n,lambda}(x) has a pole at 1 + lambda x = 0");
    }
    const Rational u = x / d;
    // (1)_{k,lambda} u^k, shared by every row
    std::vector<Rational> w{Rational(1)};
    for (unsigned k = 1; k <= n_max; ++k) {
        w.push_back(w.back() * (Rational(1) - Rational(static_cast<long>(k - 1)) * lambda) * u);
    }
    const auto tri = stirling2_triangle(n_max);
    std::vector<Rational> out;
    out.reserve(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) {
        Rational acc(0);
        for (unsigned k = 0; k <= n; ++k) {
            acc += w[k] * tri[n][k];
        }
        out.push_back(acc);
    }
    return out;
}

std::vector<RationalFunction> bell_deg_egf(const Rational& lambda, unsigned n_max)
{
    if (lambda.is_zero()) {
        throw DomainError("generating-function route needs lambda != 0");
    }
    const RationalFunction w(RationalPolynomial::monomial(lambda, 1), one_plus_lambda_x(lambda));
    std::vector<RationalFunction> f{RationalFunction(1)};
    for (unsigned k = 1; k <= n_max; ++k) {
        f.push_back(w * RationalFunction(Rational(1) / factorial(k)));
    }
    const PowerSeries<RationalFunction> g =
        ps_unit_power(PowerSeries<RationalFunction>(n_max, std::move(f)), Rational(1) / lambda);
    std::vector<RationalFunction> out;
    for (unsigned k = 0; k <= n_max; ++k) {
        out.push_back(g[k] * RationalFunction(factorial(k)));
    }
    return out;
}

std::vector<Rational> bell_egf_terminating(const LambdaParam& lambda, const Rational& x, unsigned n_max)
{
    auto m = lambda.terminating_order();
    if (!m) {
        throw NotTerminating("exact generating-function expansion");
    }
    const Rational lx = lambda.value() * x;
    const Rational d = Rational(1) + lx;
    if (d.is_zero()) {
        throw DomainError("generating function requires 1 + lambda x != 0");
    }
    // (1 + lambda x e^t)^m = sum_j C(m, j) (lambda x)^j e^{jt}
    PowerSeries<Rational> acc(n_max);
    for (long j = 0; j <= *m; ++j) {
        acc = acc + exp_series(n_max, Rational(j)) * (binomial(*m, j) * pow(lx, j));
    }
    const Rational scale = Rational(1) / pow(d, *m);
    std::vector<Rational> out;
    for (unsigned k = 0; k <= n_max; ++k) {
        out.push_back(acc[k] * scale * factorial(k));
    }
    return out;
}

EvalResult bell_deg_dobinski(unsigned n, const LambdaParam& lambda, double x, const SeriesOptions& opt)
{
    require_series_domain(lambda, x, opt.margin);
    if (!(1.0 + lambda.as_double() * x > 0.0)) {
        throw DomainError("Dobinski evaluation requires 1 + lambda x > 0");
    }
    const double inv = 1.0 / degexp(lambda, x);
    const long double xl = x;
    const long double lam = lambda.as_long_double();
    const auto m = lambda.terminating_order();
    long double base = 1.0L; // (1)_{k,lambda} x^k / k!
    EvalResult r = sum_series(
        [&](long k) {
            const long double kk = static_cast<long double>(k);
            if (k > 0) {
                base *= xl * unit_step(k - 1, lambda) / kk;
            }
            SeriesTerm t;
            t.value = base * std::pow(kk, static_cast<long double>(n));
            if (xl == 0.0L || (m && k >= *m)) {
                t.exhausted = true;
                return t;
            }
            if (k == 0 || m) {
                t.tail_bound = std::numeric_limits<long double>::infinity();
                return t;
            }
            const long double env = std::pow((kk + 1.0L) / kk, static_cast<long double>(n));
            t.tail_bound = geometric_tail(std::fabs(t.value), std::fabs(xl) * unit_ratio_envelope(k, lam) * env);
            return t;
        },
        opt.tol / std::fabs(inv), opt.max_terms);
    r.value *= inv;
    r.error_bound *= std::fabs(inv);
    return r;
}

PartialBellPoly bell_partial(unsigned n, const Rational& lambda)
{
    const auto row = stirling2_deg_triangle(n)[n];
    std::vector<Rational> c;
    for (unsigned k = 0; k <= n; ++k) {
        c.push_back(row[k](lambda));
    }
    return {n, lambda, RationalPolynomial::from_coeffs(std::move(c))};
}

Polynomial<RationalPolynomial> bell_partial_in_lambda(unsigned n)
{
    const auto row = stirling2_deg_triangle(n)[n];
    return Polynomial<RationalPolynomial>::from_coeffs(std::vector<RationalPolynomial>(row.begin(), row.begin() + n + 1));
}

EvalResult bell_partial_dobinski(unsigned n, const LambdaParam& lambda, double x, const SeriesOptions& opt)
{
    const long double xl = x;
    const long double ax = std::fabs(xl);
    const long double lam = lambda.as_long_double();
    // |(k)_{n,lambda}| <= (k + c)^n with c = (n - 1)|lambda|
    const long double c = n == 0 ? 0.0L : static_cast<long double>(n - 1) * std::fabs(lam);
    const long double nl = static_cast<long double>(n);
    const double scale = std::exp(-x);
    long double base = 1.0L; // x^k / k!
    EvalResult r = sum_series(
        [&](long k) {
            const long double kk = static_cast<long double>(k);
            if (k > 0) {
                base *= xl / kk;
            }
            long double ff = 1.0L;
            for (unsigned j = 0; j < n; ++j) {
                ff *= kk - static_cast<long double>(j) * lam;
            }
            SeriesTerm t;
            t.value = ff * base;
            if (xl == 0.0L) {
                t.exhausted = true;
                return t;
            }
            // sum_{i>k} b_i <= b_{k+1}/(1 - rho) with b_i = (i + c)^n |x|^i / i!
            const long double k1 = kk + 1.0L;
            const long double rho = ax / (k1 + 1.0L) * std::pow((k1 + 1.0L + c) / (k1 + c), nl);
            if (!(rho < 1.0L)) {
                t.tail_bound = std::numeric_limits<long double>::infinity();
                return t;
            }
            const long double log_b = nl * std::log(k1 + c) + k1 * std::log(ax) - std::lgamma(k1 + 1.0L);
            t.tail_bound = std::exp(log_b) / (1.0L - rho);
            return t;
        },
        opt.tol / scale, opt.max_terms);
    r.value *= scale;
    r.error_bound *= scale;
    return r;
}

RationalPolynomial bell_classical(unsigned n)
{
    const auto row = stirling2_triangle(n)[n];
    return RationalPolynomial::from_coeffs(std::vector<Rational>(row.begin(), row.begin() + n + 1));
}

} // namespace degen
