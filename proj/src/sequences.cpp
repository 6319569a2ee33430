#include "degen/sequences.hpp"

namespace degen
{

Rational falling_factorial_deg(const Rational& x, unsigned n, const Rational& lambda)
{
    Rational acc(1);
    for (unsigned j = 0; j < n; ++j) {
        acc *= x - Rational(static_cast<long>(j)) * lambda;
        if (acc.is_zero()) {
            break;
        }
    }
    return acc;
}

Rational falling_factorial(const Rational& x, unsigned n)
{
    return falling_factorial_deg(x, n, Rational(1));
}

RationalPolynomial falling_factorial_deg_in_lambda(const Rational& x, unsigned n)
{
    RationalPolynomial acc(Rational(1));
    for (unsigned j = 0; j < n; ++j) {
        acc *= RationalPolynomial::from_coeffs({x, Rational(-static_cast<long>(j))});
    }
    return acc;
}

long double unit_falling_factorial(unsigned n, const LambdaParam& lambda)
{
    if (auto m = lambda.terminating_order()) {
        if (static_cast<long>(n) > *m) {
            return 0.0L;
        }
        // lambda = 1/m: each factor is (m - j)/m, computed without rounding
        // the reciprocal first.
        long double acc = 1.0L;
        const auto md = static_cast<long double>(*m);
        for (unsigned j = 0; j < n; ++j) {
            acc *= (md - static_cast<long double>(j)) / md;
        }
        return acc;
    }
    long double acc = 1.0L;
    const long double l = lambda.as_long_double();
    for (unsigned j = 0; j < n; ++j) {
        acc *= 1.0L - static_cast<long double>(j) * l;
    }
    return acc;
}

std::vector<std::vector<Rational>> stirling2_triangle(unsigned n_max)
{
    std::vector<std::vector<Rational>> rows(n_max + 1);
    rows[0] = {Rational(1)};
    for (unsigned n = 0; n < n_max; ++n) {
        auto& next = rows[n + 1];
        next.assign(n + 2, Rational(0));
        for (unsigned k = 1; k <= n + 1; ++k) {
            Rational v = rows[n][k - 1];
            if (k <= n) {
                v += Rational(static_cast<long>(k)) * rows[n][k];
            }
            next[k] = v;
        }
    }
    return rows;
}

Rational stirling2(unsigned n, unsigned k)
{
    if (k > n) {
        return Rational(0);
    }
    return stirling2_triangle(n)[n][k];
}

std::vector<std::vector<RationalPolynomial>> stirling2_deg_triangle(unsigned n_max)
{
    std::vector<std::vector<RationalPolynomial>> rows(n_max + 1);
    rows[0] = {RationalPolynomial(Rational(1))};
    for (unsigned n = 0; n < n_max; ++n) {
        auto& next = rows[n + 1];
        next.assign(n + 2, RationalPolynomial{});
        for (unsigned k = 1; k <= n + 1; ++k) {
            RationalPolynomial v = rows[n][k - 1];
            if (k <= n) {
                // (k - n lambda)
                const auto factor = RationalPolynomial::from_coeffs(
                    {Rational(static_cast<long>(k)), Rational(-static_cast<long>(n))});
                v += factor * rows[n][k];
            }
            next[k] = std::move(v);
        }
    }
    return rows;
}

RationalPolynomial stirling2_deg(unsigned n, unsigned k)
{
    if (k > n) {
        return {};
    }
    return stirling2_deg_triangle(n)[n][k];
}

RationalPolynomial stirling2_deg_oracle(unsigned n, unsigned k)
{
    if (k > n) {
        return {};
    }
    std::vector<RationalPolynomial> s(n + 1);
    for (unsigned j = 0; j <= n; ++j) {
        const Rational xj(static_cast<long>(j));
        RationalPolynomial rhs = falling_factorial_deg_in_lambda(xj, n);
        for (unsigned i = 0; i < j; ++i) {
            rhs -= s[i] * falling_factorial(xj, i);
        }
        s[j] = rhs * (Rational(1) / factorial(j));
    }
    return s[k];
}

BernoulliTable bernoulli_deg(unsigned n_max)
{
    std::vector<RationalPolynomial> f(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) {
        f[n] = falling_factorial_deg_in_lambda(Rational(1), n + 1) * (Rational(1) / factorial(n + 1));
    }
    const auto r = ps_recip(PowerSeries<RationalPolynomial>(n_max, std::move(f)));
    std::vector<RationalPolynomial> beta(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n) {
        beta[n] = r[n] * factorial(n);
    }
    return BernoulliTable(std::move(beta));
}

PowerSeries<RationalPolynomial> degexp_series_in_x(std::size_t order, const Rational& lambda)
{
    std::vector<RationalPolynomial> c(order + 1);
    RationalPolynomial ff(Rational(1));
    for (std::size_t k = 0; k <= order; ++k) {
        c[k] = ff * (Rational(1) / factorial(static_cast<unsigned>(k)));
        ff *= RationalPolynomial::from_coeffs({-Rational(static_cast<long>(k)) * lambda, Rational(1)});
    }
    return PowerSeries<RationalPolynomial>(order, std::move(c));
}

RationalPolynomial bernoulli_deg_poly(unsigned n, const Rational& lambda)
{
    const BernoulliTable table = bernoulli_deg(n);
    std::vector<RationalPolynomial> recip(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        // beta_k/k! is the t^k coefficient of t/(e_lambda(t) - 1).
        recip[k] = RationalPolynomial(table.value(k, lambda) / factorial(k));
    }
    const auto product = ps_mul(PowerSeries<RationalPolynomial>(n, std::move(recip)), degexp_series_in_x(n, lambda));
    return product[n] * factorial(n);
}

Rational bernoulli_classical(unsigned n)
{
    return bernoulli_deg(n).value(n, Rational(0));
}

Rational power_sum_deg(unsigned n, unsigned p, const Rational& lambda)
{
    Rational acc(0);
    for (unsigned k = 0; k < n; ++k) {
        acc += falling_factorial_deg(Rational(static_cast<long>(k)), p, lambda);
    }
    return acc;
}

} // namespace degen
