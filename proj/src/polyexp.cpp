#include "degen/polyexp.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "degen/errors.hpp"
#include "degen/sequences.hpp"

namespace degen
{

namespace
{

constexpr long double kInf = std::numeric_limits<long double>::infinity();

// Ratio (1)_{n+1,lambda}/(1)_{n,lambda} = 1 - n lambda, exact for
// terminating lambda.
long double unit_step(long n, const LambdaParam& lambda)
{
    if (auto m = lambda.terminating_order()) {
        return static_cast<long double>(*m - n) / static_cast<long double>(*m);
    }
    return 1.0L - static_cast<long double>(n) * lambda.as_long_double();
}

bool exhausted_after(long n, const LambdaParam& lambda, long double x)
{
    if (x == 0.0L) {
        return true;
    }
    auto m = lambda.terminating_order();
    return m && n >= *m;
}

} // namespace

void require_series_domain(const LambdaParam& lambda, double x, double margin)
{
    if (lambda.terminating() || lambda.is_zero()) {
        return;
    }
    if (std::fabs(lambda.as_double() * x) > 1.0 - margin) {
        std::ostringstream os;
        os << "|lambda x| = " << std::fabs(lambda.as_double() * x)
           << " is outside the convergence radius (requires <= 1 - " << margin << ")";
        throw DomainError(os.str());
    }
}

double degexp(const LambdaParam& lambda, double t)
{
    return degexp_x(lambda, 1.0, t);
}

double degexp_x(const LambdaParam& lambda, double x, double t)
{
    if (lambda.is_zero()) {
        return std::exp(x * t);
    }
    const long double base = 1.0L + lambda.as_long_double() * t;
    if (x == 1.0) {
        if (auto r = lambda.integer_reciprocal()) {
            if (base == 0.0L && *r < 0) {
                throw DomainError("e_lambda(t) has a pole at 1 + lambda t = 0");
            }
            return static_cast<double>(std::pow(base, static_cast<long double>(*r)));
        }
    }
    if (base <= 0.0L) {
        throw DomainError("degenerate exponential requires 1 + lambda t > 0 for this lambda");
    }
    return static_cast<double>(std::pow(base, static_cast<long double>(x) / lambda.as_long_double()));
}

Rational degexp_exact(const LambdaParam& lambda, const Rational& t)
{
    auto r = lambda.integer_reciprocal();
    if (!r) {
        throw NotTerminating("exact degenerate exponential");
    }
    const Rational base = Rational(1) + lambda.value() * t;
    if (base.is_zero() && *r < 0) {
        throw DomainError("e_lambda(t) has a pole at 1 + lambda t = 0");
    }
    return pow(base, *r);
}

EvalResult polyexp_deg(const PolyexpQuery& q, const SeriesOptions& opt)
{
    if (!(q.delta > 0.0)) {
        throw DomainError("polyexponential requires delta > 0");
    }
    require_series_domain(q.lambda, q.x, opt.margin);

    const long double x = q.x;
    const long double delta = q.delta;
    const long double s = q.s;
    const long double lam = q.lambda.as_long_double();
    long double base = 1.0L; // (1)_{n,lambda} x^n / n!
    return sum_series(
        [&](long n) {
            const long double nn = static_cast<long double>(n);
            if (n > 0) {
                base *= x * unit_step(n - 1, q.lambda) / nn;
            }
            SeriesTerm t;
            t.value = base * std::pow(nn + delta, -s);
            if (exhausted_after(n, q.lambda, x)) {
                t.exhausted = true;
                return t;
            }
            if (q.lambda.terminating()) {
                t.tail_bound = kInf;
                return t;
            }
            // ((m + delta)/(m + 1 + delta))^s <= 1 for s >= 0; for s < 0 it
            // decreases in m, so its value at n bounds every later ratio.
            const long double env = s >= 0 ? 1.0L : std::pow((nn + 1.0L + delta) / (nn + delta), -s);
            const long double rho = std::fabs(x) * unit_ratio_envelope(n, lam) * env;
            t.tail_bound = geometric_tail(std::fabs(t.value), rho);
            return t;
        },
        opt.tol, opt.max_terms);
}

Rational polyexp_deg_exact(const LambdaParam& lambda, const Rational& x, const Rational& delta, long k)
{
    auto m = lambda.terminating_order();
    if (!m) {
        throw NotTerminating("exact polyexponential");
    }
    if (delta.sign() <= 0) {
        throw DomainError("polyexponential requires delta > 0");
    }
    Rational acc(0);
    Rational base(1);
    for (long n = 0; n <= *m; ++n) {
        if (n > 0) {
            base *= x * (Rational(1) - Rational(n - 1) * lambda.value()) / Rational(n);
        }
        acc += base * pow(Rational(n) + delta, -k);
    }
    return acc;
}

EvalResult ein_deg(const LambdaParam& lambda, double x, const SeriesOptions& opt)
{
    require_series_domain(lambda, x, opt.margin);
    const long double xl = x;
    const long double lam = lambda.as_long_double();
    long double base = 1.0L; // (1)_{k,lambda} (-x)^k / k!
    return sum_series(
        [&](long n) {
            const long k = n + 1;
            const long double kk = static_cast<long double>(k);
            base *= -xl * unit_step(k - 1, lambda) / kk;
            SeriesTerm t;
            t.value = -base / kk;
            if (exhausted_after(k, lambda, xl)) {
                t.exhausted = true;
                return t;
            }
            if (lambda.terminating()) {
                t.tail_bound = kInf;
                return t;
            }
            const long double rho = std::fabs(xl) * unit_ratio_envelope(k, lam);
            t.tail_bound = geometric_tail(std::fabs(t.value), rho);
            return t;
        },
        opt.tol, opt.max_terms);
}

Rational ein_deg_exact(const LambdaParam& lambda, const Rational& x)
{
    auto m = lambda.terminating_order();
    if (!m) {
        throw NotTerminating("exact Ein");
    }
    Rational acc(0);
    Rational base(1);
    for (long k = 1; k <= *m; ++k) {
        base *= -x * (Rational(1) - Rational(k - 1) * lambda.value()) / Rational(k);
        acc -= base / Rational(k);
    }
    return acc;
}

EvalResult classical_polyexp(double x, double a, double s, const SeriesOptions& opt)
{
    if (!(a > 0.0)) {
        throw DomainError("classical polyexponential requires a > 0");
    }
    const long double xl = x;
    const long double al = a;
    const long double sl = s;
    long double base = 1.0L; // x^n / n!
    return sum_series(
        [&](long n) {
            const long double nn = static_cast<long double>(n);
            if (n > 0) {
                base *= xl / nn;
            }
            SeriesTerm t;
            t.value = base * std::pow(nn + al, -sl);
            if (xl == 0.0L) {
                t.exhausted = true;
                return t;
            }
            const long double env = sl >= 0 ? 1.0L : std::pow((nn + 1.0L + al) / (nn + al), -sl);
            const long double rho = std::fabs(xl) / (nn + 1.0L) * env;
            t.tail_bound = geometric_tail(std::fabs(t.value), rho);
            return t;
        },
        opt.tol, opt.max_terms);
}

EvalResult degexp_abs_series(const LambdaParam& lambda, double x, const SeriesOptions& opt)
{
    require_series_domain(lambda, x, opt.margin);
    const long double ax = std::fabs(x);
    const long double lam = lambda.as_long_double();
    long double base = 1.0L;
    return sum_series(
        [&](long n) {
            if (n > 0) {
                base *= ax * std::fabs(unit_step(n - 1, lambda)) / static_cast<long double>(n);
            }
            SeriesTerm t;
            t.value = base;
            if (exhausted_after(n, lambda, ax)) {
                t.exhausted = true;
                return t;
            }
            if (lambda.terminating()) {
                t.tail_bound = kInf;
                return t;
            }
            t.tail_bound = geometric_tail(base, ax * unit_ratio_envelope(n, lam));
            return t;
        },
        opt.tol, opt.max_terms);
}

} // namespace degen
