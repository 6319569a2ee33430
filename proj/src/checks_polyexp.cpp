#include "check_support.hpp"
#include "degen/checks.hpp"

#include <cmath>
#include <tuple>

#include "degen/bell.hpp"
#include "degen/polyexp.hpp"
#include "degen/quadrature.hpp"
#include "degen/sequences.hpp"

namespace degen::checks
{

namespace
{

using LxPoly = Polynomial<RationalPolynomial>;

const SeriesOptions kTight{1e-14, 200000, 1e-3};

void reject_minus_one(const Rational& lambda)
{
    if (lambda == Rational(-1)) {
        throw DomainError("lambda = -1 is excluded");
    }
}

double value_of(const PolyexpQuery& q)
{
    return polyexp_deg(q, kTight).checked().value;
}

Params lambda_x(const Rational& lambda, const Rational& x)
{
    return {{"lambda", lambda.str()}, {"x", x.str()}};
}

std::vector<Rational> x_samples(const CheckContext& ctx, std::string_view id, std::vector<Rational> xs)
{
    auto rng = rng_for(ctx, id);
    Rational r(0);
    while (r.is_zero()) {
        r = draw_rational(rng, 7, 5);
    }
    xs.push_back(r);
    return xs;
}

} // namespace

IdentityReport polyexp_order_one(const CheckContext& ctx)
{
    ReportBuilder b("eq15");
    const Rational eps = exact_perturbation(ctx);
    const auto exact_x = x_samples(ctx, "eq15", {Rational(1), Rational(2), Rational(-1, 2)});
    const std::vector<Rational> numeric_x{Rational(1, 2), Rational(1), Rational(-2)};
    const auto lambdas = lambdas_or(ctx, {Rational(1), Rational(1, 2), Rational(1, 3), Rational(1, 4),
                                          Rational(3, 10), Rational(-1, 4), Rational(0)});
    for (const Rational& lambda : lambdas) {
        const LambdaParam lp(lambda);
        for (const Rational& x : lp.terminating() ? exact_x : numeric_x) {
            const Params p = lambda_x(lambda, x);
            attempt(b, p, [&] {
                reject_minus_one(lambda);
                const Rational k = Rational(1) / (Rational(1) + lambda);
                if (lp.terminating()) {
                    const Rational e = degexp_exact(lp, x);
                    const Rational rhs = k * (e - 1) / x + (lambda + eps) * k * e;
                    b.exact(p, polyexp_deg_exact(lp, x, 1, 1) - rhs);
                    return;
                }
                const double xd = x.to_double();
                const double lhs = value_of({lp, xd, 1.0, 1.0});
                const double e = degexp(lp, xd);
                const double kd = k.to_double();
                const double rhs = kd * (e - 1.0) / xd + (lambda + eps).to_double() * kd * e;
                b.numeric(p, std::abs(lhs - rhs), kSeriesTolerance);
            });
        }
    }
    return b.finish();
}

IdentityReport ein_relation(const CheckContext& ctx)
{
    ReportBuilder b("eq23");
    const Rational eps = exact_perturbation(ctx);
    const auto exact_x = x_samples(ctx, "eq23", {Rational(1), Rational(2), Rational(-1, 2)});
    const std::vector<Rational> numeric_x{Rational(1, 2), Rational(1), Rational(-2)};
    const auto lambdas = lambdas_or(ctx, {Rational(1), Rational(1, 2), Rational(1, 3), Rational(1, 4),
                                          Rational(3, 10), Rational(-1, 4), Rational(0)});
    for (const Rational& lambda : lambdas) {
        const LambdaParam lp(lambda);
        for (const Rational& x : lp.terminating() ? exact_x : numeric_x) {
            const Params p = lambda_x(lambda, x);
            attempt(b, p, [&] {
                reject_minus_one(lambda);
                const Rational one_l = Rational(1) + lambda;
                if (lp.terminating()) {
                    const Rational e = degexp_exact(lp, -x);
                    const Rational rhs = x * one_l * polyexp_deg_exact(lp, -x, 1, 2) + (lambda + eps) / one_l * (e - 1) -
                                         x * lambda * lambda / one_l * e;
                    b.exact(p, ein_deg_exact(lp, x) - rhs);
                    return;
                }
                const double xd = x.to_double();
                const double ld = lambda.to_double();
                const double e = degexp(lp, -xd);
                const double rhs = xd * (1.0 + ld) * value_of({lp, -xd, 1.0, 2.0}) +
                                   (lambda + eps).to_double() / (1.0 + ld) * (e - 1.0) - xd * ld * ld / (1.0 + ld) * e;
                b.numeric(p, std::abs(ein_deg(lp, xd, kTight).checked().value - rhs), kSeriesTolerance);
            });
        }
    }
    return b.finish();
}

IdentityReport polyexp_order_two_integral(const CheckContext& ctx)
{
    ReportBuilder b("lemma2");
    const Rational eps = exact_perturbation(ctx);
    std::vector<std::pair<Rational, Rational>> points{{Rational(1, 2), Rational(1, 2)},
                                                      {Rational(1), Rational(1)},
                                                      {Rational(1, 3), Rational(2)},
                                                      {Rational(3, 10), Rational(1)},
                                                      {Rational(-1, 4), Rational(2)}};
    if (ctx.lambda) {
        points = {{*ctx.lambda, Rational(1, 2)}, {*ctx.lambda, Rational(1)}};
    }
    for (const auto& [lambda, x] : points) {
        const Params p = lambda_x(lambda, x);
        attempt(b, p, [&] {
            reject_minus_one(lambda);
            const LambdaParam lp(lambda);
            const double xd = x.to_double();
            const double ld = lambda.to_double();
            const double lhs = value_of({lp, xd, 1.0, 2.0});
            const double integral =
                adaptive_quadrature([&](double t) { return (degexp(lp, t) - 1.0) / t; }, 0.0, xd).checked().value;
            const double e = degexp(lp, xd);
            const double k = 1.0 / (1.0 + ld);
            const double rhs = k * integral / xd + ld * k * k * (e - 1.0) / xd +
                               std::pow((lambda + eps).to_double() * k, 2) * e;
            b.numeric(p, std::abs(lhs - rhs), kQuadratureTolerance);
        });
    }
    return b.finish();
}

IdentityReport polyexp_iterated_integral(const CheckContext& ctx)
{
    ReportBuilder b("iterated-integral");
    const double eps = ctx.perturb;
    // lambda, x, delta, p
    std::vector<std::tuple<Rational, Rational, Rational, long>> points{
        {Rational(1, 2), Rational(1, 2), Rational(1), 1},
        {Rational(1), Rational(1, 2), Rational(2), 2},
        {Rational(3, 10), Rational(1), Rational(3, 2), 1},
        {Rational(1, 3), Rational(2), Rational(2), 1},
        {Rational(-1, 4), Rational(1), Rational(1, 2), 2},
    };
    if (ctx.lambda) {
        points = {{*ctx.lambda, Rational(1, 2), Rational(1), 1}, {*ctx.lambda, Rational(1, 2), Rational(3, 2), 2}};
    }
    for (const auto& [lambda, x, delta, order] : points) {
        Params p = lambda_x(lambda, x);
        p.emplace_back("delta", delta.str());
        p.emplace_back("p", std::to_string(order));
        attempt(b, p, [&] {
            const LambdaParam lp(lambda);
            const double xd = x.to_double();
            const double dd = delta.to_double();
            const double pd = static_cast<double>(order);
            require_series_domain(lp, xd, kTight.margin);
            const double lhs = value_of({lp, xd, dd, pd + 1.0});
            const double integral = adaptive_quadrature(
                                        [&](double t) { return std::pow(t, dd - 1.0) * value_of({lp, t, dd, pd}); },
                                        0.0, xd)
                                        .checked()
                                        .value;
            const double rhs = std::pow(xd, -dd - eps) * integral;
            b.numeric(p, std::abs(lhs - rhs), kQuadratureTolerance);
        });
    }
    return b.finish();
}

namespace
{

Rational operator_gap(unsigned p, unsigned delta, unsigned n_max, unsigned series_order, const CheckContext& ctx)
{
    const Rational eps = exact_perturbation(ctx);
    const Rational d(static_cast<long>(delta));
    std::vector<RationalPolynomial> coeffs(n_max + delta);
    std::vector<RationalPolynomial> target(n_max + delta);
    for (unsigned n = 0; n <= n_max; ++n) {
        const RationalPolynomial c = falling_factorial_deg_in_lambda(Rational(1), n) * (Rational(1) / factorial(n));
        coeffs[n + delta - 1] =
            c * (Rational(1) / pow(Rational(static_cast<long>(n)) + d + eps, static_cast<long>(series_order)));
        target[n + delta - 1] = c;
    }
    LxPoly f = LxPoly::from_coeffs(std::move(coeffs));
    const LxPoly x = LxPoly::variable();
    for (unsigned i = 0; i < p; ++i) {
        f = (x * f).derivative();
    }
    LxPoly diff = f - LxPoly::from_coeffs(std::move(target));
    if (ctx.lambda) {
        diff = diff.map_coeffs(
            [&](const RationalPolynomial& c, std::size_t) { return RationalPolynomial(c(*ctx.lambda)); });
    }
    return residual_of(diff);
}

Params operator_params(unsigned p, unsigned delta, unsigned n_max, const CheckContext& ctx)
{
    Params params{{"p", std::to_string(p)}, {"delta", std::to_string(delta)}, {"order", "0.." + std::to_string(n_max)}};
    if (ctx.lambda) {
        params.emplace_back("lambda", ctx.lambda->str());
    }
    return params;
}

} // namespace

IdentityReport polyexp_operator_case(unsigned p, unsigned delta, unsigned n_max, unsigned series_order,
                                     const CheckContext& ctx)
{
    ReportBuilder b("thm3-operator");
    b.exact(operator_params(p, delta, n_max, ctx), operator_gap(p, delta, n_max, series_order, ctx));
    return b.finish();
}

IdentityReport polyexp_operator(const CheckContext& ctx)
{
    ReportBuilder b("thm3-operator");
    for (const auto& [p, delta, n_max] : {std::tuple{1u, 1u, 10u}, {3u, 2u, 12u}, {2u, 3u, 10u}, {4u, 1u, 8u}}) {
        b.exact(operator_params(p, delta, n_max, ctx), operator_gap(p, delta, n_max, p, ctx));
    }
    return b.finish();
}

IdentityReport polyexp_generating_function(const CheckContext& ctx)
{
    ReportBuilder b("thm3-genfunc");
    const double eps = ctx.perturb;
    // lambda, x, delta, z
    std::vector<std::tuple<Rational, double, double, double>> points{
        {Rational(1), 1.0, 1.0, 0.5},       {Rational(1, 3), 1.0, 1.0, 0.0},
        {Rational(1, 2), 1.0, 2.0, 1.0},    {Rational(3, 10), 1.0, 1.5, 0.5},
        {Rational(-1, 4), 2.0, 1.0, -0.5},
    };
    if (ctx.lambda) {
        for (auto& pt : points) {
            std::get<0>(pt) = *ctx.lambda;
        }
    }
    for (const auto& [lambda, x, delta, z] : points) {
        const Params p{{"lambda", lambda.str()}, {"x", fmt(x)}, {"delta", fmt(delta)}, {"z", fmt(z)}};
        attempt(b, p, [&] {
            if (!(std::abs(z) < delta)) {
                throw DomainError("requires |z| < delta");
            }
            const LambdaParam lp(lambda);
            const double q = std::abs(z) / delta;
            const EvalResult majorant = degexp_abs_series(lp, x, kTight).checked();
            const double a = majorant.value + majorant.error_bound;
            double lhs = 0.0;
            double zk = 1.0;
            long k = 0;
            for (;; ++k) {
                lhs += value_of({lp, x, delta, static_cast<double>(k)}) * zk;
                zk *= z;
                if (q == 0.0 || a * std::pow(q, k + 1) / (1.0 - q) <= 1e-13) {
                    break;
                }
                if (k > 4000) {
                    throw MaxTermsExceeded("generating function in z did not converge");
                }
            }
            const double rhs = degexp(lp, x) + z * (1.0 + eps) * value_of({lp, x, delta - z, 1.0});
            Params full = p;
            full.emplace_back("terms", std::to_string(k + 1));
            b.numeric(std::move(full), std::abs(lhs - rhs), kQuadratureTolerance);
        });
    }
    return b.finish();
}

IdentityReport polyexp_taylor_shift(const CheckContext& ctx)
{
    ReportBuilder b("thm4");
    const double eps = ctx.perturb;
    // lambda, x, delta, z, s, M
    std::vector<std::tuple<Rational, double, double, double, Rational, long>> points{
        {Rational(1), 1.0, 2.0, 0.5, Rational(1), 40},
        {Rational(1), 1.0, 2.0, 0.5, Rational(2), 40},
        {Rational(1, 2), 1.0, 2.0, 0.0, Rational(3, 2), 40},
        {Rational(3, 10), 1.0, 2.0, 0.5, Rational(1, 2), 60},
        {Rational(1, 3), 2.0, 3.0, -1.0, Rational(5, 2), 60},
    };
    if (ctx.lambda) {
        for (auto& pt : points) {
            std::get<0>(pt) = *ctx.lambda;
        }
    }
    for (const auto& [lambda, x, delta, z, s, terms] : points) {
        const Params p{{"lambda", lambda.str()}, {"x", fmt(x)},   {"delta", fmt(delta)},
                       {"z", fmt(z)},            {"s", s.str()}, {"M", std::to_string(terms)}};
        attempt(b, p, [&] {
            if (!(std::abs(z) < delta)) {
                throw DomainError("requires |z| < delta");
            }
            if (s.sign() <= 0) {
                throw DomainError("requires s > 0");
            }
            const LambdaParam lp(lambda);
            const double sd = s.to_double();
            const double zp = z * (1.0 + eps);
            // c_m = s (s+1) ... (s+m-1) / m!
            Rational c(1);
            Rational binomial_gap(0);
            double rhs = 0.0;
            double last = 0.0;
            double zm = 1.0;
            for (long m = 0; m <= terms; ++m) {
                if (m > 0) {
                    c = c * (s + Rational(m - 1)) / Rational(m);
                    zm *= zp;
                }
                if (s.is_integer()) {
                    const long si = *s.to_long();
                    binomial_gap = std::max(binomial_gap, abs(c - binomial(si + m - 1, si - 1)));
                }
                last = c.to_double() * value_of({lp, x, delta, static_cast<double>(m) + sd}) * zm;
                rhs += last;
            }
            if (!binomial_gap.is_zero()) {
                b.failure(p, "rising-factorial coefficient differs from the binomial");
                return;
            }
            const double lhs = value_of({lp, x, delta - z, sd});
            Params full = p;
            full.emplace_back("lastTerm", fmt(std::abs(last)));
            b.numeric(std::move(full), std::abs(lhs - rhs), kQuadratureTolerance);
        });
    }
    return b.finish();
}

IdentityReport polyexp_negative_order(const CheckContext& ctx)
{
    ReportBuilder b("thm14");
    const Rational eps = exact_perturbation(ctx);
    auto rng = rng_for(ctx, "thm14");
    Rational rx(0);
    while (rx.is_zero()) {
        rx = draw_rational(rng, 7, 5);
    }
    // lambda, x, delta, p
    std::vector<std::tuple<Rational, Rational, Rational, long>> points{
        {Rational(1), Rational(1), Rational(1), 1},
        {Rational(1, 2), Rational(1), Rational(2), 2},
        {Rational(1, 3), Rational(-1, 2), Rational(3, 2), 3},
        {Rational(1, 4), rx, Rational(1), 4},
        {Rational(1, 2), Rational(2), Rational(1), 0},
        {Rational(3, 10), Rational(1, 2), Rational(3, 2), 3},
        {Rational(-1, 4), Rational(1), Rational(2), 2},
    };
    if (ctx.lambda) {
        for (auto& pt : points) {
            std::get<0>(pt) = *ctx.lambda;
        }
    }
    for (const auto& [lambda, x, delta, order] : points) {
        Params p = lambda_x(lambda, x);
        p.emplace_back("delta", delta.str());
        p.emplace_back("p", std::to_string(order));
        attempt(b, p, [&] {
            const LambdaParam lp(lambda);
            std::vector<Rational> bell;
            for (long k = 0; k <= order + 1; ++k) {
                bell.push_back(bell_deg_value(static_cast<unsigned>(k), lambda, x));
            }
            Rational sum(0);
            for (long k = 0; k <= order; ++k) {
                sum += binomial(order, k) * pow(delta + eps, order - k) * bell[k];
            }
            Rational refinement(0);
            if (delta == Rational(1) && !x.is_zero()) {
                for (long l = 0; l <= order; ++l) {
                    refinement += binomial(order, l) * bell[l + 1];
                }
                refinement = bell[order + 1] / x + lambda * refinement;
            }
            if (lp.terminating()) {
                const Rational e = degexp_exact(lp, x);
                const Rational lhs = polyexp_deg_exact(lp, x, delta, -order);
                Rational gap = abs(lhs - e * sum);
                if (delta == Rational(1) && !x.is_zero()) {
                    gap += abs(lhs - e * refinement);
                }
                b.exact(p, gap);
                return;
            }
            const double xd = x.to_double();
            const double e = degexp(lp, xd);
            const double lhs = value_of({lp, xd, delta.to_double(), -static_cast<double>(order)});
            double gap = std::abs(lhs - e * sum.to_double());
            if (delta == Rational(1) && !x.is_zero()) {
                gap = std::max(gap, std::abs(lhs - e * refinement.to_double()));
            }
            b.numeric(p, gap, kSeriesTolerance);
        });
    }
    return b.finish();
}

IdentityReport lambda_limit(const CheckContext& ctx)
{
    ReportBuilder b("lambda-limit");
    const double eps = ctx.perturb;
    constexpr int steps = 10;

    // Residuals at lambda = 2^-1 .. 2^-steps must fall like lambda.
    auto judge = [&](Params p, const std::vector<double>& r) {
        bool decreasing = true;
        for (std::size_t j = 1; j < r.size(); ++j) {
            decreasing = decreasing && r[j] < r[j - 1];
        }
        const double ratio = r[steps - 1] / r[steps - 2];
        // observed slope d(residual)/d(lambda) over the last halving
        const double last_lambda = std::ldexp(1.0, -steps);
        const double slope = (r[steps - 2] - r[steps - 1]) / last_lambda;
        p.emplace_back("ratio", fmt(ratio));
        if (!decreasing) {
            b.failure(std::move(p), "residuals are not strictly decreasing");
        } else if (!(ratio >= 0.4 && ratio <= 0.6)) {
            b.failure(std::move(p), "residual ratio is not near 1/2");
        } else if (!(r.back() <= 10.0 * slope * last_lambda)) {
            b.failure(std::move(p), "residual exceeds the linear trend");
        } else {
            b.numeric(std::move(p), r.back(), 1e-2);
        }
    };

    for (const double x : {0.5, 1.0, 2.0}) {
        Params p{{"function", "e_lambda(x,1|1)"}, {"x", fmt(x)}, {"lambda", "2^-1..2^-10"}};
        attempt(b, p, [&] {
            const double limit = std::expm1(x) / x + eps;
            std::vector<double> r;
            for (int j = 1; j <= steps; ++j) {
                const LambdaParam lp(Rational(1, 1L << j));
                r.push_back(std::abs(value_of({lp, x, 1.0, 1.0}) - limit));
            }
            judge(p, r);
        });
    }
    {
        Params p{{"function", "e_lambda(x,1|2)"}, {"x", "1"}, {"lambda", "2^-1..2^-10"}};
        attempt(b, p, [&] {
            const double limit = classical_polyexp(1.0, 1.0, 2.0, kTight).checked().value + eps;
            std::vector<double> r;
            for (int j = 1; j <= steps; ++j) {
                const LambdaParam lp(Rational(1, 1L << j));
                r.push_back(std::abs(value_of({lp, 1.0, 1.0, 2.0}) - limit));
            }
            judge(p, r);
        });
    }
    for (const auto& [n, x] : {std::pair{2u, Rational(1)}, {2u, Rational(2)}, {3u, Rational(1)}, {4u, Rational(1, 2)}}) {
        Params p{{"function", "bel_n,lambda(x)"}, {"n", std::to_string(n)}, {"x", x.str()}, {"lambda", "2^-1..2^-10"}};
        const double limit = bell_classical(n)(x).to_double() + eps;
        std::vector<double> r;
        for (int j = 1; j <= steps; ++j) {
            r.push_back(std::abs(bell_partial(n, Rational(1, 1L << j))(x).to_double() - limit));
        }
        judge(p, r);
    }
    return b.finish();
}

} // namespace degen::checks
