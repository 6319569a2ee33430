#include "check_support.hpp"
#include "degen/checks.hpp"

#include <cmath>
#include <limits>
#include <tuple>

#include "degen/polyexp.hpp"
#include "degen/quadrature.hpp"
#include "degen/zeta_gamma.hpp"

namespace degen::checks
{

namespace
{

const SeriesOptions kTight{1e-14, 200000, 1e-3};

double scaled_polyexp(const LambdaParam& lp, double x, double delta)
{
    return std::pow(x, delta) * polyexp_deg({lp, -x, delta, 1.0}, kTight).checked().value;
}

} // namespace

IdentityReport gamma_two_routes(const CheckContext& ctx)
{
    ReportBuilder b("eq16");
    const double eps = ctx.perturb;
    for (const Rational& lambda : lambdas_or(ctx, {Rational(1, 4), Rational(1, 3), Rational(1, 2)})) {
        for (const Rational& s : {Rational(1, 2), Rational(1), Rational(3, 2)}) {
            const Params p{{"lambda", lambda.str()}, {"s", s.str()}};
            attempt(b, p, [&] {
                const double ld = lambda.to_double();
                const double sd = s.to_double();
                const double direct = gamma_deg(ld, sd).checked().value;
                const double via_beta = gamma_deg_beta(ld, sd).checked().value * (1.0 + eps);
                double gap = std::abs(direct - via_beta);
                if (lambda.sign() > 0) {
                    if (const auto closed = beta_closed_form(s, Rational(1) / lambda - s)) {
                        gap = std::max(gap, std::abs(direct - std::pow(ld, -sd) * closed->value()));
                    }
                }
                b.numeric(p, gap, kQuadratureTolerance);
            });
        }
    }
    return b.finish();
}

IdentityReport incomplete_gamma_limit(const CheckContext& ctx)
{
    ReportBuilder b("eq17");
    const double eps = ctx.perturb;
    std::vector<std::pair<Rational, Rational>> points{
        {Rational(-1, 3), Rational(1)}, {Rational(-1, 4), Rational(3, 2)}, {Rational(-1, 2), Rational(1, 2)}};
    if (ctx.lambda) {
        points = {{*ctx.lambda, Rational(1, 2)}, {*ctx.lambda, Rational(1)}};
    }
    for (const auto& [lambda, delta] : points) {
        const Params p{{"lambda", lambda.str()}, {"delta", delta.str()}, {"x", "inf"}};
        attempt(b, p, [&] {
            if (lambda.sign() >= 0) {
                throw DomainError("limit identity needs lambda < 0");
            }
            const LambdaParam lp(lambda);
            const double dd = delta.to_double();
            const double limit =
                gamma_deg_incomplete(lp, dd, std::numeric_limits<double>::infinity()).checked().value;
            // Gamma_{-lambda}(delta) through the beta substitution and, when
            // available, the closed-form beta value.
            const double mu = -lambda.to_double();
            const double gamma = gamma_deg_beta(mu, dd).checked().value * (1.0 + eps);
            double gap = std::abs(limit - gamma);
            if (const auto closed = beta_closed_form(delta, Rational(-1) / lambda - delta)) {
                gap = std::max(gap, std::abs(limit - std::pow(mu, -dd) * closed->value() * (1.0 + eps)));
            }
            b.numeric(p, gap, kQuadratureTolerance);
        });
    }
    return b.finish();
}

IdentityReport incomplete_gamma_derivative(const CheckContext& ctx)
{
    ReportBuilder b("eq18");
    const double eps = ctx.perturb;
    constexpr double h = 1e-4;
    // lambda, delta, x
    std::vector<std::tuple<Rational, double, double>> points{
        {Rational(1, 2), 2.0, 0.5}, {Rational(3, 10), 1.0, 0.5}, {Rational(-1, 3), 1.5, 1.0}};
    if (ctx.lambda) {
        for (auto& pt : points) {
            std::get<0>(pt) = *ctx.lambda;
        }
    }
    for (const auto& [lambda, delta, x] : points) {
        const Params p{{"lambda", lambda.str()}, {"delta", fmt(delta)}, {"x", fmt(x)}, {"h", fmt(h)}};
        attempt(b, p, [&] {
            const LambdaParam lp(lambda);
            const double d = (scaled_polyexp(lp, x + h, delta) - scaled_polyexp(lp, x - h, delta)) / (2.0 * h);
            const double rhs = std::pow(x, delta - 1.0) * degexp(lp, -x) * (1.0 + eps);
            b.numeric(p, std::abs(d - rhs), kFiniteDifferenceTolerance);
        });
    }
    return b.finish();
}

IdentityReport incomplete_gamma_series(const CheckContext& ctx)
{
    ReportBuilder b("thm1");
    const double eps = ctx.perturb;
    const Rational eps_exact = exact_perturbation(ctx);
    const std::vector<Rational> deltas{Rational(1, 2), Rational(1), Rational(2)};
    const std::vector<Rational> xs{Rational(1, 4), Rational(1), Rational(2)};
    for (const Rational& lambda : lambdas_or(ctx, {Rational(-1, 3), Rational(1, 2), Rational(3, 10)})) {
        const LambdaParam lp(lambda);
        for (const Rational& delta : deltas) {
            for (const Rational& x : xs) {
                const Params p{{"lambda", lambda.str()}, {"delta", delta.str()}, {"x", x.str()}};
                attempt(b, p, [&] {
                    const double dd = delta.to_double();
                    const double xd = x.to_double();
                    const double integral = gamma_deg_incomplete(lp, dd, xd).checked().value;
                    b.numeric(p, std::abs(integral - scaled_polyexp(lp, xd, dd) * (1.0 + eps)),
                              kQuadratureTolerance);
                });
            }
        }
    }
    // Terminating lambda: both sides as exact rationals (x^delta divided out).
    for (const Rational& lambda : lambdas_or(ctx, {Rational(1), Rational(1, 2), Rational(1, 3)})) {
        const LambdaParam lp(lambda);
        for (const Rational& delta : deltas) {
            for (const Rational& x : xs) {
                const Params p{{"lambda", lambda.str()}, {"delta", delta.str()}, {"x", x.str()}, {"form", "scaled"}};
                attempt(b, p, [&] {
                    const Rational lhs = gamma_deg_incomplete_scaled_exact(lp, delta, x);
                    b.exact(p, lhs - polyexp_deg_exact(lp, -x, delta, 1) * (Rational(1) + eps_exact));
                });
            }
        }
    }
    return b.finish();
}

IdentityReport lerch_laplace(const CheckContext& ctx)
{
    ReportBuilder b("eq54");
    const Rational eps = exact_perturbation(ctx);
    // lambda, x, s, delta
    std::vector<std::tuple<Rational, Rational, long, Rational>> points{
        {Rational(1, 2), Rational(1), 2, Rational(1)},
        {Rational(1), Rational(1), 1, Rational(1)},
        {Rational(1, 3), Rational(0), 2, Rational(3)},
        {Rational(1, 4), Rational(-1, 2), 3, Rational(2, 3)},
    };
    if (ctx.lambda) {
        for (auto& pt : points) {
            std::get<0>(pt) = *ctx.lambda;
        }
    }
    for (const auto& [lambda, x, s, delta] : points) {
        const Params p{{"lambda", lambda.str()}, {"x", x.str()}, {"s", std::to_string(s)}, {"delta", delta.str()}};
        attempt(b, p, [&] {
            const LambdaParam lp(lambda);
            const Rational phi = lerch_deg_exact(lp, x, s, delta) * (Rational(1) + eps);
            const Rational moments = laplace_moment_exact(lp, x, s, delta);
            b.exact(p, moments - phi);

            // The same transform by quadrature.
            const double xd = x.to_double();
            const double dd = delta.to_double();
            const double sd = static_cast<double>(s);
            const double integral =
                adaptive_quadrature(
                    [&](double t) {
                        return polyexp_deg({lp, t * xd, dd, sd}, kTight).checked().value * std::exp(-t);
                    },
                    0.0, std::numeric_limits<double>::infinity())
                    .checked()
                    .value;
            Params q = p;
            q.emplace_back("route", "quadrature");
            b.numeric(std::move(q), std::abs(integral - phi.to_double()), kQuadratureTolerance);
        });
    }
    return b.finish();
}

IdentityReport riemann_hurwitz_shift(const CheckContext& ctx)
{
    ReportBuilder b("eq59");
    const Rational eps = exact_perturbation(ctx);
    std::vector<Rational> lambdas;
    for (long m = 1; m <= 6; ++m) {
        lambdas.emplace_back(1, m);
    }
    for (const Rational& lambda : lambdas_or(ctx, lambdas)) {
        const LambdaParam lp(lambda);
        for (long s = 2; s <= 4; ++s) {
            const Params p{{"lambda", lambda.str()}, {"s", std::to_string(s)}};
            attempt(b, p, [&] {
                b.exact(p, riemann_deg_exact(lp, s) - hurwitz_deg_exact(lp, s, Rational(1) + eps));
            });
        }
    }
    return b.finish();
}

} // namespace degen::checks
