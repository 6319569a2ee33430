#include "check_support.hpp"
#include "degen/checks.hpp"

#include <cmath>
#include <tuple>

#include "degen/bell.hpp"
#include "degen/polyexp.hpp"
#include "degen/sequences.hpp"

namespace degen::checks
{

namespace
{

using LxPoly = Polynomial<RationalPolynomial>;

const SeriesOptions kTight{1e-14, 200000, 1e-3};

constexpr unsigned kBellMax = 8;

std::vector<Rational> bell_lambdas(const CheckContext& ctx, std::string_view id)
{
    auto rng = rng_for(ctx, id);
    std::vector<Rational> out{Rational(1, 2), Rational(1), Rational(-1, 3), Rational(2), Rational(0)};
    out.push_back(draw_rational(rng, 9, 9));
    return lambdas_or(ctx, out);
}

std::vector<RationalFunction> bell_rows(unsigned n_max, const Rational& lambda)
{
    std::vector<RationalFunction> out;
    for (unsigned n = 0; n <= n_max; ++n) {
        out.push_back(bell_deg(n, lambda).f);
    }
    return out;
}

RationalFunction one_plus_lambda_x(const Rational& lambda)
{
    return RationalFunction(RationalPolynomial::from_coeffs({Rational(1), lambda}));
}

const RationalFunction kX(RationalPolynomial::variable());

} // namespace

IdentityReport bell_recurrence(const CheckContext& ctx)
{
    ReportBuilder b("thm8");
    const Rational eps = exact_perturbation(ctx);
    for (const Rational& lambda : bell_lambdas(ctx, "thm8")) {
        const auto bel = bell_rows(kBellMax + 1, lambda);
        Rational worst(0);
        for (unsigned n = 0; n <= kBellMax; ++n) {
            RationalFunction sum;
            for (unsigned l = 0; l <= n; ++l) {
                sum += RationalFunction(binomial(n, l)) * (bel[l] - RationalFunction(lambda + eps) * bel[l + 1]);
            }
            worst = std::max(worst, residual_of(bel[n + 1] - kX * sum));
        }
        b.exact({{"lambda", lambda.str()}, {"n", "0..8"}}, worst);
    }
    return b.finish();
}

IdentityReport bell_derivative_recurrence(const CheckContext& ctx)
{
    ReportBuilder b("thm9");
    const Rational eps = exact_perturbation(ctx);
    for (const Rational& lambda : bell_lambdas(ctx, "thm9")) {
        const auto bel = bell_rows(kBellMax + 1, lambda);
        const RationalFunction lx = RationalFunction(lambda) * kX;
        const RationalFunction pre = kX / one_plus_lambda_x(lambda);
        Rational worst(0);
        for (unsigned n = 0; n <= kBellMax; ++n) {
            const RationalFunction d = bel[n].derivative();
            const RationalFunction rhs = pre * (d + RationalFunction(Rational(1) + eps) * bel[n] + lx * d);
            worst = std::max(worst, residual_of(bel[n + 1] - rhs));
        }
        b.exact({{"lambda", lambda.str()}, {"n", "0..8"}}, worst);
    }
    return b.finish();
}

IdentityReport bell_derivative_sum(const CheckContext& ctx)
{
    ReportBuilder b("thm10");
    const Rational eps = exact_perturbation(ctx);
    for (const Rational& lambda : bell_lambdas(ctx, "thm10")) {
        const auto bel = bell_rows(kBellMax, lambda);
        const RationalFunction pre = RationalFunction(1) / one_plus_lambda_x(lambda);
        Rational worst(0);
        for (unsigned n = 1; n <= kBellMax; ++n) {
            RationalFunction sum;
            for (unsigned l = 0; l < n; ++l) {
                sum += RationalFunction(binomial(n, l)) * (bel[l] - RationalFunction(lambda + eps) * bel[l + 1]);
            }
            worst = std::max(worst, residual_of(bel[n].derivative() - pre * sum));
        }
        b.exact({{"lambda", lambda.str()}, {"n", "1..8"}}, worst);
    }
    return b.finish();
}

IdentityReport bell_closed_form(const CheckContext& ctx)
{
    ReportBuilder b("thm11");
    const Rational eps = exact_perturbation(ctx);
    const auto tri = stirling2_triangle(kBellMax);
    auto perturbed_row = [&](unsigned n) {
        auto row = tri[n];
        for (auto& s : row) {
            s += eps;
        }
        return row;
    };

    // Over Q(x), for lambda != 0.
    for (const Rational& lambda :
         lambdas_or(ctx, {Rational(1, 2), Rational(1), Rational(-1, 3), Rational(2), Rational(3, 7)})) {
        const Params p{{"lambda", lambda.str()}, {"x", "symbolic"}, {"n", "0..8"}};
        attempt(b, p, [&] {
            const auto egf = bell_deg_egf(lambda, kBellMax);
            Rational worst(0);
            for (unsigned n = 0; n <= kBellMax; ++n) {
                worst = std::max(worst, residual_of(egf[n] - bell_deg_from_stirling(n, lambda, perturbed_row(n))));
            }
            b.exact(p, worst);
        });
    }

    // Terminating lambda at rational x, with (1 + lambda x e^t)^m expanded directly.
    auto rng = rng_for(ctx, "thm11");
    std::vector<Rational> xs{Rational(1), Rational(2), Rational(-1, 3)};
    xs.push_back(draw_rational(rng, 7, 5));
    for (const Rational& lambda : lambdas_or(ctx, {Rational(1), Rational(1, 2), Rational(1, 3)})) {
        for (const Rational& x : xs) {
            const Params p{{"lambda", lambda.str()}, {"x", x.str()}, {"n", "0..8"}};
            attempt(b, p, [&] {
                const auto seq = bell_egf_terminating(LambdaParam(lambda), x, kBellMax);
                Rational worst(0);
                for (unsigned n = 0; n <= kBellMax; ++n) {
                    worst = std::max(worst, abs(seq[n] - bell_deg_from_stirling(n, lambda, perturbed_row(n))(x)));
                }
                b.exact(p, worst);
            });
        }
    }
    return b.finish();
}

IdentityReport bell_dobinski(const CheckContext& ctx)
{
    ReportBuilder b("thm6");
    const double eps = ctx.perturb;
    const std::vector<Rational> xs{Rational(-1, 2), Rational(1, 4), Rational(1, 2)};
    for (const Rational& lambda :
         lambdas_or(ctx, {Rational(1, 2), Rational(-1, 3), Rational(2, 7), Rational(1, 5), Rational(1)})) {
        const LambdaParam lp(lambda);
        bool any = false;
        for (const Rational& x : xs) {
            if (abs(lambda * x) > Rational(1, 2)) {
                continue;
            }
            any = true;
            const Params p{{"lambda", lambda.str()}, {"x", x.str()}, {"n", "0..8"}};
            attempt(b, p, [&] {
                const auto exact = bell_deg_values(kBellMax, lambda, x);
                double worst = 0.0;
                for (unsigned n = 0; n <= kBellMax; ++n) {
                    const double dob = bell_deg_dobinski(n, lp, x.to_double(), kTight).checked().value;
                    worst = std::max(worst, std::abs(dob * (1.0 + eps) - exact[n].to_double()));
                }
                b.numeric(p, worst, kSeriesTolerance);
            });
        }
        if (!any) {
            b.domain_error({{"lambda", lambda.str()}}, "no sample x with |lambda x| <= 1/2");
        }
    }
    return b.finish();
}

IdentityReport partial_bell_dobinski(const CheckContext& ctx)
{
    ReportBuilder b("eq13");
    const double eps = ctx.perturb;
    for (const Rational& lambda : lambdas_or(ctx, {Rational(1, 2), Rational(-1, 3), Rational(2), Rational(0)})) {
        const LambdaParam lp(lambda);
        for (const Rational& x : {Rational(-1), Rational(1, 2), Rational(2)}) {
            const Params p{{"lambda", lambda.str()}, {"x", x.str()}, {"n", "0..6"}};
            attempt(b, p, [&] {
                const double xd = x.to_double();
                double worst = 0.0;
                for (unsigned n = 0; n <= 6; ++n) {
                    const double dob = bell_partial_dobinski(n, lp, xd, kTight).checked().value * std::exp(-eps * xd);
                    worst = std::max(worst, std::abs(dob - bell_partial(n, lambda)(x).to_double()));
                }
                b.numeric(p, worst, kSeriesTolerance);
            });
        }
    }
    return b.finish();
}

IdentityReport polyexp_bell_expansion(const CheckContext& ctx)
{
    ReportBuilder b("cor7");
    const double eps = ctx.perturb;
    // lambda, delta, x, s, M
    std::vector<std::tuple<Rational, Rational, Rational, Rational, unsigned>> points{
        {Rational(1), Rational(2), Rational(1), Rational(1), 60},
        {Rational(1), Rational(2), Rational(1), Rational(0), 60},
        {Rational(1, 2), Rational(4), Rational(1), Rational(2), 80},
        {Rational(1, 3), Rational(5), Rational(1, 2), Rational(3, 2), 80},
        {Rational(3, 10), Rational(5), Rational(1, 2), Rational(1), 60},
    };
    if (ctx.lambda) {
        for (auto& pt : points) {
            std::get<0>(pt) = *ctx.lambda;
        }
    }
    for (const auto& [lambda, delta, x, s, terms] : points) {
        const Params p{{"lambda", lambda.str()}, {"delta", delta.str()}, {"x", x.str()},
                       {"s", s.str()},           {"M", std::to_string(terms)}};
        attempt(b, p, [&] {
            const LambdaParam lp(lambda);
            if (!lp.terminating()) {
                throw DomainError("series in 1/delta needs lambda = 1/m");
            }
            if (delta <= Rational(*lp.terminating_order())) {
                throw DomainError("series in 1/delta needs delta > 1/lambda");
            }
            const auto bel = bell_deg_values(terms, lambda, x);
            // sum_n C(-s, n) delta^{-n} Bel_n, exactly
            Rational c(1);
            Rational sum(0);
            for (unsigned n = 0; n <= terms; ++n) {
                if (n > 0) {
                    c = c * (-s - Rational(static_cast<long>(n - 1))) / (Rational(static_cast<long>(n)) * delta);
                }
                sum += c * bel[n];
            }
            const double rhs = degexp_exact(lp, x).to_double() * std::pow(delta.to_double(), -s.to_double()) *
                               (1.0 + eps) * sum.to_double();
            const double lhs =
                polyexp_deg({lp, x.to_double(), delta.to_double(), s.to_double()}, kTight).checked().value;
            b.numeric(p, std::abs(lhs - rhs), kQuadratureTolerance);
        });
    }
    return b.finish();
}

IdentityReport bell_from_polyexp(const CheckContext& ctx)
{
    ReportBuilder b("eq53");
    const Rational eps = exact_perturbation(ctx);
    // p, lambda, x
    std::vector<std::tuple<long, Rational, Rational>> points{
        {2, Rational(1), Rational(1)},          {2, Rational(1, 2), Rational(1)}, {3, Rational(1), Rational(2)},
        {4, Rational(1, 3), Rational(-1, 2)},   {3, Rational(3, 10), Rational(1, 2)},
    };
    if (ctx.lambda) {
        for (auto& pt : points) {
            std::get<1>(pt) = *ctx.lambda;
        }
    }
    for (const auto& [p, lambda, x] : points) {
        const Params params{{"p", std::to_string(p)}, {"lambda", lambda.str()}, {"x", x.str()}};
        attempt(b, params, [&] {
            if (x.is_zero()) {
                throw DomainError("requires x != 0");
            }
            const LambdaParam lp(lambda);
            const auto bel = bell_deg_values(static_cast<unsigned>(p), lambda, x);
            const Rational d = Rational(1) + lambda * x;
            Rational sum(0);
            for (long l = 0; l <= p - 2; ++l) {
                sum += binomial(p - 1, l) * bel[l + 1];
            }
            const Rational tail = (lambda + eps) * x / d * sum;
            if (lp.terminating()) {
                const Rational e = degexp_exact(lp, x);
                const Rational rhs = x / (e * d) * polyexp_deg_exact(lp, x, 1, 1 - p) - tail;
                b.exact(params, bel[p] - rhs);
                return;
            }
            const double xd = x.to_double();
            const double poly = polyexp_deg({lp, xd, 1.0, static_cast<double>(1 - p)}, kTight).checked().value;
            const double rhs = xd / (degexp(lp, xd) * d.to_double()) * poly - tail.to_double();
            b.numeric(params, std::abs(bel[p].to_double() - rhs), kSeriesTolerance);
        });
    }
    return b.finish();
}

namespace
{

// Both sides of the alternating Stirling sum as polynomials in lambda:
// sum_k (-1)^k k! S_{2,lambda}(n, k) / c^{k+1} and the Bernoulli difference.
std::pair<RationalPolynomial, RationalPolynomial> alternating_sum_sides(unsigned n, const Rational& two,
                                                                        const BernoulliTable& table,
                                                                        const std::vector<std::vector<RationalPolynomial>>& s2)
{
    RationalPolynomial sum;
    for (unsigned k = 0; k <= n; ++k) {
        const Rational w = factorial(k) / pow(two, static_cast<long>(k + 1));
        sum = sum + s2[n][k] * RationalPolynomial((k % 2 == 0) ? w : -w);
    }
    const RationalPolynomial& beta = table[n + 1];
    const RationalPolynomial bern =
        (beta - scale_argument(beta, Rational(1, 2)) * RationalPolynomial(pow(Rational(2), static_cast<long>(n + 1)))) *
        RationalPolynomial(Rational(1) / Rational(static_cast<long>(n + 1)));
    return {sum, bern};
}

Rational poly_gap(const RationalPolynomial& d, const CheckContext& ctx)
{
    return ctx.lambda ? abs(d(*ctx.lambda)) : residual_of(d);
}

} // namespace

IdentityReport partial_bell_laplace(const CheckContext& ctx)
{
    ReportBuilder b("thm12");
    const Rational two = Rational(2) + exact_perturbation(ctx);
    const BernoulliTable table = bernoulli_deg(kBellMax + 1);
    const auto s2 = stirling2_deg_triangle(kBellMax);
    for (unsigned n = 0; n <= kBellMax; ++n) {
        // int_0^inf e^{-2x} x^k dx = k! / 2^{k+1}, applied to bel_{n,lambda}(-x)
        const LxPoly bel = bell_partial_in_lambda(n);
        RationalPolynomial integral;
        const auto coeffs = bel.coeffs();
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            const Rational w = factorial(static_cast<unsigned>(k)) / pow(two, static_cast<long>(k + 1));
            integral = integral + coeffs[k] * RationalPolynomial(k % 2 == 0 ? w : -w);
        }
        const auto [sum, bern] = alternating_sum_sides(n, Rational(2), table, s2);
        Params p{{"n", std::to_string(n)}};
        p.emplace_back("lambda", ctx.lambda ? ctx.lambda->str() : "symbolic");
        b.exact(std::move(p), std::max(poly_gap(integral - bern, ctx), poly_gap(integral - sum, ctx)));
    }
    return b.finish();
}

IdentityReport degenerate_stirling_alternating_sum(const CheckContext& ctx)
{
    ReportBuilder b("thm13");
    const Rational two = Rational(2) + exact_perturbation(ctx);
    const BernoulliTable table = bernoulli_deg(kBellMax + 1);
    const auto s2 = stirling2_deg_triangle(kBellMax);
    auto rng = rng_for(ctx, "thm13");
    const Rational random_lambda = draw_rational(rng, 9, 9);
    for (unsigned n = 0; n <= kBellMax; ++n) {
        const auto [sum, bern] = alternating_sum_sides(n, two, table, s2);
        Params p{{"n", std::to_string(n)}};
        p.emplace_back("lambda", ctx.lambda ? ctx.lambda->str() : "symbolic");
        b.exact(std::move(p), poly_gap(sum - bern, ctx));
    }
    // Rational instantiation: both sides rebuilt from numbers at one lambda.
    const Rational lambda = ctx.lambda.value_or(random_lambda);
    for (unsigned n = 0; n <= kBellMax; ++n) {
        Rational sum(0);
        for (unsigned k = 0; k <= n; ++k) {
            const Rational w = factorial(k) / pow(two, static_cast<long>(k + 1)) * s2[n][k](lambda);
            sum += (k % 2 == 0) ? w : -w;
        }
        const Rational bern = (table.value(n + 1, lambda) -
                               pow(Rational(2), static_cast<long>(n + 1)) * table.value(n + 1, lambda / Rational(2))) /
                              Rational(static_cast<long>(n + 1));
        b.exact({{"n", std::to_string(n)}, {"lambda", lambda.str()}}, sum - bern);
    }
    return b.finish();
}

} // namespace degen::checks
