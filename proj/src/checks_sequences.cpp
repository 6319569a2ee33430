#include "check_support.hpp"
#include "degen/checks.hpp"

#include "degen/power_series.hpp"
#include "degen/sequences.hpp"

namespace degen::checks
{

namespace
{

using LxPoly = Polynomial<RationalPolynomial>;

Rational residual_at(const LxPoly& d, const CheckContext& ctx)
{
    if (!ctx.lambda) {
        return residual_of(d);
    }
    return residual_of(d.map_coeffs([&](const RationalPolynomial& c, std::size_t) { return c(*ctx.lambda); }));
}

Rational residual_at(const RationalPolynomial& d, const CheckContext& ctx)
{
    return ctx.lambda ? abs(d(*ctx.lambda)) : residual_of(d);
}

} // namespace

IdentityReport stirling_generating_function(const CheckContext& ctx)
{
    constexpr unsigned n_max = 12;
    ReportBuilder b("eq2");
    const Rational one = Rational(1) + exact_perturbation(ctx);
    const auto e_minus_one = exp_series(n_max) - PowerSeries<Rational>::one(n_max) * one;
    for (unsigned k = 0; k <= n_max; ++k) {
        const auto s = ps_pow(e_minus_one, k) * (Rational(1) / factorial(k));
        Rational worst(0);
        for (unsigned n = 0; n <= n_max; ++n) {
            worst = std::max(worst, abs(s[n] * factorial(n) - stirling2(n, k)));
        }
        b.exact({{"k", std::to_string(k)}, {"n", "0.." + std::to_string(n_max)}}, worst);
    }
    return b.finish();
}

IdentityReport stirling_basis_expansion(const CheckContext& ctx)
{
    constexpr unsigned n_max = 12;
    ReportBuilder b("eq10");
    const Rational eps = exact_perturbation(ctx);
    const auto x = LxPoly::variable();
    const auto rec = stirling2_deg_triangle(n_max);
    for (unsigned n = 0; n <= n_max; ++n) {
        // (x)_{n,lambda} with lambda as the inner variable
        LxPoly lhs(RationalPolynomial(Rational(1)));
        for (unsigned j = 0; j < n; ++j) {
            const Rational jj(static_cast<long>(j));
            lhs = lhs * (x + LxPoly(RationalPolynomial::from_coeffs({-jj * eps, -jj})));
        }
        LxPoly rhs;
        LxPoly falling(RationalPolynomial(Rational(1)));
        Rational oracle_gap(0);
        Rational classical_gap(0);
        for (unsigned k = 0; k <= n; ++k) {
            rhs = rhs + falling * rec[n][k];
            falling = falling * (x - LxPoly(RationalPolynomial(Rational(static_cast<long>(k)))));
            oracle_gap = std::max(oracle_gap, residual_at(rec[n][k] - stirling2_deg_oracle(n, k), ctx));
            classical_gap = std::max(classical_gap, abs(rec[n][k](Rational(0)) - stirling2(n, k)));
        }
        const Rational expansion_gap = residual_at(lhs - rhs, ctx);
        Params p{{"n", std::to_string(n)}, {"k", "0.." + std::to_string(n)}};
        if (ctx.lambda) {
            p.emplace_back("lambda", ctx.lambda->str());
        }
        b.exact(std::move(p), expansion_gap + oracle_gap + classical_gap);
    }
    return b.finish();
}

IdentityReport bernoulli_classical_limit(const CheckContext& ctx)
{
    constexpr unsigned n_max = 16;
    ReportBuilder b("eq9");
    const Rational eps = exact_perturbation(ctx);
    const BernoulliTable table = bernoulli_deg(n_max);
    // sum_{k<=n} C(n+1, k) B_k = 0 for n >= 1
    std::vector<Rational> classical{Rational(1)};
    for (unsigned n = 1; n <= n_max; ++n) {
        Rational acc = (Rational(1) + eps) * classical[0];
        for (unsigned k = 1; k < n; ++k) {
            acc += binomial(n + 1, k) * classical[k];
        }
        classical.push_back(-acc / Rational(static_cast<long>(n + 1)));
    }
    for (unsigned n = 0; n <= n_max; ++n) {
        b.exact({{"n", std::to_string(n)}, {"lambda", "0"}}, table.value(n, Rational(0)) - classical[n]);
    }
    const RationalPolynomial beta1 = RationalPolynomial::from_coeffs({Rational(-1, 2), Rational(1, 2)});
    const RationalPolynomial beta2 = RationalPolynomial::from_coeffs({Rational(1, 6), Rational(0), Rational(-1, 6)});
    b.exact({{"n", "1"}, {"lambda", "symbolic"}}, residual_of(table[1] - beta1));
    b.exact({{"n", "2"}, {"lambda", "symbolic"}}, residual_of(table[2] - beta2));
    return b.finish();
}

IdentityReport power_sum(const CheckContext& ctx)
{
    constexpr unsigned n_max = 6;
    constexpr unsigned p_max = 6;
    ReportBuilder b("eq63");
    const Rational eps = exact_perturbation(ctx);
    auto rng = rng_for(ctx, "eq63");
    std::vector<Rational> defaults{Rational(-1, 2), Rational(1, 3), Rational(1, 2), Rational(1), Rational(2)};
    defaults.push_back(draw_rational(rng, 9, 9));
    defaults.push_back(draw_rational(rng, 9, 9));
    const BernoulliTable table = bernoulli_deg(p_max + 1);
    for (const Rational& lambda : lambdas_or(ctx, defaults)) {
        Rational worst(0);
        for (unsigned p = 0; p <= p_max; ++p) {
            const RationalPolynomial beta_x = bernoulli_deg_poly(p + 1, lambda);
            const Rational p1(static_cast<long>(p + 1));
            for (unsigned n = 1; n <= n_max; ++n) {
                const Rational nn(static_cast<long>(n));
                const Rational lhs = power_sum_deg(n, p, lambda);
                const Rational via_poly = (beta_x(nn) - table.value(p + 1, lambda)) / (p1 + eps);
                Rational via_binomial(0);
                for (unsigned l = 1; l <= p + 1; ++l) {
                    via_binomial += binomial(p + 1, l) * falling_factorial_deg(nn, l, lambda) *
                                    table.value(p + 1 - l, lambda);
                }
                via_binomial /= p1;
                worst = std::max({worst, abs(lhs - via_poly), abs(lhs - via_binomial)});
            }
        }
        b.exact({{"lambda", lambda.str()}, {"n", "1..6"}, {"p", "0..6"}}, worst);
    }
    return b.finish();
}

} // namespace degen::checks
