#include "check_support.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace degen::checks
{

void ReportBuilder::exact(Params p, const Rational& residual)
{
    const Rational r = abs(residual);
    points_.push_back({std::move(p), r.str(), r.is_zero(), std::nullopt});
    max_exact_ = std::max(max_exact_, r);
}

void ReportBuilder::numeric(Params p, double residual, double tol)
{
    const bool ok = std::isfinite(residual) && residual <= tol;
    points_.push_back({std::move(p), fmt(residual), ok, std::nullopt});
    any_numeric_ = true;
    if (!(residual <= max_numeric_)) {
        max_numeric_ = residual; // also propagates NaN
    }
}

void ReportBuilder::domain_error(Params p, std::string message)
{
    points_.push_back({std::move(p), "", true, std::move(message)});
}

void ReportBuilder::failure(Params p, std::string message)
{
    any_numeric_ = true;
    points_.push_back({std::move(p), message, false, std::nullopt});
    max_numeric_ = INFINITY;
}

IdentityReport ReportBuilder::finish() const
{
    IdentityReport r;
    r.identity_id = id_;
    r.mode = any_numeric_ ? CheckMode::numeric : CheckMode::exact;
    r.sample_points = points_;
    bool any_in_domain = false;
    bool all_ok = true;
    for (const auto& p : points_) {
        if (p.domain_error) {
            continue;
        }
        any_in_domain = true;
        all_ok = all_ok && p.ok;
    }
    r.passed = any_in_domain && all_ok;
    if (r.mode == CheckMode::exact) {
        r.max_residual = max_exact_.str();
    } else {
        const double m = std::isnan(max_numeric_) ? max_numeric_ : std::max(max_numeric_, max_exact_.to_double());
        r.max_residual = fmt(m);
    }
    return r;
}

std::string fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return buf;
}

std::string fmt(const Rational& r)
{
    return r.str();
}

Rational residual_of(const Rational& d)
{
    return abs(d);
}

Rational residual_of(const RationalPolynomial& d)
{
    return max_abs_coeff(d);
}

Rational residual_of(const RationalFunction& d)
{
    return max_abs_coeff(d.numerator());
}

Rational residual_of(const Polynomial<RationalPolynomial>& d)
{
    Rational m(0);
    for (const auto& c : d.coeffs()) {
        m = std::max(m, max_abs_coeff(c));
    }
    return m;
}

Rational exact_perturbation(const CheckContext& ctx)
{
    return Rational::from_double(ctx.perturb);
}

std::mt19937_64 rng_for(const CheckContext& ctx, std::string_view id)
{
    // FNV-1a of the id, mixed into the seed.
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : id) {
        h = (h ^ c) * 1099511628211ULL;
    }
    return std::mt19937_64(ctx.seed ^ h);
}

Rational draw_rational(std::mt19937_64& rng, long max_num, long max_den)
{
    // Raw draws reduced by modulo: std distributions are not portable.
    const long span = 2 * max_num + 1;
    const long num = static_cast<long>(rng() % static_cast<std::uint64_t>(span)) - max_num;
    const long den = static_cast<long>(rng() % static_cast<std::uint64_t>(max_den)) + 1;
    return Rational(num, den);
}

std::vector<Rational> lambdas_or(const CheckContext& ctx, std::vector<Rational> defaults)
{
    if (ctx.lambda) {
        return {*ctx.lambda};
    }
    return defaults;
}

} // namespace degen::checks
