#ifndef DEGEN_EVAL_RESULT_HPP
#define DEGEN_EVAL_RESULT_HPP

#include <functional>
#include <string_view>

namespace degen
{

enum class EvalStatus
{
    converged,
    terminated_exactly,
    max_terms_reached,
    max_depth_reached,
};

std::string_view to_string(EvalStatus s);

// Numeric value with a rigorous bound on the truncation (or quadrature)
// error. Floating-point rounding is not part of error_bound.
struct EvalResult
{
    double value = 0.0;
    double error_bound = 0.0;
    long terms_used = 0;
    EvalStatus status = EvalStatus::converged;

    bool ok() const noexcept
    {
        return status == EvalStatus::converged || status == EvalStatus::terminated_exactly;
    }

    // Returns *this, or throws MaxTermsExceeded / MaxDepthExceeded.
    const EvalResult& checked() const;
};

// One step of a series: the n-th term and a bound on |sum_{m>n} a_m|
// (infinity while no bound is available yet). `exhausted` means every
// later term is exactly zero.
struct SeriesTerm
{
    long double value = 0.0L;
    long double tail_bound = 0.0L;
    bool exhausted = false;
};

// Sums terms n = 0, 1, ... until the tail bound drops to `tol` or the
// series is exhausted. The callback is invoked with increasing n.
EvalResult sum_series(const std::function<SeriesTerm(long n)>& term, double tol, long max_terms);

// |a_n| rho/(1 - rho) for a ratio bound rho valid for every later term;
// infinity when rho >= 1.
long double geometric_tail(long double abs_term, long double rho);

// sup_{m >= n} |1 - m lambda|/(m + 1), the lambda-dependent part of the
// term ratio of every (1)_{n,lambda} series.
long double unit_ratio_envelope(long n, long double lambda);

} // namespace degen

#endif
