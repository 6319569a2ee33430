#include "degen/eval_result.hpp"

#include <cmath>
#include <limits>

#include "degen/errors.hpp"

namespace degen
{

std::string_view to_string(EvalStatus s)
{
    switch (s) {
    case EvalStatus::converged:
        return "converged";
    case EvalStatus::terminated_exactly:
        return "terminated-exactly";
    case EvalStatus::max_terms_reached:
        return "max-terms-reached";
    case EvalStatus::max_depth_reached:
        return "max-depth-reached";
    }
    return "unknown";
}

const EvalResult& EvalResult::checked() const
{
    if (status == EvalStatus::max_terms_reached) {
        throw MaxTermsExceeded("series did not reach the requested tolerance within the term limit");
    }
    if (status == EvalStatus::max_depth_reached) {
        throw MaxDepthExceeded("quadrature did not reach the requested tolerance within the depth limit");
    }
    return *this;
}

EvalResult sum_series(const std::function<SeriesTerm(long n)>& term, double tol, long max_terms)
{
    // Kahan-compensated long double accumulation.
    long double sum = 0.0L;
    long double comp = 0.0L;
    long double tail = std::numeric_limits<long double>::infinity();
    for (long n = 0; n < max_terms; ++n) {
        const SeriesTerm t = term(n);
        const long double y = t.value - comp;
        const long double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
        if (t.exhausted) {
            return {static_cast<double>(sum), 0.0, n + 1, EvalStatus::terminated_exactly};
        }
        tail = t.tail_bound;
        if (tail <= tol) {
            return {static_cast<double>(sum), static_cast<double>(tail), n + 1, EvalStatus::converged};
        }
    }
    return {static_cast<double>(sum), static_cast<double>(tail), max_terms, EvalStatus::max_terms_reached};
}

long double geometric_tail(long double abs_term, long double rho)
{
    if (abs_term == 0.0L) {
        return 0.0L;
    }
    if (!(rho < 1.0L)) {
        return std::numeric_limits<long double>::infinity();
    }
    return abs_term * rho / (1.0L - rho);
}

long double unit_ratio_envelope(long n, long double lambda)
{
    // g(m) = |1 - m lambda|/(m + 1) is monotone towards |lambda| once
    // m lambda >= 1 (lambda > 0) or for all m (lambda <= 0), and decreasing
    // before that, so the supremum over m >= n is max(g(n), |lambda|).
    const long double nn = static_cast<long double>(n);
    const long double g = std::fabs(1.0L - nn * lambda) / (nn + 1.0L);
    return std::fmax(g, std::fabs(lambda));
}

} // namespace degen
