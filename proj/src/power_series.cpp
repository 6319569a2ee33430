#include "degen/power_series.hpp"

namespace degen
{

PowerSeries<Rational> exp_series(std::size_t order, const Rational& c)
{
    std::vector<Rational> coeffs(order + 1);
    Rational term(1);
    for (std::size_t n = 0; n <= order; ++n) {
        coeffs[n] = term;
        term = term * c / Rational(static_cast<long>(n + 1));
    }
    return PowerSeries<Rational>(order, std::move(coeffs));
}

} // namespace degen
