#ifndef DEGEN_POWER_SERIES_HPP
#define DEGEN_POWER_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include "degen/errors.hpp"
#include "degen/rational.hpp"

namespace degen
{

// Truncated formal power series c_0 + c_1 t + ... + c_N t^N, exact modulo
// t^(N+1). Binary operations on series of different orders truncate to the
// smaller order.
template <typename C>
class PowerSeries
{
public:
    explicit PowerSeries(std::size_t order) : coeffs_(order + 1) {}

    // Missing coefficients are zero; extra ones are dropped.
    PowerSeries(std::size_t order, std::vector<C> coeffs) : coeffs_(std::move(coeffs))
    {
        coeffs_.resize(order + 1);
    }

    static PowerSeries constant(std::size_t order, C c)
    {
        PowerSeries s(order);
        s.coeffs_[0] = std::move(c);
        return s;
    }

    static PowerSeries one(std::size_t order) { return constant(order, C(1)); }

    // The series "t".
    static PowerSeries variable(std::size_t order)
    {
        PowerSeries s(order);
        if (order >= 1) {
            s.coeffs_[1] = C(1);
        }
        return s;
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const C& operator[](std::size_t n) const { return coeffs_.at(n); }
    const std::vector<C>& coeffs() const noexcept { return coeffs_; }

    PowerSeries truncated(std::size_t order) const
    {
        return PowerSeries(std::min(order, this->order()), coeffs_);
    }

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b)
    {
        PowerSeries out(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i < out.coeffs_.size(); ++i) {
            out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
        }
        return out;
    }

    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b)
    {
        PowerSeries out(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i < out.coeffs_.size(); ++i) {
            out.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
        }
        return out;
    }

    friend PowerSeries operator*(const PowerSeries& a, const C& c)
    {
        PowerSeries out(a.order());
        for (std::size_t i = 0; i < out.coeffs_.size(); ++i) {
            out.coeffs_[i] = a.coeffs_[i] * c;
        }
        return out;
    }

    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) { return ps_mul(a, b); }

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) = default;

private:
    std::vector<C> coeffs_;
};

// Cauchy product truncated at min(order(a), order(b)).
template <typename C>
PowerSeries<C> ps_mul(const PowerSeries<C>& a, const PowerSeries<C>& b)
{
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<C> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i] == C{}) {
            continue;
        }
        for (std::size_t j = 0; i + j <= n; ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return PowerSeries<C>(n, std::move(out));
}

// Multiplicative inverse: r_0 = 1/c_0, r_n = -(1/c_0) sum_{k=1..n} c_k r_{n-k}.
template <typename C>
PowerSeries<C> ps_recip(const PowerSeries<C>& a)
{
    const auto inv0 = try_inverse(a[0]);
    if (!inv0) {
        throw ZeroConstantTerm();
    }
    const std::size_t n = a.order();
    std::vector<C> r(n + 1);
    r[0] = *inv0;
    for (std::size_t m = 1; m <= n; ++m) {
        C acc{};
        for (std::size_t k = 1; k <= m; ++k) {
            acc += a[k] * r[m - k];
        }
        r[m] = -(acc * *inv0);
    }
    return PowerSeries<C>(n, std::move(r));
}

template <typename C>
PowerSeries<C> ps_pow(const PowerSeries<C>& base, unsigned exponent)
{
    PowerSeries<C> result = PowerSeries<C>::one(base.order());
    for (unsigned i = 0; i < exponent; ++i) {
        result = ps_mul(result, base);
    }
    return result;
}

// f^alpha for a series with constant term 1 and any rational alpha, from
// the coefficient form of f g' = alpha f' g:
//   n g_n = sum_{j=1..n} (alpha j - (n - j)) f_j g_{n-j}.
template <typename C>
PowerSeries<C> ps_unit_power(const PowerSeries<C>& f, const Rational& alpha)
{
    if (!(f[0] == C(1))) {
        throw DomainError("ps_unit_power requires constant term 1");
    }
    const std::size_t n = f.order();
    std::vector<C> g(n + 1);
    g[0] = C(1);
    for (std::size_t m = 1; m <= n; ++m) {
        C acc{};
        for (std::size_t j = 1; j <= m; ++j) {
            const Rational w = alpha * Rational(static_cast<long>(j)) - Rational(static_cast<long>(m - j));
            if (w.is_zero()) {
                continue;
            }
            acc += f[j] * g[m - j] * C(w);
        }
        g[m] = acc * C(Rational(1) / Rational(static_cast<long>(m)));
    }
    return PowerSeries<C>(n, std::move(g));
}

// Series of e^{c t} truncated at the given order: coefficients c^n/n!.
PowerSeries<Rational> exp_series(std::size_t order, const Rational& c = Rational(1));

} // namespace degen

#endif
