#ifndef DEGEN_LAMBDA_HPP
#define DEGEN_LAMBDA_HPP

#include <concepts>
#include <optional>

#include "degen/rational.hpp"

namespace degen
{

// The degeneracy parameter. Stored exactly; a value 1/m with m a positive
// integer is "terminating": (1)_{n,lambda} vanishes for n > m and every
// degenerate series collapses to a finite sum.
class LambdaParam
{
public:
    LambdaParam() = default;
    explicit LambdaParam(Rational value);

    template <std::integral I>
    explicit LambdaParam(I value) : LambdaParam(Rational(value))
    {
    }

    const Rational& value() const noexcept { return value_; }
    double as_double() const noexcept { return as_double_; }
    long double as_long_double() const noexcept { return as_long_double_; }

    bool is_zero() const noexcept { return value_.is_zero(); }
    bool terminating() const noexcept { return order_.has_value(); }
    // m for lambda = 1/m; empty when not terminating.
    std::optional<long> terminating_order() const noexcept { return order_; }
    // 1/lambda when it is a (possibly negative) integer.
    std::optional<long> integer_reciprocal() const noexcept { return reciprocal_; }

private:
    Rational value_{0};
    double as_double_ = 0.0;
    long double as_long_double_ = 0.0L;
    std::optional<long> order_;
    std::optional<long> reciprocal_;
};

} // namespace degen

#endif
