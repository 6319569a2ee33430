#include "degen/lambda.hpp"

namespace degen
{

LambdaParam::LambdaParam(Rational value)
    : value_(std::move(value)), as_double_(value_.to_double()), as_long_double_(value_.to_long_double())
{
    if (value_.is_zero()) {
        return;
    }
    const Rational inv = Rational(1) / value_;
    if (auto m = inv.to_long()) {
        reciprocal_ = *m;
        if (*m > 0) {
            order_ = *m;
        }
    }
}

} // namespace degen
