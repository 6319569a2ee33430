#include "degen/rational_function.hpp"

#include "degen/errors.hpp"

namespace degen
{

RationalFunction::RationalFunction(RationalPolynomial numerator)
    : num_(std::move(numerator)), den_(Rational(1))
{
}

RationalFunction::RationalFunction(RationalPolynomial numerator, RationalPolynomial denominator)
{
    if (denominator.is_zero()) {
        throw ZeroDenominator();
    }
    if (numerator.is_zero()) {
        den_ = RationalPolynomial(Rational(1));
        return;
    }
    const RationalPolynomial g = gcd(numerator, denominator);
    num_ = divmod(numerator, g).first;
    den_ = divmod(denominator, g).first;
    const Rational lead = den_.leading();
    if (lead != Rational(1)) {
        const Rational inv = Rational(1) / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

Rational RationalFunction::operator()(const Rational& x) const
{
    const Rational d = den_(x);
    if (d.is_zero()) {
        throw DomainError("rational function evaluated at a pole x = " + x.str());
    }
    return num_(x) / d;
}

double RationalFunction::eval_double(double x) const
{
    const double d = degen::eval_double(den_, x);
    if (d == 0.0) {
        throw DomainError("rational function evaluated at a pole");
    }
    return degen::eval_double(num_, x) / d;
}

RationalFunction RationalFunction::derivative() const
{
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o)
{
    if (den_ == o.den_) {
        *this = RationalFunction(num_ + o.num_, den_);
    } else {
        *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o)
{
    return *this += -o;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o)
{
    *this = RationalFunction(num_ * o.num_, den_ * o.den_);
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o)
{
    if (o.is_zero()) {
        throw ZeroDenominator();
    }
    *this = RationalFunction(num_ * o.den_, den_ * o.num_);
    return *this;
}

RationalFunction RationalFunction::operator-() const
{
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction ratfun_normalize(const RationalPolynomial& n, const RationalPolynomial& d)
{
    return RationalFunction(n, d);
}

RationalFunction ratfun_derivative(const RationalFunction& f)
{
    return f.derivative();
}

RationalFunction pow(const RationalFunction& base, long exponent)
{
    if (exponent < 0) {
        return RationalFunction(1) / pow(base, -exponent);
    }
    return RationalFunction(pow(base.numerator(), static_cast<unsigned>(exponent)),
                            pow(base.denominator(), static_cast<unsigned>(exponent)));
}

std::optional<RationalFunction> try_inverse(const RationalFunction& f)
{
    if (f.is_zero()) {
        return std::nullopt;
    }
    return RationalFunction(1) / f;
}

std::string to_string(const RationalFunction& f, std::string_view var)
{
    if (f.is_polynomial()) {
        // Denominator is monic, so a constant denominator is 1.
        return to_string(f.numerator(), var);
    }
    return "(" + to_string(f.numerator(), var) + ")/(" + to_string(f.denominator(), var) + ")";
}

} // namespace degen
