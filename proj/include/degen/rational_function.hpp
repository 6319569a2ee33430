#ifndef DEGEN_RATIONAL_FUNCTION_HPP
#define DEGEN_RATIONAL_FUNCTION_HPP

#include <concepts>
#include <optional>
#include <string>
#include <string_view>

#include "degen/polynomial.hpp"
#include "degen/rational.hpp"

namespace degen
{

// Quotient of two polynomials over Q in canonical form: coprime numerator
// and denominator, monic denominator, and 0 stored as 0/1. Two rational
// functions are equal iff their stored polynomials are equal.
class RationalFunction
{
public:
    RationalFunction() : den_(Rational(1)) {}

    RationalFunction(RationalPolynomial numerator);
    RationalFunction(RationalPolynomial numerator, RationalPolynomial denominator);
    RationalFunction(const Rational& c) : RationalFunction(RationalPolynomial(c)) {}

    template <std::integral I>
    RationalFunction(I c) : RationalFunction(Rational(c))
    {
    }

    const RationalPolynomial& numerator() const noexcept { return num_; }
    const RationalPolynomial& denominator() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    // Throws DomainError at a pole.
    Rational operator()(const Rational& x) const;
    double eval_double(double x) const;

    RationalFunction derivative() const;

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    RationalFunction operator-() const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

private:
    RationalPolynomial num_;
    RationalPolynomial den_;
};

// Reduces n/d to canonical form; throws ZeroDenominator when d = 0.
RationalFunction ratfun_normalize(const RationalPolynomial& n, const RationalPolynomial& d);
RationalFunction ratfun_derivative(const RationalFunction& f);

RationalFunction pow(const RationalFunction& base, long exponent);
std::optional<RationalFunction> try_inverse(const RationalFunction& f);

std::string to_string(const RationalFunction& f, std::string_view var = "x");

} // namespace degen

#endif
