#ifndef DEGEN_RATIONAL_HPP
#define DEGEN_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace degen
{

// Exact rational number, always held in canonical form (positive
// denominator, coprime numerator and denominator).
class Rational
{
public:
    Rational() = default;

    template <std::integral I>
    Rational(I value) : q_(static_cast<long>(value))
    {
    }

    Rational(long num, long den);
    explicit Rational(const mpz_class& integer);
    explicit Rational(mpq_class value);

    // Accepts "p/q", integers and finite decimals ("-0.125", "1e-3").
    static Rational parse(std::string_view text);
    // Exact value of a binary double.
    static Rational from_double(double value);

    const mpq_class& raw() const noexcept { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const noexcept { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const noexcept { return sgn(q_); }

    // Numerator as a long when the value is an integer that fits.
    std::optional<long> to_long() const;
    double to_double() const { return q_.get_d(); }
    long double to_long_double() const;
    std::string str() const { return q_.get_str(); }

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    mpq_class q_{0};
};

Rational abs(const Rational& r);
// Integer power; negative exponents require a non-zero base.
Rational pow(const Rational& base, long exponent);
std::optional<Rational> try_inverse(const Rational& r);
Rational factorial(unsigned n);
Rational binomial(long n, long k);

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace degen

#endif
