#ifndef DEGEN_POLYNOMIAL_HPP
#define DEGEN_POLYNOMIAL_HPP

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "degen/errors.hpp"
#include "degen/rational.hpp"

namespace degen
{

// Dense univariate polynomial over a commutative ring C. Coefficients are
// indexed by degree and never carry trailing zeros, so equality is
// structural. C is Rational, or Polynomial<Rational> for the nested
// "polynomial in lambda, then x" representation.
template <typename C>
class Polynomial
{
public:
    using coefficient_type = C;

    Polynomial() = default;

    Polynomial(C constant)
    {
        coeffs_.push_back(std::move(constant));
        trim();
    }

    template <std::integral I>
    Polynomial(I constant) : Polynomial(C(constant))
    {
    }

    static Polynomial from_coeffs(std::vector<C> coeffs)
    {
        Polynomial p;
        p.coeffs_ = std::move(coeffs);
        p.trim();
        return p;
    }

    static Polynomial monomial(C c, std::size_t degree)
    {
        std::vector<C> v(degree + 1);
        v[degree] = std::move(c);
        return from_coeffs(std::move(v));
    }

    // The polynomial "x".
    static Polynomial variable() { return monomial(C(1), 1); }

    // -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::span<const C> coeffs() const noexcept { return coeffs_; }

    // Coefficient of x^i; zero beyond the degree.
    C coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : C{}; }
    const C& leading() const { return coeffs_.back(); }

    template <typename T>
    T operator()(const T& at) const
    {
        T acc{};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * at + T(*it);
        }
        return acc;
    }

    Polynomial derivative() const
    {
        if (coeffs_.size() <= 1) {
            return {};
        }
        std::vector<C> d(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) {
            d[i - 1] = coeffs_[i] * C(static_cast<long>(i));
        }
        return from_coeffs(std::move(d));
    }

    // Replace each coefficient c_i by f(c_i, i).
    template <typename F>
    auto map_coeffs(F&& f) const
    {
        using R = std::decay_t<decltype(f(coeffs_[0], std::size_t{0}))>;
        std::vector<R> out;
        out.reserve(coeffs_.size());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            out.push_back(f(coeffs_[i], i));
        }
        return Polynomial<R>::from_coeffs(std::move(out));
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size());
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] += o.coeffs_[i];
        }
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o)
    {
        if (o.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size());
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] -= o.coeffs_[i];
        }
        trim();
        return *this;
    }

    Polynomial& operator*=(const Polynomial& o)
    {
        *this = *this * o;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    Polynomial operator-() const { return Polynomial{} - *this; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<C> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return from_coeffs(std::move(out));
    }

    friend Polynomial operator*(const Polynomial& a, const C& c)
    {
        return a.map_coeffs([&](const C& v, std::size_t) { return v * c; });
    }

    friend Polynomial operator*(const C& c, const Polynomial& a) { return a * c; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == C{}) {
            coeffs_.pop_back();
        }
    }

    std::vector<C> coeffs_;
};

using RationalPolynomial = Polynomial<Rational>;
// Polynomial in x whose coefficients are polynomials in lambda.
using LambdaXPolynomial = Polynomial<RationalPolynomial>;

template <typename C>
Polynomial<C> pow(const Polynomial<C>& base, unsigned exponent)
{
    Polynomial<C> result(C(1));
    Polynomial<C> b = base;
    while (exponent != 0) {
        if (exponent & 1U) {
            result *= b;
        }
        exponent >>= 1U;
        if (exponent != 0) {
            b *= b;
        }
    }
    return result;
}

// A polynomial is a unit exactly when it is a non-zero constant whose
// value is a unit of C.
template <typename C>
std::optional<Polynomial<C>> try_inverse(const Polynomial<C>& p)
{
    if (p.degree() != 0) {
        return std::nullopt;
    }
    auto inv = try_inverse(p.coeff(0));
    if (!inv) {
        return std::nullopt;
    }
    return Polynomial<C>(std::move(*inv));
}

// Quotient and remainder over a field of coefficients.
std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                         const RationalPolynomial& b);

// Monic greatest common divisor; gcd(0, 0) = 0.
RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b);

RationalPolynomial make_monic(const RationalPolynomial& p);

// p(c * x): coefficient i scaled by c^i.
RationalPolynomial scale_argument(const RationalPolynomial& p, const Rational& c);

// Largest absolute coefficient; zero iff p is the zero polynomial.
Rational max_abs_coeff(const RationalPolynomial& p);

double eval_double(const RationalPolynomial& p, double at);

// "3*x^2 - 1/2*x + 1"; "0" for the zero polynomial.
std::string to_string(const RationalPolynomial& p, std::string_view var = "x");
// Coefficients in lambda printed in parentheses: "(1/2*lambda - 1/2)*x + 1".
std::string to_string(const LambdaXPolynomial& p, std::string_view var = "x",
                      std::string_view inner_var = "lambda");

} // namespace degen

#endif
