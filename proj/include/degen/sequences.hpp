#ifndef DEGEN_SEQUENCES_HPP
#define DEGEN_SEQUENCES_HPP

#include <cstddef>
#include <vector>

#include "degen/lambda.hpp"
#include "degen/polynomial.hpp"
#include "degen/power_series.hpp"
#include "degen/rational.hpp"

namespace degen
{

// (x)_{n,lambda} = x (x - lambda) ... (x - (n-1) lambda); 1 for n = 0.
Rational falling_factorial_deg(const Rational& x, unsigned n, const Rational& lambda);

// Classical falling factorial (x)_n = (x)_{n,1}.
Rational falling_factorial(const Rational& x, unsigned n);

// (x)_{n,lambda} as a polynomial in lambda for fixed x.
RationalPolynomial falling_factorial_deg_in_lambda(const Rational& x, unsigned n);

// (1)_{n,lambda} in floating point. Exactly zero for n > m when lambda = 1/m.
long double unit_falling_factorial(unsigned n, const LambdaParam& lambda);

// Classical Stirling numbers of the second kind S_2(n, k); zero for k > n.
Rational stirling2(unsigned n, unsigned k);
// Rows 0..n_max of the classical triangle, row[n][k] for k <= n.
std::vector<std::vector<Rational>> stirling2_triangle(unsigned n_max);

// Degenerate Stirling numbers of the second kind as polynomials in lambda,
// from S(n+1,k) = S(n,k-1) + (k - n lambda) S(n,k).
RationalPolynomial stirling2_deg(unsigned n, unsigned k);
std::vector<std::vector<RationalPolynomial>> stirling2_deg_triangle(unsigned n_max);

// Reference values for stirling2_deg: solves the lower-triangular system
// (j)_{n,lambda} = sum_k S(n,k) (j)_k for j = 0..n by forward substitution.
// Intended for n <= 20.
RationalPolynomial stirling2_deg_oracle(unsigned n, unsigned k);

// Degenerate Bernoulli numbers beta_{0..n_max,lambda} as polynomials in lambda.
class BernoulliTable
{
public:
    explicit BernoulliTable(std::vector<RationalPolynomial> entries) : entries_(std::move(entries)) {}

    std::size_t max_index() const noexcept { return entries_.size() - 1; }
    const RationalPolynomial& operator[](std::size_t n) const { return entries_.at(n); }
    Rational value(std::size_t n, const Rational& lambda) const { return entries_.at(n)(lambda); }

private:
    std::vector<RationalPolynomial> entries_;
};

// Inverts (e_lambda(t) - 1)/t = sum (1)_{n+1,lambda} t^n/(n+1)! over Q[lambda].
BernoulliTable bernoulli_deg(unsigned n_max);

// beta_{n,lambda}(x) as a polynomial in x at a fixed lambda.
RationalPolynomial bernoulli_deg_poly(unsigned n, const Rational& lambda);

// Classical B_n, i.e. the degenerate table evaluated at lambda = 0.
Rational bernoulli_classical(unsigned n);

// sum_{k=0}^{n-1} (k)_{p,lambda} by direct summation.
Rational power_sum_deg(unsigned n, unsigned p, const Rational& lambda);

// Truncated series of e_lambda^x(t) = sum (x)_{k,lambda} t^k/k! with
// coefficients polynomial in x.
PowerSeries<RationalPolynomial> degexp_series_in_x(std::size_t order, const Rational& lambda);

} // namespace degen

#endif
