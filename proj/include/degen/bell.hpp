#ifndef DEGEN_BELL_HPP
#define DEGEN_BELL_HPP

#include <vector>

#include "degen/eval_result.hpp"
#include "degen/lambda.hpp"
#include "degen/polyexp.hpp"
#include "degen/polynomial.hpp"
#include "degen/rational.hpp"
#include "degen/rational_function.hpp"

namespace degen
{

// Bel_{n,lambda}(x) for one fixed lambda. The denominator divides
// (1 + lambda x)^n.
struct BellRatFun
{
    unsigned n = 0;
    Rational lambda;
    RationalFunction f;

    Rational operator()(const Rational& x) const { return f(x); }
};

// bel_{n,lambda}(x) = sum_k S_{2,lambda}(n, k) x^k for one fixed lambda.
struct PartialBellPoly
{
    unsigned n = 0;
    Rational lambda;
    RationalPolynomial p;

    Rational operator()(const Rational& x) const { return p(x); }
};

// sum_k (1)_{k,lambda} (x/(1 + lambda x))^k S_2(n, k), reduced.
BellRatFun bell_deg(unsigned n, const Rational& lambda);

// The same closed form with a caller-supplied row S_2(n, 0..n).
RationalFunction bell_deg_from_stirling(unsigned n, const Rational& lambda, const std::vector<Rational>& stirling_row);

// Exact value of the closed form at x; DomainError when 1 + lambda x = 0.
Rational bell_deg_value(unsigned n, const Rational& lambda, const Rational& x);
// Bel_{0..n_max,lambda}(x) from one Stirling triangle.
std::vector<Rational> bell_deg_values(unsigned n_max, const Rational& lambda, const Rational& x);

// Bel_{0..n_max,lambda}(x) read off the generating function
// ((1 + lambda x e^t)/(1 + lambda x))^{1/lambda}, expanded as a power series
// in t over Q(x). Requires lambda != 0.
std::vector<RationalFunction> bell_deg_egf(const Rational& lambda, unsigned n_max);

// n! [t^n] (1 + lambda x e^t)^m / (1 + lambda x)^m for lambda = 1/m, each
// e^{jt} expanded to order n_max.
std::vector<Rational> bell_egf_terminating(const LambdaParam& lambda, const Rational& x, unsigned n_max);

// e_lambda^{-1}(x) sum_k (1)_{k,lambda} k^n x^k / k!; requires 1 + lambda x > 0.
EvalResult bell_deg_dobinski(unsigned n, const LambdaParam& lambda, double x, const SeriesOptions& opt = {});

PartialBellPoly bell_partial(unsigned n, const Rational& lambda);

// bel_{n,lambda}(x) with coefficients kept as polynomials in lambda.
Polynomial<RationalPolynomial> bell_partial_in_lambda(unsigned n);

// e^{-x} sum_k (k)_{n,lambda} x^k / k!, entire in x.
EvalResult bell_partial_dobinski(unsigned n, const LambdaParam& lambda, double x, const SeriesOptions& opt = {});

// Classical Bel_n(x) = sum_k S_2(n, k) x^k.
RationalPolynomial bell_classical(unsigned n);

} // namespace degen

#endif
