#ifndef DEGEN_POLYEXP_HPP
#define DEGEN_POLYEXP_HPP

#include "degen/eval_result.hpp"
#include "degen/lambda.hpp"
#include "degen/rational.hpp"

namespace degen
{

// Arguments of e_lambda(x, delta | s).
struct PolyexpQuery
{
    LambdaParam lambda;
    double x = 0.0;
    double delta = 1.0;
    double s = 0.0;
};

struct SeriesOptions
{
    double tol = 1e-12;
    long max_terms = 200000;
    // Non-terminating lambda requires |lambda x| <= 1 - margin.
    double margin = 1e-3;
};

// e_lambda(t) = (1 + lambda t)^{1/lambda}, e^t at lambda = 0. Requires
// 1 + lambda t > 0 unless 1/lambda is an integer (then the power is an
// integer power and only a zero base with negative exponent is rejected).
double degexp(const LambdaParam& lambda, double t);

// e_lambda^x(t) = (1 + lambda t)^{x/lambda}, e^{xt} at lambda = 0.
double degexp_x(const LambdaParam& lambda, double x, double t);

// Exact e_lambda(t) when 1/lambda is an integer; NotTerminating otherwise.
Rational degexp_exact(const LambdaParam& lambda, const Rational& t);

// sum_n (1)_{n,lambda} x^n / (n! (n + delta)^s) with a rigorous geometric
// tail bound. Terminating lambda gives the finite sum (status
// terminated_exactly, zero error bound). Throws DomainError for delta <= 0
// or |lambda x| > 1 - margin with non-terminating lambda.
EvalResult polyexp_deg(const PolyexpQuery& q, const SeriesOptions& opt = {});

// Exact finite sum for terminating lambda and integer order k (any sign).
Rational polyexp_deg_exact(const LambdaParam& lambda, const Rational& x, const Rational& delta, long k);

// Ein_lambda(x) = sum_{k>=1} (-1)^{k-1} (1)_{k,lambda} x^k / (k! k).
EvalResult ein_deg(const LambdaParam& lambda, double x, const SeriesOptions& opt = {});
Rational ein_deg_exact(const LambdaParam& lambda, const Rational& x);

// Classical polyexponential e(x, a | s) = sum x^n / ((n + a)^s n!), a > 0.
EvalResult classical_polyexp(double x, double a, double s, const SeriesOptions& opt = {});

// sum_n |(1)_{n,lambda}| |x|^n / n!, the majorant used to bound double
// series built from e_lambda(x, delta | k).
EvalResult degexp_abs_series(const LambdaParam& lambda, double x, const SeriesOptions& opt = {});

// Throws DomainError when the degenerate series in x does not converge.
void require_series_domain(const LambdaParam& lambda, double x, double margin);

} // namespace degen

#endif
