#ifndef DEGEN_ZETA_GAMMA_HPP
#define DEGEN_ZETA_GAMMA_HPP

#include <optional>

#include "degen/eval_result.hpp"
#include "degen/lambda.hpp"
#include "degen/quadrature.hpp"
#include "degen/rational.hpp"

namespace degen
{

// Gamma_lambda(s) = int_0^inf t^{s-1} (1 + lambda t)^{-1/lambda} dt by direct
// quadrature. Requires 0 < lambda < 1 and 0 < s < 1/lambda.
EvalResult gamma_deg(double lambda, double s, const QuadratureConfig& cfg = {});

// Same value through u = lambda t: lambda^{-s} B(s, 1/lambda - s), with the
// beta integral evaluated by quadrature.
EvalResult gamma_deg_beta(double lambda, double s, const QuadratureConfig& cfg = {});

// B(a, b) = int_0^1 u^{a-1} (1-u)^{b-1} du, split at 1/2 and reflected so
// both endpoint singularities sit at 0.
EvalResult beta_quadrature(double a, double b, const QuadratureConfig& cfg = {});

// B(a, b) = coefficient * pi^{pi_power} for positive integer or
// half-integer a and b.
struct BetaClosedForm
{
    Rational coefficient;
    int pi_power = 0;

    double value() const;
};
std::optional<BetaClosedForm> beta_closed_form(const Rational& a, const Rational& b);

// Gamma(a) = coefficient * sqrt(pi)^{sqrt_pi_power} for a positive integer or
// half-integer.
std::optional<std::pair<Rational, int>> gamma_half_integer(const Rational& a);

// d_lambda(delta, x) = int_0^x t^{delta-1} e_lambda(-t) dt. x may be +infinity
// when lambda <= 0 (and delta < -1/lambda for lambda < 0).
EvalResult gamma_deg_incomplete(const LambdaParam& lambda, double delta, double x, const QuadratureConfig& cfg = {});

// x^{-delta} d_lambda(delta, x) for terminating lambda = 1/m, integrating the
// binomial expansion of (1 - lambda t)^m term by term.
Rational gamma_deg_incomplete_scaled_exact(const LambdaParam& lambda, const Rational& delta, const Rational& x);

// Arguments of Phi_lambda(x, s, delta).
struct ZetaQuery
{
    LambdaParam lambda;
    double x = 1.0;
    double s = 2.0;
    double delta = 1.0;
};

// Phi_lambda(x, s, delta) = sum_n (1)_{n,lambda} x^n / (n + delta)^s. Only the
// finite sums of terminating lambda are supported; anything else throws
// NotTerminating. Any real s is accepted here.
EvalResult lerch_deg(const ZetaQuery& q);
Rational lerch_deg_exact(const LambdaParam& lambda, const Rational& x, long s, const Rational& delta);

// zeta_lambda(s, delta) = Phi_lambda(1, s, delta), s > 1.
EvalResult hurwitz_deg(const LambdaParam& lambda, double s, double delta);
Rational hurwitz_deg_exact(const LambdaParam& lambda, long s, const Rational& delta);

// zeta_lambda(s) = sum_{n>=1} (1)_{n-1,lambda} / n^s, s > 1.
EvalResult riemann_deg(const LambdaParam& lambda, double s);
Rational riemann_deg_exact(const LambdaParam& lambda, long s);

// int_0^inf e_lambda(t x, delta | s) e^{-t} dt for terminating lambda and
// integer s, integrating the polynomial in t against the moments n!.
Rational laplace_moment_exact(const LambdaParam& lambda, const Rational& x, long s, const Rational& delta);

} // namespace degen

#endif
