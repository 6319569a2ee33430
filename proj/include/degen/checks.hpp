#ifndef DEGEN_CHECKS_HPP
#define DEGEN_CHECKS_HPP

#include "degen/identities.hpp"

namespace degen::checks
{

// sequences
IdentityReport stirling_generating_function(const CheckContext& ctx);
IdentityReport stirling_basis_expansion(const CheckContext& ctx);
IdentityReport bernoulli_classical_limit(const CheckContext& ctx);
IdentityReport power_sum(const CheckContext& ctx);

// polyexp
IdentityReport polyexp_order_one(const CheckContext& ctx);
IdentityReport ein_relation(const CheckContext& ctx);
IdentityReport polyexp_order_two_integral(const CheckContext& ctx);
IdentityReport polyexp_iterated_integral(const CheckContext& ctx);
IdentityReport polyexp_operator(const CheckContext& ctx);
// One operator check: (d/dx x)^p applied to x^{delta-1} sum (1)_{n,lambda}
// x^n / (n! (n + delta)^series_order), compared through order n_max.
IdentityReport polyexp_operator_case(unsigned p, unsigned delta, unsigned n_max, unsigned series_order,
                                     const CheckContext& ctx);
IdentityReport polyexp_generating_function(const CheckContext& ctx);
IdentityReport polyexp_taylor_shift(const CheckContext& ctx);
IdentityReport polyexp_negative_order(const CheckContext& ctx);
IdentityReport lambda_limit(const CheckContext& ctx);

// bell
IdentityReport partial_bell_dobinski(const CheckContext& ctx);
IdentityReport bell_dobinski(const CheckContext& ctx);
IdentityReport polyexp_bell_expansion(const CheckContext& ctx);
IdentityReport bell_recurrence(const CheckContext& ctx);
IdentityReport bell_derivative_recurrence(const CheckContext& ctx);
IdentityReport bell_derivative_sum(const CheckContext& ctx);
IdentityReport bell_closed_form(const CheckContext& ctx);
IdentityReport partial_bell_laplace(const CheckContext& ctx);
IdentityReport degenerate_stirling_alternating_sum(const CheckContext& ctx);
IdentityReport bell_from_polyexp(const CheckContext& ctx);

// zeta_gamma
IdentityReport incomplete_gamma_series(const CheckContext& ctx);
IdentityReport gamma_two_routes(const CheckContext& ctx);
IdentityReport incomplete_gamma_limit(const CheckContext& ctx);
IdentityReport incomplete_gamma_derivative(const CheckContext& ctx);
IdentityReport lerch_laplace(const CheckContext& ctx);
IdentityReport riemann_hurwitz_shift(const CheckContext& ctx);

} // namespace degen::checks

#endif
