#include "degen/identities.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <stdexcept>

#include "degen/checks.hpp"

namespace degen
{

std::string_view to_string(CheckMode m)
{
    return m == CheckMode::exact ? "exact" : "numeric";
}

namespace
{

using namespace checks;

// Ids follow the equation and theorem numbering used by the CLI contract.
constexpr std::array kRegistry{
    RegisteredCheck{"cor7", "polyexponential as a Bell-polynomial series in 1/delta", polyexp_bell_expansion},
    RegisteredCheck{"eq10", "degenerate Stirling recurrence against basis expansion", stirling_basis_expansion},
    RegisteredCheck{"eq13", "partially degenerate Bell Dobinski series", partial_bell_dobinski},
    RegisteredCheck{"eq15", "order-one polyexponential closed form", polyexp_order_one},
    RegisteredCheck{"eq16", "degenerate gamma by direct and beta quadrature", gamma_two_routes},
    RegisteredCheck{"eq17", "incomplete degenerate gamma limit for lambda < 0", incomplete_gamma_limit},
    RegisteredCheck{"eq18", "derivative of x^delta e_lambda(-x, delta | 1)", incomplete_gamma_derivative},
    RegisteredCheck{"eq2", "Stirling numbers from (e^t - 1)^k / k!", stirling_generating_function},
    RegisteredCheck{"eq23", "Ein_lambda through e_lambda(-x, 1 | 2)", ein_relation},
    RegisteredCheck{"eq53", "Bel_p from e_lambda(x, 1 | 1 - p)", bell_from_polyexp},
    RegisteredCheck{"eq54", "Laplace transform of the polyexponential is Lerch zeta", lerch_laplace},
    RegisteredCheck{"eq59", "Riemann zeta as shifted Hurwitz zeta", riemann_hurwitz_shift},
    RegisteredCheck{"eq63", "degenerate power sums through Bernoulli polynomials", power_sum},
    RegisteredCheck{"eq9", "degenerate Bernoulli numbers at lambda = 0", bernoulli_classical_limit},
    RegisteredCheck{"iterated-integral", "polyexponential order raised by integration", polyexp_iterated_integral},
    RegisteredCheck{"lambda-limit", "lambda -> 0 convergence to classical values", lambda_limit},
    RegisteredCheck{"lemma2", "e_lambda(x, 1 | 2) through an integral of e_lambda", polyexp_order_two_integral},
    RegisteredCheck{"thm1", "incomplete degenerate gamma equals x^delta e_lambda(-x, delta | 1)",
                    incomplete_gamma_series},
    RegisteredCheck{"thm10", "Bell derivative as a binomial sum", bell_derivative_sum},
    RegisteredCheck{"thm11", "Bell closed form against generating function", bell_closed_form},
    RegisteredCheck{"thm12", "Laplace-type integral of bel_{n,lambda}(-x)", partial_bell_laplace},
    RegisteredCheck{"thm13", "alternating degenerate Stirling sum", degenerate_stirling_alternating_sum},
    RegisteredCheck{"thm14", "negative-order polyexponential through Bell polynomials", polyexp_negative_order},
    RegisteredCheck{"thm3-genfunc", "generating function in z of e_lambda(x, delta | k)", polyexp_generating_function},
    RegisteredCheck{"thm3-operator", "(d/dx x)^p inverts the order p", polyexp_operator},
    RegisteredCheck{"thm4", "Taylor expansion in delta", polyexp_taylor_shift},
    RegisteredCheck{"thm6", "Bell Dobinski series", bell_dobinski},
    RegisteredCheck{"thm8", "Bell recurrence", bell_recurrence},
    RegisteredCheck{"thm9", "Bell derivative recurrence", bell_derivative_recurrence},
};

} // namespace

std::span<const RegisteredCheck> identity_registry()
{
    return kRegistry;
}

const RegisteredCheck* find_check(std::string_view id)
{
    for (const auto& c : kRegistry) {
        if (c.id == id) {
            return &c;
        }
    }
    return nullptr;
}

std::vector<IdentityReport> run_checks(const std::vector<std::string>& ids, const CheckContext& ctx, bool parallel)
{
    std::vector<const RegisteredCheck*> selected;
    if (ids.empty()) {
        for (const auto& c : kRegistry) {
            selected.push_back(&c);
        }
    } else {
        for (const auto& id : ids) {
            const RegisteredCheck* c = find_check(id);
            if (!c) {
                throw std::invalid_argument("unknown identity id: " + id);
            }
            if (std::find(selected.begin(), selected.end(), c) == selected.end()) {
                selected.push_back(c);
            }
        }
    }

    std::vector<IdentityReport> out;
    if (parallel) {
        std::vector<std::future<IdentityReport>> jobs;
        for (const auto* c : selected) {
            jobs.push_back(std::async(std::launch::async, c->run, ctx));
        }
        for (auto& j : jobs) {
            out.push_back(j.get());
        }
    } else {
        for (const auto* c : selected) {
            out.push_back(c->run(ctx));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const IdentityReport& a, const IdentityReport& b) { return a.identity_id < b.identity_id; });
    return out;
}

} // namespace degen
