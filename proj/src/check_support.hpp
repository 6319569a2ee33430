#ifndef DEGEN_CHECK_SUPPORT_HPP
#define DEGEN_CHECK_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "degen/errors.hpp"
#include "degen/identities.hpp"
#include "degen/polynomial.hpp"
#include "degen/rational.hpp"
#include "degen/rational_function.hpp"

namespace degen::checks
{

using Params = std::vector<std::pair<std::string, std::string>>;

class ReportBuilder
{
public:
    explicit ReportBuilder(std::string id) : id_(std::move(id)) {}

    // Passes iff residual == 0.
    void exact(Params p, const Rational& residual);
    // Passes iff residual <= tol.
    void numeric(Params p, double residual, double tol);
    void domain_error(Params p, std::string message);
    void failure(Params p, std::string message);

    IdentityReport finish() const;

private:
    std::string id_;
    std::vector<SamplePoint> points_;
    Rational max_exact_{0};
    double max_numeric_ = 0.0;
    bool any_numeric_ = false;
};

// Runs body(); DomainError (including NotTerminating) becomes a marker.
template <typename F>
void attempt(ReportBuilder& b, const Params& p, F&& body)
{
    try {
        body();
    } catch (const DomainError& e) {
        b.domain_error(p, e.what());
    } catch (const ZeroDenominator& e) {
        b.domain_error(p, e.what());
    } catch (const MaxTermsExceeded& e) {
        b.failure(p, e.what());
    } catch (const MaxDepthExceeded& e) {
        b.failure(p, e.what());
    }
}

std::string fmt(double v);
std::string fmt(const Rational& r);

// Size of a difference, zero iff the difference is zero.
Rational residual_of(const Rational& d);
Rational residual_of(const RationalPolynomial& d);
Rational residual_of(const RationalFunction& d);
Rational residual_of(const Polynomial<RationalPolynomial>& d);

Rational exact_perturbation(const CheckContext& ctx);

// Per-check generator: the same seed and id always give the same stream.
std::mt19937_64 rng_for(const CheckContext& ctx, std::string_view id);
Rational draw_rational(std::mt19937_64& rng, long max_num, long max_den);

std::vector<Rational> lambdas_or(const CheckContext& ctx, std::vector<Rational> defaults);

} // namespace degen::checks

#endif
