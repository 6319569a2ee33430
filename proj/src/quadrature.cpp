#include "degen/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <span>
#include <vector>

#include "degen/errors.hpp"

namespace degen
{

namespace
{

// Abscissae (non-negative half, descending) and weights of the QUADPACK
// Gauss-Kronrod pairs. Gauss nodes are the odd-indexed Kronrod nodes.
constexpr std::array<double, 8> kXgk15{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk15{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg7{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr std::array<double, 11> kXgk21{
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr std::array<double, 11> kWgk21{
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208745815573, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg10{
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel
{
    double a;
    double b;
    double value;
    double error;
    int depth;

    bool operator<(const Panel& o) const { return error < o.error; }
};

struct RuleView
{
    std::span<const double> xgk;
    std::span<const double> wgk;
    std::span<const double> wg;
    // Whether the centre node is also a Gauss node (odd-order Gauss rule).
    bool gauss_has_centre;
};

RuleView rule_view(QuadratureRule r)
{
    if (r == QuadratureRule::gauss_kronrod_10_21) {
        return {kXgk21, kWgk21, kWg10, false};
    }
    return {kXgk15, kWgk15, kWg7, true};
}

Panel apply_rule(const std::function<double(double)>& f, double a, double b, int depth, const RuleView& rv)
{
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const std::size_t last = rv.xgk.size() - 1;
    const double fc = f(centre);
    double kronrod = rv.wgk[last] * fc;
    double gauss = rv.gauss_has_centre ? rv.wg.back() * fc : 0.0;
    for (std::size_t j = 0; j < last; ++j) {
        const double dx = half * rv.xgk[j];
        const double fsum = f(centre - dx) + f(centre + dx);
        kronrod += rv.wgk[j] * fsum;
        if (j % 2 == 1) {
            gauss += rv.wg[j / 2] * fsum;
        }
    }
    kronrod *= half;
    gauss *= half;
    if (!std::isfinite(kronrod)) {
        throw DomainError("integrand is not finite on the integration panel");
    }
    return {a, b, kronrod, std::fabs(kronrod - gauss), depth};
}

EvalResult integrate_finite(const std::function<double(double)>& f, double a, double b, const QuadratureConfig& cfg)
{
    const RuleView rv = rule_view(cfg.rule);
    std::priority_queue<Panel> work;
    std::vector<Panel> frozen; // panels at the depth limit
    Panel first = apply_rule(f, a, b, 0, rv);
    work.push(first);
    long panels = 1;
    for (;;) {
        long double value = 0.0L, error = 0.0L;
        {
            auto copy = work;
            while (!copy.empty()) {
                value += copy.top().value;
                error += copy.top().error;
                copy.pop();
            }
            for (const auto& p : frozen) {
                value += p.value;
                error += p.error;
            }
        }
        const double target = std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(static_cast<double>(value)));
        if (error <= target) {
            return {static_cast<double>(value), static_cast<double>(error), panels, EvalStatus::converged};
        }
        if (work.empty() || panels >= cfg.max_panels) {
            return {static_cast<double>(value), static_cast<double>(error), panels, EvalStatus::max_depth_reached};
        }
        const Panel worst = work.top();
        work.pop();
        if (worst.depth >= cfg.max_depth) {
            frozen.push_back(worst);
            continue;
        }
        const double mid = 0.5 * (worst.a + worst.b);
        work.push(apply_rule(f, worst.a, mid, worst.depth + 1, rv));
        work.push(apply_rule(f, mid, worst.b, worst.depth + 1, rv));
        ++panels;
    }
}

} // namespace

EvalResult adaptive_quadrature(const std::function<double(double)>& f, double a, double b, const QuadratureConfig& cfg)
{
    if (!std::isfinite(a) || std::isnan(b)) {
        throw DomainError("quadrature requires a finite lower limit");
    }
    if (b == a) {
        return {0.0, 0.0, 0, EvalStatus::converged};
    }
    if (std::isinf(b)) {
        if (b < 0) {
            throw DomainError("quadrature upper limit may only be +infinity");
        }
        const EvalResult head = integrate_finite(f, a, a + 1.0, cfg);
        const auto tail_f = [&](double w) {
            const double t = a + (1.0 - w) / w;
            return f(t) / (w * w);
        };
        const EvalResult tail = integrate_finite(tail_f, 0.0, 0.5, cfg);
        const EvalStatus st = head.ok() && tail.ok() ? EvalStatus::converged : EvalStatus::max_depth_reached;
        return {head.value + tail.value, head.error_bound + tail.error_bound, head.terms_used + tail.terms_used, st};
    }
    if (b < a) {
        EvalResult r = integrate_finite(f, b, a, cfg);
        r.value = -r.value;
        return r;
    }
    return integrate_finite(f, a, b, cfg);
}

} // namespace degen
