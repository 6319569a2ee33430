#ifndef DEGEN_QUADRATURE_HPP
#define DEGEN_QUADRATURE_HPP

#include <functional>

#include "degen/eval_result.hpp"

namespace degen
{

enum class QuadratureRule
{
    gauss_kronrod_7_15,
    gauss_kronrod_10_21,
};

struct QuadratureConfig
{
    double abs_tol = 1e-11;
    double rel_tol = 1e-11;
    // Maximum number of bisections applied to any one panel.
    int max_depth = 80;
    int max_panels = 20000;
    QuadratureRule rule = QuadratureRule::gauss_kronrod_7_15;
};

// Globally adaptive Gauss-Kronrod quadrature: the panel with the largest
// |Kronrod - Gauss| estimate is bisected until the summed estimate is at
// most max(abs_tol, rel_tol |value|). The rule never samples panel
// endpoints, so integrable endpoint singularities are allowed.
//
// b = +infinity is handled by integrating [a, a + 1] directly and mapping
// [a + 1, inf) onto w in (0, 1/2] with t = a + (1 - w)/w, i.e. the
// substitution u = (t - a)/(1 + t - a) with w = 1 - u, which keeps the
// point at infinity next to w = 0 where doubles are densest.
EvalResult adaptive_quadrature(const std::function<double(double)>& f, double a, double b,
                               const QuadratureConfig& cfg = {});

} // namespace degen

#endif
