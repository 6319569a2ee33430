#include "evaluate.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "degen/bell.hpp"
#include "degen/errors.hpp"
#include "degen/polynomial.hpp"
#include "degen/rational_function.hpp"
#include "degen/sequences.hpp"
#include "degen/zeta_gamma.hpp"

namespace degen::cli
{

namespace
{

const std::string* find_arg(const ArgMap& a, std::string_view name)
{
    const auto it = a.find(name);
    return it == a.end() ? nullptr : &it->second;
}

std::optional<Rational> opt_rational(const ArgMap& a, std::string_view name)
{
    const std::string* v = find_arg(a, name);
    if (!v) {
        return std::nullopt;
    }
    try {
        return Rational::parse(*v);
    } catch (const ParseError&) {
        throw UsageError("--" + std::string(name) + ": not a rational number: " + *v);
    }
}

Rational rational(const ArgMap& a, std::string_view name)
{
    auto r = opt_rational(a, name);
    if (!r) {
        throw UsageError("missing --" + std::string(name));
    }
    return *r;
}

unsigned index(const ArgMap& a, std::string_view name)
{
    const Rational r = rational(a, name);
    const auto v = r.to_long();
    if (!v || *v < 0 || *v > 100000) {
        throw UsageError("--" + std::string(name) + " must be a non-negative integer");
    }
    return static_cast<unsigned>(*v);
}

// A real argument; "inf" is accepted.
double real(const ArgMap& a, std::string_view name)
{
    const std::string* v = find_arg(a, name);
    if (v && (*v == "inf" || *v == "+inf")) {
        return std::numeric_limits<double>::infinity();
    }
    return rational(a, name).to_double();
}

Cell exact(const Rational& r)
{
    Cell c;
    c.exact = true;
    c.text = r.str();
    c.numeric = {r.to_double(), 0.0, 0, EvalStatus::terminated_exactly};
    return c;
}

Cell symbolic(std::string text)
{
    Cell c;
    c.exact = true;
    c.text = std::move(text);
    c.numeric = {std::numeric_limits<double>::quiet_NaN(), 0.0, 0, EvalStatus::terminated_exactly};
    return c;
}

Cell numeric(const EvalResult& r)
{
    Cell c;
    c.numeric = r.checked();
    return c;
}

std::optional<long> integer_order(const Rational& s)
{
    return s.is_integer() ? s.to_long() : std::nullopt;
}

} // namespace

const std::vector<FunctionInfo>& function_catalog()
{
    static const std::vector<FunctionInfo> catalog{
        {"degexp", {"lambda", "x"}, {}, "e_lambda(x) = (1 + lambda x)^{1/lambda}"},
        {"polyexp", {"lambda", "x", "delta", "s"}, {}, "e_lambda(x, delta | s)"},
        {"ein", {"lambda", "x"}, {}, "Ein_lambda(x)"},
        {"bell", {"n", "lambda"}, {"x"}, "Bel_{n,lambda}(x); rational function when x is omitted"},
        {"bell-partial", {"n", "lambda"}, {"x"}, "bel_{n,lambda}(x); polynomial when x is omitted"},
        {"stirling2", {"n", "k"}, {}, "S_2(n, k)"},
        {"stirling2-deg", {"n", "k"}, {"lambda"}, "S_{2,lambda}(n, k); polynomial in lambda when lambda is omitted"},
        {"bernoulli-deg", {"n"}, {"lambda", "x"}, "beta_{n,lambda}(x); polynomial in lambda when lambda is omitted"},
        {"gamma-deg", {"lambda", "s"}, {}, "Gamma_lambda(s) by quadrature"},
        {"gamma-incomplete", {"lambda", "delta", "x"}, {}, "d_lambda(delta, x) by quadrature; x may be inf"},
        {"lerch-deg", {"lambda", "x", "s", "delta"}, {}, "Phi_lambda(x, s, delta) for lambda = 1/m"},
        {"hurwitz-deg", {"lambda", "s", "delta"}, {}, "zeta_lambda(s, delta) for lambda = 1/m"},
        {"riemann-deg", {"lambda", "s"}, {}, "zeta_lambda(s) for lambda = 1/m"},
    };
    return catalog;
}

const FunctionInfo& function_info(std::string_view name)
{
    for (const auto& f : function_catalog()) {
        if (f.name == name) {
            return f;
        }
    }
    throw UnknownFunction("unknown function: " + std::string(name));
}

Cell evaluate(std::string_view fn, const ArgMap& a, const EvalOptions& opt)
{
    function_info(fn);

    if (fn == "stirling2") {
        return exact(stirling2(index(a, "n"), index(a, "k")));
    }
    if (fn == "stirling2-deg") {
        const auto p = stirling2_deg(index(a, "n"), index(a, "k"));
        if (const auto l = opt_rational(a, "lambda")) {
            return exact(p(*l));
        }
        return symbolic(to_string(p, "lambda"));
    }
    if (fn == "bernoulli-deg") {
        const unsigned n = index(a, "n");
        const auto l = opt_rational(a, "lambda");
        const auto x = opt_rational(a, "x");
        if (x && !l) {
            throw UsageError("bernoulli-deg: --x needs --lambda");
        }
        if (!l) {
            return symbolic(to_string(bernoulli_deg(n)[n], "lambda"));
        }
        if (!x) {
            return exact(bernoulli_deg(n).value(n, *l));
        }
        return exact(bernoulli_deg_poly(n, *l)(*x));
    }

    const Rational lambda = rational(a, "lambda");
    const LambdaParam lp(lambda);

    if (fn == "degexp") {
        const Rational x = rational(a, "x");
        if (lp.integer_reciprocal()) {
            return exact(degexp_exact(lp, x));
        }
        return numeric({degexp(lp, x.to_double()), 0.0, 0, EvalStatus::converged});
    }
    if (fn == "polyexp") {
        const Rational x = rational(a, "x");
        const Rational delta = rational(a, "delta");
        const Rational s = rational(a, "s");
        if (lp.terminating()) {
            if (const auto k = integer_order(s)) {
                return exact(polyexp_deg_exact(lp, x, delta, *k));
            }
        }
        return numeric(polyexp_deg({lp, x.to_double(), delta.to_double(), s.to_double()}, opt.series));
    }
    if (fn == "ein") {
        const Rational x = rational(a, "x");
        if (lp.terminating()) {
            return exact(ein_deg_exact(lp, x));
        }
        return numeric(ein_deg(lp, x.to_double(), opt.series));
    }
    if (fn == "bell") {
        const unsigned n = index(a, "n");
        if (const auto x = opt_rational(a, "x")) {
            return exact(bell_deg_value(n, lambda, *x));
        }
        return symbolic(to_string(bell_deg(n, lambda).f));
    }
    if (fn == "bell-partial") {
        const auto p = bell_partial(index(a, "n"), lambda);
        if (const auto x = opt_rational(a, "x")) {
            return exact(p(*x));
        }
        return symbolic(to_string(p.p));
    }
    if (fn == "gamma-deg") {
        return numeric(gamma_deg(lambda.to_double(), real(a, "s"), opt.quadrature));
    }
    if (fn == "gamma-incomplete") {
        return numeric(gamma_deg_incomplete(lp, real(a, "delta"), real(a, "x"), opt.quadrature));
    }
    if (fn == "lerch-deg") {
        const Rational x = rational(a, "x");
        const Rational s = rational(a, "s");
        const Rational delta = rational(a, "delta");
        if (const auto k = integer_order(s); k && lp.terminating()) {
            return exact(lerch_deg_exact(lp, x, *k, delta));
        }
        return numeric(lerch_deg({lp, x.to_double(), s.to_double(), delta.to_double()}));
    }
    if (fn == "hurwitz-deg") {
        const Rational s = rational(a, "s");
        const Rational delta = rational(a, "delta");
        if (const auto k = integer_order(s); k && lp.terminating()) {
            return exact(hurwitz_deg_exact(lp, *k, delta));
        }
        return numeric(hurwitz_deg(lp, s.to_double(), delta.to_double()));
    }
    // riemann-deg
    const Rational s = rational(a, "s");
    if (const auto k = integer_order(s); k && lp.terminating()) {
        return exact(riemann_deg_exact(lp, *k));
    }
    return numeric(riemann_deg(lp, s.to_double()));
}

std::string format_numeric(double v, int digits)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') {
            q += '"';
        }
        q += c;
    }
    return q + "\"";
}

} // namespace degen::cli
