#include "degen/polynomial.hpp"

#include <sstream>

namespace degen
{

std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                         const RationalPolynomial& b)
{
    if (b.is_zero()) {
        throw ZeroDenominator();
    }
    if (a.degree() < b.degree()) {
        return {RationalPolynomial{}, a};
    }
    std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
    const auto db = static_cast<std::size_t>(b.degree());
    const Rational& lead = b.leading();
    std::vector<Rational> quot(rem.size() - db);
    for (std::size_t k = quot.size(); k-- > 0;) {
        const Rational c = rem[k + db] / lead;
        quot[k] = c;
        if (c.is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j <= db; ++j) {
            rem[k + j] -= c * b.coeff(j);
        }
    }
    rem.resize(db);
    return {RationalPolynomial::from_coeffs(std::move(quot)),
            RationalPolynomial::from_coeffs(std::move(rem))};
}

RationalPolynomial make_monic(const RationalPolynomial& p)
{
    if (p.is_zero()) {
        return p;
    }
    const Rational inv = Rational(1) / p.leading();
    return p * inv;
}

RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b)
{
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = make_monic(r);
    }
    return make_monic(a);
}

RationalPolynomial scale_argument(const RationalPolynomial& p, const Rational& c)
{
    Rational power(1);
    std::vector<Rational> out;
    out.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) {
        out.push_back(v * power);
        power *= c;
    }
    return RationalPolynomial::from_coeffs(std::move(out));
}

Rational max_abs_coeff(const RationalPolynomial& p)
{
    Rational m(0);
    for (const auto& c : p.coeffs()) {
        m = std::max(m, abs(c));
    }
    return m;
}

double eval_double(const RationalPolynomial& p, double at)
{
    long double acc = 0;
    const auto cs = p.coeffs();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        acc = acc * at + it->to_long_double();
    }
    return static_cast<double>(acc);
}

namespace
{

void append_monomial(std::ostringstream& os, std::size_t i, std::string_view var)
{
    if (i >= 1) {
        os << var;
    }
    if (i >= 2) {
        os << '^' << i;
    }
}

} // namespace

std::string to_string(const RationalPolynomial& p, std::string_view var)
{
    if (p.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    const auto cs = p.coeffs();
    for (std::size_t i = cs.size(); i-- > 0;) {
        const Rational& c = cs[i];
        if (c.is_zero()) {
            continue;
        }
        const Rational mag = abs(c);
        if (first) {
            if (c.sign() < 0) {
                os << '-';
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag;
        } else {
            if (mag != Rational(1)) {
                os << mag << '*';
            }
            append_monomial(os, i, var);
        }
    }
    return os.str();
}

std::string to_string(const LambdaXPolynomial& p, std::string_view var, std::string_view inner_var)
{
    if (p.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    const auto cs = p.coeffs();
    for (std::size_t i = cs.size(); i-- > 0;) {
        if (cs[i].is_zero()) {
            continue;
        }
        if (!first) {
            os << " + ";
        }
        first = false;
        const std::string inner = to_string(cs[i], inner_var);
        if (i == 0) {
            os << '(' << inner << ')';
        } else {
            os << '(' << inner << ")*";
            append_monomial(os, i, var);
        }
    }
    return os.str();
}

} // namespace degen
