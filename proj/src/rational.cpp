#include "degen/rational.hpp"

#include <cctype>

#include "degen/errors.hpp"

namespace degen
{

Rational::Rational(long num, long den) : q_(num, den)
{
    if (den == 0) {
        throw ZeroDenominator();
    }
    q_.canonicalize();
}

Rational::Rational(const mpz_class& integer) : q_(integer) {}

Rational::Rational(mpq_class value) : q_(std::move(value))
{
    if (q_.get_den() == 0) {
        throw ZeroDenominator();
    }
    q_.canonicalize();
}

namespace
{

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole)
{
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) {
        throw ParseError("not a rational number: '" + std::string(whole) + "'");
    }
    mpz_class v(std::string(s), 10);
    return negative ? mpz_class(-v) : v;
}

Rational parse_decimal(std::string_view text)
{
    std::string_view s = text;
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        const mpz_class ex = parse_integer(s.substr(e + 1), text);
        if (!ex.fits_slong_p() || abs(ex) > 100000) {
            throw ParseError("exponent out of range: '" + std::string(text) + "'");
        }
        exponent = ex.get_si();
        s = s.substr(0, e);
    }
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        const auto ip = s.substr(0, dot);
        const auto fp = s.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
            (!fp.empty() && !all_digits(fp))) {
            throw ParseError("not a rational number: '" + std::string(text) + "'");
        }
        digits = std::string(ip) + std::string(fp);
        exponent -= static_cast<long>(fp.size());
    } else {
        if (!all_digits(s)) {
            throw ParseError("not a rational number: '" + std::string(text) + "'");
        }
        digits = std::string(s);
    }
    mpz_class mant(digits, 10);
    if (negative) {
        mant = -mant;
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    if (exponent >= 0) {
        return Rational(mpz_class(mant * scale));
    }
    return Rational(mpq_class(mant, scale));
}

} // namespace

Rational Rational::parse(std::string_view text)
{
    if (text.empty()) {
        throw ParseError("empty rational literal");
    }
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const mpz_class num = parse_integer(text.substr(0, slash), text);
        const mpz_class den = parse_integer(text.substr(slash + 1), text);
        if (den == 0) {
            throw ZeroDenominator();
        }
        return Rational(mpq_class(num, den));
    }
    return parse_decimal(text);
}

Rational Rational::from_double(double value)
{
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), value);
    return Rational(std::move(q));
}

std::optional<long> Rational::to_long() const
{
    if (!is_integer() || !q_.get_num().fits_slong_p()) {
        return std::nullopt;
    }
    return q_.get_num().get_si();
}

long double Rational::to_long_double() const
{
    // mpq -> double loses the extra long double bits; do the division in
    // long double when both parts are representable.
    const mpz_class& n = q_.get_num();
    const mpz_class& d = q_.get_den();
    if (n.fits_slong_p() && d.fits_slong_p()) {
        return static_cast<long double>(n.get_si()) / static_cast<long double>(d.get_si());
    }
    return static_cast<long double>(q_.get_d());
}

Rational& Rational::operator+=(const Rational& o)
{
    q_ += o.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    q_ -= o.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    q_ *= o.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) {
        throw ZeroDenominator();
    }
    q_ /= o.q_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Rational abs(const Rational& r)
{
    return r.sign() < 0 ? -r : r;
}

Rational pow(const Rational& base, long exponent)
{
    if (exponent < 0) {
        if (base.is_zero()) {
            throw ZeroDenominator();
        }
        return Rational(1) / pow(base, -exponent);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(mpq_class(num, den));
}

std::optional<Rational> try_inverse(const Rational& r)
{
    if (r.is_zero()) {
        return std::nullopt;
    }
    return Rational(1) / r;
}

Rational factorial(unsigned n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational binomial(long n, long k)
{
    if (k < 0) {
        return Rational(0);
    }
    if (n >= 0) {
        if (k > n) {
            return Rational(0);
        }
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return Rational(b);
    }
    mpz_class b;
    const mpz_class top(n);
    mpz_bin_ui(b.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
    return Rational(b);
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.str();
}

} // namespace degen
