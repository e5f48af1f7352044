#include "resum/real.hpp"

#include "resum/errors.hpp"

#include <cctype>
#include <cstdlib>

namespace resum {

namespace mp = boost::multiprecision;

void set_precision(Precision p)
{
    if (p.decimal_digits < kMinDigits)
        throw UsageError("precision must be at least " + std::to_string(kMinDigits) + " digits");
    mp::mpfr_float::default_precision(static_cast<unsigned>(p.decimal_digits));
}

Precision current_precision()
{
    return Precision{static_cast<int>(mp::mpfr_float::default_precision())};
}

Precision precision_from_env(int fallback)
{
    const char* env = std::getenv("RESUM_PRECISION");
    if (!env || !*env)
        return Precision{fallback};
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < kMinDigits || v > 100000)
        throw UsageError(std::string("RESUM_PRECISION: bad value '") + env + "'");
    return Precision{static_cast<int>(v)};
}

PrecisionScope::PrecisionScope(int digits) : saved_(current_precision().decimal_digits)
{
    set_precision(Precision{digits});
}

PrecisionScope::~PrecisionScope()
{
    mp::mpfr_float::default_precision(static_cast<unsigned>(saved_));
}

Real pow10(int e)
{
    return mp::pow(Real(10), e);
}

Real eps_digits(int slack)
{
    return pow10(slack - current_precision().decimal_digits);
}

namespace {

bool plain_decimal(std::string_view s)
{
    size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-'))
        ++i;
    bool digits = false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        ++i;
        digits = true;
    }
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            ++i;
            digits = true;
        }
    }
    if (!digits)
        return false;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-'))
            ++i;
        bool exp_digits = false;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            ++i;
            exp_digits = true;
        }
        if (!exp_digits)
            return false;
    }
    return i == s.size();
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

}  // namespace

Real parse_real(std::string_view text)
{
    std::string_view s = trim(text);
    // rationals like -308/729 are accepted and divided at working precision
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        Real num = parse_real(s.substr(0, slash));
        Real den = parse_real(s.substr(slash + 1));
        if (den == 0)
            throw ParseError("zero denominator in '" + std::string(text) + "'");
        return num / den;
    }
    if (!plain_decimal(s))
        throw ParseError("not a decimal number: '" + std::string(text) + "'");
    return Real(std::string(s));
}

std::string to_string(const Real& x, int digits)
{
    if (digits <= 0)
        digits = current_precision().decimal_digits;
    return x.str(digits, std::ios_base::scientific);
}

bool is_finite(const Real& x)
{
    return mp::isfinite(x);
}

Cx& Cx::operator*=(const Cx& o)
{
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
}

Cx& Cx::operator/=(const Cx& o)
{
    // scaled to avoid overflow when |o| is huge or tiny
    if (mp::abs(o.re) >= mp::abs(o.im)) {
        Real t = o.im / o.re;
        Real d = o.re + o.im * t;
        Real r = (re + im * t) / d;
        im = (im - re * t) / d;
        re = std::move(r);
    } else {
        Real t = o.re / o.im;
        Real d = o.re * t + o.im;
        Real r = (re * t + im) / d;
        im = (im * t - re) / d;
        re = std::move(r);
    }
    return *this;
}

Cx operator+(Cx a, const Cx& b) { return a += b; }
Cx operator-(Cx a, const Cx& b) { return a -= b; }
Cx operator*(Cx a, const Cx& b) { return a *= b; }
Cx operator/(Cx a, const Cx& b) { return a /= b; }
Cx operator-(const Cx& a) { return Cx(-a.re, -a.im); }
Cx conj(const Cx& a) { return Cx(a.re, -a.im); }

Real abs(const Cx& a)
{
    return mp::hypot(a.re, a.im);
}

Real norm(const Cx& a)
{
    return a.re * a.re + a.im * a.im;
}

Cx exp(const Cx& a)
{
    Real m = mp::exp(a.re);
    return Cx(m * mp::cos(a.im), m * mp::sin(a.im));
}

Cx log(const Cx& a)
{
    return Cx(mp::log(abs(a)), mp::atan2(a.im, a.re));
}

Cx pow(const Cx& a, const Real& e)
{
    if (a.im == 0 && a.re > 0)
        return Cx(mp::pow(a.re, e));
    if (a.re == 0 && a.im == 0)
        return e == 0 ? Cx(1) : Cx(0);
    return exp(log(a) * Cx(e));
}

Cx sqrt(const Cx& a)
{
    if (a.im == 0 && a.re >= 0)
        return Cx(mp::sqrt(a.re));
    Real m = abs(a);
    Real r = mp::sqrt((m + a.re) / 2);
    Real i = mp::sqrt((m - a.re) / 2);
    if (a.im < 0)
        i = -i;
    return Cx(r, i);
}

bool is_real(const Cx& a)
{
    return a.im == 0;
}

}  // namespace resum
