#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <string_view>

namespace resum {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

constexpr int kDefaultDigits = 64;
constexpr int kMinDigits = 30;

// Working precision is process wide (the mpfr default precision is a plain
// static).  Set it once before building values and before any threads start.
struct Precision {
    int decimal_digits = kDefaultDigits;
};

void set_precision(Precision p);
Precision current_precision();
// RESUM_PRECISION overrides the fallback when set.
Precision precision_from_env(int fallback = kDefaultDigits);

class PrecisionScope {
public:
    explicit PrecisionScope(int digits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    int saved_;
};

// 10^(e) at working precision, handy for tolerances written as 10^(8-digits).
Real pow10(int e);
Real eps_digits(int slack);  // 10^(slack - digits)

Real parse_real(std::string_view text);  // throws ParseError
std::string to_string(const Real& x, int digits = 0);  // 0: working precision

bool is_finite(const Real& x);

struct Cx {
    Real re;
    Real im;

    Cx() = default;
    Cx(const Real& r) : re(r), im(0) {}
    Cx(const Real& r, const Real& i) : re(r), im(i) {}
    Cx(int r) : re(r), im(0) {}

    bool operator==(const Cx& o) const { return re == o.re && im == o.im; }

    Cx& operator+=(const Cx& o) { re += o.re; im += o.im; return *this; }
    Cx& operator-=(const Cx& o) { re -= o.re; im -= o.im; return *this; }
    Cx& operator*=(const Cx& o);
    Cx& operator/=(const Cx& o);
};

Cx operator+(Cx a, const Cx& b);
Cx operator-(Cx a, const Cx& b);
Cx operator*(Cx a, const Cx& b);
Cx operator/(Cx a, const Cx& b);
Cx operator-(const Cx& a);
Cx conj(const Cx& a);
Real abs(const Cx& a);
Real norm(const Cx& a);
Cx exp(const Cx& a);
Cx log(const Cx& a);  // principal branch
Cx pow(const Cx& a, const Real& e);
Cx sqrt(const Cx& a);
bool is_real(const Cx& a);  // exactly zero imaginary part

}  // namespace resum
