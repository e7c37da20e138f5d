#pragma once

// Multiprecision real/complex values for numerically checking exact results.
// MPFR supplies storage and correctly rounded +,-,*,/; every root is computed
// here by Newton iteration from a double-precision seed.

#include "radred/exact_num.hpp"

#include <mpfr.h>

#include <stdexcept>
#include <string>

namespace radred::numeric {

inline constexpr long kDefaultBits = 256;

/// Raised when results at B and 2B bits disagree beyond the tolerance.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised for an even root of a negative number in real mode.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class BigFloat {
public:
    explicit BigFloat(long bits = kDefaultBits);
    BigFloat(long value, long bits);
    BigFloat(const Rational& q, long bits);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(const BigFloat& o);
    BigFloat& operator=(BigFloat&& o) noexcept;
    ~BigFloat();

    long bits() const { return static_cast<long>(mpfr_get_prec(v_)); }
    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }

    BigFloat abs() const;
    /// x * 2^e.
    BigFloat ldexp(long e) const;
    /// Approximate log2|x| (-inf for zero).
    double log2_abs() const;
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Scientific notation with `digits` significant decimal digits.
    std::string to_string(int digits = 30) const;

    friend BigFloat operator+(const BigFloat& x, const BigFloat& y);
    friend BigFloat operator-(const BigFloat& x, const BigFloat& y);
    friend BigFloat operator*(const BigFloat& x, const BigFloat& y);
    friend BigFloat operator/(const BigFloat& x, const BigFloat& y);
    BigFloat operator-() const;
    BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
    BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
    BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }

    friend bool operator<(const BigFloat& x, const BigFloat& y) { return mpfr_less_p(x.v_, y.v_) != 0; }
    friend bool operator>(const BigFloat& x, const BigFloat& y) { return mpfr_greater_p(x.v_, y.v_) != 0; }
    friend bool operator<=(const BigFloat& x, const BigFloat& y) { return mpfr_lessequal_p(x.v_, y.v_) != 0; }

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

private:
    mpfr_t v_;
};

/// 2^e at the given precision.
BigFloat pow2(long e, long bits);
BigFloat pow(const BigFloat& x, long e);
BigFloat max(const BigFloat& x, const BigFloat& y);

/// Square root by Newton iteration; negative input raises DomainError.
BigFloat sqrt(const BigFloat& x);
/// Real n-th root (n >= 2). Odd n accepts any sign; even n needs x >= 0.
BigFloat nth_root(const BigFloat& x, long n);

/// pi from MPFR's constant; used only by the series route for roots of unity.
BigFloat pi(long bits);
/// cos and sin by Taylor series.
BigFloat cos_series(const BigFloat& x);
BigFloat sin_series(const BigFloat& x);

struct Complex {
    BigFloat re;
    BigFloat im;

    explicit Complex(long bits = kDefaultBits) : re(bits), im(bits) {}
    Complex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    long bits() const { return re.bits(); }
    Complex conj() const { return {re, -im}; }
    BigFloat norm2() const { return re * re + im * im; }
    BigFloat abs() const { return sqrt(norm2()); }

    friend Complex operator+(const Complex& x, const Complex& y) { return {x.re + y.re, x.im + y.im}; }
    friend Complex operator-(const Complex& x, const Complex& y) { return {x.re - y.re, x.im - y.im}; }
    friend Complex operator*(const Complex& x, const Complex& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend Complex operator*(const BigFloat& s, const Complex& x) { return {s * x.re, s * x.im}; }
    friend Complex operator/(const Complex& x, const Complex& y);
    Complex& operator+=(const Complex& o) { return *this = *this + o; }
    Complex& operator*=(const Complex& o) { return *this = *this * o; }
};

Complex pow(const Complex& x, long e);

/// Principal n-th root (argument in (-pi/n, pi/n]) by complex Newton iteration.
Complex principal_root(const Complex& w, long n);

/// exp(2 pi i / p) by Newton on Z^p - 1 from a double seed.
Complex root_of_unity_newton(long p, long bits);
/// exp(2 pi i / p) from the cos/sin series.
Complex root_of_unity_series(long p, long bits);

/// Tolerance 2^-exponent, scaled by max(1, |scale|).
bool within(const BigFloat& difference, long tolerance_exp, const BigFloat& scale);

}  // namespace radred::numeric
