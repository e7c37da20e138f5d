#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace radred {

/// Raised when an input breaks one of the standing assumptions on (p, d, R).
/// The message names the violated assumption.
class AssumptionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised for malformed textual input.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Integer = mpz_class;

std::string to_string(const Integer& n);

/// Exact fraction, always stored in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    explicit Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den);

    /// Parses "[-]digits[/digits]". The denominator must be positive.
    static Rational parse(std::string_view text);

    Integer numerator() const { return v_.get_num(); }
    Integer denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational abs() const;
    Rational inverse() const;
    /// Integer power; negative exponents require a nonzero base.
    Rational pow(long e) const;

    std::string to_string() const;
    double to_double() const { return v_.get_d(); }
    const mpq_class& raw() const { return v_; }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { Rational r; r.v_ = -v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

private:
    mpq_class v_;
};

/// Nonnegative rational square root of q, if q is the square of a rational.
std::optional<Rational> rational_is_square(const Rational& q);

/// The real rational z with z^p = q, if it exists. p must be odd and >= 3.
std::optional<Rational> rational_odd_root(const Rational& q, long p);

/// Default trial-division bound used by squarefree_part.
inline constexpr std::uint64_t kSquarefreeTrialBound = 1'000'000;

/// Unique squarefree integer m with q = m * (rational square).
///
/// Trial division runs up to `trial_bound`; the leftover cofactor is settled by
/// a perfect-square test and a probable-prime test, and whenever it is below
/// trial_bound^3 it has at most two prime factors, so the answer is exact.
/// A cofactor that cannot be settled raises std::domain_error.
Integer squarefree_part(const Rational& q, std::uint64_t trial_bound = kSquarefreeTrialBound);

/// q = scale^2 * rest with scale > 0. Square factors are removed as far as
/// trial division and a perfect-square test on the cofactor find them, so rest
/// equals squarefree_part(q) whenever that succeeds; it never throws for q != 0.
struct SquareSplit {
    Rational scale;
    Integer rest;
};
SquareSplit split_square(const Rational& q, std::uint64_t trial_bound = kSquarefreeTrialBound);

/// Element a + b*sqrt(R) of Q(sqrt R). R is a nonzero rational that is not a
/// square; it travels with every element and mixing fields is an error.
class QuadExt {
public:
    QuadExt(Rational a, Rational b, Rational radicand);

    static QuadExt zero(const Rational& radicand) { return {0, 0, radicand}; }
    static QuadExt sqrt_of(const Rational& radicand) { return {0, 1, radicand}; }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& radicand() const { return r_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    /// a - b*sqrt(R).
    QuadExt conjugate() const { return {a_, -b_, r_}; }
    /// a^2 - R b^2.
    Rational norm() const { return a_ * a_ - r_ * b_ * b_; }
    QuadExt inverse() const;
    QuadExt pow(long e) const;

    /// Same number written over sqrt(new_radicand); requires radicand/new_radicand
    /// to be a positive rational square.
    QuadExt rebased(const Rational& new_radicand) const;

    std::string to_string() const;

    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator*=(const Rational& s);

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend QuadExt operator*(QuadExt x, const Rational& s) { return x *= s; }
    friend QuadExt operator*(const Rational& s, QuadExt x) { return x *= s; }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }
    QuadExt operator-() const { return {-a_, -b_, r_}; }

    friend bool operator==(const QuadExt& x, const QuadExt& y);

    friend std::ostream& operator<<(std::ostream& os, const QuadExt& q) { return os << q.to_string(); }

private:
    void check_field(const QuadExt& o) const;

    Rational a_;
    Rational b_;
    Rational r_;
};

/// Exact binomial coefficient; zero when n < 0 or n > m (m >= 0).
Integer binomial(long m, long n);

}  // namespace radred
