#include "radred/exact_num.hpp"

#include <cctype>

namespace radred {

std::string to_string(const Integer& n) { return n.get_str(); }

Rational::Rational(const Integer& num, const Integer& den) : v_(num, den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num_part = body.substr(0, slash);
    std::string_view den_part = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num_part) || !all_digits(den_part)) {
        throw ParseError("not a rational number: '" + std::string(text) + "'");
    }
    Integer num(std::string(num_part), 10);
    Integer den(std::string(den_part), 10);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    if (negative) num = -num;
    return Rational(num, den);
}

Rational Rational::abs() const {
    Rational r;
    r.v_ = ::abs(v_);
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    // Powers of coprime integers stay coprime.
    Rational r;
    r.v_ = mpq_class(num, den);
    return r;
}

std::string Rational::to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

namespace {

std::optional<Integer> exact_root(const Integer& n, unsigned long k) {
    Integer r;
    if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) == 0) return std::nullopt;
    return r;
}

}  // namespace

std::optional<Rational> rational_is_square(const Rational& q) {
    if (q.sign() < 0) return std::nullopt;
    auto num = exact_root(q.numerator(), 2);
    if (!num) return std::nullopt;
    auto den = exact_root(q.denominator(), 2);
    if (!den) return std::nullopt;
    return Rational(*num, *den);
}

std::optional<Rational> rational_odd_root(const Rational& q, long p) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("rational_odd_root needs an odd exponent >= 3");
    Integer num = q.numerator();
    bool negative = sgn(num) < 0;
    if (negative) num = -num;
    auto rn = exact_root(num, static_cast<unsigned long>(p));
    if (!rn) return std::nullopt;
    auto rd = exact_root(q.denominator(), static_cast<unsigned long>(p));
    if (!rd) return std::nullopt;
    if (negative) *rn = -*rn;
    return Rational(*rn, *rd);
}

namespace {

struct TrialResult {
    Integer squarefree;  // product of primes below the bound with odd multiplicity, with sign
    Integer rest;        // cofactor free of primes below the bound
};

TrialResult trial_divide(const Rational& q, std::uint64_t trial_bound) {
    if (q.is_zero()) throw std::invalid_argument("squarefree part of zero is undefined");
    // n/d and n*d differ by the square d^2.
    Integer rest = q.numerator() * q.denominator();
    Integer result = sgn(rest) < 0 ? -1 : 1;
    if (sgn(rest) < 0) rest = -rest;

    for (std::uint64_t f = 2; f <= trial_bound; f += (f == 2 ? 1 : 2)) {
        Integer ff = Integer(static_cast<unsigned long>(f)) * static_cast<unsigned long>(f);
        if (ff > rest) break;
        int mult = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), f) != 0) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), f);
            ++mult;
        }
        if (mult % 2 == 1) result *= static_cast<unsigned long>(f);
    }
    return {result, rest};
}

}  // namespace

Integer squarefree_part(const Rational& q, std::uint64_t trial_bound) {
    auto [result, rest] = trial_divide(q, trial_bound);
    if (rest == 1) return result;

    // Every prime factor of `rest` now exceeds the trial bound, or rest itself is prime.
    if (mpz_perfect_square_p(rest.get_mpz_t()) != 0) return result;
    if (mpz_probab_prime_p(rest.get_mpz_t(), 40) != 0) return result * rest;
    Integer bound = static_cast<unsigned long>(trial_bound);
    if (rest < bound * bound * bound) {
        // Exactly two prime factors, distinct because rest is not a square.
        return result * rest;
    }
    throw std::domain_error("squarefree part: cofactor " + rest.get_str() + " exceeds the trial-division bound");
}

SquareSplit split_square(const Rational& q, std::uint64_t trial_bound) {
    auto [result, rest] = trial_divide(q, trial_bound);
    Integer m = mpz_perfect_square_p(rest.get_mpz_t()) != 0 ? result : Integer(result * rest);
    // q / m is a positive rational square by construction.
    return {*rational_is_square(q / Rational(m)), m};
}

QuadExt::QuadExt(Rational a, Rational b, Rational radicand)
    : a_(std::move(a)), b_(std::move(b)), r_(std::move(radicand)) {
    if (r_.is_zero() || rational_is_square(r_)) {
        throw AssumptionError("quadratic extension needs a non-square radicand, got " + r_.to_string());
    }
}

void QuadExt::check_field(const QuadExt& o) const {
    if (!(r_ == o.r_)) {
        throw std::invalid_argument("mixing Q(sqrt " + r_.to_string() + ") with Q(sqrt " + o.r_.to_string() + ")");
    }
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    check_field(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
    check_field(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    check_field(o);
    Rational na = a_ * o.a_ + r_ * b_ * o.b_;
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

QuadExt& QuadExt::operator*=(const Rational& s) {
    a_ *= s;
    b_ *= s;
    return *this;
}

bool operator==(const QuadExt& x, const QuadExt& y) {
    x.check_field(y);
    return x.a_ == y.a_ && x.b_ == y.b_;
}

QuadExt QuadExt::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in Q(sqrt R)");
    Rational n = norm();
    QuadExt c = conjugate();
    c *= n.inverse();
    return c;
}

QuadExt QuadExt::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    QuadExt result{1, 0, r_};
    QuadExt base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

QuadExt QuadExt::rebased(const Rational& new_radicand) const {
    auto scale = rational_is_square(r_ / new_radicand);
    if (!scale) {
        throw std::invalid_argument("Q(sqrt " + r_.to_string() + ") and Q(sqrt " + new_radicand.to_string() +
                                    ") differ by a non-square factor");
    }
    return {a_, b_ * *scale, new_radicand};
}

std::string QuadExt::to_string() const {
    std::string s = a_.to_string();
    s += b_.sign() < 0 ? " - " : " + ";
    s += b_.abs().to_string() + "*sqrt(" + r_.to_string() + ")";
    return s;
}

Integer binomial(long m, long n) {
    if (m < 0) throw std::invalid_argument("binomial with negative top index");
    if (n < 0 || n > m) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(n));
    return r;
}

}  // namespace radred
