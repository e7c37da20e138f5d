#include "radred/numeric.hpp"

#include <cmath>
#include <utility>
#include <vector>

namespace radred::numeric {

BigFloat::BigFloat(long bits) {
    mpfr_init2(v_, static_cast<mpfr_prec_t>(bits));
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long value, long bits) : BigFloat(bits) { mpfr_set_si(v_, value, MPFR_RNDN); }

BigFloat::BigFloat(const Rational& q, long bits) : BigFloat(bits) { mpfr_set_q(v_, q.raw().get_mpq_t(), MPFR_RNDN); }

BigFloat::BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

namespace {

long common_bits(const BigFloat& x, const BigFloat& y) { return std::max(x.bits(), y.bits()); }

template <class Op>
BigFloat binary(const BigFloat& x, const BigFloat& y, Op op) {
    BigFloat r(common_bits(x, y));
    op(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

}  // namespace

BigFloat operator+(const BigFloat& x, const BigFloat& y) { return binary(x, y, mpfr_add); }
BigFloat operator-(const BigFloat& x, const BigFloat& y) { return binary(x, y, mpfr_sub); }
BigFloat operator*(const BigFloat& x, const BigFloat& y) { return binary(x, y, mpfr_mul); }
BigFloat operator/(const BigFloat& x, const BigFloat& y) {
    if (y.is_zero()) throw std::domain_error("division by zero");
    return binary(x, y, mpfr_div);
}

BigFloat BigFloat::operator-() const {
    BigFloat r(bits());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r(bits());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::ldexp(long e) const {
    BigFloat r(bits());
    mpfr_mul_2si(r.v_, v_, e, MPFR_RNDN);
    return r;
}

double BigFloat::log2_abs() const {
    if (is_zero()) return -INFINITY;
    long e = 0;
    double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
    return std::log2(std::fabs(m)) + static_cast<double>(e);
}

std::string BigFloat::to_string(int digits) const {
    if (is_zero()) return "0";
    std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
    return buf.data();
}

BigFloat pow2(long e, long bits) { return BigFloat(1, bits).ldexp(e); }

BigFloat pow(const BigFloat& x, long e) {
    if (e < 0) return BigFloat(1, x.bits()) / pow(x, -e);
    BigFloat result(1, x.bits());
    BigFloat base = x;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

BigFloat max(const BigFloat& x, const BigFloat& y) { return x < y ? y : x; }

namespace {

/// Double approximation of |x|^(1/n), returned as mantissa * 2^exponent so that
/// inputs far outside the double range still get a usable seed.
std::pair<double, long> root_seed(const BigFloat& x, long n) {
    long e = 0;
    double m = std::fabs(mpfr_get_d_2exp(&e, x.raw(), MPFR_RNDN));
    long q = e >= 0 ? e / n : -((-e + n - 1) / n);
    long r = e - q * n;
    return {std::pow(std::ldexp(m, static_cast<int>(r)), 1.0 / static_cast<double>(n)), q};
}

BigFloat from_double(double v, long bits) {
    BigFloat r(bits);
    mpfr_set_d(r.raw(), v, MPFR_RNDN);
    return r;
}

constexpr int kMaxNewtonSteps = 200;

}  // namespace

BigFloat nth_root(const BigFloat& x, long n) {
    if (n < 2) throw std::invalid_argument("root index must be >= 2");
    if (x.is_zero()) return BigFloat(x.bits());
    if (x.sign() < 0) {
        if (n % 2 == 0) throw DomainError("even root of a negative number in real mode");
        return -nth_root(-x, n);
    }
    const long bits = x.bits();
    auto [seed, shift] = root_seed(x, n);
    BigFloat y = from_double(seed, bits).ldexp(shift);
    const BigFloat n_big(n, bits);
    const BigFloat n_minus_1(n - 1, bits);
    for (int step = 0; step < kMaxNewtonSteps; ++step) {
        BigFloat next = (n_minus_1 * y + x / pow(y, n - 1)) / n_big;
        BigFloat delta = (next - y).abs();
        y = std::move(next);
        if (delta <= y.abs().ldexp(-(bits - 4))) break;
    }
    return y;
}

BigFloat sqrt(const BigFloat& x) { return nth_root(x, 2); }

BigFloat pi(long bits) {
    BigFloat r(bits);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

namespace {

/// sum_k (-1)^k x^(2k+offset) / (2k+offset)!
BigFloat alternating_series(const BigFloat& x, int offset) {
    const long bits = x.bits();
    const long wp = bits + 32;
    BigFloat xw(wp);
    mpfr_set(xw.raw(), x.raw(), MPFR_RNDN);
    BigFloat term = offset == 0 ? BigFloat(1, wp) : xw;
    BigFloat sum = term;
    BigFloat x2 = xw * xw;
    BigFloat cutoff = pow2(-(wp + 8), wp);
    for (long k = 1; k < 100000; ++k) {
        long a = 2 * k + offset - 1;
        term = -(term * x2) / BigFloat(a * (a + 1), wp);
        sum += term;
        if (term.abs() < cutoff) break;
    }
    BigFloat out(bits);
    mpfr_set(out.raw(), sum.raw(), MPFR_RNDN);
    return out;
}

}  // namespace

BigFloat cos_series(const BigFloat& x) { return alternating_series(x, 0); }
BigFloat sin_series(const BigFloat& x) { return alternating_series(x, 1); }

Complex operator/(const Complex& x, const Complex& y) {
    BigFloat n = y.norm2();
    if (n.is_zero()) throw std::domain_error("complex division by zero");
    Complex num = x * y.conj();
    return {num.re / n, num.im / n};
}

Complex pow(const Complex& x, long e) {
    if (e < 0) return Complex(BigFloat(1, x.bits()), BigFloat(x.bits())) / pow(x, -e);
    Complex result(BigFloat(1, x.bits()), BigFloat(x.bits()));
    Complex base = x;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

namespace {

Complex newton_root(const Complex& w, long n, Complex y) {
    const long bits = w.bits();
    const BigFloat n_big(n, bits);
    const BigFloat inv_n = BigFloat(1, bits) / n_big;
    const BigFloat n_minus_1(n - 1, bits);
    for (int step = 0; step < kMaxNewtonSteps; ++step) {
        Complex next = inv_n * (n_minus_1 * y + w / pow(y, n - 1));
        BigFloat delta = (next - y).norm2();
        y = std::move(next);
        if (delta <= y.norm2().ldexp(-2 * (bits - 4))) break;
    }
    return y;
}

}  // namespace

Complex principal_root(const Complex& w, long n) {
    if (n < 2) throw std::invalid_argument("root index must be >= 2");
    const long bits = w.bits();
    if (w.re.is_zero() && w.im.is_zero()) return Complex(bits);
    long e_re = 0;
    long e_im = 0;
    double m_re = w.re.is_zero() ? 0.0 : mpfr_get_d_2exp(&e_re, w.re.raw(), MPFR_RNDN);
    double m_im = w.im.is_zero() ? 0.0 : mpfr_get_d_2exp(&e_im, w.im.raw(), MPFR_RNDN);
    long e = std::max(w.re.is_zero() ? e_im : e_re, w.im.is_zero() ? e_re : e_im);
    double re = std::ldexp(m_re, static_cast<int>(std::max(-1000L, e_re - e)));
    double im = std::ldexp(m_im, static_cast<int>(std::max(-1000L, e_im - e)));
    double arg = std::atan2(im, re) / static_cast<double>(n);
    BigFloat modulus = from_double(std::hypot(re, im), bits).ldexp(e);
    auto [seed, shift] = root_seed(modulus, n);
    BigFloat radius = from_double(seed, bits).ldexp(shift);
    Complex y(radius * from_double(std::cos(arg), bits), radius * from_double(std::sin(arg), bits));
    return newton_root(w, n, std::move(y));
}

Complex root_of_unity_newton(long p, long bits) {
    const double angle = 2.0 * M_PI / static_cast<double>(p);
    Complex seed(from_double(std::cos(angle), bits), from_double(std::sin(angle), bits));
    return newton_root(Complex(BigFloat(1, bits), BigFloat(bits)), p, std::move(seed));
}

Complex root_of_unity_series(long p, long bits) {
    BigFloat theta = pi(bits + 32).ldexp(1) / BigFloat(p, bits + 32);
    BigFloat c = cos_series(theta);
    BigFloat s = sin_series(theta);
    BigFloat cr(bits);
    BigFloat sr(bits);
    mpfr_set(cr.raw(), c.raw(), MPFR_RNDN);
    mpfr_set(sr.raw(), s.raw(), MPFR_RNDN);
    return {cr, sr};
}

bool within(const BigFloat& difference, long tolerance_exp, const BigFloat& scale) {
    BigFloat bound = max(BigFloat(1, scale.bits()), scale.abs()).ldexp(-tolerance_exp);
    return difference.abs() <= bound;
}

}  // namespace radred::numeric
