#pragma once

#include "radred/exact_num.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

namespace radred {

/// Sparse polynomial in the two indeterminates d and D with rational
/// coefficients. Keys are (deg_d, deg_D); zero coefficients are never stored.
class BiCoeff {
public:
    using Exponents = std::pair<int, int>;
    using Terms = std::map<Exponents, Rational>;

    BiCoeff() = default;
    BiCoeff(const Rational& c) { add_term(0, 0, c); }  // NOLINT(google-explicit-constructor)
    BiCoeff(long c) : BiCoeff(Rational(c)) {}         // NOLINT(google-explicit-constructor)

    static BiCoeff monomial(const Rational& c, int deg_d, int deg_D);
    static BiCoeff d() { return monomial(1, 1, 0); }
    static BiCoeff D() { return monomial(1, 0, 1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of d^i D^j (zero when absent).
    Rational coefficient(int deg_d, int deg_D) const;

    Rational evaluate(const Rational& d, const Rational& D) const;

    std::string to_string() const;

    BiCoeff& operator+=(const BiCoeff& o);
    BiCoeff& operator-=(const BiCoeff& o);
    BiCoeff& operator*=(const BiCoeff& o);

    friend BiCoeff operator+(BiCoeff x, const BiCoeff& y) { return x += y; }
    friend BiCoeff operator-(BiCoeff x, const BiCoeff& y) { return x -= y; }
    friend BiCoeff operator*(const BiCoeff& x, const BiCoeff& y) { BiCoeff r = x; return r *= y; }
    BiCoeff operator-() const;

    friend bool operator==(const BiCoeff& x, const BiCoeff& y) { return x.terms_ == y.terms_; }

private:
    void add_term(int deg_d, int deg_D, const Rational& c);

    Terms terms_;
};

/// Rendering of d^i*D^j as "d^i*D^j" ("1" for the empty monomial).
std::string monomial_name(int deg_d, int deg_D);

namespace detail {

inline Rational zero_like(const Rational&) { return Rational(0); }
inline QuadExt zero_like(const QuadExt& q) { return QuadExt::zero(q.radicand()); }
inline BiCoeff zero_like(const BiCoeff&) { return BiCoeff(); }

inline const Rational& lift(const Rational& c, const Rational&) { return c; }
inline QuadExt lift(const Rational& c, const QuadExt& like) { return {c, 0, like.radicand()}; }
inline const QuadExt& lift(const QuadExt& c, const QuadExt&) { return c; }
inline const BiCoeff& lift(const BiCoeff& c, const BiCoeff&) { return c; }

}  // namespace detail

/// Dense univariate polynomial, coefficient index = degree. The top stored
/// coefficient is nonzero; the zero polynomial stores nothing.
template <class T>
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<T> coefficients) : c_(std::move(coefficients)) { normalize(); }

    /// c * Z^degree.
    static UniPoly monomial(const T& c, std::size_t degree) {
        std::vector<T> v(degree + 1, detail::zero_like(c));
        v[degree] = c;
        return UniPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    std::span<const T> coefficients() const { return c_; }
    const T& leading() const { return c_.back(); }

    /// Coefficient of Z^k, or `fallback` beyond the stored range.
    T coefficient(std::size_t k, const T& fallback) const { return k < c_.size() ? c_[k] : fallback; }

    /// Horner evaluation at x; `zero` fixes the value domain (and its field).
    template <class X>
    X evaluate(const X& x, const X& zero) const {
        X acc = zero;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc = acc * x;
            acc += detail::lift(*it, zero);
        }
        return acc;
    }
    Rational evaluate(const Rational& x) const
        requires std::is_same_v<T, Rational>
    {
        return evaluate(x, Rational(0));
    }

    /// Coefficient-wise map into another coefficient domain.
    template <class F>
    auto map(F&& f) const {
        using U = decltype(f(std::declval<const T&>()));
        std::vector<U> out;
        out.reserve(c_.size());
        for (const auto& x : c_) out.push_back(f(x));
        return UniPoly<U>(std::move(out));
    }

    UniPoly& operator+=(const UniPoly& o) {
        if (o.c_.size() > c_.size()) {
            for (std::size_t i = c_.size(); i < o.c_.size(); ++i) c_.push_back(detail::zero_like(o.c_[i]));
        }
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        normalize();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) { return *this += -o; }

    friend UniPoly operator+(UniPoly x, const UniPoly& y) { return x += y; }
    friend UniPoly operator-(UniPoly x, const UniPoly& y) { return x -= y; }
    friend UniPoly operator*(const UniPoly& x, const UniPoly& y) {
        if (x.is_zero() || y.is_zero()) return {};
        std::vector<T> out(x.c_.size() + y.c_.size() - 1, detail::zero_like(x.c_[0]));
        for (std::size_t i = 0; i < x.c_.size(); ++i) {
            if (x.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < y.c_.size(); ++j) out[i + j] += x.c_[i] * y.c_[j];
        }
        return UniPoly(std::move(out));
    }
    /// Exact scalar multiple.
    friend UniPoly operator*(const T& s, const UniPoly& x) {
        std::vector<T> out(x.c_);
        for (auto& c : out) c = s * c;
        return UniPoly(std::move(out));
    }

    UniPoly operator-() const {
        std::vector<T> out(c_);
        for (auto& c : out) c = -c;
        return UniPoly(std::move(out));
    }

    UniPoly pow(unsigned e) const {
        if (is_zero()) return e == 0 ? UniPoly({T(1)}) : UniPoly{};
        UniPoly result(std::vector<T>{one_like()});
        UniPoly base = *this;
        while (e > 0) {
            if (e & 1U) result = result * base;
            e >>= 1U;
            if (e > 0) base = base * base;
        }
        return result;
    }

    friend bool operator==(const UniPoly& x, const UniPoly& y) { return x.c_ == y.c_; }

private:
    T one_like() const {
        if constexpr (std::is_same_v<T, QuadExt>) {
            return QuadExt(1, 0, c_[0].radicand());
        } else {
            return T(1);
        }
    }

    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<T> c_;
};

using RatPoly = UniPoly<Rational>;
using QuadPoly = UniPoly<QuadExt>;
using BiCoeffPoly = UniPoly<BiCoeff>;

/// Polynomial in Z from coefficients listed by increasing degree.
RatPoly rat_poly(std::initializer_list<long> coefficients);

/// Canonical text form: descending powers, explicit signs, e.g. "Z^5 + 5*Z^3 + 5*Z - 4".
std::string render(const RatPoly& f, std::string_view var = "Z");
std::string render(const BiCoeffPoly& f, std::string_view var = "Z");

/// Coefficient strings, index = degree.
std::vector<std::string> coefficient_strings(const RatPoly& f);

/// Substitutes concrete d, D into every coefficient.
RatPoly substitute(const BiCoeffPoly& f, const Rational& d, const Rational& D);

/// Exactly the rational zeros of f (no multiplicities), in increasing order.
/// Throws std::invalid_argument for the zero polynomial.
std::vector<Rational> rational_roots(const RatPoly& f);

/// All positive divisors of n != 0. Factors by trial division and Pollard rho;
/// throws std::domain_error if the rho budget runs out.
std::vector<Integer> positive_divisors(const Integer& n);

}  // namespace radred

namespace radred {

/// Renders f as content * primitive integer polynomial, e.g.
/// "(Z^4 + 4*Z^2 + 2*Z + 2)/10".
std::string render_with_content(const RatPoly& f, std::string_view var = "Z");

}  // namespace radred
