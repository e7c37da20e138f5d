#pragma once

#include "radred/exact_num.hpp"
#include "radred/numeric.hpp"

#include <json.hpp>

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace radred {

/// Small expression tree for values built from rationals by +, *, integer
/// powers, square roots and real n-th roots. A `symbol` leaf stands for a
/// value that has no closed form here (an irrational zero of f).
struct Expr {
    enum class Kind { Rational, Sqrt, NthRoot, Add, Mul, Pow, Symbol };

    Kind kind = Kind::Rational;
    radred::Rational value;      // Rational
    long index = 0;              // NthRoot: root index; Pow: exponent
    std::string name;            // Symbol
    std::vector<Expr> children;  // Sqrt/NthRoot/Pow: one; Add/Mul: any

    static Expr rational(radred::Rational q);
    static Expr sqrt(Expr arg);
    static Expr nth_root(Expr arg, long n);
    static Expr add(std::vector<Expr> terms);
    static Expr mul(std::vector<Expr> factors);
    static Expr pow(Expr base, long exponent);
    static Expr symbol(std::string name);

    /// Infix text, e.g. "root(-2, 7)^4*(-1 + 1/2*sqrt(6))".
    std::string to_text() const;

    friend bool operator==(const Expr& x, const Expr& y);
};

using ordered_json = nlohmann::ordered_json;

/// {"kind": "rational" | "sqrt" | "nth-root" | "add" | "mul" | "pow" | "symbol", ...}
ordered_json to_json(const Expr& e);
/// Inverse of to_json; throws ParseError on malformed input.
Expr expr_from_json(const ordered_json& j);

/// q*sqrt(R) written as s*sqrt(m) with m squarefree, or a plain rational when
/// R is a square.
Expr scaled_sqrt(const radred::Rational& q, const radred::Rational& R);

/// Values for symbol leaves, produced at the requested precision.
using Bindings = std::map<std::string, std::function<numeric::BigFloat(long bits)>>;

/// Real evaluation at `bits` bits. Unbound symbols raise std::invalid_argument;
/// an even root of a negative value raises numeric::DomainError.
numeric::BigFloat evaluate(const Expr& e, long bits, const Bindings& bindings = {});

/// Evaluates at `bits` and 2*bits and returns the 2*bits value rounded to `bits`
/// once the two agree within 2^-tolerance_exp (relative to max(1, |value|));
/// otherwise raises numeric::PrecisionError.
numeric::BigFloat evaluate_checked(const Expr& e, long bits, long tolerance_exp, const Bindings& bindings = {});

}  // namespace radred
