#pragma once

#include "radred/constructors.hpp"
#include "radred/expr.hpp"

#include <optional>
#include <string>
#include <vector>

namespace radred {

/// Branch values of y and y' in Q(sqrt R), available when both z and u are rational.
struct ExactBranches {
    QuadExt plus;
    QuadExt minus;
    QuadExt plus_pow_p;   // plus^p, equals d + sqrt R or d - sqrt R
    QuadExt minus_pow_p;
    std::string plus_zero_of;  // "h" or "h'"
};

/// {y, y'} = (u +- sqrt(u^2 - 4D)) / (2 z^{(p-1)/2}), available when u is rational.
struct QuadraticForm {
    Rational discriminant;  // u^2 - 4D
    Expr plus;
    Expr minus;
    /// 4 D^2 A(u)^2 R == u^2 - 4D, checked exactly.
    bool discriminant_identity = false;
    /// For real instances (R > 0, discriminant > 0): which sign of the
    /// closed branch formula equals the "+" branch here.
    std::optional<std::string> closed_form_plus_matches;
};

struct NecessaryConditions {
    bool sqrt_R_irrational = true;
    bool D_nonzero = true;
    std::vector<Rational> g_rational_roots;

    bool g_has_no_rational_root() const { return g_rational_roots.empty(); }
};

struct ReductionResult {
    InstanceParams params;
    RatPoly g;
    RatPoly f;
    RatPoly A;
    std::optional<Rational> z;  // rational p-th root of D, if any
    std::vector<Rational> f_rational_roots;
    std::optional<Rational> u;  // smallest rational zero of f, if any
    Expr z_expr;
    Expr u_expr;
    /// z^{(p+1)/2} (u/(2D) +- A(u) sqrt R)
    Expr branch_plus;
    Expr branch_minus;
    std::optional<QuadraticForm> quadratic;
    std::optional<ExactBranches> exact;
    NecessaryConditions conditions;
};

/// Requires p odd >= 3, d, R, D nonzero, sqrt R irrational (AssumptionError otherwise).
ReductionResult reduce_radical(long p, const Rational& d, const Rational& R);

struct ConstructedExample {
    InstanceParams params;
    RatPoly g;
};

/// d = (1/2) sum_j c_{2j+1} u^{2j+1} / D^j and R = d^2 - D, so that u is a zero of f.
/// Rejects D = 0 and results with d = 0, R = 0 or sqrt R rational.
ConstructedExample construct_example(long p, const Rational& D, const Rational& u);

/// sqrt(a) + sqrt(b) with a, b >= 0; its square is (a + b) + sqrt(4ab).
struct SqrtPairSum {
    Rational a;
    Rational b;

    Rational squared_rational_part() const { return a + b; }
    Rational squared_radicand() const { return Rational(4) * a * b; }
    Expr expr() const { return Expr::add({Expr::sqrt(Expr::rational(a)), Expr::sqrt(Expr::rational(b))}); }
};

struct EuclidDenesting {
    Rational k;
    SqrtPairSum pair;     // sqrt((d+k)/2) + sqrt((d-k)/2)
    bool real_radicals;   // both radicands >= 0
    bool certified;       // pair squared == d + sqrt R exactly
};

/// sqrt(d + sqrt R) = sqrt((d+k)/2) + sqrt((d-k)/2) when d^2 - R = k^2.
/// Requires d, R > 0 and sqrt R irrational.
std::optional<EuclidDenesting> euclid_denest(const Rational& d, const Rational& R);

struct EuclidBiquadratic {
    Rational k;
    Rational inner;   // (d + k^2)/8
    Rational half_k;  // k/2
    /// y^2 = sqrt(4 inner) + sqrt(4 inner - k^2).
    SqrtPairSum y_squared;
    bool certified;   // (y^2)^2 == d + sqrt R exactly
    Expr expr() const;
};

/// (d + sqrt R)^(1/4) = sqrt(sqrt(inner) + k/2) + sqrt(sqrt(inner) - k/2) when d^2 - R = k^4.
std::optional<EuclidBiquadratic> euclid_biquadratic(const Rational& d, const Rational& R);

struct CaseReport {
    long p = 0;
    bool p_prime = false;
    bool applicable = false;
    Integer squarefree_R;
    Integer squarefree_cyclotomic;  // squarefree part of (-1)^{(p-1)/2} p
    bool cyclotomic_field_equal = false;
    std::string field_conclusion;
    char basis_case = 'b';
    std::string basis_description;
    std::string hypotheses;
};

CaseReport classify(long p, const Rational& d, const Rational& R);

bool is_prime(long n);

}  // namespace radred
