#include "radred/reduce.hpp"

#include "radred/coeffs.hpp"

namespace radred {

namespace {

Expr z_power(const std::optional<Rational>& z, const Rational& D, long p, long e) {
    if (z) return Expr::rational(z->pow(e));
    return Expr::pow(Expr::nth_root(Expr::rational(D), p), e);
}

/// Multiplies by `factor` unless it is the rational 1.
Expr scaled(Expr factor, Expr value) {
    if (factor.kind == Expr::Kind::Rational && factor.value == Rational(1)) return value;
    if (factor.kind == Expr::Kind::Mul) {
        factor.children.push_back(std::move(value));
        return factor;
    }
    return Expr::mul({std::move(factor), std::move(value)});
}

Expr polynomial_in(const RatPoly& poly, const Expr& var) {
    std::vector<Expr> terms;
    auto cs = poly.coefficients();
    for (std::size_t i = cs.size(); i-- > 0;) {
        if (cs[i].is_zero()) continue;
        if (i == 0) {
            terms.push_back(Expr::rational(cs[i]));
            continue;
        }
        Expr power = i == 1 ? var : Expr::pow(var, static_cast<long>(i));
        terms.push_back(scaled(Expr::rational(cs[i]), std::move(power)));
    }
    return Expr::add(std::move(terms));
}

}  // namespace

ReductionResult reduce_radical(long p, const Rational& d, const Rational& R) {
    InstanceParams params = InstanceParams::make(p, d, R);
    require_irrational_sqrt(R);
    const long h = (p - 1) / 2;
    const Rational& D = params.D;

    ReductionResult res;
    res.params = params;
    res.f = concrete::f(params);
    res.A = concrete::A(params);
    res.g = concrete::g_h(params).g;
    res.conditions.g_rational_roots = rational_roots(res.g);

    res.z = rational_odd_root(D, p);
    res.z_expr = res.z ? Expr::rational(*res.z) : Expr::nth_root(Expr::rational(D), p);
    res.f_rational_roots = rational_roots(res.f);
    if (!res.f_rational_roots.empty()) res.u = res.f_rational_roots.front();
    res.u_expr = res.u ? Expr::rational(*res.u) : Expr::symbol("u");

    const Rational inv2D = (Rational(2) * D).inverse();
    Expr zpow = z_power(res.z, D, p, h + 1);
    if (res.u) {
        const Rational& u = *res.u;
        Rational Au = res.A.evaluate(u);
        res.branch_plus = scaled(zpow, Expr::add({Expr::rational(u * inv2D), scaled_sqrt(Au, R)}));
        res.branch_minus = scaled(zpow, Expr::add({Expr::rational(u * inv2D), scaled_sqrt(-Au, R)}));

        QuadraticForm q;
        q.discriminant = u * u - Rational(4) * D;
        Expr factor = res.z ? Expr::rational((Rational(2) * res.z->pow(h)).inverse())
                            : Expr::mul({Expr::rational(Rational(1, 2)), z_power(res.z, D, p, -h)});
        q.plus = scaled(factor, Expr::add({Expr::rational(u), scaled_sqrt(1, q.discriminant)}));
        q.minus = scaled(factor, Expr::add({Expr::rational(u), scaled_sqrt(-1, q.discriminant)}));
        q.discriminant_identity = Rational(4) * D * D * Au * Au * R == q.discriminant;
        if (R.sign() > 0 && q.discriminant.sign() > 0) {
            q.closed_form_plus_matches = (D * Au).sign() > 0 ? "plus" : "minus";
        }
        res.quadratic = std::move(q);

        if (res.z) {
            Rational zp = res.z->pow(h + 1);
            QuadExt plus = QuadExt(u * inv2D, Au, R) * zp;
            QuadExt minus = QuadExt(u * inv2D, -Au, R) * zp;
            QuadExt plus_p = plus.pow(p);
            QuadExt minus_p = minus.pow(p);
            std::string zero_of = plus_p == QuadExt(d, 1, R) ? "h" : (plus_p == QuadExt(d, -1, R) ? "h'" : "neither");
            res.exact = ExactBranches{plus, minus, plus_p, minus_p, zero_of};
        }
    } else {
        Expr u = Expr::symbol("u");
        Expr Au = polynomial_in(res.A, u);
        auto [s, rest] = split_square(R);
        Rational m(rest);
        Expr sqrt_m = Expr::sqrt(Expr::rational(m));
        Expr half = scaled(Expr::rational(inv2D), u);
        res.branch_plus = scaled(zpow, Expr::add({half, scaled(Expr::rational(s), Expr::mul({Au, sqrt_m}))}));
        res.branch_minus = scaled(zpow, Expr::add({half, scaled(Expr::rational(-s), Expr::mul({Au, sqrt_m}))}));
    }
    return res;
}

ConstructedExample construct_example(long p, const Rational& D, const Rational& u) {
    coeffs::require_odd_p(p);
    if (D.is_zero()) throw AssumptionError("D must be nonzero");
    Rational d;
    for (long j = 0; j <= (p - 1) / 2; ++j) d += coeffs::c(p, j) * u.pow(2 * j + 1) / D.pow(j);
    d /= Rational(2);
    if (d.is_zero()) {
        throw AssumptionError("constructed d is 0 for u = " + u.to_string() + "; d must be nonzero");
    }
    Rational R = d * d - D;
    if (R.is_zero()) throw AssumptionError("constructed R = d^2 - D is 0; R must be nonzero");
    require_irrational_sqrt(R);
    InstanceParams params = InstanceParams::make(p, d, R);
    return {params, concrete::g_h(params).g};
}

namespace {

void require_positive(const Rational& d, const Rational& R) {
    if (d.sign() <= 0 || R.sign() <= 0) {
        throw AssumptionError("Euclid's formulas need positive rationals d and R");
    }
    require_irrational_sqrt(R);
}

}  // namespace

std::optional<EuclidDenesting> euclid_denest(const Rational& d, const Rational& R) {
    require_positive(d, R);
    auto k = rational_is_square(d * d - R);
    if (!k) return std::nullopt;
    SqrtPairSum pair{(d + *k) / Rational(2), (d - *k) / Rational(2)};
    bool real = pair.a.sign() >= 0 && pair.b.sign() >= 0;
    bool certified = pair.squared_rational_part() == d && pair.squared_radicand() == R;
    return EuclidDenesting{*k, pair, real, certified};
}

std::optional<EuclidBiquadratic> euclid_biquadratic(const Rational& d, const Rational& R) {
    require_positive(d, R);
    auto k2 = rational_is_square(d * d - R);
    if (!k2) return std::nullopt;
    auto k = rational_is_square(*k2);
    if (!k) return std::nullopt;
    Rational inner = (d + *k2) / Rational(8);
    SqrtPairSum y2{Rational(4) * inner, Rational(4) * inner - *k2};
    bool certified = y2.squared_rational_part() == d && y2.squared_radicand() == R;
    return EuclidBiquadratic{*k, inner, *k / Rational(2), y2, certified};
}

Expr EuclidBiquadratic::expr() const {
    if (auto root = rational_is_square(inner)) {
        return Expr::add({Expr::sqrt(Expr::rational(*root + half_k)), Expr::sqrt(Expr::rational(*root - half_k))});
    }
    Expr s = Expr::sqrt(Expr::rational(inner));
    return Expr::add({Expr::sqrt(Expr::add({s, Expr::rational(half_k)})),
                      Expr::sqrt(Expr::add({s, Expr::rational(-half_k)}))});
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long f = 2; f * f <= n; ++f) {
        if (n % f == 0) return false;
    }
    return true;
}

CaseReport classify(long p, const Rational& d, const Rational& R) {
    InstanceParams params = InstanceParams::make(p, d, R);
    require_irrational_sqrt(R);
    CaseReport rep;
    rep.p = p;
    rep.p_prime = is_prime(p);
    rep.applicable = rep.p_prime;
    const long h = (p - 1) / 2;
    rep.squarefree_R = squarefree_part(R);
    rep.squarefree_cyclotomic = squarefree_part(Rational(h % 2 == 0 ? p : -p));
    rep.cyclotomic_field_equal = rep.squarefree_R == rep.squarefree_cyclotomic;
    rep.basis_case = rational_odd_root(params.D, p) ? 'a' : 'b';

    const std::string sq = "Q(sqrt(" + rep.squarefree_cyclotomic.get_str() + "))";
    if (rep.cyclotomic_field_equal) {
        rep.field_conclusion = "inconclusive: Q(sqrt R) = " + sq;
    } else {
        rep.field_conclusion = "Q(sqrt R) != " + sq +
                               "; if f is irreducible over Q, zeta_p is not in the splitting field L of f, "
                               "so L is not the splitting field of any Z^p - a";
    }
    if (rep.basis_case == 'a') {
        rep.basis_description = "u^k sqrt(R)^l, k = 0..p-1, l = 0..1, is a Q-basis of Q(y) = Q(y') = Q(u, sqrt R)";
    } else {
        rep.basis_description = "z^j u^k sqrt(R)^l, j, k = 0..p-1, l = 0..1, is a Q-basis of Q(z, u, sqrt R)";
    }
    rep.hypotheses = rep.applicable
                         ? "p prime; f irreducible over Q and zeta_p not in its splitting field (not certified here)"
                         : "classification not applicable: p = " + std::to_string(p) + " is not prime";
    return rep;
}

}  // namespace radred
