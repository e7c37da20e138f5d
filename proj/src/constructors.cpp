#include "radred/constructors.hpp"

#include "radred/coeffs.hpp"

#include <string>

namespace radred {

InstanceParams InstanceParams::make(long p, const Rational& d, const Rational& R) {
    coeffs::require_odd_p(p);
    if (d.is_zero()) throw AssumptionError("d must be nonzero (d in K \\ {0})");
    if (R.is_zero()) throw AssumptionError("R must be nonzero (R in K \\ {0})");
    Rational D = d * d - R;
    if (D.is_zero()) throw AssumptionError("D = d^2 - R must be nonzero");
    return {p, d, R, D};
}

void require_irrational_sqrt(const Rational& R) {
    if (rational_is_square(R)) {
        throw AssumptionError("sqrt(R) is rational for R = " + R.to_string() + "; sqrt(R) must not lie in K");
    }
}

namespace {

BiCoeff R_symbolic() { return BiCoeff::monomial(1, 2, 0) - BiCoeff::D(); }

BiCoeff D_pow(int e) { return BiCoeff::monomial(1, 0, e); }

std::size_t idx(long k) { return static_cast<std::size_t>(k); }

}  // namespace

namespace symbolic {

BiCoeffPoly f(long p) {
    coeffs::require_odd_p(p);
    const long h = (p - 1) / 2;
    std::vector<BiCoeff> v(idx(p) + 1);
    for (long k = 0; k <= h; ++k) v[idx(2 * k + 1)] = BiCoeff::monomial(coeffs::c(p, k), 0, static_cast<int>(h - k));
    v[0] = BiCoeff::monomial(-2, 1, static_cast<int>(h));
    return BiCoeffPoly(std::move(v));
}

ClearedPoly A(long p) {
    coeffs::require_odd_p(p);
    const long h = (p - 1) / 2;
    std::vector<BiCoeff> v(idx(p));
    for (long k = 0; k <= h; ++k) v[idx(2 * k)] = BiCoeff::monomial(coeffs::a(p, k), 0, static_cast<int>(h - k));
    Rational sign = ((p + 1) / 2) % 2 == 0 ? 1 : -1;
    v[1] = BiCoeff::monomial(sign, 1, static_cast<int>(h - 1));
    return {BiCoeffPoly(std::move(v)), BiCoeff(2) * R_symbolic() * D_pow(static_cast<int>(h))};
}

ClearedPoly fprime(long p) {
    coeffs::require_odd_p(p);
    const long m = (p - 3) / 2;
    std::vector<BiCoeff> v(idx(p - 1));
    for (long j = 0; j <= m; ++j) v[idx(2 * j + 1)] = BiCoeff::monomial(coeffs::cprime(p, j), 0, static_cast<int>(m - j));
    v[0] = BiCoeff::monomial(-2, 1, static_cast<int>(m));
    return {BiCoeffPoly(std::move(v)), R_symbolic() * D_pow(static_cast<int>(p - 3))};
}

}  // namespace symbolic

namespace concrete {

RatPoly f(const InstanceParams& params) {
    const long p = params.p;
    const long h = (p - 1) / 2;
    const Rational Dh = params.D.pow(h);
    std::vector<Rational> v(idx(p) + 1);
    for (long k = 0; k <= h; ++k) v[idx(2 * k + 1)] = Dh * coeffs::c(p, k) / params.D.pow(k);
    v[0] = -Rational(2) * params.d * Dh;
    return RatPoly(std::move(v));
}

RatPoly A(const InstanceParams& params) {
    const long p = params.p;
    const long h = (p - 1) / 2;
    const Rational inv2R = (Rational(2) * params.R).inverse();
    std::vector<Rational> v(idx(p));
    for (long k = 0; k <= h; ++k) v[idx(2 * k)] = inv2R * coeffs::a(p, k) / params.D.pow(k);
    Rational sign = ((p + 1) / 2) % 2 == 0 ? 1 : -1;
    v[1] = sign * params.d / (Rational(2) * params.R * params.D);
    return RatPoly(std::move(v));
}

RatPoly fprime(const InstanceParams& params) {
    const long p = params.p;
    const long m = (p - 3) / 2;
    const Rational scale = (params.R * params.D.pow(m)).inverse();
    std::vector<Rational> v(idx(p - 1));
    for (long j = 0; j <= m; ++j) v[idx(2 * j + 1)] = scale * coeffs::cprime(p, j) / params.D.pow(j);
    v[0] = -Rational(2) * params.d * scale;
    return RatPoly(std::move(v));
}

GFactorization g_h(const InstanceParams& params) {
    require_irrational_sqrt(params.R);
    const std::size_t p = idx(params.p);
    RatPoly base = RatPoly::monomial(1, p) - RatPoly({params.d});
    RatPoly g = base * base - RatPoly({params.R});

    std::vector<QuadExt> h(p + 1, QuadExt::zero(params.R));
    std::vector<QuadExt> hp(p + 1, QuadExt::zero(params.R));
    h[p] = hp[p] = QuadExt(1, 0, params.R);
    h[0] = QuadExt(-params.d, -1, params.R);
    hp[0] = QuadExt(-params.d, 1, params.R);
    return {std::move(g), QuadPoly(std::move(h)), QuadPoly(std::move(hp))};
}

}  // namespace concrete

}  // namespace radred
