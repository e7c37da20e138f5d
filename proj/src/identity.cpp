#include "radred/identity.hpp"

#include "radred/coeffs.hpp"
#include "radred/constructors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace radred {

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* VerificationReport::first_failure() const {
    for (const auto& c : checks) {
        if (!c.pass) return &c;
    }
    return nullptr;
}

namespace {

/// Collects failures as "index: detail" and keeps the first one as witness.
class Checker {
public:
    explicit Checker(std::string name) { result_.name = std::move(name); }

    void expect(bool ok, const std::string& detail) {
        if (ok || !result_.pass) return;
        result_.pass = false;
        result_.witness = detail;
    }

    CheckResult done() { return std::move(result_); }

private:
    CheckResult result_;
};

std::string show(const Rational& q) { return q.to_string(); }

/// First degree where two polynomials differ, rendered as a witness.
std::string first_difference(const RatPoly& lhs, const RatPoly& rhs) {
    long top = std::max(lhs.degree(), rhs.degree());
    for (long k = 0; k <= top; ++k) {
        auto i = static_cast<std::size_t>(k);
        Rational l = lhs.coefficient(i, 0);
        Rational r = rhs.coefficient(i, 0);
        if (!(l == r)) return "X^" + std::to_string(k) + ": lhs=" + show(l) + ", rhs=" + show(r);
    }
    return {};
}

RatPoly shifted_power(long k, long e) {
    // X^k (X+1)^e
    std::vector<Rational> v(static_cast<std::size_t>(k + e) + 1);
    for (long i = 0; i <= e; ++i) v[static_cast<std::size_t>(k + i)] = Rational(binomial(e, i));
    return RatPoly(std::move(v));
}

CheckResult expansion_with(long p, const std::vector<Rational>& C, const std::string& name) {
    Checker chk(name);
    RatPoly sum;
    for (long k = 0; k <= (p - 1) / 2; ++k) sum += C[static_cast<std::size_t>(k)] * shifted_power(k, p - 2 * k);
    RatPoly target = RatPoly::monomial(1, static_cast<std::size_t>(p)) + rat_poly({1});
    chk.expect(sum == target, first_difference(sum, target));
    return chk.done();
}

BiCoeff D_pow(long e) { return BiCoeff::monomial(1, 0, static_cast<int>(e)); }

BiCoeff R_symbolic() { return BiCoeff::monomial(1, 2, 0) - BiCoeff::D(); }

std::string first_difference(const BiCoeffPoly& lhs, const BiCoeffPoly& rhs) {
    long top = std::max(lhs.degree(), rhs.degree());
    for (long m = 0; m <= top; ++m) {
        auto i = static_cast<std::size_t>(m);
        BiCoeff l = lhs.coefficient(i, BiCoeff());
        BiCoeff r = rhs.coefficient(i, BiCoeff());
        if (l == r) continue;
        std::set<BiCoeff::Exponents> keys;
        for (const auto& [e, c] : l.terms()) keys.insert(e);
        for (const auto& [e, c] : r.terms()) keys.insert(e);
        for (const auto& e : keys) {
            Rational lc = l.coefficient(e.first, e.second);
            Rational rc = r.coefficient(e.first, e.second);
            if (lc == rc) continue;
            std::string mono = monomial_name(e.first, e.second);
            std::string z = m == 0 ? "" : (m == 1 ? "Z" : "Z^" + std::to_string(m));
            std::string name = mono == "1" ? (z.empty() ? "1" : z) : (z.empty() ? mono : z + "*" + mono);
            return name + ": lhs=" + show(lc) + ", rhs=" + show(rc);
        }
    }
    return {};
}

}  // namespace

VerificationReport verify_expansion(long p) {
    coeffs::require_odd_p(p);
    const long h = (p - 1) / 2;
    VerificationReport report{p, {}};

    std::vector<Rational> C = coeffs::C_system(p);
    std::vector<Rational> closed;
    for (long k = 0; k <= h; ++k) closed.push_back(coeffs::c(p, h - k));

    Checker leading("C_p_is_one");
    leading.expect(C.front() == Rational(1), "C_p=" + show(C.front()));
    report.checks.push_back(leading.done());

    Checker agree("system_matches_closed_form");
    for (long k = 0; k <= h; ++k) {
        auto i = static_cast<std::size_t>(k);
        agree.expect(C[i] == closed[i], "C_{p-" + std::to_string(2 * k) + "}: system=" + show(C[i]) +
                                            ", closed form=" + show(closed[i]));
    }
    report.checks.push_back(agree.done());

    report.checks.push_back(expansion_with(p, C, "expansion_with_system_solution"));
    report.checks.push_back(expansion_with(p, closed, "expansion_with_closed_form"));

    Checker vanish("alternating_sum_vanishes");
    vanish.expect(coeffs::gauss_sum(p, 0) == Rational(1), "j=0: " + show(coeffs::gauss_sum(p, 0)));
    for (long j = 1; j <= h; ++j) {
        Rational v = coeffs::gauss_sum(p, j);
        vanish.expect(v.is_zero(), "j=" + std::to_string(j) + ": " + show(v));
    }
    report.checks.push_back(vanish.done());
    return report;
}

CheckResult check_fundamental_identity(long p, const BiCoeffPoly& f, const BiCoeffPoly& A_numerator,
                                       const BiCoeffPoly& fprime_numerator) {
    Checker chk("fundamental_identity_symbolic");
    BiCoeffPoly lhs = A_numerator * A_numerator;
    BiCoeffPoly quad(std::vector<BiCoeff>{BiCoeff::monomial(-4, 0, 1), BiCoeff(), BiCoeff(1)});
    BiCoeffPoly rhs = f * fprime_numerator + (R_symbolic() * D_pow(p - 3)) * quad;
    chk.expect(lhs == rhs, first_difference(lhs, rhs));
    return chk.done();
}

VerificationReport verify_fundamental_identity(long p) {
    coeffs::require_odd_p(p);
    VerificationReport report{p, {}};

    BiCoeffPoly f = symbolic::f(p);
    ClearedPoly A = symbolic::A(p);
    ClearedPoly fp = symbolic::fprime(p);

    Checker denominators("cleared_denominators_consistent");
    // 4 D^2 R / den(A)^2 must equal 1 / den(f').
    BiCoeff lhs_den = BiCoeff(4) * D_pow(2) * R_symbolic() * fp.denominator;
    BiCoeff rhs_den = A.denominator * A.denominator;
    denominators.expect(lhs_den == rhs_den, "4 D^2 R den(f') = " + lhs_den.to_string() +
                                                ", den(A)^2 = " + rhs_den.to_string());
    report.checks.push_back(denominators.done());

    Checker degrees("degrees");
    degrees.expect(f.degree() == p, "deg f = " + std::to_string(f.degree()));
    degrees.expect(A.numerator.degree() == p - 1, "deg A = " + std::to_string(A.numerator.degree()));
    degrees.expect(fp.numerator.degree() == p - 2, "deg f' = " + std::to_string(fp.numerator.degree()));
    report.checks.push_back(degrees.done());

    report.checks.push_back(check_fundamental_identity(p, f, A.numerator, fp.numerator));

    Checker concrete_chk("fundamental_identity_at_d2_Dm1");
    InstanceParams params = InstanceParams::make(p, 2, 5);  // D = -1
    RatPoly cf = concrete::f(params);
    RatPoly cA = concrete::A(params);
    RatPoly cfp = concrete::fprime(params);
    const Rational& D = params.D;
    RatPoly lhs = (Rational(4) * D * D * params.R) * (cA * cA);
    RatPoly rhs = cf * cfp + RatPoly(std::vector<Rational>{Rational(-4) * D, 0, 1});
    concrete_chk.expect(lhs == rhs, first_difference(lhs, rhs));
    concrete_chk.expect(substitute(f, params.d, D) == cf, "symbolic f at (2, -1) differs from concrete f");
    report.checks.push_back(concrete_chk.done());
    return report;
}

VerificationReport verify_recursions(long p) {
    coeffs::require_odd_p(p);
    if (p < 5) throw std::invalid_argument("recursion certificates need p >= 5");
    VerificationReport report{p, {}};
    const Rational P(p);
    auto K = [](long k) { return Rational(k); };

    std::vector<Rational> s(static_cast<std::size_t>(p)), t(static_cast<std::size_t>(p)), u(static_cast<std::size_t>(p));
    for (long k = 1; k <= p - 1; ++k) {
        auto i = static_cast<std::size_t>(k);
        s[i] = coeffs::s(p, k);
        u[i] = coeffs::u(p, k);
        if (k >= 2) t[i] = coeffs::t(p, k);
    }
    auto at = [](const std::vector<Rational>& v, long k) { return v[static_cast<std::size_t>(k)]; };

    Checker rec22("s_recursion");
    for (long k = 1; k <= p - 2; ++k) {
        Rational lead = Rational(4) * K(k) * K(k) + Rational(6) * K(k) + 2;
        Rational tail = -K(k) * K(k) - Rational(2) * P + 1 + P * P;
        Rational v = lead * at(s, k + 1) + tail * at(s, k);
        rec22.expect(v.is_zero(), "k=" + std::to_string(k) + ": " + show(v));
    }
    report.checks.push_back(rec22.done());

    auto three_term = [&](const std::vector<Rational>& seq, const std::string& name) {
        Checker chk(name);
        for (long k = 2; k <= p - 3; ++k) {
            Rational kk = K(k);
            Rational a = Rational(16) * kk.pow(3) + Rational(64) * kk * kk + Rational(76) * kk + 24;
            Rational b = Rational(-8) * kk.pow(3) - Rational(12) * kk * kk - Rational(8) * P * kk +
                         Rational(4) * P * P * kk + Rational(2) * P * P - Rational(4) * P + 2;
            Rational c = kk.pow(3) - kk * kk - P * P * kk + Rational(2) * P * kk - kk + P * P - Rational(2) * P + 1;
            Rational v = a * at(seq, k + 2) + b * at(seq, k + 1) + c * at(seq, k);
            chk.expect(v.is_zero(), "k=" + std::to_string(k) + ": " + show(v));
        }
        return chk.done();
    };
    report.checks.push_back(three_term(t, "three_term_recursion_t"));
    report.checks.push_back(three_term(u, "three_term_recursion_u"));

    Checker su("s_equals_u");
    for (long k = 1; k <= p - 1; ++k) {
        su.expect(at(s, k) == at(u, k), "k=" + std::to_string(k) + ": s=" + show(at(s, k)) + ", u=" + show(at(u, k)));
    }
    report.checks.push_back(su.done());

    Checker tu("t_equals_u");
    for (long k = 2; k <= p - 1; ++k) {
        tu.expect(at(t, k) == at(u, k), "k=" + std::to_string(k) + ": t=" + show(at(t, k)) + ", u=" + show(at(u, k)));
    }
    report.checks.push_back(tu.done());

    Checker ratio("u_ratio");
    for (long k = 1; k <= p - 3; ++k) {
        Rational expected = -(-K(k) * K(k) - Rational(2) * P + 1 + P * P) /
                            (Rational(4) * K(k) * K(k) + Rational(6) * K(k) + 2);
        Rational got = at(u, k + 1) / at(u, k);
        ratio.expect(got == expected, "k=" + std::to_string(k) + ": " + show(got) + " vs " + show(expected));
    }
    report.checks.push_back(ratio.done());

    Checker closed("closed_forms_u1_t2_t3");
    Rational pm1 = P - 1;
    closed.expect(at(u, 1) == -(pm1 * pm1), "u_1=" + show(at(u, 1)));
    closed.expect(at(s, 1) == -(pm1 * pm1), "s_1=" + show(at(s, 1)));
    closed.expect(at(t, 2) == P * pm1 * pm1 * (P - 2) / 12, "t_2=" + show(at(t, 2)));
    closed.expect(at(t, 3) == -P * pm1 * pm1 * (P - 2) * (P - 3) * (P + 1) / 360, "t_3=" + show(at(t, 3)));
    report.checks.push_back(closed.done());

    // Z^{2k} coefficient of Ã^2 is s_k D^{p-1-k} (plus d^2 D^{p-3} when k = 1),
    // and that of f * F̃' is t_k D^{p-1-k}.
    BiCoeffPoly A = symbolic::A(p).numerator;
    BiCoeffPoly A2 = A * A;
    BiCoeffPoly ffp = symbolic::f(p) * symbolic::fprime(p).numerator;
    Checker s_sym("s_from_symbolic_A_squared");
    for (long k = 1; k <= p - 1; ++k) {
        BiCoeff coeff = A2.coefficient(static_cast<std::size_t>(2 * k), BiCoeff());
        BiCoeff expected = BiCoeff::monomial(at(s, k), 0, static_cast<int>(p - 1 - k));
        if (k == 1) expected += BiCoeff::monomial(1, 2, static_cast<int>(p - 3));
        s_sym.expect(coeff == expected, "Z^" + std::to_string(2 * k) + ": " + coeff.to_string() + " vs " +
                                            expected.to_string());
    }
    report.checks.push_back(s_sym.done());

    Checker t_sym("t_from_symbolic_f_fprime");
    for (long k = 2; k <= p - 1; ++k) {
        BiCoeff coeff = ffp.coefficient(static_cast<std::size_t>(2 * k), BiCoeff());
        BiCoeff expected = BiCoeff::monomial(at(t, k), 0, static_cast<int>(p - 1 - k));
        t_sym.expect(coeff == expected, "Z^" + std::to_string(2 * k) + ": " + coeff.to_string() + " vs " +
                                            expected.to_string());
    }
    report.checks.push_back(t_sym.done());
    return report;
}

}  // namespace radred
