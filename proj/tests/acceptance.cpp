// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include "radred/coeffs.hpp"
#include "radred/constructors.hpp"
#include "radred/expr.hpp"
#include "radred/identity.hpp"
#include "radred/numeric_verify.hpp"
#include "radred/reduce.hpp"

#include <mpfr.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace radred;
namespace num = radred::numeric;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void expect(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

struct Criterion {
    int id;
    const char* title;
    double time_limit_s;  // 0 for none
    std::function<Outcome()> body;
};

std::string first_failure(const VerificationReport& r) {
    const CheckResult* f = r.first_failure();
    return f ? "p=" + std::to_string(r.p) + " " + f->name + ": " + f->witness : "";
}

num::BigFloat mpfr_branch(int sign, long bits) {
    num::BigFloat two(2, bits + 64), r7(bits + 64), r(bits + 64), six(6, bits + 64), s6(bits + 64);
    mpfr_rootn_ui(r7.raw(), two.raw(), 7, MPFR_RNDN);
    mpfr_pow_ui(r.raw(), r7.raw(), 4, MPFR_RNDN);
    mpfr_sqrt(s6.raw(), six.raw(), MPFR_RNDN);
    num::BigFloat half = s6.ldexp(-1);
    num::BigFloat minus_one(-1, bits + 64);
    return r * (sign > 0 ? minus_one + half : minus_one - half);
}

Outcome example_one() {
    Outcome o;
    auto r = reduce_radical(5, 2, 5);
    o.expect(render(r.g) == "Z^10 - 4*Z^5 - 1", "g = " + render(r.g));
    o.expect(r.params.D == Rational(-1), "D = " + r.params.D.to_string());
    o.expect(render(r.f) == "Z^5 + 5*Z^3 + 5*Z - 4", "f = " + render(r.f));
    o.expect(render_with_content(r.A) == "(Z^4 + 4*Z^2 + 2*Z + 2)/10", "A = " + render_with_content(r.A));
    o.expect(r.z && *r.z == Rational(-1), "z is not -1");
    o.expect(r.f_rational_roots.empty(), "f has a rational root");
    return o;
}

Outcome example_two() {
    Outcome o;
    auto r = reduce_radical(7, -2158, 4656966);
    o.expect(render(r.g) == "Z^14 + 4316*Z^7 - 2", "g = " + render(r.g));
    o.expect(r.params.D == Rational(-2), "D = " + r.params.D.to_string());
    o.expect(r.u && *r.u == Rational(4), "u = 4 not found");
    if (!o.pass) return o;
    NumericOptions opts;  // 256 bits
    for (int sign : {1, -1}) {
        const Expr& branch = sign > 0 ? r.branch_plus : r.branch_minus;
        num::BigFloat v = evaluate_checked(branch, opts.bits, 200);
        num::BigFloat ref = mpfr_branch(sign, opts.bits);
        o.expect(num::within(v - ref, 200, ref), "branch differs from 2^(4/7)(-1 +- sqrt(6)/2)");
    }
    auto res = branch_residual(r, opts);
    o.expect(res.residual < num::pow2(-200, opts.bits), "residual " + res.residual.to_string(6));
    o.expect(res.pinned, "branches not matched to d + sqrt R and d - sqrt R");
    if (o.pass) o.detail = "residual " + res.residual.to_string(3);
    return o;
}

Outcome construction() {
    Outcome o;
    auto c = construct_example(7, -2, 4);
    o.expect(c.params.d == Rational(-2158), "d = " + c.params.d.to_string());
    o.expect(c.params.R == Rational(6) * Rational(881) * Rational(881), "R = " + c.params.R.to_string());
    auto r = reduce_radical(7, c.params.d, c.params.R);
    o.expect(r.u && *r.u == Rational(4), "reduce did not recover u = 4");
    return o;
}

Outcome identity_sweep() {
    Outcome o;
    for (long p = 3; p <= 61; p += 2) {
        auto r = verify_fundamental_identity(p);
        o.expect(r.passed(), first_failure(r));
    }
    return o;
}

Outcome expansion_sweep() {
    Outcome o;
    for (long p = 3; p <= 199; p += 2) {
        auto r = verify_expansion(p);
        o.expect(r.passed(), first_failure(r));
        auto C = coeffs::C_system(p);
        const long h = (p - 1) / 2;
        for (long k = 0; k <= h; ++k) {
            o.expect(C[static_cast<std::size_t>(k)] == coeffs::c(p, h - k), "p=" + std::to_string(p) + " C differs from c");
        }
    }
    return o;
}

Outcome hypergeometric() {
    Outcome o;
    for (long p = 5; p <= 99; p += 2) {
        const std::string tag = "p=" + std::to_string(p) + " ";
        for (long j = 1; j <= (p - 1) / 2; ++j) {
            o.expect(coeffs::gauss_sum(p, j).is_zero(), tag + "sum nonzero at j=" + std::to_string(j));
        }
        for (long k = 1; k <= p - 1; ++k) {
            o.expect(coeffs::s(p, k) == coeffs::u(p, k), tag + "s != u at k=" + std::to_string(k));
            if (k >= 2) o.expect(coeffs::t(p, k) == coeffs::u(p, k), tag + "t != u at k=" + std::to_string(k));
        }
        auto rec = verify_recursions(p);
        o.expect(rec.passed(), first_failure(rec));
        Rational P(p);
        Rational sq = (P - 1) * (P - 1);
        o.expect(coeffs::u(p, 1) == -sq, tag + "u_1");
        o.expect(coeffs::t(p, 2) == P * sq * (P - 2) / Rational(12), tag + "t_2");
        o.expect(coeffs::t(p, 3) == -P * sq * (P - 2) * (P - 3) * (P + 1) / Rational(360), tag + "t_3");
    }
    return o;
}

Outcome cubic_instance() {
    Outcome o;
    auto r = reduce_radical(3, -7, 50);
    o.expect(r.u && *r.u == Rational(2), "u != 2");
    o.expect(r.z && *r.z == Rational(-1), "z != -1");
    o.expect(r.exact.has_value(), "no exact branch");
    if (!o.pass) return o;
    QuadExt plus = r.exact->plus.rebased(2);
    o.expect(plus == QuadExt(-1, 1, 2), "branch = " + plus.to_string());
    o.expect(QuadExt(-1, 1, 2).pow(3) == QuadExt(-7, 5, 2), "(sqrt 2 - 1)^3 != 5 sqrt 2 - 7");
    o.expect(r.exact->plus_pow_p == QuadExt(-7, 1, 50), "branch^3 != -7 + sqrt 50");
    return o;
}

Outcome euclid() {
    Outcome o;
    NumericOptions opts;
    auto e = euclid_denest(3, 5);
    o.expect(e && e->pair.a == Rational(5, 2) && e->pair.b == Rational(1, 2) && e->certified, "(3, 5)");
    auto q = euclid_biquadratic(7, 48);
    o.expect(q && q->inner == Rational(1) && q->half_k == Rational(1, 2) && q->certified, "(7, 48)");
    if (!o.pass) return o;
    Expr nested2 = Expr::sqrt(Expr::add({Expr::rational(3), Expr::sqrt(Expr::rational(5))}));
    Expr nested4 = Expr::nth_root(Expr::add({Expr::rational(7), Expr::sqrt(Expr::rational(48))}), 4);
    num::BigFloat gap2 = expression_gap(e->pair.expr(), nested2, opts);
    num::BigFloat gap4 = expression_gap(q->expr(), nested4, opts);
    o.expect(gap2 < num::pow2(-200, opts.bits), "sqrt gap " + gap2.to_string(6));
    o.expect(gap4 < num::pow2(-200, opts.bits), "fourth-root gap " + gap4.to_string(6));
    return o;
}

Outcome bijection() {
    Outcome o;
    struct Case {
        long p;
        Rational d;
        Rational R;
    };
    NumericOptions opts;
    for (const Case& c : {Case{3, -7, 50}, Case{5, 2, 5}, Case{7, -2158, 4656966}}) {
        auto rep = verify_bijection(c.p, c.d, c.R, opts);
        const std::string tag = "p=" + std::to_string(c.p) + " ";
        o.expect(rep.u_values.size() == static_cast<std::size_t>(c.p), tag + "wrong count");
        o.expect(rep.distinct, tag + "values not distinct");
        o.expect(rep.max_relative_residual < num::pow2(-180, opts.bits),
                 tag + "residual " + rep.max_relative_residual.to_string(6));
    }
    return o;
}

Outcome mutation() {
    Outcome o;
    for (long p : {3L, 5L, 7L}) {
        BiCoeffPoly f = symbolic::f(p);
        BiCoeffPoly A = symbolic::A(p).numerator;
        BiCoeffPoly fp = symbolic::fprime(p).numerator;
        o.expect(check_fundamental_identity(p, f, A, fp).pass, "unmutated identity fails");
        auto bump = [](const BiCoeffPoly& g, std::size_t i) { return g + BiCoeffPoly::monomial(BiCoeff(1), i); };
        auto caught = [&](const CheckResult& r, const std::string& what) {
            o.expect(!r.pass && !r.witness.empty(), "p=" + std::to_string(p) + " mutation of " + what + " not caught");
        };
        for (std::size_t i = 0; i <= static_cast<std::size_t>(f.degree()); ++i) {
            caught(check_fundamental_identity(p, bump(f, i), A, fp), "f[" + std::to_string(i) + "]");
        }
        for (std::size_t i = 0; i <= static_cast<std::size_t>(A.degree()); ++i) {
            caught(check_fundamental_identity(p, f, bump(A, i), fp), "A[" + std::to_string(i) + "]");
        }
        for (std::size_t i = 0; i <= static_cast<std::size_t>(fp.degree()); ++i) {
            caught(check_fundamental_identity(p, f, A, bump(fp, i)), "f'[" + std::to_string(i) + "]");
        }
    }
    if (o.pass) {
        auto sample = check_fundamental_identity(5, symbolic::f(5) + BiCoeffPoly::monomial(BiCoeff(1), 1),
                                                 symbolic::A(5).numerator, symbolic::fprime(5).numerator);
        o.detail = "e.g. " + sample.witness;
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "worked example p=5 reproduced exactly", 1.0, example_one},
        {2, "worked example p=7 exact and numeric", 1.0, example_two},
        {3, "construction from (7, -2, 4) and round trip", 0.0, construction},
        {4, "fundamental identity for odd p in [3, 61]", 60.0, identity_sweep},
        {5, "expansion for odd p in [3, 199]", 60.0, expansion_sweep},
        {6, "hypergeometric sums and recursions for odd p in [5, 99]", 60.0, hypergeometric},
        {7, "cubic instance (3, -7, 50)", 0.0, cubic_instance},
        {8, "square-root and fourth-root denesting", 0.0, euclid},
        {9, "bijection between zeros of h and f", 0.0, bijection},
        {10, "single-coefficient corruption detected", 0.0, mutation},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
            std::ostringstream msg;
            msg << "runtime " << secs << " s exceeds " << c.time_limit_s << " s";
            if (o.pass) o.detail = msg.str();
            o.pass = false;
        }
        std::printf("%s criterion %2d: %s (%.3f s)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs,
                    o.detail.empty() ? "" : " - ", o.detail.c_str());
        if (!o.pass) ++failures;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
