#include "radred/selftest.hpp"

#include "radred/numeric_verify.hpp"
#include "radred/reduce.hpp"

#include <functional>

namespace radred {

namespace {

CheckResult run_check(const std::string& name, const std::function<std::string()>& body) {
    CheckResult r{name, true, ""};
    try {
        std::string problem = body();
        if (!problem.empty()) {
            r.pass = false;
            r.witness = problem;
        }
    } catch (const std::exception& ex) {
        r.pass = false;
        r.witness = std::string("exception: ") + ex.what();
    }
    return r;
}

Rational q(const char* text) { return Rational::parse(text); }

/// 2^{4/7}(-1 +- sqrt(6)/2), written independently of the reduction.
Expr example2_value(long sign) {
    return Expr::mul({Expr::pow(Expr::nth_root(Expr::rational(2), 7), 4),
                      Expr::add({Expr::rational(-1), Expr::mul({Expr::rational(Rational(sign, 2)),
                                                                Expr::sqrt(Expr::rational(6))})})});
}

}  // namespace

std::vector<CheckResult> golden_checks() {
    std::vector<CheckResult> out;
    out.push_back(run_check("example_p5_d2_R5", [] {
        ReductionResult r = reduce_radical(5, 2, 5);
        if (!(r.g == rat_poly({-1, 0, 0, 0, 0, -4, 0, 0, 0, 0, 1}))) return "g = " + render(r.g);
        if (!(r.params.D == Rational(-1))) return "D = " + r.params.D.to_string();
        if (!(r.f == rat_poly({-4, 5, 0, 5, 0, 1}))) return "f = " + render(r.f);
        if (!(r.A == Rational(1, 10) * rat_poly({2, 2, 4, 0, 1}))) return "A = " + render_with_content(r.A);
        if (!r.z || !(*r.z == Rational(-1))) return std::string("z is not -1");
        if (r.u) return "unexpected rational root " + r.u->to_string();
        return std::string();
    }));
    out.push_back(run_check("example_p7_d-2158_R4656966", [] {
        ReductionResult r = reduce_radical(7, -2158, q("4656966"));
        if (!(r.g == rat_poly({-2, 0, 0, 0, 0, 0, 0, 4316, 0, 0, 0, 0, 0, 0, 1}))) return "g = " + render(r.g);
        if (!(r.params.D == Rational(-2))) return "D = " + r.params.D.to_string();
        if (!r.u || !(*r.u == Rational(4))) return std::string("u = 4 not found");
        NumericOptions opts;
        BranchResidual res = branch_residual(r, opts);
        if (res.residual.log2_abs() >= -200) return "residual " + res.residual.to_string(6);
        for (long sign : {1, -1}) {
            numeric::BigFloat expected = evaluate_checked(example2_value(sign), opts.bits, 200);
            bool hit = numeric::within(res.plus_value - expected, 200, expected) ||
                       numeric::within(res.minus_value - expected, 200, expected);
            if (!hit) return "no branch equals 2^(4/7)(-1 " + std::string(sign > 0 ? "+" : "-") + " sqrt(6)/2)";
        }
        return std::string();
    }));
    out.push_back(run_check("construct_p7_D-2_u4", [] {
        ConstructedExample c = construct_example(7, -2, 4);
        if (!(c.params.d == Rational(-2158))) return "d = " + c.params.d.to_string();
        if (!(c.params.R == Rational(6 * 881 * 881))) return "R = " + c.params.R.to_string();
        ReductionResult r = reduce_radical(7, c.params.d, c.params.R);
        if (!r.u || !(*r.u == Rational(4))) return std::string("round trip lost u = 4");
        return std::string();
    }));
    out.push_back(run_check("instance_p3_d-7_R50", [] {
        ReductionResult r = reduce_radical(3, -7, 50);
        if (!r.u || !(*r.u == Rational(2))) return std::string("u != 2");
        if (!r.z || !(*r.z == Rational(-1))) return std::string("z != -1");
        if (!r.exact) return std::string("no exact branches");
        QuadExt plus = r.exact->plus.rebased(2);
        if (!(plus == QuadExt(-1, 1, 2))) return "plus branch = " + plus.to_string();
        if (!(plus.pow(3) == QuadExt(-7, 5, 2))) return "(sqrt2 - 1)^3 = " + plus.pow(3).to_string();
        if (!(r.exact->plus_pow_p == QuadExt(-7, 1, 50))) return "plus^3 = " + r.exact->plus_pow_p.to_string();
        return std::string();
    }));
    out.push_back(run_check("euclid_3_5_and_7_48", [] {
        auto e = euclid_denest(3, 5);
        if (!e || !(e->pair.a == Rational(5, 2)) || !(e->pair.b == Rational(1, 2)) || !e->certified) {
            return std::string("euclid_denest(3, 5)");
        }
        auto b = euclid_biquadratic(7, 48);
        if (!b || !(b->inner == Rational(1)) || !(b->half_k == Rational(1, 2)) || !b->certified) {
            return std::string("euclid_biquadratic(7, 48)");
        }
        return std::string();
    }));
    out.push_back(run_check("classify_p7_example", [] {
        CaseReport c = classify(7, -2158, q("4656966"));
        if (c.cyclotomic_field_equal || c.basis_case != 'b') return std::string("expected field inequality and case b");
        return std::string();
    }));
    out.push_back(run_check("identity_sweep_to_11", [] {
        for (long p = 3; p <= 11; p += 2) {
            VerificationReport rep = full_verification(p);
            if (const CheckResult* bad = rep.first_failure()) {
                return "p=" + std::to_string(p) + " " + bad->name + ": " + bad->witness;
            }
        }
        return std::string();
    }));
    return out;
}

VerificationReport full_verification(long p) {
    VerificationReport out{p, {}};
    auto append = [&](const VerificationReport& part, const std::string& group) {
        for (auto c : part.checks) {
            c.name = group + "/" + c.name;
            out.checks.push_back(std::move(c));
        }
    };
    append(verify_expansion(p), "expansion");
    append(verify_fundamental_identity(p), "identity");
    if (p >= 5) append(verify_recursions(p), "recursions");
    return out;
}

}  // namespace radred
