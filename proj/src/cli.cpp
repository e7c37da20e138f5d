#include "radred/cli.hpp"

#include "radred/coeffs.hpp"
#include "radred/selftest.hpp"
#include "radred/serialize.hpp"

#include <CLI11.hpp>

#include <future>
#include <string>
#include <vector>

namespace radred::cli {

namespace {

struct Flags {
    long p = 0;
    std::string d;
    std::string R;
    std::string D;
    std::string u;
    bool numeric = false;
    long bits = numeric::kDefaultBits;
    long tolerance_exp = 0;
    bool fourth = false;
    std::string family;
    long p_max = 0;
};

NumericOptions numeric_options(const Flags& f) {
    if (f.bits < 64) throw CLI::ValidationError("--bits", "must be at least 64");
    return NumericOptions{f.bits, f.tolerance_exp};
}

int cmd_reduce(const Flags& f, std::ostream& out) {
    ReductionResult r = reduce_radical(f.p, Rational::parse(f.d), Rational::parse(f.R));
    ordered_json j = json::reduction(r);
    int code = kExitOk;
    if (f.numeric) {
        NumericOptions opts = numeric_options(f);
        BranchResidual res = branch_residual(r, opts);
        ordered_json nj = json::residual(res, opts);
        if (!r.u) nj["u_numeric"] = real_zero_of_f(r.params, opts.bits).to_string();
        if (r.params.p <= 13) {
            BijectionReport b = verify_bijection(r.params.p, r.params.d, r.params.R, opts);
            if (!b.pass()) code = kExitVerificationFailed;
            nj["bijection"] = json::bijection(b);
        }
        if (!res.pinned || !res.within_tolerance) code = kExitVerificationFailed;
        j["numeric"] = std::move(nj);
    }
    out << json::dump(j);
    return code;
}

int cmd_construct(const Flags& f, std::ostream& out) {
    Rational u = Rational::parse(f.u);
    ConstructedExample c = construct_example(f.p, Rational::parse(f.D), u);
    out << json::dump(json::construction(c, u));
    return kExitOk;
}

int cmd_euclid(const Flags& f, std::ostream& out) {
    Rational d = Rational::parse(f.d);
    Rational R = Rational::parse(f.R);
    if (f.fourth) {
        out << json::dump(json::euclid(d, R, euclid_biquadratic(d, R)));
    } else {
        out << json::dump(json::euclid(d, R, euclid_denest(d, R)));
    }
    return kExitOk;
}

int cmd_classify(const Flags& f, std::ostream& out) {
    out << json::dump(json::case_report(classify(f.p, Rational::parse(f.d), Rational::parse(f.R))));
    return kExitOk;
}

int cmd_coeffs(const Flags& f, std::ostream& out) {
    ordered_json j;
    j["p"] = f.p;
    j["family"] = f.family;
    j["values"] = json::rationals(coeffs::family(f.p, f.family));
    out << json::dump(j);
    return kExitOk;
}

int cmd_verify(const Flags& f, std::ostream& out) {
    if (f.p_max < 3) throw CLI::ValidationError("--p-max", "must be at least 3");
    std::vector<std::future<VerificationReport>> jobs;
    for (long p = 3; p <= f.p_max; p += 2) jobs.push_back(std::async(std::launch::async, full_verification, p));
    ordered_json arr = ordered_json::array();
    bool ok = true;
    for (auto& job : jobs) {
        VerificationReport rep = job.get();
        ok = ok && rep.passed();
        arr.push_back(json::verification(rep));
    }
    out << json::dump(arr);
    return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_selftest(std::ostream& out) {
    ordered_json arr = ordered_json::array();
    bool ok = true;
    for (const auto& c : golden_checks()) {
        ok = ok && c.pass;
        arr.push_back(ordered_json{{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
    }
    out << json::dump(arr);
    return ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Degree reduction of the radical (d + sqrt R)^(1/p) with exact verification", "radred"};
    app.require_subcommand(1);
    Flags f;

    auto add_p = [&](CLI::App* sub) { sub->add_option("--p", f.p, "odd exponent p >= 3")->required(); };
    auto add_dR = [&](CLI::App* sub) {
        sub->add_option("--d", f.d, "rational d")->required();
        sub->add_option("--R", f.R, "rational R")->required();
    };

    CLI::App* reduce = app.add_subcommand("reduce", "reduce y = (d + sqrt R)^(1/p)");
    add_p(reduce);
    add_dR(reduce);
    reduce->add_flag("--numeric", f.numeric, "add multiprecision residual checks");
    reduce->add_option("--bits", f.bits, "working precision in bits")->capture_default_str();
    reduce->add_option("--tolerance-exp", f.tolerance_exp, "residual tolerance 2^-E (default bits - 56)");

    CLI::App* construct = app.add_subcommand("construct", "build (d, R) such that u is a zero of f");
    add_p(construct);
    construct->add_option("--D", f.D, "rational D = d^2 - R")->required();
    construct->add_option("--u", f.u, "rational zero u of f")->required();

    CLI::App* euclid = app.add_subcommand("euclid", "Euclid's square-root and fourth-root reductions");
    add_dR(euclid);
    euclid->add_flag("--fourth", f.fourth, "reduce (d + sqrt R)^(1/4) instead of (d + sqrt R)^(1/2)");

    CLI::App* classify_cmd = app.add_subcommand("classify", "field conditions and basis case");
    add_p(classify_cmd);
    add_dR(classify_cmd);

    CLI::App* coeffs_cmd = app.add_subcommand("coeffs", "closed-form coefficient families");
    add_p(coeffs_cmd);
    coeffs_cmd->add_option("--family", f.family, "c | a | cprime | C | u")
        ->required()
        ->check(CLI::IsMember({"c", "a", "cprime", "C", "u"}));

    CLI::App* verify = app.add_subcommand("verify", "symbolic identity and recursion sweep over odd p");
    verify->add_option("--p-max", f.p_max, "largest p to check")->required();

    CLI::App* selftest = app.add_subcommand("selftest", "golden examples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (reduce->parsed()) return cmd_reduce(f, out);
        if (construct->parsed()) return cmd_construct(f, out);
        if (euclid->parsed()) return cmd_euclid(f, out);
        if (classify_cmd->parsed()) return cmd_classify(f, out);
        if (coeffs_cmd->parsed()) return cmd_coeffs(f, out);
        if (verify->parsed()) return cmd_verify(f, out);
        if (selftest->parsed()) return cmd_selftest(out);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const AssumptionError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const numeric::DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
    return kExitUsage;
}

}  // namespace radred::cli
