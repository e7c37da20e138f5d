#include "radred/serialize.hpp"

#include <cmath>

namespace radred::json {

ordered_json poly(const RatPoly& f) {
    ordered_json arr = ordered_json::array();
    for (const auto& s : coefficient_strings(f)) arr.push_back(s);
    return arr;
}

ordered_json quad(const QuadExt& q) {
    return ordered_json{{"a", q.a().to_string()}, {"b", q.b().to_string()}, {"R", q.radicand().to_string()},
                        {"text", q.to_string()}};
}

ordered_json rationals(const std::vector<Rational>& values) {
    ordered_json arr = ordered_json::array();
    for (const auto& v : values) arr.push_back(v.to_string());
    return arr;
}

namespace {

ordered_json expr_entry(const Expr& e) { return ordered_json{{"text", e.to_text()}, {"expr", to_json(e)}}; }

ordered_json log2_floor(const numeric::BigFloat& x) {
    if (x.is_zero()) return nullptr;
    return static_cast<long>(std::floor(x.log2_abs()));
}

}  // namespace

ordered_json reduction(const ReductionResult& r) {
    ordered_json j;
    j["p"] = r.params.p;
    j["d"] = r.params.d.to_string();
    j["R"] = r.params.R.to_string();
    j["D"] = r.params.D.to_string();
    j["g"] = poly(r.g);
    j["g_text"] = render(r.g);
    j["f"] = poly(r.f);
    j["f_text"] = render(r.f);
    j["A"] = poly(r.A);
    j["A_text"] = render_with_content(r.A);
    j["z"] = r.z ? r.z->to_string() : "irrational";
    j["z_expr"] = expr_entry(r.z_expr);
    j["u"] = r.u ? r.u->to_string() : "irrational";
    j["u_expr"] = expr_entry(r.u_expr);
    j["f_rational_roots"] = rationals(r.f_rational_roots);
    j["branches"] = ordered_json{{"plus", expr_entry(r.branch_plus)}, {"minus", expr_entry(r.branch_minus)}};
    if (r.quadratic) {
        const auto& q = *r.quadratic;
        ordered_json qj;
        qj["discriminant"] = q.discriminant.to_string();
        qj["plus"] = expr_entry(q.plus);
        qj["minus"] = expr_entry(q.minus);
        qj["discriminant_identity"] = q.discriminant_identity;
        qj["closed_form_plus_matches"] = q.closed_form_plus_matches ? ordered_json(*q.closed_form_plus_matches) : ordered_json();
        j["quadratic_form"] = std::move(qj);
    } else {
        j["quadratic_form"] = nullptr;
    }
    if (r.exact) {
        j["exact_branches"] = ordered_json{{"plus", quad(r.exact->plus)},
                                           {"minus", quad(r.exact->minus)},
                                           {"plus_pow_p", quad(r.exact->plus_pow_p)},
                                           {"minus_pow_p", quad(r.exact->minus_pow_p)},
                                           {"plus_zero_of", r.exact->plus_zero_of}};
    } else {
        j["exact_branches"] = nullptr;
    }
    const auto& c = r.conditions;
    j["necessary_conditions"] = ordered_json{{"sqrt_R_irrational", c.sqrt_R_irrational},
                                             {"D_nonzero", c.D_nonzero},
                                             {"g_rational_roots", rationals(c.g_rational_roots)},
                                             {"g_has_no_rational_root", c.g_has_no_rational_root()},
                                             {"irreducibility_of_g", "not decided"}};
    return j;
}

ordered_json residual(const BranchResidual& r, const NumericOptions& options) {
    ordered_json j;
    j["bits"] = options.bits;
    j["tolerance_exp"] = options.effective_tolerance_exp();
    j["branch_values"] = ordered_json{{"plus", r.plus_value.to_string()}, {"minus", r.minus_value.to_string()}};
    j["residual"] = r.residual.to_string(6);
    j["residual_log2_floor"] = log2_floor(r.residual);
    j["pinned"] = r.pinned;
    j["plus_zero_of"] = r.plus_zero_of;
    j["within_tolerance"] = r.within_tolerance;
    return j;
}

ordered_json bijection(const BijectionReport& r) {
    ordered_json j;
    j["p"] = r.p;
    ordered_json us = ordered_json::array();
    for (const auto& u : r.u_values) us.push_back(ordered_json{{"re", u.re.to_string()}, {"im", u.im.to_string()}});
    j["u_values"] = std::move(us);
    j["min_pairwise_distance"] = r.min_pairwise_distance.to_string(6);
    j["max_relative_residual"] = r.max_relative_residual.to_string(6);
    j["max_relative_residual_log2_floor"] = log2_floor(r.max_relative_residual);
    j["zeta_route_difference"] = r.zeta_route_difference.to_string(6);
    j["distinct"] = r.distinct;
    j["all_zeros"] = r.all_zeros;
    j["conjugate_symmetric"] = r.conjugate_symmetric;
    j["y_is_zero_of_h"] = r.y_is_zero_of_h;
    j["pass"] = r.pass();
    return j;
}

ordered_json construction(const ConstructedExample& c, const Rational& u) {
    ordered_json j;
    j["p"] = c.params.p;
    j["D"] = c.params.D.to_string();
    j["u"] = u.to_string();
    j["d"] = c.params.d.to_string();
    j["R"] = c.params.R.to_string();
    j["g"] = poly(c.g);
    j["g_text"] = render(c.g);
    return j;
}

ordered_json euclid(const Rational& d, const Rational& R, const std::optional<EuclidDenesting>& e) {
    ordered_json j;
    j["formula"] = "square-root";
    j["d"] = d.to_string();
    j["R"] = R.to_string();
    if (!e) {
        j["result"] = "criterion fails";
        return j;
    }
    j["result"] = "denested";
    j["k"] = e->k.to_string();
    j["pair"] = rationals({e->pair.a, e->pair.b});
    j["text"] = e->pair.expr().to_text();
    j["real_radicals"] = e->real_radicals;
    j["certified"] = e->certified;
    return j;
}

ordered_json euclid(const Rational& d, const Rational& R, const std::optional<EuclidBiquadratic>& e) {
    ordered_json j;
    j["formula"] = "fourth-root";
    j["d"] = d.to_string();
    j["R"] = R.to_string();
    if (!e) {
        j["result"] = "criterion fails";
        return j;
    }
    j["result"] = "reduced";
    j["k"] = e->k.to_string();
    j["inner"] = e->inner.to_string();
    j["half_k"] = e->half_k.to_string();
    j["text"] = e->expr().to_text();
    j["certified"] = e->certified;
    return j;
}

ordered_json case_report(const CaseReport& c) {
    ordered_json j;
    j["p"] = c.p;
    j["p_prime"] = c.p_prime;
    j["applicable"] = c.applicable;
    j["squarefree_R"] = c.squarefree_R.get_str();
    j["squarefree_cyclotomic"] = c.squarefree_cyclotomic.get_str();
    j["cyclotomic_field_equal"] = c.cyclotomic_field_equal;
    j["field_conclusion"] = c.field_conclusion;
    j["basis_case"] = std::string(1, c.basis_case);
    j["basis_description"] = c.basis_description;
    j["hypotheses"] = c.hypotheses;
    return j;
}

ordered_json verification(const VerificationReport& r) {
    ordered_json j;
    j["p"] = r.p;
    j["pass"] = r.passed();
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks) {
        checks.push_back(ordered_json{{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
    }
    j["checks"] = std::move(checks);
    return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace radred::json
