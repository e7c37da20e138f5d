#include "radred/numeric_verify.hpp"

#include <algorithm>

namespace radred {

using numeric::BigFloat;
using numeric::Complex;

namespace {

BigFloat sqrt_R(const Rational& R, long bits) {
    if (R.sign() < 0) throw numeric::DomainError("sqrt R is not real for R = " + R.to_string());
    return numeric::sqrt(BigFloat(R, bits));
}

BigFloat horner(const RatPoly& f, const BigFloat& x) {
    BigFloat acc(x.bits());
    auto cs = f.coefficients();
    for (std::size_t i = cs.size(); i-- > 0;) acc = acc * x + BigFloat(cs[i], x.bits());
    return acc;
}

Complex horner(const RatPoly& f, const Complex& x) {
    Complex acc(x.bits());
    auto cs = f.coefficients();
    for (std::size_t i = cs.size(); i-- > 0;) acc = acc * x + Complex(BigFloat(cs[i], x.bits()), BigFloat(x.bits()));
    return acc;
}

/// sum_i |c_i| |x|^i, the natural scale for the residual |f(x)|.
BigFloat residual_scale(const RatPoly& f, const BigFloat& abs_x) {
    BigFloat acc(abs_x.bits());
    auto cs = f.coefficients();
    for (std::size_t i = cs.size(); i-- > 0;) acc = acc * abs_x + BigFloat(cs[i].abs(), abs_x.bits());
    return acc;
}

RatPoly derivative(const RatPoly& f) {
    std::vector<Rational> v;
    auto cs = f.coefficients();
    for (std::size_t i = 1; i < cs.size(); ++i) v.push_back(cs[i] * Rational(static_cast<long>(i)));
    return RatPoly(std::move(v));
}

bool close(const BigFloat& a, const BigFloat& b, long tol_exp) { return numeric::within(a - b, tol_exp, b); }

}  // namespace

BigFloat real_zero_of_f(const InstanceParams& params, long bits) {
    const long p = params.p;
    BigFloat y = numeric::nth_root(BigFloat(params.d, bits) + sqrt_R(params.R, bits), p);
    BigFloat z = numeric::nth_root(BigFloat(params.D, bits), p);
    BigFloat u = numeric::pow(z, (p - 1) / 2) * (y + z / y);

    RatPoly f = concrete::f(params);
    RatPoly df = derivative(f);
    for (int step = 0; step < 8; ++step) {
        BigFloat fu = horner(f, u);
        BigFloat dfu = horner(df, u);
        if (dfu.is_zero()) break;
        BigFloat delta = fu / dfu;
        u -= delta;
        if (delta.abs() <= u.abs().ldexp(-(bits - 4))) break;
    }
    return u;
}

Bindings bindings_for(const ReductionResult& result) {
    Bindings b;
    if (!result.u) {
        InstanceParams params = result.params;
        b["u"] = [params](long bits) { return real_zero_of_f(params, bits); };
    }
    return b;
}

namespace {

struct BranchEval {
    BigFloat plus;
    BigFloat minus;
    BigFloat e_plus;   // plus^p - d
    BigFloat e_minus;
    BigFloat residual;
    BigFloat root_R;
};

BranchEval eval_branches(const ReductionResult& r, long bits, const Bindings& bindings) {
    const long p = r.params.p;
    BigFloat plus = evaluate(r.branch_plus, bits, bindings);
    BigFloat minus = evaluate(r.branch_minus, bits, bindings);
    BigFloat d(r.params.d, bits);
    BigFloat R(r.params.R, bits);
    BigFloat e_plus = numeric::pow(plus, p) - d;
    BigFloat e_minus = numeric::pow(minus, p) - d;
    BigFloat res = numeric::max((e_plus * e_plus - R).abs(), (e_minus * e_minus - R).abs());
    return {plus, minus, e_plus, e_minus, res, sqrt_R(r.params.R, bits)};
}

}  // namespace

BranchResidual branch_residual(const ReductionResult& result, const NumericOptions& options) {
    if (result.params.R.sign() < 0) {
        throw numeric::DomainError("real-mode residual needs R > 0; sqrt R is not real");
    }
    const long bits = options.bits;
    const long tol = options.effective_tolerance_exp();
    Bindings bindings = bindings_for(result);
    BranchEval low = eval_branches(result, bits, bindings);
    BranchEval high = eval_branches(result, 2 * bits, bindings);
    if (!close(low.plus, high.plus, tol) || !close(low.minus, high.minus, tol) ||
        !numeric::within(low.residual - high.residual, tol, BigFloat(1, bits))) {
        throw numeric::PrecisionError("branch values at " + std::to_string(bits) + " and " +
                                      std::to_string(2 * bits) + " bits disagree");
    }

    BranchResidual out{low.plus, low.minus, low.residual, false, "", false};
    BigFloat scale = numeric::max(BigFloat(result.params.d, bits).abs(), low.root_R);
    auto near = [&](const BigFloat& e, const BigFloat& target) { return numeric::within(e - target, tol, scale); };
    if (near(low.e_plus, low.root_R) && near(low.e_minus, -low.root_R)) {
        out.pinned = true;
        out.plus_zero_of = "h";
    } else if (near(low.e_plus, -low.root_R) && near(low.e_minus, low.root_R)) {
        out.pinned = true;
        out.plus_zero_of = "h'";
    }
    out.within_tolerance = numeric::within(low.residual, tol, BigFloat(result.params.R, bits));
    return out;
}

namespace {

struct BijectionRun {
    std::vector<Complex> u;
    BigFloat min_distance;
    BigFloat max_residual;
    BigFloat max_abs;
    BigFloat zeta_gap;
    BigFloat conj_gap;
    BigFloat h_residual;
};

BijectionRun bijection_run(const InstanceParams& params, long bits) {
    const long p = params.p;
    const long h = (p - 1) / 2;
    BigFloat zero(bits);

    Complex w(bits);
    Complex y(bits);
    if (params.R.sign() > 0) {
        w = Complex(BigFloat(params.d, bits) + sqrt_R(params.R, bits), zero);
        y = Complex(numeric::nth_root(w.re, p), zero);
    } else {
        w = Complex(BigFloat(params.d, bits), numeric::sqrt(BigFloat(-params.R, bits)));
        y = numeric::principal_root(w, p);
    }
    BigFloat z = numeric::nth_root(BigFloat(params.D, bits), p);
    Complex y_prime = Complex(z, zero) / y;

    Complex zeta = numeric::root_of_unity_newton(p, bits);
    Complex zeta_s = numeric::root_of_unity_series(p, bits);
    Complex zeta_inv = Complex(BigFloat(1, bits), zero) / zeta;
    BigFloat zh = numeric::pow(z, h);

    RatPoly f = concrete::f(params);
    BijectionRun run{{}, BigFloat(bits), BigFloat(bits), BigFloat(bits), (zeta - zeta_s).abs(), BigFloat(bits),
                     ((numeric::pow(y, p) - w).abs() / w.abs())};
    Complex zk(BigFloat(1, bits), zero);
    Complex zk_inv = zk;
    for (long k = 0; k < p; ++k) {
        Complex uk = zh * (y * zk + y_prime * zk_inv);
        BigFloat abs_u = uk.abs();
        BigFloat rel = horner(f, uk).abs() / residual_scale(f, abs_u);
        run.max_residual = numeric::max(run.max_residual, rel);
        run.max_abs = numeric::max(run.max_abs, abs_u);
        run.u.push_back(std::move(uk));
        zk *= zeta;
        zk_inv *= zeta_inv;
    }
    bool first = true;
    for (long i = 0; i < p; ++i) {
        for (long j = i + 1; j < p; ++j) {
            BigFloat dist = (run.u[static_cast<std::size_t>(i)] - run.u[static_cast<std::size_t>(j)]).abs();
            if (first || dist < run.min_distance) run.min_distance = dist;
            first = false;
        }
    }
    for (long k = 1; k < p; ++k) {
        BigFloat gap = (run.u[static_cast<std::size_t>(p - k)] - run.u[static_cast<std::size_t>(k)].conj()).abs();
        run.conj_gap = numeric::max(run.conj_gap, gap);
    }
    return run;
}

}  // namespace

BijectionReport verify_bijection(long p, const Rational& d, const Rational& R, const NumericOptions& options,
                                 long max_p) {
    InstanceParams params = InstanceParams::make(p, d, R);
    require_irrational_sqrt(R);
    if (p > max_p) {
        throw std::invalid_argument("bijection check limited to p <= " + std::to_string(max_p));
    }
    const long bits = options.bits;
    const long tol = options.effective_tolerance_exp();
    BijectionRun low = bijection_run(params, bits);
    BijectionRun high = bijection_run(params, 2 * bits);
    for (std::size_t k = 0; k < low.u.size(); ++k) {
        BigFloat gap = (low.u[k] - high.u[k]).abs();
        if (!numeric::within(gap, tol, high.u[k].abs())) {
            throw numeric::PrecisionError("u_" + std::to_string(k) + " differs between " + std::to_string(bits) +
                                          " and " + std::to_string(2 * bits) + " bits");
        }
    }

    BijectionReport rep;
    rep.p = p;
    rep.u_values = low.u;
    rep.min_pairwise_distance = low.min_distance;
    rep.max_relative_residual = low.max_residual;
    rep.zeta_route_difference = low.zeta_gap;
    rep.distinct = !numeric::within(low.min_distance, tol, low.max_abs);
    rep.all_zeros = numeric::within(low.max_residual, tol, BigFloat(1, bits));
    rep.conjugate_symmetric = numeric::within(low.conj_gap, tol, low.max_abs);
    rep.y_is_zero_of_h = numeric::within(low.h_residual, tol, BigFloat(1, bits));
    return rep;
}

std::optional<std::size_t> index_of_value(const BijectionReport& report, const Rational& value, long tolerance_exp) {
    for (std::size_t k = 0; k < report.u_values.size(); ++k) {
        const Complex& uk = report.u_values[k];
        long bits = uk.bits();
        Complex target(BigFloat(value, bits), BigFloat(bits));
        if (numeric::within((uk - target).abs(), tolerance_exp, target.re)) return k;
    }
    return std::nullopt;
}

BigFloat expression_gap(const Expr& lhs, const Expr& rhs, const NumericOptions& options) {
    const long tol = options.effective_tolerance_exp();
    BigFloat l = evaluate_checked(lhs, options.bits, tol);
    BigFloat r = evaluate_checked(rhs, options.bits, tol);
    return (l - r).abs();
}

}  // namespace radred
