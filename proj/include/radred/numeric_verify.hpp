#pragma once

// Numerical cross-checks of exact reductions. Every published number is
// computed at B and 2B bits; disagreement raises numeric::PrecisionError.

#include "radred/numeric.hpp"
#include "radred/reduce.hpp"

#include <optional>
#include <vector>

namespace radred {

struct NumericOptions {
    long bits = numeric::kDefaultBits;
    /// Tolerance is 2^-tolerance_exp; 0 means bits - 56.
    long tolerance_exp = 0;

    long effective_tolerance_exp() const { return tolerance_exp > 0 ? tolerance_exp : bits - 56; }
};

/// The real zero u = z^{(p-1)/2}(y + z/y) of f with y, z the real p-th roots
/// of d + sqrt R and D, polished by Newton on f. Needs R > 0.
numeric::BigFloat real_zero_of_f(const InstanceParams& params, long bits);

/// Bindings for the symbols a ReductionResult's expressions may contain.
Bindings bindings_for(const ReductionResult& result);

struct BranchResidual {
    numeric::BigFloat plus_value;
    numeric::BigFloat minus_value;
    /// max over branches of |(v^p - d)^2 - R|.
    numeric::BigFloat residual;
    /// One branch has v^p - d close to +sqrt R, the other close to -sqrt R.
    bool pinned = false;
    /// "h" when the plus branch is the zero of Z^p - d - sqrt R, "h'" otherwise.
    std::string plus_zero_of;
    bool within_tolerance = false;
};

/// Needs a real instance (R > 0); otherwise raises numeric::DomainError.
BranchResidual branch_residual(const ReductionResult& result, const NumericOptions& options = {});

struct BijectionReport {
    long p = 0;
    std::vector<numeric::Complex> u_values;  // u_k, k = 0..p-1
    numeric::BigFloat min_pairwise_distance;
    numeric::BigFloat max_relative_residual;  // max_k |f(u_k)| / sum_i |c_i| |u_k|^i
    numeric::BigFloat zeta_route_difference;  // |zeta_newton - zeta_series|
    bool distinct = false;
    bool all_zeros = false;
    bool conjugate_symmetric = false;  // u_{p-k} = conj(u_k); meaningful for R > 0
    bool y_is_zero_of_h = false;
    bool pass() const { return distinct && all_zeros; }
};

/// Forms u_k = z^{(p-1)/2} (y zeta^k + y' zeta^-k) from one zero y of h and
/// checks they are p distinct zeros of f.
BijectionReport verify_bijection(long p, const Rational& d, const Rational& R, const NumericOptions& options = {},
                                 long max_p = 13);

/// Index k with u_k equal to `value` within 2^-tolerance_exp (relative).
std::optional<std::size_t> index_of_value(const BijectionReport& report, const Rational& value, long tolerance_exp);

/// |lhs - rhs| for two real expressions, each evaluated with dual-precision agreement.
numeric::BigFloat expression_gap(const Expr& lhs, const Expr& rhs, const NumericOptions& options = {});

}  // namespace radred
