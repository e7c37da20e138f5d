#pragma once

#include "radred/poly.hpp"

#include <string>
#include <vector>

namespace radred {

struct CheckResult {
    std::string name;
    bool pass = true;
    /// Empty on success; on failure names the first offending index or monomial.
    std::string witness;
};

struct VerificationReport {
    long p = 0;
    std::vector<CheckResult> checks;

    bool passed() const;
    /// First failing check, or nullptr.
    const CheckResult* first_failure() const;
};

/// X^p + 1 = sum_k C_{p-2k} X^k (X+1)^{p-2k}, with C from the linear system and
/// again from the closed-form c family; also the vanishing of the alternating binomial sum.
VerificationReport verify_expansion(long p);

/// Denominator-cleared fundamental identity in Q[d, D][Z], with R = d^2 - D:
///   Ã^2 = f * F̃' + (Z^2 - 4D)(d^2 - D) D^{p-3},
/// where A = Ã / (2 R D^{(p-1)/2}) and f' = F̃' / (R D^{p-3}). Also cross-checks
/// 4 D^2 A^2 R = f f' + Z^2 - 4D over Q at (d, D) = (2, -1).
VerificationReport verify_fundamental_identity(long p);

/// Same symbolic comparison for caller-supplied numerators; used to confirm that
/// corrupted inputs are caught.
CheckResult check_fundamental_identity(long p, const BiCoeffPoly& f, const BiCoeffPoly& A_numerator,
                                       const BiCoeffPoly& fprime_numerator);

/// Recursion certificates: the two-term recursion on s_k, the three-term recursion on
/// t_k and u_k, s_k = u_k, t_k = u_k, the ratio u_{k+1}/u_k, the closed forms of
/// u_1, t_2, t_3, and extraction of s_k, t_k from the symbolic products.
/// Requires p >= 5.
VerificationReport verify_recursions(long p);

}  // namespace radred
