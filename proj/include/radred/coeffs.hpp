#pragma once

// Closed-form coefficient families of the polynomials f, A, f' and the sums
// used to certify the fundamental identity. All values are exact; p is an odd
// integer >= 3 throughout, and an even or too-small p raises
// std::invalid_argument.

#include "radred/exact_num.hpp"

#include <string_view>
#include <vector>

namespace radred::coeffs {

void require_odd_p(long p);

/// c_{2k+1}, the coefficient of Z^{2k+1}/D^k in f. Zero outside 0 <= k <= (p-1)/2.
/// Evaluated through both closed forms (indexed by 2k+1 and by p-2k); a
/// disagreement is a std::logic_error.
Rational c(long p, long k);

/// a_{2k}, the even coefficients of A. Zero outside 0 <= k <= (p-1)/2.
Rational a(long p, long k);

/// c'_{2j+1}, the coefficients of f'. Zero outside 0 <= j <= (p-3)/2.
Rational cprime(long p, long j);

/// Solution (C_p, C_{p-2}, ..., C_1) of the unitriangular system obtained by
/// matching low-order coefficients in X^p + 1 = sum_k C_{p-2k} X^k (X+1)^{p-2k}.
std::vector<Rational> C_system(long p);

/// u_k = (-1)^k (p-1)/k * binom(p+k-2, 2k-1), 1 <= k <= p-1.
Rational u(long p, long k);

/// s_k = sum_j a_{2j} a_{2(k-j)}, 1 <= k <= p-1.
Rational s(long p, long k);

/// t_k = sum_{j<k} c_{2j+1} c'_{2(k-j-1)+1}, 2 <= k <= p-1.
Rational t(long p, long k);

/// sum_{k=0}^{j} (-1)^k p/(p-k) binom(p-k, k) binom(p-2k, j-k), 0 <= j <= (p-1)/2.
/// Vanishes for j >= 1.
Rational gauss_sum(long p, long j);

/// Whole family in index order: "c" -> c_1..c_p (by k), "a" -> a_0..a_{p-1},
/// "cprime" -> c'_1..c'_{p-2}, "C" -> C_p..C_1, "u" -> u_1..u_{p-1}.
std::vector<Rational> family(long p, std::string_view name);

}  // namespace radred::coeffs
