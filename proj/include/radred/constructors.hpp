#pragma once

#include "radred/exact_num.hpp"
#include "radred/poly.hpp"

namespace radred {

/// Parameters of y = (d + sqrt R)^(1/p). D = d^2 - R is derived.
struct InstanceParams {
    long p = 0;
    Rational d;
    Rational R;
    Rational D;

    /// Validates p odd >= 3 and d, R, D nonzero; throws AssumptionError otherwise.
    static InstanceParams make(long p, const Rational& d, const Rational& R);
};

/// Throws AssumptionError when sqrt R is rational.
void require_irrational_sqrt(const Rational& R);

/// A polynomial carried as numerator / denominator, both in Q[d, D][Z]
/// (the denominator has degree 0 in Z).
struct ClearedPoly {
    BiCoeffPoly numerator;
    BiCoeff denominator;
};

namespace symbolic {

/// f with coefficients in Q[d, D]: c_{2k+1} D^{(p-1)/2-k} on Z^{2k+1}, constant -2 d D^{(p-1)/2}.
BiCoeffPoly f(long p);

/// A = numerator / (2 R D^{(p-1)/2}) with R written as d^2 - D.
ClearedPoly A(long p);

/// f' = numerator / (R D^{p-3}) with R written as d^2 - D.
ClearedPoly fprime(long p);

}  // namespace symbolic

namespace concrete {

RatPoly f(const InstanceParams& params);
RatPoly A(const InstanceParams& params);
RatPoly fprime(const InstanceParams& params);

struct GFactorization {
    RatPoly g;         // (Z^p - d)^2 - R
    QuadPoly h;        // Z^p - d - sqrt R
    QuadPoly h_prime;  // Z^p - d + sqrt R
};

/// Requires sqrt R irrational.
GFactorization g_h(const InstanceParams& params);

}  // namespace concrete

}  // namespace radred
