#pragma once

#include "radred/exact_num.hpp"
#include "radred/numeric.hpp"

#include <mpfr.h>

#include <cstdint>
#include <random>
#include <vector>

namespace testsupport {

// Fixed seed so failures reproduce.
inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed2025ULL);
    return gen;
}

inline long uniform(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline long nonzero(long lo, long hi) {
    for (;;) {
        long v = uniform(lo, hi);
        if (v != 0) return v;
    }
}

inline radred::Rational random_rational(long num_bound, long den_bound) {
    return {radred::Integer(uniform(-num_bound, num_bound)), radred::Integer(uniform(1, den_bound))};
}

inline radred::Rational random_nonzero_rational(long num_bound, long den_bound) {
    return {radred::Integer(nonzero(-num_bound, num_bound)), radred::Integer(uniform(1, den_bound))};
}

inline long random_odd_p(long lo, long hi) {
    long p = uniform(lo, hi);
    return (p % 2 == 0) ? p + 1 : p;
}

// MPFR's own correctly rounded operations, used as a reference for the
// hand-written Newton iterations.
inline radred::numeric::BigFloat mpfr_reference_root(const radred::Rational& q, unsigned long n, long bits) {
    radred::numeric::BigFloat x(q, bits + 64);
    radred::numeric::BigFloat out(bits);
    mpfr_rootn_ui(out.raw(), x.raw(), n, MPFR_RNDN);
    return out;
}

inline radred::numeric::BigFloat mpfr_reference_sqrt(const radred::Rational& q, long bits) {
    radred::numeric::BigFloat x(q, bits + 64);
    radred::numeric::BigFloat out(bits);
    mpfr_sqrt(out.raw(), x.raw(), MPFR_RNDN);
    return out;
}

// Dickson polynomial D_n(x, a) from D_n = x D_{n-1} - a D_{n-2}, as
// coefficient vectors in x with integer coefficients (a fixed to 1).
inline std::vector<radred::Integer> dickson_unit(long n) {
    std::vector<radred::Integer> prev{2};
    std::vector<radred::Integer> cur{0, 1};
    if (n == 0) return prev;
    for (long k = 2; k <= n; ++k) {
        std::vector<radred::Integer> next(cur.size() + 1, 0);
        for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
        for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

inline radred::Integer factorial(long n) {
    radred::Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

}  // namespace testsupport
