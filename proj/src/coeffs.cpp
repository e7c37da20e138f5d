#include "radred/coeffs.hpp"

#include <stdexcept>
#include <string>

namespace radred::coeffs {

namespace {

Rational sign_pow(long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

Rational binom(long m, long n) { return Rational(binomial(m, n)); }

// c_{p-2k} = (-1)^k p/(p-k) binom(p-k, k)
Rational c_by_descending_index(long p, long k) {
    return sign_pow(k) * Rational(p) / Rational(p - k) * binom(p - k, k);
}

}  // namespace

void require_odd_p(long p) {
    if (p < 3 || p % 2 == 0) {
        throw AssumptionError("p must be an odd natural number >= 3, got " + std::to_string(p));
    }
}

Rational c(long p, long k) {
    require_odd_p(p);
    const long h = (p - 1) / 2;
    if (k < 0 || k > h) return 0;
    Rational direct = sign_pow(h - k) * Rational(p) / Rational((p + 1) / 2 + k) * binom((p + 1) / 2 + k, 2 * k + 1);
    Rational reindexed = c_by_descending_index(p, h - k);
    if (!(direct == reindexed)) {
        throw std::logic_error("closed forms of c_{2k+1} disagree at p=" + std::to_string(p) +
                               ", k=" + std::to_string(k));
    }
    return direct;
}

Rational a(long p, long k) {
    require_odd_p(p);
    const long h = (p - 1) / 2;
    if (k < 0 || k > h) return 0;
    return sign_pow(k) * Rational(p - 1) / Rational(h + k) * binom(h + k, 2 * k);
}

Rational cprime(long p, long j) {
    require_odd_p(p);
    const long h = (p - 1) / 2;
    if (j < 0 || j > (p - 3) / 2) return 0;
    return sign_pow((p - 3) / 2 - j) * Rational(p - 2) / Rational(h + j) * binom(h + j, 2 * j + 1);
}

std::vector<Rational> C_system(long p) {
    require_odd_p(p);
    const long h = (p - 1) / 2;
    // Row j: sum_{k<=j} C_{p-2k} binom(p-2k, j-k) = [j == 0]; the diagonal entry is 1.
    std::vector<Rational> C;
    C.reserve(static_cast<std::size_t>(h) + 1);
    for (long j = 0; j <= h; ++j) {
        Rational rhs = j == 0 ? Rational(1) : Rational(0);
        for (long k = 0; k < j; ++k) rhs -= C[static_cast<std::size_t>(k)] * binom(p - 2 * k, j - k);
        C.push_back(rhs);
    }
    return C;
}

Rational u(long p, long k) {
    require_odd_p(p);
    if (k < 1 || k > p - 1) throw std::out_of_range("u_k needs 1 <= k <= p-1");
    return sign_pow(k) * Rational(p - 1) / Rational(k) * binom(p + k - 2, 2 * k - 1);
}

Rational s(long p, long k) {
    require_odd_p(p);
    if (k < 1 || k > p - 1) throw std::out_of_range("s_k needs 1 <= k <= p-1");
    Rational acc;
    for (long j = 0; j <= k; ++j) acc += a(p, j) * a(p, k - j);
    return acc;
}

Rational t(long p, long k) {
    require_odd_p(p);
    if (k < 2 || k > p - 1) throw std::out_of_range("t_k needs 2 <= k <= p-1");
    Rational acc;
    for (long j = 0; j <= k - 1; ++j) acc += c(p, j) * cprime(p, k - j - 1);
    return acc;
}

Rational gauss_sum(long p, long j) {
    require_odd_p(p);
    if (j < 0 || j > (p - 1) / 2) throw std::out_of_range("the alternating binomial sum needs 0 <= j <= (p-1)/2");
    Rational acc;
    for (long k = 0; k <= j; ++k) acc += c_by_descending_index(p, k) * binom(p - 2 * k, j - k);
    return acc;
}

std::vector<Rational> family(long p, std::string_view name) {
    require_odd_p(p);
    const long h = (p - 1) / 2;
    std::vector<Rational> out;
    if (name == "c") {
        for (long k = 0; k <= h; ++k) out.push_back(c(p, k));
    } else if (name == "a") {
        for (long k = 0; k <= h; ++k) out.push_back(a(p, k));
    } else if (name == "cprime") {
        for (long j = 0; j <= (p - 3) / 2; ++j) out.push_back(cprime(p, j));
    } else if (name == "C") {
        out = C_system(p);
    } else if (name == "u") {
        for (long k = 1; k <= p - 1; ++k) out.push_back(u(p, k));
    } else {
        throw std::invalid_argument("unknown coefficient family '" + std::string(name) + "'");
    }
    return out;
}

}  // namespace radred::coeffs
