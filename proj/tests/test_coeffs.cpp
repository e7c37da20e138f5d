#include "radred/coeffs.hpp"
#include "support.hpp"

#include <doctest.h>

using radred::Integer;
using radred::Rational;
namespace coeffs = radred::coeffs;

namespace {

std::vector<Rational> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

// u_k from factorials: (-1)^k (p-1)/k * (p+k-2)! / ((2k-1)! (p-k-1)!).
Rational u_oracle(long p, long k) {
    Integer num = testsupport::factorial(p + k - 2);
    Integer den = testsupport::factorial(2 * k - 1) * testsupport::factorial(p - k - 1);
    Rational v = Rational(p - 1) / Rational(k) * Rational(num, den);
    return k % 2 == 0 ? v : -v;
}

}  // namespace

TEST_CASE("small frozen values") {
    CHECK(coeffs::family(5, "c") == ints({5, -5, 1}));
    CHECK(coeffs::c(3, 0) == Rational(-3));
    CHECK(coeffs::family(5, "a") == ints({2, -4, 1}));
    CHECK(coeffs::a(3, 0) == Rational(2));
    CHECK(coeffs::a(5, 3) == Rational(0));
    CHECK(coeffs::family(5, "cprime") == ints({-3, 1}));
    CHECK(coeffs::cprime(3, 0) == Rational(1));
    CHECK(coeffs::cprime(5, 2) == Rational(0));
    CHECK(coeffs::C_system(3) == ints({1, -3}));
    CHECK(coeffs::C_system(5) == ints({1, -5, 5}));
    CHECK(coeffs::u(5, 2) == Rational(20));
    CHECK(coeffs::s(3, 1) == Rational(-4));
    CHECK(coeffs::s(5, 2) == Rational(20));
    CHECK(coeffs::t(5, 2) == Rational(20));
    CHECK(coeffs::gauss_sum(5, 0) == Rational(1));
    CHECK(coeffs::gauss_sum(5, 1) == Rational(0));
    CHECK(coeffs::gauss_sum(7, 3) == Rational(0));
}

TEST_CASE("invalid p") {
    for (long p : {-3L, 0L, 1L, 2L, 4L, 10L}) {
        CAPTURE(p);
        CHECK_THROWS_AS(coeffs::c(p, 0), std::invalid_argument);
        CHECK_THROWS_AS(coeffs::family(p, "u"), std::invalid_argument);
    }
    CHECK_THROWS_AS(coeffs::family(5, "nope"), std::invalid_argument);
}

TEST_CASE("c family matches Dickson polynomial coefficients") {
    for (long p = 3; p <= 99; p += 2) {
        std::vector<Integer> dickson = testsupport::dickson_unit(p);
        for (long k = 0; k <= (p - 1) / 2; ++k) {
            CAPTURE(p);
            CAPTURE(k);
            REQUIRE(coeffs::c(p, k) == Rational(dickson[static_cast<std::size_t>(2 * k + 1)]));
        }
        CHECK(coeffs::c(p, (p - 1) / 2) == Rational(1));
        CHECK(coeffs::c(p, -1) == Rational(0));
        CHECK(coeffs::c(p, (p + 1) / 2) == Rational(0));
    }
}

TEST_CASE("integrality of every family") {
    for (long p = 3; p <= 199; p += 2) {
        for (const char* name : {"c", "a", "cprime", "C"}) {
            for (const Rational& v : coeffs::family(p, name)) {
                CAPTURE(p);
                CAPTURE(name);
                REQUIRE(v.is_integer());
            }
        }
    }
    for (long p = 3; p <= 99; p += 2) {
        for (const Rational& v : coeffs::family(p, "u")) REQUIRE(v.is_integer());
    }
}

TEST_CASE("linear system solution reproduces X^p + 1") {
    for (long p = 3; p <= 61; p += 2) {
        const long h = (p - 1) / 2;
        std::vector<Rational> C = coeffs::C_system(p);
        REQUIRE(C.size() == static_cast<std::size_t>(h + 1));
        // Independent expansion with plain binomials.
        std::vector<Rational> sum(static_cast<std::size_t>(p + 1), Rational(0));
        for (long k = 0; k <= h; ++k) {
            for (long i = 0; i <= p - 2 * k; ++i) {
                sum[static_cast<std::size_t>(k + i)] += C[static_cast<std::size_t>(k)] * Rational(radred::binomial(p - 2 * k, i));
            }
        }
        for (long m = 0; m <= p; ++m) {
            CAPTURE(p);
            CAPTURE(m);
            REQUIRE(sum[static_cast<std::size_t>(m)] == Rational(m == 0 || m == p ? 1 : 0));
        }
        for (long k = 0; k <= h; ++k) CHECK(C[static_cast<std::size_t>(k)] == coeffs::c(p, h - k));
    }
}

TEST_CASE("vanishing sums") {
    for (long p = 3; p <= 99; p += 2) {
        CHECK(coeffs::gauss_sum(p, 0) == Rational(1));
        for (long j = 1; j <= (p - 1) / 2; ++j) REQUIRE(coeffs::gauss_sum(p, j).is_zero());
    }
}

TEST_CASE("s and t agree with the closed u family") {
    for (long p = 3; p <= 99; p += 2) {
        for (long k = 1; k <= p - 1; ++k) {
            CAPTURE(p);
            CAPTURE(k);
            Rational expect = u_oracle(p, k);
            REQUIRE(coeffs::u(p, k) == expect);
            if (p >= 5) {
                REQUIRE(coeffs::s(p, k) == expect);
                if (k >= 2) REQUIRE(coeffs::t(p, k) == expect);
            }
        }
        Rational pm1(p - 1);
        CHECK(coeffs::u(p, 1) == -pm1 * pm1);
    }
}
