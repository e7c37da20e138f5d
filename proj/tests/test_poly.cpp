#include "radred/poly.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using radred::BiCoeff;
using radred::BiCoeffPoly;
using radred::Integer;
using radred::RatPoly;
using radred::Rational;

namespace {

RatPoly random_poly(long max_degree, long bound) {
    std::vector<Rational> c;
    long n = testsupport::uniform(0, max_degree);
    for (long i = 0; i <= n; ++i) c.push_back(testsupport::random_rational(bound, 6));
    return RatPoly(std::move(c));
}

BiCoeff random_bicoeff() {
    BiCoeff b;
    for (int i = 0; i < 4; ++i) {
        b += BiCoeff::monomial(testsupport::random_rational(20, 4), static_cast<int>(testsupport::uniform(0, 3)),
                               static_cast<int>(testsupport::uniform(0, 3)));
    }
    return b;
}

BiCoeffPoly random_bipoly() {
    std::vector<BiCoeff> c;
    long n = testsupport::uniform(0, 4);
    for (long i = 0; i <= n; ++i) c.push_back(random_bicoeff());
    return BiCoeffPoly(std::move(c));
}

// Rational zeros by exhaustive search over every fraction a/b with
// |a| <= num_bound, 1 <= b <= den_bound.
std::vector<Rational> brute_roots(const RatPoly& f, long num_bound, long den_bound) {
    std::set<std::pair<Integer, Integer>> seen;
    std::vector<Rational> out;
    for (long b = 1; b <= den_bound; ++b) {
        for (long a = -num_bound; a <= num_bound; ++a) {
            Rational q{Integer(a), Integer(b)};
            if (!seen.emplace(q.numerator(), q.denominator()).second) continue;
            if (f.evaluate(q).is_zero()) out.push_back(q);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("rendering") {
    CHECK(radred::render(radred::rat_poly({-4, 5, 0, 5, 0, 1})) == "Z^5 + 5*Z^3 + 5*Z - 4");
    CHECK(radred::render(radred::rat_poly({-1, 0, 0, 0, 0, -4, 0, 0, 0, 0, 1})) == "Z^10 - 4*Z^5 - 1");
    CHECK(radred::render(RatPoly()) == "0");
    CHECK(radred::render(radred::rat_poly({0, -1})) == "-Z");
    RatPoly a({Rational(Integer(1), Integer(5)), Rational(Integer(1), Integer(5)), Rational(Integer(2), Integer(5)), 0,
               Rational(Integer(1), Integer(10))});
    CHECK(radred::render_with_content(a) == "(Z^4 + 4*Z^2 + 2*Z + 2)/10");
    CHECK(radred::coefficient_strings(radred::rat_poly({-4, 5, 0, 5, 0, 1})) ==
          std::vector<std::string>{"-4", "5", "0", "5", "0", "1"});
}

TEST_CASE("normalization and degree") {
    CHECK(radred::rat_poly({1, 2, 0, 0}).degree() == 1);
    CHECK(radred::rat_poly({0, 0}).is_zero());
    CHECK(RatPoly().degree() == -1);
    CHECK((radred::rat_poly({1, 1}) - radred::rat_poly({1, 1})).is_zero());
}

TEST_CASE("polynomial ring laws and evaluation") {
    for (int trial = 0; trial < 200; ++trial) {
        RatPoly f = random_poly(6, 30);
        RatPoly g = random_poly(6, 30);
        RatPoly h = random_poly(6, 30);
        Rational x = testsupport::random_rational(20, 7);
        CHECK(f * g == g * f);
        CHECK(f * (g + h) == f * g + f * h);
        CHECK((f * g).evaluate(x) == f.evaluate(x) * g.evaluate(x));
        CHECK((f + g).evaluate(x) == f.evaluate(x) + g.evaluate(x));
        CHECK(f.pow(3) == f * f * f);
        if (!f.is_zero() && !g.is_zero()) CHECK((f * g).degree() == f.degree() + g.degree());
    }
}

TEST_CASE("bivariate coefficients") {
    BiCoeff d = BiCoeff::d();
    BiCoeff D = BiCoeff::D();
    BiCoeff R = d * d - D;
    CHECK(R.coefficient(2, 0) == Rational(1));
    CHECK(R.coefficient(0, 1) == Rational(-1));
    CHECK(R.coefficient(1, 1) == Rational(0));
    CHECK(R.evaluate(2, -1) == Rational(5));
    CHECK((R - R).is_zero());
    CHECK(radred::monomial_name(0, 0) == "1");
    CHECK(radred::monomial_name(1, 2) == "d*D^2");

    for (int trial = 0; trial < 200; ++trial) {
        BiCoeff a = random_bicoeff();
        BiCoeff b = random_bicoeff();
        BiCoeff c = random_bicoeff();
        Rational dv = testsupport::random_rational(9, 4);
        Rational Dv = testsupport::random_rational(9, 4);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b).evaluate(dv, Dv) == a.evaluate(dv, Dv) * b.evaluate(dv, Dv));
        CHECK((a - b).evaluate(dv, Dv) == a.evaluate(dv, Dv) - b.evaluate(dv, Dv));
    }
}

TEST_CASE("substitution commutes with ring operations") {
    for (int trial = 0; trial < 100; ++trial) {
        BiCoeffPoly f = random_bipoly();
        BiCoeffPoly g = random_bipoly();
        Rational dv = testsupport::random_rational(9, 4);
        Rational Dv = testsupport::random_rational(9, 4);
        CHECK(radred::substitute(f * g, dv, Dv) == radred::substitute(f, dv, Dv) * radred::substitute(g, dv, Dv));
        CHECK(radred::substitute(f + g, dv, Dv) == radred::substitute(f, dv, Dv) + radred::substitute(g, dv, Dv));
    }
}

TEST_CASE("rational roots") {
    CHECK(radred::rational_roots(radred::rat_poly({-4, 5, 0, 5, 0, 1})).empty());
    CHECK(radred::rational_roots(radred::rat_poly({-34528, 56, 0, 56, 0, 14, 0, 1})) == std::vector<Rational>{4});
    CHECK(radred::rational_roots(radred::rat_poly({0, 0, 1})) == std::vector<Rational>{0});
    CHECK(radred::rational_roots(radred::rat_poly({5})).empty());
    CHECK_THROWS_AS(radred::rational_roots(RatPoly()), std::invalid_argument);

    SUBCASE("planted roots times a root-free factor") {
        for (int trial = 0; trial < 80; ++trial) {
            std::set<std::pair<Integer, Integer>> planted;
            RatPoly f = radred::rat_poly({1, 0, 1});  // Z^2 + 1 has no rational zero
            long count = testsupport::uniform(0, 4);
            for (long i = 0; i < count; ++i) {
                long a = testsupport::uniform(-12, 12);
                long b = testsupport::uniform(1, 6);
                f = f * radred::rat_poly({-a, b});
                Rational q{Integer(a), Integer(b)};
                planted.emplace(q.numerator(), q.denominator());
            }
            // Scale by a random rational to exercise denominator clearing.
            f = testsupport::random_nonzero_rational(20, 9) * f;
            std::vector<Rational> expect;
            for (const auto& [n, d] : planted) expect.emplace_back(n, d);
            std::sort(expect.begin(), expect.end());
            CHECK(radred::rational_roots(f) == expect);
            CHECK(radred::rational_roots(f) == brute_roots(f, 12, 6));
        }
    }

    SUBCASE("agrees with exhaustive search on small random polynomials") {
        for (int trial = 0; trial < 150; ++trial) {
            std::vector<Rational> c;
            long n = testsupport::uniform(1, 4);
            for (long i = 0; i <= n; ++i) c.emplace_back(testsupport::uniform(-6, 6));
            c.back() = Rational(testsupport::nonzero(-3, 3));
            RatPoly f(c);
            // Every rational zero a/b has |a| <= 6 and b <= 3 by the divisor bounds.
            CHECK(radred::rational_roots(f) == brute_roots(f, 6, 3));
        }
    }
}

TEST_CASE("positive divisors") {
    CHECK(radred::positive_divisors(Integer(12)) == std::vector<Integer>{1, 2, 3, 4, 6, 12});
    CHECK(radred::positive_divisors(Integer(-7)) == std::vector<Integer>{1, 7});
    CHECK(radred::positive_divisors(Integer(1)) == std::vector<Integer>{1});
    for (long n = 1; n <= 500; ++n) {
        std::vector<Integer> expect;
        for (long k = 1; k <= n; ++k) {
            if (n % k == 0) expect.emplace_back(k);
        }
        REQUIRE(radred::positive_divisors(Integer(n)) == expect);
    }
}

TEST_CASE("divisors of numbers with large prime factors") {
    Integer p1(1000003), p2(1000033), p3("1000000000000000003");
    auto divs = radred::positive_divisors(p1 * p2 * p3 * 12);
    CHECK(divs.size() == 6 * 8);
    for (const auto& d : divs) CHECK(mpz_divisible_p(Integer(p1 * p2 * p3 * 12).get_mpz_t(), d.get_mpz_t()) != 0);
    CHECK(radred::positive_divisors(Integer(51462770057497)).size() >= 2);
    auto sq = radred::positive_divisors(p2 * p2);
    CHECK(sq == std::vector<Integer>{1, p2, p2 * p2});
}
