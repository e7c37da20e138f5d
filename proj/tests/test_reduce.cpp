#include "radred/reduce.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>

using radred::AssumptionError;
using radred::Expr;
using radred::QuadExt;
using radred::Rational;

TEST_CASE("first worked example: u irrational, z rational") {
    auto r = radred::reduce_radical(5, 2, 5);
    CHECK(r.params.D == Rational(-1));
    CHECK(radred::render(r.g) == "Z^10 - 4*Z^5 - 1");
    CHECK(radred::render(r.f) == "Z^5 + 5*Z^3 + 5*Z - 4");
    CHECK(radred::render_with_content(r.A) == "(Z^4 + 4*Z^2 + 2*Z + 2)/10");
    REQUIRE(r.z.has_value());
    CHECK(*r.z == Rational(-1));
    CHECK(r.f_rational_roots.empty());
    CHECK_FALSE(r.u.has_value());
    CHECK(r.u_expr.kind == Expr::Kind::Symbol);
    CHECK_FALSE(r.quadratic.has_value());
    CHECK_FALSE(r.exact.has_value());
    CHECK(r.conditions.g_has_no_rational_root());
    CHECK(r.branch_plus.to_text().find("u") != std::string::npos);
}

TEST_CASE("second worked example: u rational, z irrational") {
    auto r = radred::reduce_radical(7, -2158, 4656966);
    CHECK(r.params.D == Rational(-2));
    CHECK(radred::render(r.g) == "Z^14 + 4316*Z^7 - 2");
    REQUIRE(r.u.has_value());
    CHECK(*r.u == Rational(4));
    CHECK_FALSE(r.z.has_value());
    CHECK(r.z_expr == Expr::nth_root(Expr::rational(-2), 7));
    CHECK_FALSE(r.exact.has_value());
    REQUIRE(r.quadratic.has_value());
    CHECK(r.quadratic->discriminant == Rational(24));
    CHECK(r.quadratic->discriminant_identity);
    CHECK(r.branch_plus.to_text() == "root(-2, 7)^4*(-1 + 1/2*sqrt(6))");
    CHECK(r.branch_minus.to_text() == "root(-2, 7)^4*(-1 - 1/2*sqrt(6))");
}

TEST_CASE("cubic instance with exact branches") {
    auto r = radred::reduce_radical(3, -7, 50);
    REQUIRE(r.u.has_value());
    REQUIRE(r.z.has_value());
    CHECK(*r.u == Rational(2));
    CHECK(*r.z == Rational(-1));
    REQUIRE(r.exact.has_value());
    QuadExt plus = r.exact->plus.rebased(2);
    CHECK(plus == QuadExt(-1, 1, 2));
    CHECK(plus.pow(3) == QuadExt(-7, 5, 2));
    CHECK(r.exact->plus_pow_p == QuadExt(-7, 1, 50));
    CHECK(r.exact->plus_zero_of == "h");
    CHECK(r.exact->minus_pow_p == QuadExt(-7, -1, 50));
}

TEST_CASE("assumption violations") {
    CHECK_THROWS_AS(radred::reduce_radical(5, 4, 9), AssumptionError);
    CHECK_THROWS_AS(radred::reduce_radical(4, 2, 5), AssumptionError);
    CHECK_THROWS_AS(radred::reduce_radical(5, 0, 5), AssumptionError);
    CHECK_THROWS_AS(radred::reduce_radical(5, 2, 4), AssumptionError);
    try {
        radred::reduce_radical(5, 4, 9);
    } catch (const AssumptionError& e) {
        CHECK(std::string(e.what()).find("sqrt") != std::string::npos);
    }
}

TEST_CASE("construction") {
    auto c7 = radred::construct_example(7, -2, 4);
    CHECK(c7.params.d == Rational(-2158));
    CHECK(c7.params.R == Rational(6 * 881 * 881));
    auto c3 = radred::construct_example(3, -1, 2);
    CHECK(c3.params.d == Rational(-7));
    CHECK(c3.params.R == Rational(50));
    CHECK_THROWS_AS(radred::construct_example(7, 0, 4), AssumptionError);
    CHECK_THROWS_AS(radred::construct_example(3, -1, 0), AssumptionError);  // d = 0
    CHECK_THROWS_AS(radred::construct_example(6, -1, 2), std::invalid_argument);
}

TEST_CASE("construct then reduce: exact branch invariants") {
    int exercised = 0;
    for (int trial = 0; trial < 400 && exercised < 60; ++trial) {
        long p = testsupport::random_odd_p(3, 9);
        Rational z = testsupport::random_nonzero_rational(4, 3);
        Rational u = testsupport::random_nonzero_rational(9, 4);
        Rational D = z.pow(p);
        radred::ConstructedExample c;
        try {
            c = radred::construct_example(p, D, u);
        } catch (const AssumptionError&) {
            continue;
        }
        ++exercised;
        const long h = (p - 1) / 2;
        auto r = radred::reduce_radical(p, c.params.d, c.params.R);
        CAPTURE(p);
        CAPTURE(z);
        CAPTURE(u);
        CHECK(std::find(r.f_rational_roots.begin(), r.f_rational_roots.end(), u) != r.f_rational_roots.end());
        REQUIRE(r.z.has_value());
        CHECK(*r.z == z);
        REQUIRE(r.exact.has_value());
        REQUIRE(r.quadratic.has_value());
        CHECK(r.quadratic->discriminant_identity);
        const auto& ex = *r.exact;
        const Rational& R = c.params.R;
        const Rational& d = c.params.d;
        CHECK(ex.plus_zero_of != "neither");
        bool plus_hits = ex.plus_pow_p == QuadExt(d, 1, R) || ex.plus_pow_p == QuadExt(d, -1, R);
        CHECK(plus_hits);
        CHECK(ex.minus_pow_p == ex.plus_pow_p.conjugate());
        // y * y' = z and z^h (y + y') = u.
        CHECK(ex.plus * ex.minus == QuadExt(z, 0, R));
        CHECK((ex.plus + ex.minus) * z.pow(h) == QuadExt(*r.u, 0, R));
        // (u + sqrt(u^2 - 4D)) / (2 z^h) with sqrt(u^2 - 4D) = 2 D A(u) sqrt R up to sign.
        Rational Au = r.A.evaluate(*r.u);
        QuadExt q = QuadExt(*r.u, Rational(2) * D * Au, R) * (Rational(2) * z.pow(h)).inverse();
        CHECK((q == ex.plus || q == ex.minus));
    }
    CHECK(exercised >= 30);
}

TEST_CASE("denesting square roots") {
    auto e = radred::euclid_denest(3, 5);
    REQUIRE(e.has_value());
    CHECK(e->pair.a == Rational(5, 2));
    CHECK(e->pair.b == Rational(1, 2));
    CHECK(e->certified);
    CHECK(e->real_radicals);
    // Independent squaring in Q(sqrt 5): sqrt(5/2) + sqrt(1/2) = (sqrt 10 + sqrt 2)/2 and
    // its square is 3 + sqrt 5.
    CHECK(e->pair.squared_rational_part() == Rational(3));
    CHECK(e->pair.squared_radicand() == Rational(5));

    auto e2 = radred::euclid_denest(2, 3);
    REQUIRE(e2.has_value());
    CHECK(e2->pair.a == Rational(3, 2));
    CHECK(e2->pair.b == Rational(1, 2));
    CHECK_FALSE(radred::euclid_denest(1, Rational(1, 2)).has_value());
    CHECK_THROWS_AS(radred::euclid_denest(5, 9), AssumptionError);
    CHECK_THROWS_AS(radred::euclid_denest(-3, 5), AssumptionError);

    for (int trial = 0; trial < 200; ++trial) {
        Rational a = testsupport::random_nonzero_rational(50, 6).abs();
        Rational b = testsupport::random_nonzero_rational(50, 6).abs();
        Rational d = a + b;
        Rational R = Rational(4) * a * b;
        if (radred::rational_is_square(R)) continue;
        auto r = radred::euclid_denest(d, R);
        REQUIRE(r.has_value());
        CHECK(r->certified);
        CHECK(((r->pair.a == a && r->pair.b == b) || (r->pair.a == b && r->pair.b == a)));
    }
}

TEST_CASE("fourth roots") {
    auto e = radred::euclid_biquadratic(7, 48);
    REQUIRE(e.has_value());
    CHECK(e->inner == Rational(1));
    CHECK(e->half_k == Rational(1, 2));
    CHECK(e->certified);
    CHECK(e->expr().to_text() == "sqrt(3/2) + sqrt(1/2)");
    // (sqrt(3/2) + sqrt(1/2))^2 = 2 + sqrt 3 and (2 + sqrt 3)^2 = 7 + sqrt 48.
    QuadExt y2(2, 1, 3);
    CHECK(y2 * y2 == QuadExt(7, 1, 48).rebased(3));
    CHECK_FALSE(radred::euclid_biquadratic(2, 5).has_value());
    CHECK_THROWS_AS(radred::euclid_biquadratic(5, 9), AssumptionError);
}

TEST_CASE("case classification") {
    auto c2 = radred::classify(7, -2158, 4656966);
    CHECK(c2.applicable);
    CHECK(c2.squarefree_R == 6);
    CHECK(c2.squarefree_cyclotomic == -7);
    CHECK_FALSE(c2.cyclotomic_field_equal);
    CHECK(c2.basis_case == 'b');

    auto c1 = radred::classify(5, 2, 5);
    CHECK(c1.squarefree_R == 5);
    CHECK(c1.squarefree_cyclotomic == 5);
    CHECK(c1.cyclotomic_field_equal);
    CHECK(c1.basis_case == 'a');

    auto c9 = radred::classify(9, 2, 5);
    CHECK_FALSE(c9.applicable);
    CHECK_FALSE(c9.p_prime);

    CHECK(radred::is_prime(2));
    CHECK(radred::is_prime(97));
    CHECK_FALSE(radred::is_prime(1));
    CHECK_FALSE(radred::is_prime(91));
}
